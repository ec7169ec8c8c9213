#include "voteselect/voting.hpp"

#include "voteselect/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace voteselect {

namespace {

// candidate -> ascending list of voters approving it
std::vector<std::vector<int>> approver_index(const Election& e) {
    std::vector<std::vector<int>> approvers(e.candidates);
    for (int i = 0; i < e.voters; ++i)
        for (int c : e.ballots[i]) approvers[c].push_back(i);
    return approvers;
}

// Most-approved candidate, lowest index on ties. Used as the fallback
// committee when a rule elects nobody.
int most_approved(const std::vector<std::vector<int>>& approvers) {
    int best = 0;
    for (int c = 1; c < static_cast<int>(approvers.size()); ++c)
        if (approvers[c].size() > approvers[best].size()) best = c;
    return best;
}

long max_level(const Rational& q, size_t approver_count) {
    return floor_to_long(q * static_cast<long>(approver_count));
}

// Max feasible plausibility level for one candidate, given per-voter
// winner counts. cap == 0 means uncapped.
long plausibility_with_sat(const Election& e, const std::vector<int>& approvers,
                           const std::vector<int>& sat, int cap) {
    if (approvers.empty()) return 0;
    long lmax = max_level(e.q, approvers.size());
    if (lmax < 1) return 0;

    // prefix[t] = number of approvers holding fewer than t winners
    std::vector<long> prefix(static_cast<size_t>(lmax) + 1, 0);
    for (int v : approvers) {
        long s = std::min<long>(sat[v], lmax);
        if (s + 1 <= lmax) ++prefix[s + 1];
    }
    for (long t = 1; t <= lmax; ++t) prefix[t] += prefix[t - 1];

    const BigInt qn = numerator(e.q);
    const BigInt qd = denominator(e.q);
    for (long l = lmax; l >= 1; --l) {
        long thr = cap > 0 ? std::min<long>(l, cap) : l;
        long cnt = prefix[thr];
        // cnt >= l * (n/t)  <=>  cnt * q >= l
        if (BigInt(cnt) * qn >= BigInt(l) * qd) return l;
    }
    return 0;
}

RuleResult run_greedy(const Election& e, int cap, const TraceOptions& trace_opts) {
    auto approvers = approver_index(e);
    RuleResult out;
    out.trace.rule = cap > 0 ? VotingRule::s2ejr : VotingRule::sejr;
    out.trace.state_recorded = trace_opts.record_state;
    out.committee.q = e.q;

    std::vector<int> sat(e.voters, 0);
    std::vector<char> elected(e.candidates, 0);
    for (;;) {
        int best = -1;
        long best_level = 0;
        for (int c = 0; c < e.candidates; ++c) {
            if (elected[c]) continue;
            long l = plausibility_with_sat(e, approvers[c], sat, cap);
            if (l > best_level) {
                best = c;
                best_level = l;
            }
        }
        if (best == -1) break;
        elected[best] = 1;
        out.committee.members.push_back(best);
        for (int v : approvers[best]) ++sat[v];
        out.trace.greedy.push_back({best, best_level});
    }

    if (out.committee.members.empty()) {
        int c = most_approved(approvers);
        out.committee.members.push_back(c);
        out.committee.flags.push_back("fallback");
        out.trace.fallback = true;
        out.trace.fallback_chosen = c;
    }
    return out;
}

std::string join_ratios(const std::vector<Rational>& values) {
    std::string s;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += format_ratio(values[i]);
    }
    return s;
}

} // namespace

std::string rule_name(VotingRule rule) {
    switch (rule) {
        case VotingRule::sejr: return "sejr";
        case VotingRule::s2ejr: return "s2ejr";
        case VotingRule::es: return "es";
        case VotingRule::seqp: return "seqp";
    }
    return "?";
}

VotingRule parse_rule(const std::string& name) {
    if (name == "sejr") return VotingRule::sejr;
    if (name == "s2ejr") return VotingRule::s2ejr;
    if (name == "es") return VotingRule::es;
    if (name == "seqp") return VotingRule::seqp;
    throw ArgumentError("unknown rule '" + name + "'");
}

long plausibility(const Election& e, int candidate,
                  const std::vector<int>& winners, int cap) {
    if (candidate < 0 || candidate >= e.candidates)
        throw ArgumentError("plausibility: candidate out of range");
    std::vector<char> won(e.candidates, 0);
    for (int w : winners) won[w] = 1;
    std::vector<int> sat(e.voters, 0);
    std::vector<int> approvers;
    for (int i = 0; i < e.voters; ++i) {
        bool approves = false;
        for (int c : e.ballots[i]) {
            if (won[c]) ++sat[i];
            if (c == candidate) approves = true;
        }
        if (approves) approvers.push_back(i);
    }
    return plausibility_with_sat(e, approvers, sat, cap);
}

RuleResult run_sejr(const Election& e, const TraceOptions& trace) {
    return run_greedy(e, 0, trace);
}

RuleResult run_s2ejr(const Election& e, const TraceOptions& trace) {
    return run_greedy(e, 2, trace);
}

// Budgets are kept as integer numerators over one shared denominator D, so
// every step is exact integer arithmetic and no gcd normalization happens
// in the loop. Electing a candidate whose price has (unreduced) denominator
// D*f rescales every numerator by the small factor f.
RuleResult run_equal_shares(const Election& e, const TraceOptions& trace_opts) {
    auto approvers = approver_index(e);
    RuleResult out;
    out.trace.rule = VotingRule::es;
    out.trace.state_recorded = trace_opts.record_state;
    out.committee.q = e.q;

    const BigInt cost_num = denominator(e.q); // cost n/t = 1/q
    const BigInt cost_den = numerator(e.q);

    BigInt d = 1;
    std::vector<BigInt> budget(e.voters, BigInt(1));
    std::vector<char> elected(e.candidates, 0);
    std::vector<BigInt> sorted;

    for (;;) {
        int best = -1;
        BigInt best_num, best_factor;
        for (int c = 0; c < e.candidates; ++c) {
            if (elected[c] || approvers[c].empty()) continue;
            const auto& vs = approvers[c];
            BigInt total = 0;
            for (int v : vs) total += budget[v];
            if (cost_den * total < cost_num * d) continue; // not affordable

            // Least uniform payment x with sum(min(x, budget)) = cost: scan
            // segments of the sorted budget list. With k approvers paying
            // their whole budget, x = (cost*d - cost_den*P_k) / (cost_den*(m-k)*d).
            sorted.assign(vs.size(), BigInt());
            for (size_t i = 0; i < vs.size(); ++i) sorted[i] = budget[vs[i]];
            std::sort(sorted.begin(), sorted.end());

            BigInt prefix = 0;
            long m = static_cast<long>(vs.size());
            for (long k = 0; k < m; ++k) {
                BigInt num = cost_num * d - cost_den * prefix;
                BigInt factor = cost_den * (m - k);
                if (num <= factor * sorted[k]) {
                    // price num/(d*factor); keep the smallest, lowest index on ties
                    if (best == -1 || num * best_factor < best_num * factor) {
                        best = c;
                        best_num = num;
                        best_factor = factor;
                    }
                    break;
                }
                prefix += sorted[k];
            }
        }
        if (best == -1) break;

        elected[best] = 1;
        out.committee.members.push_back(best);
        for (auto& b : budget) b *= best_factor;
        d *= best_factor;
        for (int v : approvers[best]) {
            budget[v] -= best_num;
            if (budget[v] < 0) budget[v] = 0;
        }

        SpendIteration it;
        it.chosen = best;
        it.price = Rational(best_num, d);
        if (trace_opts.record_state) {
            it.budgets.reserve(e.voters);
            for (const auto& b : budget) it.budgets.emplace_back(b, d);
        }
        out.trace.spend.push_back(std::move(it));
    }

    if (out.committee.members.empty()) {
        int c = most_approved(approvers);
        out.committee.members.push_back(c);
        out.committee.flags.push_back("fallback");
        out.trace.fallback = true;
        out.trace.fallback_chosen = c;
    }
    return out;
}

// Same shared-denominator scheme for approver loads.
RuleResult run_seqphragmen(const Election& e, const SeqpOptions& options) {
    if (!e.t_int.has_value())
        throw ArgumentError("seqp: t_int not set");
    long target = *e.t_int;
    if (target < 1 || target > e.candidates)
        throw ArgumentError("seqp: t_int " + std::to_string(target) + " out of range");

    auto approvers = approver_index(e);
    RuleResult out;
    out.trace.rule = VotingRule::seqp;
    out.trace.state_recorded = options.trace.record_state;
    out.committee.q = e.q;

    BigInt d = 1;
    std::vector<BigInt> load(e.voters, BigInt(0));
    std::vector<char> elected(e.candidates, 0);

    while (static_cast<long>(out.committee.members.size()) < target) {
        int best = -1;
        BigInt best_sum; // new load of best = best_sum / (d * m_best)
        long best_m = 0;
        for (int c = 0; c < e.candidates; ++c) {
            if (elected[c] || approvers[c].empty()) continue;
            BigInt sum = d;
            for (int v : approvers[c]) sum += load[v];
            long m = static_cast<long>(approvers[c].size());
            if (best == -1 || sum * best_m < best_sum * m) {
                best = c;
                best_sum = sum;
                best_m = m;
            }
        }
        if (best == -1) {
            if (options.adapted_stop) {
                out.committee.flags.push_back("adapted_stop");
                break;
            }
            throw ExhaustionError("seqp: only " +
                                  std::to_string(out.committee.members.size()) +
                                  " candidates have approvers, t_int is " +
                                  std::to_string(target));
        }

        elected[best] = 1;
        out.committee.members.push_back(best);
        for (auto& l : load) l *= best_m;
        d *= best_m;
        for (int v : approvers[best]) load[v] = best_sum;

        LoadIteration it;
        it.chosen = best;
        it.load = Rational(best_sum, d);
        if (options.trace.record_state) {
            it.loads.reserve(e.voters);
            for (const auto& l : load) it.loads.emplace_back(l, d);
        }
        out.trace.load.push_back(std::move(it));
    }
    return out;
}

RuleResult run_rule(const Election& e, VotingRule rule, const TraceOptions& trace,
                    bool seqp_adapted_stop) {
    switch (rule) {
        case VotingRule::sejr: return run_sejr(e, trace);
        case VotingRule::s2ejr: return run_s2ejr(e, trace);
        case VotingRule::es: return run_equal_shares(e, trace);
        case VotingRule::seqp: {
            SeqpOptions opt;
            opt.adapted_stop = seqp_adapted_stop;
            opt.trace = trace;
            return run_seqphragmen(e, opt);
        }
    }
    throw ArgumentError("run_rule: bad rule");
}

std::string format_trace(const RuleTrace& trace) {
    std::ostringstream out;
    switch (trace.rule) {
        case VotingRule::sejr:
        case VotingRule::s2ejr:
            for (size_t i = 0; i < trace.greedy.size(); ++i)
                out << "iter=" << i + 1 << " chosen=" << trace.greedy[i].chosen
                    << " pl=" << trace.greedy[i].level << '\n';
            break;
        case VotingRule::es:
            for (size_t i = 0; i < trace.spend.size(); ++i) {
                out << "iter=" << i + 1 << " chosen=" << trace.spend[i].chosen
                    << " price=" << format_ratio(trace.spend[i].price);
                if (trace.state_recorded) out << " budgets=" << join_ratios(trace.spend[i].budgets);
                out << '\n';
            }
            break;
        case VotingRule::seqp:
            for (size_t i = 0; i < trace.load.size(); ++i) {
                out << "iter=" << i + 1 << " chosen=" << trace.load[i].chosen
                    << " load=" << format_ratio(trace.load[i].load);
                if (trace.state_recorded) out << " loads=" << join_ratios(trace.load[i].loads);
                out << '\n';
            }
            break;
    }
    if (trace.fallback) out << "fallback chosen=" << trace.fallback_chosen << '\n';
    return out.str();
}

} // namespace voteselect
