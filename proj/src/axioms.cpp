#include "voteselect/axioms.hpp"

#include "voteselect/errors.hpp"
#include "voteselect/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace voteselect {

namespace {

constexpr std::uint64_t kDefaultEnumLimit = 10'000'000ULL;

// C(n, k) clamped to cap+1 so guard comparisons cannot overflow.
std::uint64_t comb_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (result > cap) return cap + 1;
        result = result * (n - k + i) / i; // exact: product of i consecutive ints divisible by i!
    }
    return std::min(result, cap + 1);
}

bool contains_sorted(const std::vector<int>& sorted, int value) {
    return std::binary_search(sorted.begin(), sorted.end(), value);
}

std::vector<char> winner_mask(const Election& e, const std::vector<int>& winners) {
    std::vector<char> mask(e.candidates, 0);
    for (int w : winners) {
        if (w < 0 || w >= e.candidates)
            throw ArgumentError("winner index out of range");
        mask[w] = 1;
    }
    return mask;
}

std::vector<int> winners_held(const Election& e, const std::vector<char>& mask) {
    std::vector<int> sat(e.voters, 0);
    for (int i = 0; i < e.voters; ++i)
        for (int c : e.ballots[i])
            if (mask[c]) ++sat[i];
    return sat;
}

long level_cap(const Election& e) {
    long lmax = floor_to_long(e.q * e.voters);
    lmax = std::min<long>(lmax, e.candidates);
    size_t longest = 0;
    for (const auto& b : e.ballots) longest = std::max(longest, b.size());
    return std::min<long>(lmax, static_cast<long>(longest));
}

// group size sufficient for `level`:  |group| * q >= level
bool group_large_enough(const Election& e, size_t group, long level) {
    return BigInt(group) * numerator(e.q) >= BigInt(level) * denominator(e.q);
}

// Enumerates level-subsets of each ballot (every commonly approved subset
// is a subset of each member's ballot, so this covers all candidates for
// T). Calls visit(T) until it returns true; duplicates across ballots are
// revisited, which is harmless and keeps memory flat.
template <typename Visit>
void for_each_ballot_subset(const std::vector<std::vector<int>>& ballots, long level,
                            std::uint64_t limit, std::uint64_t& used, Visit visit) {
    std::vector<int> pick(level);
    for (const auto& ballot : ballots) {
        long b = static_cast<long>(ballot.size());
        if (b < level) continue;
        std::vector<long> at(level);
        std::iota(at.begin(), at.end(), 0);
        for (;;) {
            if (++used > limit)
                throw EnumLimitError("subset enumeration exceeded " + std::to_string(limit) +
                                     " (set VOTESELECT_MAX_ENUM to raise)");
            for (long i = 0; i < level; ++i) pick[i] = ballot[at[i]];
            if (visit(pick)) return;
            long i = level - 1;
            while (i >= 0 && at[i] == b - level + i) --i;
            if (i < 0) break;
            ++at[i];
            for (long j = i + 1; j < level; ++j) at[j] = at[j - 1] + 1;
        }
    }
}

} // namespace

std::uint64_t default_enum_limit() {
    if (const char* env = std::getenv("VOTESELECT_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultEnumLimit;
}

bool is_l_cohesive(const Election& e, const std::vector<int>& voters, int level) {
    if (voters.empty() || level < 1) return false;
    std::vector<int> group = voters;
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    for (int v : group)
        if (v < 0 || v >= e.voters) throw ArgumentError("voter index out of range");
    if (!group_large_enough(e, group.size(), level)) return false;

    std::vector<int> common = e.ballots[group[0]];
    for (size_t i = 1; i < group.size() && !common.empty(); ++i) {
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(),
                              e.ballots[group[i]].begin(), e.ballots[group[i]].end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    return static_cast<long>(common.size()) >= level;
}

std::optional<AxiomViolation> check_l_ejr(const Election& e, const std::vector<int>& winners,
                                          int level, std::uint64_t limit) {
    if (level < 1) throw ArgumentError("check_l_ejr: level must be >= 1");
    auto mask = winner_mask(e, winners);
    auto sat = winners_held(e, mask);

    // Guard before enumerating.
    std::uint64_t planned = 0;
    for (int i = 0; i < e.voters; ++i) {
        if (sat[i] >= level) continue;
        planned += comb_capped(e.ballots[i].size(), level, limit);
        if (planned > limit)
            throw EnumLimitError("level-" + std::to_string(level) + " check would enumerate more than " +
                                 std::to_string(limit) + " subsets (set VOTESELECT_MAX_ENUM to raise)");
    }

    std::vector<std::vector<int>> eligible_ballots;
    for (int i = 0; i < e.voters; ++i)
        if (sat[i] < level) eligible_ballots.push_back(e.ballots[i]);

    std::optional<AxiomViolation> found;
    std::uint64_t used = 0;
    for_each_ballot_subset(eligible_ballots, level, limit, used, [&](const std::vector<int>& t) {
        std::vector<int> group;
        for (int i = 0; i < e.voters; ++i) {
            if (sat[i] >= level) continue;
            if (std::includes(e.ballots[i].begin(), e.ballots[i].end(), t.begin(), t.end()))
                group.push_back(i);
        }
        if (!group_large_enough(e, group.size(), level)) return false;
        AxiomViolation v;
        v.level = level;
        v.witness_voters = group;
        v.witness_candidates = t;
        for (int i : group) v.per_voter_winner_counts.push_back(sat[i]);
        found = std::move(v);
        return true;
    });
    return found;
}

std::optional<AxiomViolation> check_l_pjr(const Election& e, const std::vector<int>& winners,
                                          int level, std::uint64_t limit) {
    if (level < 1) throw ArgumentError("check_l_pjr: level must be >= 1");
    auto mask = winner_mask(e, winners);

    std::vector<int> w_sorted = winners;
    std::sort(w_sorted.begin(), w_sorted.end());
    w_sorted.erase(std::unique(w_sorted.begin(), w_sorted.end()), w_sorted.end());
    long w = static_cast<long>(w_sorted.size());

    std::uint64_t absorber_count = w <= level - 1 ? 1 : comb_capped(w, level - 1, limit);
    std::uint64_t planned = 0;
    for (int i = 0; i < e.voters; ++i) {
        planned += comb_capped(e.ballots[i].size(), level, limit / std::max<std::uint64_t>(absorber_count, 1));
        if (planned * absorber_count > limit)
            throw EnumLimitError("level-" + std::to_string(level) + " check would enumerate more than " +
                                 std::to_string(limit) + " subsets (set VOTESELECT_MAX_ENUM to raise)");
    }

    // Pre-intersect each ballot with the committee.
    std::vector<std::vector<int>> ballot_winners(e.voters);
    for (int i = 0; i < e.voters; ++i)
        for (int c : e.ballots[i])
            if (mask[c]) ballot_winners[i].push_back(c);

    auto make_violation = [&](int level_, const std::vector<int>& group, const std::vector<int>& t) {
        AxiomViolation v;
        v.level = level_;
        v.witness_voters = group;
        v.witness_candidates = t;
        std::vector<char> covered(e.candidates, 0);
        int union_count = 0;
        for (int i : group) {
            v.per_voter_winner_counts.push_back(static_cast<int>(ballot_winners[i].size()));
            for (int c : ballot_winners[i])
                if (!covered[c]) {
                    covered[c] = 1;
                    ++union_count;
                }
        }
        v.union_winner_count = union_count;
        return v;
    };

    std::optional<AxiomViolation> found;
    std::uint64_t used = 0;
    for_each_ballot_subset(e.ballots, level, limit, used, [&](const std::vector<int>& t) {
        std::vector<int> approving;
        for (int i = 0; i < e.voters; ++i)
            if (std::includes(e.ballots[i].begin(), e.ballots[i].end(), t.begin(), t.end()))
                approving.push_back(i);
        if (!group_large_enough(e, approving.size(), level)) return false;

        if (w <= level - 1) {
            // Any cohesive group qualifies: the committee is too small to
            // cover `level` of its candidates.
            found = make_violation(level, approving, t);
            return true;
        }

        // Choose which level-1 winners may absorb the group's coverage.
        std::vector<long> at(level - 1);
        std::iota(at.begin(), at.end(), 0);
        std::vector<char> allowed(e.candidates, 0);
        for (;;) {
            if (++used > limit)
                throw EnumLimitError("subset enumeration exceeded " + std::to_string(limit) +
                                     " (set VOTESELECT_MAX_ENUM to raise)");
            std::fill(allowed.begin(), allowed.end(), 0);
            for (long i = 0; i < level - 1; ++i) allowed[w_sorted[at[i]]] = 1;
            std::vector<int> group;
            for (int i : approving) {
                bool inside = true;
                for (int c : ballot_winners[i])
                    if (!allowed[c]) {
                        inside = false;
                        break;
                    }
                if (inside) group.push_back(i);
            }
            if (group_large_enough(e, group.size(), level)) {
                found = make_violation(level, group, t);
                return true;
            }
            long i = level - 2;
            while (i >= 0 && at[i] == w - (level - 1) + i) --i;
            if (i < 0) break;
            ++at[i];
            for (long j = i + 1; j < level - 1; ++j) at[j] = at[j - 1] + 1;
        }
        return false;
    });
    return found;
}

std::optional<AxiomViolation> check_ejr(const Election& e, const std::vector<int>& winners,
                                        std::uint64_t limit) {
    long lmax = level_cap(e);
    for (long l = 1; l <= lmax; ++l)
        if (auto v = check_l_ejr(e, winners, static_cast<int>(l), limit)) return v;
    return std::nullopt;
}

std::optional<AxiomViolation> check_pjr(const Election& e, const std::vector<int>& winners,
                                        std::uint64_t limit) {
    long lmax = level_cap(e);
    for (long l = 1; l <= lmax; ++l)
        if (auto v = check_l_pjr(e, winners, static_cast<int>(l), limit)) return v;
    return std::nullopt;
}

long entitlement(const Election& e, int voter, const std::vector<int>& winners) {
    if (voter < 0 || voter >= e.voters) throw ArgumentError("entitlement: voter out of range");
    auto mask = winner_mask(e, winners);
    long best = 0;
    for (int c : e.ballots[voter])
        if (!mask[c]) best = std::max(best, plausibility(e, c, winners, 0));
    return best;
}

SafetyReport check_safe_trace(const Election& e, const RuleTrace& trace) {
    if (trace.rule != VotingRule::es)
        throw ArgumentError("check_safe_trace: not a budget-spending trace");
    if (!trace.spend.empty() && !trace.state_recorded)
        throw ArgumentError("check_safe_trace: trace has no budget snapshots");

    const Rational cost = e.cost();
    SafetyReport report;

    std::vector<Rational> prev(e.voters, Rational(1));
    std::vector<int> winners;

    // Retained-budget bound at one state: whenever a voter is still owed
    // more winners than they hold, their budget has not dropped below
    // 1 - held/owed.
    auto floor_holds = [&](const std::vector<Rational>& budgets) {
        auto mask = winner_mask(e, winners);
        auto sat = winners_held(e, mask);
        for (int i = 0; i < e.voters; ++i) {
            long en = entitlement(e, i, winners);
            if (en > sat[i] && budgets[i] < Rational(en - sat[i], en)) return false;
        }
        return true;
    };

    for (const auto& step : trace.spend) {
        if (static_cast<int>(step.budgets.size()) != e.voters)
            throw ArgumentError("check_safe_trace: bad snapshot width");
        IterationVerdict verdict;

        Rational removed = 0;
        for (int i = 0; i < e.voters; ++i) removed += prev[i] - step.budgets[i];
        bool cond1 = removed == cost;

        winners.push_back(step.chosen);
        bool cond2 = true, cond3 = true;
        auto mask = winner_mask(e, winners);
        auto sat = winners_held(e, mask);
        for (int i = 0; i < e.voters; ++i) {
            if (contains_sorted(e.ballots[i], step.chosen)) {
                long en = entitlement(e, i, winners);
                Rational need = en > sat[i] ? Rational(en - sat[i], en) : Rational(0);
                if (step.budgets[i] < need) cond2 = false;
            } else if (step.budgets[i] != prev[i]) {
                cond3 = false;
            }
        }

        verdict.safe = cond1 && cond2 && cond3;
        verdict.failed_condition = !cond1 ? 1 : (!cond2 ? 2 : (!cond3 ? 3 : 0));
        verdict.budget_floor_ok = floor_holds(step.budgets);
        report.all_safe = report.all_safe && verdict.safe;
        report.budget_floor_ok = report.budget_floor_ok && verdict.budget_floor_ok;
        report.iterations.push_back(verdict);
        prev = step.budgets;
    }

    // Terminal state: every candidate outside the committee must be weak,
    // i.e. its approvers' remaining budgets cannot cover the cost.
    auto mask = winner_mask(e, winners);
    for (int c = 0; c < e.candidates; ++c) {
        if (mask[c]) continue;
        Rational total = 0;
        for (int i = 0; i < e.voters; ++i)
            if (contains_sorted(e.ballots[i], c)) total += prev[i];
        if (total >= cost) {
            report.terminal_all_weak = false;
            report.nonweak_candidates.push_back(c);
        }
    }
    return report;
}

Election random_election(std::uint64_t seed, int max_n, double p, const Rational& q) {
    if (max_n < 1) throw ArgumentError("random_election: max_n must be >= 1");
    std::mt19937_64 gen(seed);
    int n = 1 + static_cast<int>(bounded(gen, static_cast<std::uint64_t>(max_n)));
    std::vector<std::vector<int>> ballots(n);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c)
            if (unit_double(gen) < p) ballots[i].push_back(c);
    return make_election(n, n, std::move(ballots), q);
}

Election corpus_election(std::uint64_t seed, std::size_t index) {
    static const Rational qs[] = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)};
    double p = (index % 2 == 0) ? 0.2 : 0.5;
    const Rational& q = qs[(index / 2) % 4];
    return random_election(derive_seed(seed, index), 10, p, q);
}

} // namespace voteselect
