#pragma once

#include "voteselect/localset.hpp"
#include "voteselect/rational.hpp"

#include <string>
#include <vector>

namespace voteselect {

enum class VotingRule { sejr, s2ejr, es, seqp };

std::string rule_name(VotingRule rule);
VotingRule parse_rule(const std::string& name);

// Plausibility of candidate c given the winners so far: the largest level
// l >= 0 for which the voters approving c that hold fewer than
// min(l, cap) winners (fewer than l when cap is 0) number at least
// l * n/t. Compared exactly in rationals; feasibility is not monotone in
// l, so every level up to floor(|approvers| * q) is inspected.
long plausibility(const Election& e, int candidate,
                  const std::vector<int>& winners, int cap = 0);

struct GreedyIteration {
    int chosen = -1;
    long level = 0; // plausibility at election time
};

struct SpendIteration {
    int chosen = -1;
    Rational price;                // uniform payment charged to unsaturated approvers
    std::vector<Rational> budgets; // per-voter budgets after payment (optional)
};

struct LoadIteration {
    int chosen = -1;
    Rational load;               // new load of the chosen candidate's approvers
    std::vector<Rational> loads; // per-voter loads after the step (optional)
};

struct RuleTrace {
    VotingRule rule = VotingRule::sejr;
    bool fallback = false;
    int fallback_chosen = -1;
    bool state_recorded = false;
    std::vector<GreedyIteration> greedy; // sejr / s2ejr
    std::vector<SpendIteration> spend;   // es
    std::vector<LoadIteration> load;     // seqp
};

// One iteration per line; budgets/loads included when recorded.
std::string format_trace(const RuleTrace& trace);

struct Committee {
    std::vector<int> members; // selection order
    Rational q;
    std::vector<std::string> flags; // "fallback", "adapted_stop"
};

struct RuleResult {
    Committee committee;
    RuleTrace trace;
};

struct TraceOptions {
    bool record_state = true; // per-iteration budget/load snapshots
};

// Greedy max-plausibility selection; stops when every remaining candidate
// has plausibility zero. If that is true at the start, falls back to the
// single most-approved candidate (lowest index on ties).
RuleResult run_sejr(const Election& e, const TraceOptions& trace = {});

// Same with the plausibility level capped at two: voters already holding
// two winners stop counting. Output size never exceeds ceil(q * n).
RuleResult run_s2ejr(const Election& e, const TraceOptions& trace = {});

// Budget-spending proportional selection: every voter starts with budget
// 1, a candidate costs n/t, and each iteration elects the candidate whose
// approvers can cover the cost with the smallest uniform payment. Same
// most-approved fallback when nothing is affordable at the start.
RuleResult run_equal_shares(const Election& e, const TraceOptions& trace = {});

struct SeqpOptions {
    bool adapted_stop = false; // stop early once all unelected candidates have zero approvers
    TraceOptions trace;
};

// Sequential load balancing: elects t_int candidates, each time the one
// minimizing the resulting maximal approver load. Standard mode throws
// ExhaustionError when fewer than t_int candidates have any approver.
RuleResult run_seqphragmen(const Election& e, const SeqpOptions& options = {});

RuleResult run_rule(const Election& e, VotingRule rule, const TraceOptions& trace = {},
                    bool seqp_adapted_stop = false);

} // namespace voteselect
