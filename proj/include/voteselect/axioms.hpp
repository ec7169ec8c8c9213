#pragma once

#include "voteselect/localset.hpp"
#include "voteselect/voting.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace voteselect {

// Upper bound on the number of candidate subsets a brute-force check may
// enumerate. Overridable through the VOTESELECT_MAX_ENUM environment
// variable; checks that would exceed it throw EnumLimitError.
std::uint64_t default_enum_limit();

// A group of voters certifying that a committee misrepresents them at the
// given level. Carries enough to re-validate the claim from scratch.
struct AxiomViolation {
    int level = 0;
    std::vector<int> witness_voters;         // ascending
    std::vector<int> witness_candidates;     // a commonly approved level-subset
    std::vector<int> per_voter_winner_counts; // |ballot_i ∩ W| per witness voter
    int union_winner_count = -1;             // |W ∩ union of witness ballots|
};

// A voter group is level-cohesive when it is large enough to deserve
// `level` winners (|group| * q >= level) and commonly approves at least
// `level` candidates.
bool is_l_cohesive(const Election& e, const std::vector<int>& voters, int level);

// Justified-representation check at one level: searches for a cohesive
// group in which every voter holds fewer than `level` winners. Groups are
// anchored on level-subsets of candidates: a violating group exists iff
// for some commonly approved level-subset, the voters approving all of it
// and holding fewer than `level` winners are numerous enough.
std::optional<AxiomViolation> check_l_ejr(const Election& e, const std::vector<int>& winners,
                                          int level, std::uint64_t limit = default_enum_limit());

// Proportionality check at one level: searches for a cohesive group whose
// ballots jointly cover fewer than `level` winners. Anchored on candidate
// subsets plus (level-1)-subsets of the committee that must absorb every
// witness voter's winners.
std::optional<AxiomViolation> check_l_pjr(const Election& e, const std::vector<int>& winners,
                                          int level, std::uint64_t limit = default_enum_limit());

// Scan all levels 1..min(floor(q*n), candidates, longest ballot); first
// violation wins.
std::optional<AxiomViolation> check_ejr(const Election& e, const std::vector<int>& winners,
                                        std::uint64_t limit = default_enum_limit());
std::optional<AxiomViolation> check_pjr(const Election& e, const std::vector<int>& winners,
                                        std::uint64_t limit = default_enum_limit());

// Highest plausibility among the voter's approved non-winners; how many
// more winners the voter could still justify. Zero when the ballot is
// contained in W or empty.
long entitlement(const Election& e, int voter, const std::vector<int>& winners);

// Per-iteration audit of a budget-spending trace. An iteration electing c
// is safe when (1) exactly n/t total budget was removed, (2) each approver
// of c retains at least 1 - |ballot ∩ W'|/en(i,W') of a budget unit
// (W' = winners including c) whenever that entitlement exceeds the winners
// held, and (3) non-approvers are untouched.
struct IterationVerdict {
    bool safe = false;
    int failed_condition = 0; // 1..3, 0 when safe
    bool budget_floor_ok = true;
};

struct SafetyReport {
    std::vector<IterationVerdict> iterations;
    bool all_safe = true;
    bool budget_floor_ok = true;     // retained-budget bound held at every state
    bool terminal_all_weak = true;   // every unelected candidate priced out
    std::vector<int> nonweak_candidates;
};

// Requires an equal-shares trace with budgets recorded. A fallback trace
// has no iterations; the terminal classification still runs (with the
// empty committee, matching the state the fallback reacted to).
SafetyReport check_safe_trace(const Election& e, const RuleTrace& trace);

// Seeded election with voters = candidates = n drawn from 1..max_n; each
// voter approves each candidate independently with probability p.
Election random_election(std::uint64_t seed, int max_n, double p, const Rational& q);

// Element `index` of the standard verification corpus for a given seed:
// n <= 10, approval probability cycling over {0.2, 0.5} and q cycling over
// {1/4, 1/2, 1, 2}. One definition shared by the CLI and the test suites.
Election corpus_election(std::uint64_t seed, std::size_t index);

} // namespace voteselect
