#pragma once

#include "voteselect/dataset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace voteselect {

// Result of a non-voting instance selector. Indices are local to the
// dataset passed in, ascending. A method that would return nothing keeps
// the whole input instead and says so in flags.
struct SelectionResult {
    std::vector<int> kept;
    std::vector<std::string> flags; // "empty_guard", "single_class"
};

// Seeded uniform sample of round(fraction * n) instances.
SelectionResult select_random(int n, double fraction, std::uint64_t seed);

// Keeps instances that appear in at least one other instance's local set.
SelectionResult select_noapproved(const Dataset& ds, const DistanceMatrix& dist);

// Condensation: grows a set, seeded with instance 0, that classifies every
// input instance correctly with 1-NN; sweeps in index order until stable.
SelectionResult select_cnn(const Dataset& ds, const DistanceMatrix& dist);

// Edition: removes instances whose k nearest neighbors (excluding the
// instance) vote for a different label. Single pass against the original
// set. Requires n > k.
SelectionResult select_enn(const Dataset& ds, const DistanceMatrix& dist, int k = 3);

// Edition by local sets: drops instances named as nearest enemy more often
// than they appear in local sets.
SelectionResult select_lssm(const Dataset& ds, const DistanceMatrix& dist);

// Condensation by local sets: after the edition above, walks instances by
// increasing local-set size and keeps those none of whose local-set peers
// were kept already.
SelectionResult select_lsbo(const Dataset& ds, const DistanceMatrix& dist);

// Iterative case filtering: after edition, repeatedly drops instances whose
// local set is larger than the number of local sets containing them.
SelectionResult select_icf(const Dataset& ds, const DistanceMatrix& dist, int k = 3);

} // namespace voteselect
