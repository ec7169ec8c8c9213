#pragma once

#include "voteselect/dataset.hpp"
#include "voteselect/voting.hpp"

#include <string>
#include <vector>

namespace voteselect {

// K-nearest-neighbor classifier over explicit training rows. Neighbor
// ordering is total: distance first, original index second, so predictions
// are reproducible.
struct KnnModel {
    std::vector<std::vector<double>> points;
    std::vector<std::string> labels;
    std::vector<int> original_indices;
    int k = 3;

    static KnnModel fit(const Dataset& ds, const std::vector<int>& kept, int k);
};

// Majority label among the k nearest training rows (all rows when fewer
// than k exist). A tie in label frequency goes to the label of the nearest
// neighbor holding one of the tied labels.
std::string knn_predict(const KnnModel& model, const std::vector<double>& x);

// Fraction of test rows predicted correctly.
double evaluate_accuracy(const KnnModel& model, const Dataset& test);

// Checks the selection guarantee: build the ballots-included election with
// q = (K+1)/2, elect with the given rule, classify the training set with
// KNN(K) on the elected subset. Every instance whose ballot holds at least
// (K+1)/2 candidates must be classified correctly; the guarantee needs a
// rule proportional at level (K+1)/2, so sejr and es qualify for any odd K
// and s2ejr only for K <= 3.
struct GuaranteeReport {
    std::vector<int> eligible;   // instances covered by the guarantee
    std::vector<int> violations; // eligible instances misclassified
    std::vector<int> kept;       // elected subset, ascending
};

GuaranteeReport check_knn_guarantee(const Dataset& ds, VotingRule rule, int k);

} // namespace voteselect
