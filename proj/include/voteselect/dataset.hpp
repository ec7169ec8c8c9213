#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace voteselect {

// A labeled numeric dataset. Rows are instances; the label is an opaque
// string. Instances are identified by their row index.
struct Dataset {
    std::vector<std::vector<double>> features; // rectangular
    std::vector<std::string> labels;           // one per row
    std::vector<std::string> class_labels;     // distinct labels, sorted
    std::string name;

    int n() const { return static_cast<int>(features.size()); }
    int feature_count() const { return features.empty() ? 0 : static_cast<int>(features[0].size()); }
};

struct LoadOptions {
    bool has_header = false;
    int label_column = -1; // -1 selects the last column
};

// Loads a comma-separated file: numeric feature columns plus one label
// column. Throws ParseError naming the offending 1-based data row and
// column, FormatError for ragged or empty input.
Dataset load_dataset(const std::string& path, const LoadOptions& options = {});

// Builds a dataset in memory; refreshes class_labels.
Dataset make_dataset(std::vector<std::vector<double>> features,
                     std::vector<std::string> labels,
                     std::string name = "inline");

// Row subset (indices must be valid; order preserved).
Dataset subset(const Dataset& ds, const std::vector<int>& rows);

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b);

// Full pairwise Euclidean distance matrix.
struct DistanceMatrix {
    int n = 0;
    std::vector<double> values; // n*n, symmetric, zero diagonal

    double at(int i, int j) const { return values[static_cast<size_t>(i) * n + j]; }
    static DistanceMatrix compute(const Dataset& ds);
    static DistanceMatrix from_subset(const DistanceMatrix& full, const std::vector<int>& rows);
};

// Cross-validation fold assignment: a seeded shuffle cut into k contiguous
// blocks whose sizes differ by at most one. Fold member lists are kept in
// ascending index order.
struct FoldAssignment {
    int k = 0;
    std::vector<int> fold_of;            // per instance
    std::vector<std::vector<int>> folds; // fold -> ascending instance indices

    std::vector<int> training_indices(int fold) const; // ascending complement
};

FoldAssignment make_folds(int n, int k, std::uint64_t seed);

// Per-feature min-max scaling to [0,1]; constant features map to 0.
Dataset normalize_minmax(const Dataset& ds);

struct PcaPoint {
    int index = 0;
    std::vector<double> coords;
    std::string label;
};

// Projects onto the top principal components of the feature covariance
// matrix (eigenvalues descending; each component's largest-magnitude
// loading is made positive so the output is reproducible).
std::vector<PcaPoint> pca_project(const Dataset& ds, int dims = 2);

// Seeded synthetic dataset: uniform features in [0,1]^features, labels
// drawn from `classes` distinct values with every class present.
Dataset random_dataset(std::uint64_t seed, int n, int classes, int features);

// Element `index` of the standard synthetic corpus for a given seed:
// 4..60 instances, 2 or 3 classes, 2 features. One definition shared by
// the CLI and the test suites.
Dataset corpus_dataset(std::uint64_t seed, std::size_t index);

} // namespace voteselect
