#include "voteselect/dataset.hpp"

#include "voteselect/errors.hpp"
#include "voteselect/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

namespace voteselect {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& cell, double& out) {
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

void refresh_class_labels(Dataset& ds) {
    std::set<std::string> seen(ds.labels.begin(), ds.labels.end());
    ds.class_labels.assign(seen.begin(), seen.end());
}

std::string basename_no_ext(const std::string& path) {
    size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
    return base;
}

} // namespace

Dataset load_dataset(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");

    Dataset ds;
    ds.name = basename_no_ext(path);

    std::string line;
    int data_row = 0;
    bool skipped_header = !options.has_header;
    int width = -1;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        if (!skipped_header) {
            skipped_header = true;
            continue;
        }
        ++data_row;
        std::vector<std::string> cells = split_csv_line(line);
        if (width == -1) {
            width = static_cast<int>(cells.size());
            if (width < 2)
                throw FormatError("'" + path + "': need at least one feature and a label column");
        } else if (static_cast<int>(cells.size()) != width) {
            throw FormatError("'" + path + "': row " + std::to_string(data_row) + " has " +
                              std::to_string(cells.size()) + " cells, expected " + std::to_string(width));
        }

        int label_col = options.label_column < 0 ? width - 1 : options.label_column;
        if (label_col >= width)
            throw ArgumentError("label column " + std::to_string(label_col) + " out of range");

        std::vector<double> row;
        row.reserve(width - 1);
        for (int c = 0; c < width; ++c) {
            std::string cell = trim(cells[c]);
            if (c == label_col) {
                ds.labels.push_back(cell);
                continue;
            }
            double v;
            if (!parse_double(cell, v))
                throw ParseError("'" + path + "': row " + std::to_string(data_row) + ", column " +
                                 std::to_string(c + 1) + ": '" + cell + "' is not numeric");
            row.push_back(v);
        }
        ds.features.push_back(std::move(row));
    }
    if (ds.features.empty()) throw FormatError("'" + path + "': no data rows");
    refresh_class_labels(ds);
    return ds;
}

Dataset make_dataset(std::vector<std::vector<double>> features,
                     std::vector<std::string> labels,
                     std::string name) {
    if (features.size() != labels.size())
        throw ArgumentError("make_dataset: feature/label row count mismatch");
    for (const auto& row : features)
        if (row.size() != features[0].size())
            throw ArgumentError("make_dataset: ragged feature rows");
    Dataset ds;
    ds.features = std::move(features);
    ds.labels = std::move(labels);
    ds.name = std::move(name);
    refresh_class_labels(ds);
    return ds;
}

Dataset subset(const Dataset& ds, const std::vector<int>& rows) {
    Dataset out;
    out.name = ds.name;
    out.features.reserve(rows.size());
    out.labels.reserve(rows.size());
    for (int r : rows) {
        if (r < 0 || r >= ds.n()) throw ArgumentError("subset: row index out of range");
        out.features.push_back(ds.features[r]);
        out.labels.push_back(ds.labels[r]);
    }
    refresh_class_labels(out);
    return out;
}

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw ArgumentError("euclidean_distance: dimension mismatch");
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

DistanceMatrix DistanceMatrix::compute(const Dataset& ds) {
    DistanceMatrix m;
    m.n = ds.n();
    m.values.assign(static_cast<size_t>(m.n) * m.n, 0.0);
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) {
            double d = euclidean_distance(ds.features[i], ds.features[j]);
            m.values[static_cast<size_t>(i) * m.n + j] = d;
            m.values[static_cast<size_t>(j) * m.n + i] = d;
        }
    return m;
}

DistanceMatrix DistanceMatrix::from_subset(const DistanceMatrix& full, const std::vector<int>& rows) {
    DistanceMatrix m;
    m.n = static_cast<int>(rows.size());
    m.values.assign(static_cast<size_t>(m.n) * m.n, 0.0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            m.values[static_cast<size_t>(i) * m.n + j] = full.at(rows[i], rows[j]);
    return m;
}

std::vector<int> FoldAssignment::training_indices(int fold) const {
    std::vector<int> out;
    out.reserve(fold_of.size());
    for (int i = 0; i < static_cast<int>(fold_of.size()); ++i)
        if (fold_of[i] != fold) out.push_back(i);
    return out;
}

FoldAssignment make_folds(int n, int k, std::uint64_t seed) {
    if (k < 1 || k > n) throw ArgumentError("make_folds: need 1 <= k <= n");
    std::vector<int> order = shuffled_indices(n, seed);

    FoldAssignment fa;
    fa.k = k;
    fa.fold_of.assign(n, -1);
    fa.folds.assign(k, {});
    int base = n / k;
    int extra = n % k; // first `extra` folds get one more
    int pos = 0;
    for (int f = 0; f < k; ++f) {
        int size = base + (f < extra ? 1 : 0);
        for (int s = 0; s < size; ++s) {
            int idx = order[pos++];
            fa.fold_of[idx] = f;
            fa.folds[f].push_back(idx);
        }
        std::sort(fa.folds[f].begin(), fa.folds[f].end());
    }
    return fa;
}

Dataset normalize_minmax(const Dataset& ds) {
    Dataset out = ds;
    int fc = ds.feature_count();
    for (int c = 0; c < fc; ++c) {
        double lo = ds.features[0][c], hi = ds.features[0][c];
        for (const auto& row : ds.features) {
            lo = std::min(lo, row[c]);
            hi = std::max(hi, row[c]);
        }
        for (auto& row : out.features)
            row[c] = hi > lo ? (row[c] - lo) / (hi - lo) : 0.0;
    }
    return out;
}

std::vector<PcaPoint> pca_project(const Dataset& ds, int dims) {
    int n = ds.n();
    int fc = ds.feature_count();
    if (dims < 1 || dims > fc) throw ArgumentError("pca_project: dims out of range");

    Eigen::MatrixXd x(n, fc);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < fc; ++c) x(i, c) = ds.features[i][c];
    Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;

    Eigen::MatrixXd cov = (x.transpose() * x) / std::max(n - 1, 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) throw Error("pca_project: eigendecomposition failed");

    // Eigen returns eigenvalues ascending; take the top `dims`, descending.
    Eigen::MatrixXd basis(fc, dims);
    for (int p = 0; p < dims; ++p) {
        Eigen::VectorXd v = solver.eigenvectors().col(fc - 1 - p);
        int arg = 0;
        for (int c = 1; c < fc; ++c)
            if (std::abs(v(c)) > std::abs(v(arg))) arg = c;
        if (v(arg) < 0) v = -v;
        basis.col(p) = v;
    }

    Eigen::MatrixXd proj = x * basis;
    std::vector<PcaPoint> out(n);
    for (int i = 0; i < n; ++i) {
        out[i].index = i;
        out[i].label = ds.labels[i];
        out[i].coords.resize(dims);
        for (int p = 0; p < dims; ++p) out[i].coords[p] = proj(i, p);
    }
    return out;
}

Dataset random_dataset(std::uint64_t seed, int n, int classes, int features) {
    if (n < classes || classes < 1 || features < 1)
        throw ArgumentError("random_dataset: bad shape");
    std::mt19937_64 gen(seed);
    std::vector<std::vector<double>> rows(n, std::vector<double>(features));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < features; ++c) rows[i][c] = unit_double(gen);
        int cls = i < classes ? i : static_cast<int>(bounded(gen, classes));
        labels[i] = "c" + std::to_string(cls);
    }
    return make_dataset(std::move(rows), std::move(labels), "random-" + std::to_string(seed));
}

Dataset corpus_dataset(std::uint64_t seed, std::size_t index) {
    std::uint64_t s = derive_seed(seed, index);
    std::uint64_t state = s;
    int n = 4 + static_cast<int>(splitmix64(state) % 57);  // 4..60
    int classes = 2 + static_cast<int>(splitmix64(state) % 2);
    return random_dataset(s, n, classes, 2);
}

} // namespace voteselect
