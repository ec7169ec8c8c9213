#include "voteselect/classify.hpp"

#include "voteselect/errors.hpp"

#include <algorithm>
#include <map>

namespace voteselect {

KnnModel KnnModel::fit(const Dataset& ds, const std::vector<int>& kept, int k) {
    if (k < 1 || k % 2 == 0) throw ArgumentError("knn: k must be odd and positive");
    if (kept.empty()) throw ArgumentError("knn: empty training selection");
    KnnModel model;
    model.k = k;
    for (int r : kept) {
        if (r < 0 || r >= ds.n()) throw ArgumentError("knn: row index out of range");
        model.points.push_back(ds.features[r]);
        model.labels.push_back(ds.labels[r]);
        model.original_indices.push_back(r);
    }
    return model;
}

std::string knn_predict(const KnnModel& model, const std::vector<double>& x) {
    int n = static_cast<int>(model.points.size());
    std::vector<std::pair<double, int>> order(n); // (distance, row)
    for (int i = 0; i < n; ++i)
        order[i] = {euclidean_distance(model.points[i], x), i};
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return model.original_indices[a.second] < model.original_indices[b.second];
    });

    int take = std::min(model.k, n);
    std::map<std::string, int> votes;
    for (int i = 0; i < take; ++i) ++votes[model.labels[order[i].second]];
    int best = 0;
    for (const auto& [label, count] : votes) best = std::max(best, count);
    // Nearest neighbor holding a top-count label decides ties.
    for (int i = 0; i < take; ++i) {
        const std::string& label = model.labels[order[i].second];
        if (votes[label] == best) return label;
    }
    return model.labels[order[0].second]; // unreachable
}

double evaluate_accuracy(const KnnModel& model, const Dataset& test) {
    if (test.n() == 0) throw ArgumentError("evaluate_accuracy: empty test set");
    int correct = 0;
    for (int i = 0; i < test.n(); ++i)
        if (knn_predict(model, test.features[i]) == test.labels[i]) ++correct;
    return static_cast<double>(correct) / test.n();
}

GuaranteeReport check_knn_guarantee(const Dataset& ds, VotingRule rule, int k) {
    if (k < 1 || k % 2 == 0) throw ArgumentError("check_knn_guarantee: k must be odd");
    int needed = (k + 1) / 2;
    bool qualifies = rule == VotingRule::sejr || rule == VotingRule::es ||
                     (rule == VotingRule::s2ejr && needed <= 2);
    if (!qualifies)
        throw ArgumentError("check_knn_guarantee: " + rule_name(rule) +
                            " does not provide level-" + std::to_string(needed) +
                            " proportionality");

    DistanceMatrix dist = DistanceMatrix::compute(ds);
    Election e = build_election(ds, dist, BallotVariant::included, Rational(k + 1, 2));
    RuleResult result = run_rule(e, rule, TraceOptions{.record_state = false});

    GuaranteeReport report;
    report.kept = result.committee.members;
    std::sort(report.kept.begin(), report.kept.end());

    KnnModel model = KnnModel::fit(ds, report.kept, k);
    for (int i = 0; i < ds.n(); ++i) {
        if (static_cast<int>(e.ballots[i].size()) < needed) continue;
        report.eligible.push_back(i);
        if (knn_predict(model, ds.features[i]) != ds.labels[i])
            report.violations.push_back(i);
    }
    return report;
}

} // namespace voteselect
