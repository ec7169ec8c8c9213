#include "voteselect/baselines.hpp"

#include "voteselect/errors.hpp"
#include "voteselect/localset.hpp"
#include "voteselect/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace voteselect {

namespace {

std::vector<int> all_indices(int n) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    return idx;
}

// usefulness = how many local sets contain i (its own included),
// harmfulness = how many instances have i as nearest enemy.
struct UseHarm {
    std::vector<int> use, harm;
};

UseHarm use_harm(const LocalSetTable& table, int n) {
    UseHarm uh;
    uh.use.assign(n, 0);
    uh.harm.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        for (int member : table.sets[j]) ++uh.use[member];
        ++uh.harm[table.enemies[j].index];
    }
    return uh;
}

int nearest_in_set(const DistanceMatrix& dist, const std::vector<char>& in_set, int i) {
    int best = -1;
    for (int j = 0; j < dist.n; ++j) {
        if (!in_set[j] || j == i) continue;
        if (best == -1 || dist.at(i, j) < dist.at(i, best)) best = j;
    }
    return best;
}

} // namespace

SelectionResult select_random(int n, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw ArgumentError("select_random: fraction must be in (0,1]");
    int m = static_cast<int>(std::llround(fraction * n));
    m = std::clamp(m, 1, n);
    std::vector<int> order = shuffled_indices(n, seed);
    SelectionResult r;
    r.kept.assign(order.begin(), order.begin() + m);
    std::sort(r.kept.begin(), r.kept.end());
    return r;
}

SelectionResult select_noapproved(const Dataset& ds, const DistanceMatrix& dist) {
    LocalSetTable table = LocalSetTable::compute(ds, dist);
    int n = ds.n();
    std::vector<char> wanted(n, 0);
    for (int j = 0; j < n; ++j)
        for (int member : table.sets[j])
            if (member != j) wanted[member] = 1;

    SelectionResult r;
    for (int i = 0; i < n; ++i)
        if (wanted[i]) r.kept.push_back(i);
    if (r.kept.empty()) {
        r.kept = all_indices(n);
        r.flags.push_back("empty_guard");
    }
    return r;
}

SelectionResult select_cnn(const Dataset& ds, const DistanceMatrix& dist) {
    int n = ds.n();
    std::vector<char> in_set(n, 0);
    in_set[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (in_set[i]) continue;
            int nb = nearest_in_set(dist, in_set, i);
            if (nb == -1 || ds.labels[nb] != ds.labels[i]) {
                in_set[i] = 1;
                changed = true;
            }
        }
    }
    SelectionResult r;
    for (int i = 0; i < n; ++i)
        if (in_set[i]) r.kept.push_back(i);
    return r;
}

SelectionResult select_enn(const Dataset& ds, const DistanceMatrix& dist, int k) {
    int n = ds.n();
    if (k < 1) throw ArgumentError("select_enn: k must be >= 1");
    if (n <= k) throw ArgumentError("select_enn: need more than k instances");

    SelectionResult r;
    std::vector<int> order;
    for (int i = 0; i < n; ++i) {
        order.clear();
        for (int j = 0; j < n; ++j)
            if (j != i) order.push_back(j);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            double da = dist.at(i, a), db = dist.at(i, b);
            if (da != db) return da < db;
            return a < b;
        });

        std::map<std::string, int> votes;
        for (int t = 0; t < k; ++t) ++votes[ds.labels[order[t]]];
        int best = 0;
        for (const auto& [label, count] : votes) best = std::max(best, count);
        std::string majority;
        for (int t = 0; t < k; ++t) {
            const std::string& label = ds.labels[order[t]];
            if (votes[label] == best) {
                majority = label;
                break;
            }
        }
        if (majority == ds.labels[i]) r.kept.push_back(i);
    }
    if (r.kept.empty()) {
        r.kept = all_indices(n);
        r.flags.push_back("empty_guard");
    }
    return r;
}

SelectionResult select_lssm(const Dataset& ds, const DistanceMatrix& dist) {
    LocalSetTable table = LocalSetTable::compute(ds, dist);
    UseHarm uh = use_harm(table, ds.n());
    SelectionResult r;
    for (int i = 0; i < ds.n(); ++i)
        if (uh.harm[i] <= uh.use[i]) r.kept.push_back(i);
    if (r.kept.empty()) {
        r.kept = all_indices(ds.n());
        r.flags.push_back("empty_guard");
    }
    return r;
}

SelectionResult select_lsbo(const Dataset& ds, const DistanceMatrix& dist) {
    SelectionResult edited = select_lssm(ds, dist);
    Dataset sub = subset(ds, edited.kept);
    if (sub.class_labels.size() < 2) {
        edited.flags.push_back("single_class");
        return edited;
    }

    DistanceMatrix sub_dist = DistanceMatrix::from_subset(dist, edited.kept);
    LocalSetTable table = LocalSetTable::compute(sub, sub_dist);

    int m = sub.n();
    std::vector<int> order = all_indices(m);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (table.sets[a].size() != table.sets[b].size())
            return table.sets[a].size() < table.sets[b].size();
        return a < b;
    });

    std::vector<char> chosen(m, 0);
    for (int i : order) {
        bool covered = false;
        for (int member : table.sets[i])
            if (member != i && chosen[member]) {
                covered = true;
                break;
            }
        if (!covered) chosen[i] = 1;
    }

    SelectionResult r;
    r.flags = edited.flags;
    for (int i = 0; i < m; ++i)
        if (chosen[i]) r.kept.push_back(edited.kept[i]);
    return r;
}

SelectionResult select_icf(const Dataset& ds, const DistanceMatrix& dist, int k) {
    SelectionResult r = select_enn(ds, dist, k);
    for (;;) {
        Dataset sub = subset(ds, r.kept);
        if (sub.class_labels.size() < 2) {
            r.flags.push_back("single_class");
            break;
        }
        DistanceMatrix sub_dist = DistanceMatrix::from_subset(dist, r.kept);
        LocalSetTable table = LocalSetTable::compute(sub, sub_dist);

        int m = sub.n();
        std::vector<int> coverage(m, 0);
        for (int j = 0; j < m; ++j)
            for (int member : table.sets[j]) ++coverage[member];

        std::vector<int> next;
        for (int i = 0; i < m; ++i)
            if (static_cast<int>(table.sets[i].size()) <= coverage[i])
                next.push_back(r.kept[i]);
        if (next.empty()) {
            r.flags.push_back("empty_guard");
            break;
        }
        if (next.size() == r.kept.size()) break; // fixpoint
        r.kept = std::move(next);
    }
    return r;
}

} // namespace voteselect
