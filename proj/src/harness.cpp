#include "voteselect/harness.hpp"

#include "voteselect/errors.hpp"
#include "voteselect/localset.hpp"
#include "voteselect/rng.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

namespace voteselect {

namespace {

std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string compact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string variant_name(BallotVariant v) {
    return v == BallotVariant::included ? "included" : "excluded";
}

} // namespace

std::string SelectorSpec::label() const {
    switch (kind) {
    case SelectorKind::none:
        return "none";
    case SelectorKind::rule:
        return rule_name(rule) + "-" + format_ratio(q) + "-" + variant_name(variant);
    case SelectorKind::baseline:
        if (baseline == "random") return "random-" + compact(fraction);
        if (baseline == "enn" || baseline == "icf")
            return baseline + "-" + std::to_string(k_param);
        return baseline;
    }
    return "?";
}

SelectorSpec SelectorSpec::keep_all() {
    SelectorSpec s;
    s.kind = SelectorKind::none;
    return s;
}

SelectorSpec SelectorSpec::voting(VotingRule rule, Rational q, BallotVariant variant) {
    SelectorSpec s;
    s.kind = SelectorKind::rule;
    s.rule = rule;
    s.q = std::move(q);
    s.variant = variant;
    return s;
}

SelectorSpec SelectorSpec::classical(std::string name, double fraction, int k) {
    SelectorSpec s;
    s.kind = SelectorKind::baseline;
    s.baseline = std::move(name);
    s.fraction = fraction;
    s.k_param = k;
    return s;
}

ExperimentResult run_experiment(const Dataset& ds, const SelectorSpec& selector,
                                const ExperimentConfig& config) {
    if (config.knn_k < 1 || config.knn_k % 2 == 0)
        throw ArgumentError("knn_k must be a positive odd number");
    auto started = std::chrono::steady_clock::now();
    Dataset work = config.normalize ? normalize_minmax(ds) : ds;
    FoldAssignment fa = make_folds(work.n(), config.folds, config.seed);

    long correct = 0;
    double reduction_sum = 0.0;
    std::set<std::string> flag_set;

    for (int f = 0; f < fa.k; ++f) {
        try {
            std::vector<int> train_rows = fa.training_indices(f);
            Dataset train = subset(work, train_rows);
            int m = train.n();
            std::vector<int> kept;
            std::vector<std::string> fold_flags;

            switch (selector.kind) {
            case SelectorKind::none:
                kept.resize(m);
                std::iota(kept.begin(), kept.end(), 0);
                break;
            case SelectorKind::rule: {
                DistanceMatrix dist = DistanceMatrix::compute(train);
                Election e = build_election(train, dist, selector.variant, selector.q);
                RuleResult r = run_rule(e, selector.rule, TraceOptions{.record_state = false},
                                        /*seqp_adapted_stop=*/true);
                kept = r.committee.members;
                std::sort(kept.begin(), kept.end());
                fold_flags = r.committee.flags;
                break;
            }
            case SelectorKind::baseline: {
                SelectionResult s;
                if (selector.baseline == "random") {
                    s = select_random(m, selector.fraction,
                                      derive_seed(config.seed, 1000 + static_cast<std::uint64_t>(f)));
                } else {
                    DistanceMatrix dist = DistanceMatrix::compute(train);
                    if (selector.baseline == "noapproved")
                        s = select_noapproved(train, dist);
                    else if (selector.baseline == "cnn")
                        s = select_cnn(train, dist);
                    else if (selector.baseline == "enn")
                        s = select_enn(train, dist, selector.k_param);
                    else if (selector.baseline == "lssm")
                        s = select_lssm(train, dist);
                    else if (selector.baseline == "lsbo")
                        s = select_lsbo(train, dist);
                    else if (selector.baseline == "icf")
                        s = select_icf(train, dist, selector.k_param);
                    else
                        throw ArgumentError("unknown baseline: " + selector.baseline);
                }
                kept = s.kept;
                fold_flags = s.flags;
                break;
            }
            }

            flag_set.insert(fold_flags.begin(), fold_flags.end());
            reduction_sum += static_cast<double>(m - static_cast<int>(kept.size())) /
                             static_cast<double>(m);

            KnnModel model = KnnModel::fit(train, kept, config.knn_k);
            for (int row : fa.folds[f]) {
                if (knn_predict(model, work.features[row]) == work.labels[row]) ++correct;
            }
        } catch (const Error& err) {
            throw Error("fold " + std::to_string(f) + ": " + err.what());
        }
    }

    ExperimentResult out;
    out.dataset = ds.name;
    out.selector = selector;
    out.knn_k = config.knn_k;
    out.accuracy = static_cast<double>(correct) / static_cast<double>(work.n());
    out.reduction = reduction_sum / static_cast<double>(fa.k);
    out.flags.assign(flag_set.begin(), flag_set.end());
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

GridOutcome run_grid(const std::vector<Dataset>& datasets,
                     const std::vector<SelectorSpec>& selectors,
                     const ExperimentConfig& config, int jobs) {
    struct Cell {
        const Dataset* ds;
        const SelectorSpec* sel;
    };
    std::vector<Cell> cells;
    cells.reserve(datasets.size() * selectors.size());
    for (const Dataset& d : datasets)
        for (const SelectorSpec& s : selectors) cells.push_back({&d, &s});

    std::vector<std::optional<ExperimentResult>> results(cells.size());
    std::vector<std::optional<GridError>> errors(cells.size());

    auto run_cell = [&](std::size_t idx) {
        try {
            results[idx] = run_experiment(*cells[idx].ds, *cells[idx].sel, config);
        } catch (const std::exception& e) {
            errors[idx] = GridError{cells[idx].ds->name, cells[idx].sel->label(), e.what()};
        }
    };

    if (jobs <= 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), cells.size());
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) break;
                    run_cell(i);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }

    GridOutcome out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (results[i]) out.results.push_back(std::move(*results[i]));
        if (errors[i]) out.errors.push_back(std::move(*errors[i]));
    }
    return out;
}

std::vector<SelectorSpec> reported_selectors() {
    std::vector<SelectorSpec> out;
    for (BallotVariant v : {BallotVariant::included, BallotVariant::excluded}) {
        out.push_back(SelectorSpec::voting(VotingRule::sejr, Rational(2), v));
        out.push_back(SelectorSpec::voting(VotingRule::s2ejr, Rational(2), v));
        out.push_back(SelectorSpec::voting(VotingRule::es, Rational(2), v));
        out.push_back(SelectorSpec::voting(VotingRule::seqp, Rational(9, 10), v));
        out.push_back(SelectorSpec::voting(VotingRule::sejr, Rational(1, 4), v));
        out.push_back(SelectorSpec::voting(VotingRule::s2ejr, Rational(1, 2), v));
        out.push_back(SelectorSpec::voting(VotingRule::es, Rational(1, 4), v));
        out.push_back(SelectorSpec::voting(VotingRule::seqp, Rational(1, 10), v));
    }
    return out;
}

std::vector<SelectorSpec> full_rule_grid() {
    std::vector<SelectorSpec> out;
    const Rational cohesive_qs[] = {Rational(2), Rational(3, 2), Rational(1),
                                    Rational(3, 4), Rational(1, 2), Rational(1, 4)};
    for (BallotVariant v : {BallotVariant::included, BallotVariant::excluded}) {
        for (VotingRule rule : {VotingRule::sejr, VotingRule::s2ejr, VotingRule::es})
            for (const Rational& q : cohesive_qs)
                out.push_back(SelectorSpec::voting(rule, q, v));
        for (int num = 9; num >= 1; --num)
            out.push_back(SelectorSpec::voting(VotingRule::seqp, Rational(num, 10), v));
    }
    return out;
}

std::vector<SelectorSpec> baseline_selectors() {
    std::vector<SelectorSpec> out;
    out.push_back(SelectorSpec::keep_all());
    out.push_back(SelectorSpec::classical("noapproved"));
    for (double fr : {0.9, 0.7, 0.5, 0.1})
        out.push_back(SelectorSpec::classical("random", fr));
    out.push_back(SelectorSpec::classical("cnn"));
    out.push_back(SelectorSpec::classical("enn", 0.9, 3));
    out.push_back(SelectorSpec::classical("lssm"));
    out.push_back(SelectorSpec::classical("lsbo"));
    out.push_back(SelectorSpec::classical("icf", 0.9, 3));
    return out;
}

namespace {

std::string result_row(const ExperimentResult& r, bool timings) {
    const SelectorSpec& s = r.selector;
    std::string q = s.kind == SelectorKind::rule ? format_ratio(s.q) : "-";
    std::string variant = s.kind == SelectorKind::rule ? variant_name(s.variant) : "-";
    std::string flags = "-";
    if (!r.flags.empty()) {
        flags.clear();
        for (std::size_t i = 0; i < r.flags.size(); ++i) {
            if (i) flags += ';';
            flags += r.flags[i];
        }
    }
    return r.dataset + "," + s.label() + "," + q + "," + variant + "," +
           std::to_string(r.knn_k) + "," + fixed6(r.accuracy) + "," + fixed6(r.reduction) +
           "," + flags + "," + (timings ? fixed3(r.seconds) : std::string("0.000"));
}

} // namespace

std::string results_csv(const GridOutcome& outcome, bool timings, bool include_published) {
    std::string out = "dataset,selector,q,variant,K,accuracy,reduction,committee_mode_flags,seconds\n";
    for (const ExperimentResult& r : outcome.results) out += result_row(r, timings) + "\n";

    // Per-selector averages over the datasets that produced a result.
    std::vector<std::string> order;
    for (const ExperimentResult& r : outcome.results) {
        std::string lab = r.selector.label();
        if (std::find(order.begin(), order.end(), lab) == order.end()) order.push_back(lab);
    }
    for (const std::string& lab : order) {
        double acc = 0, red = 0, secs = 0;
        int count = 0;
        const ExperimentResult* sample = nullptr;
        for (const ExperimentResult& r : outcome.results) {
            if (r.selector.label() != lab) continue;
            acc += r.accuracy;
            red += r.reduction;
            secs += r.seconds;
            ++count;
            sample = &r;
        }
        if (count < 2) continue;
        ExperimentResult avg = *sample;
        avg.dataset = "average";
        avg.accuracy = acc / count;
        avg.reduction = red / count;
        avg.seconds = secs;
        avg.flags.clear();
        out += result_row(avg, timings) + "\n";
    }

    for (const GridError& e : outcome.errors) {
        std::string msg = e.message;
        for (char& c : msg)
            if (c == ',' || c == '\n') c = ';';
        out += e.dataset + "," + e.selector + ",-,-,-,nan,nan,error: " + msg + ",0.000\n";
    }

    if (include_published) {
        for (const PublishedRow& p : published_reference()) {
            out += p.dataset + "," + p.method + ",-,-,-," + fixed6(p.knn_accuracy) + "," +
                   fixed6(p.reduction) + ",published,0.000\n";
        }
    }
    return out;
}

std::string scatter_csv(const GridOutcome& outcome, bool include_published) {
    std::string out = "label,accuracy,reduction,source\n";
    for (const ExperimentResult& r : outcome.results) {
        out += r.dataset + ":" + r.selector.label() + "," + fixed6(r.accuracy) + "," +
               fixed6(r.reduction) + ",computed\n";
    }
    if (include_published) {
        for (const PublishedRow& p : published_reference()) {
            out += p.dataset + ":" + p.method + "," + fixed6(p.knn_accuracy) + "," +
                   fixed6(p.reduction) + ",published\n";
        }
    }
    return out;
}

const std::vector<PublishedRow>& published_reference() {
    static const std::vector<PublishedRow> rows = [] {
        const char* datasets[] = {"ctg.",       "diabetes", "ecoli",     "glass",
                                  "heart-statlog", "ionosphere", "iris",   "landsat",
                                  "letter",     "optdigits", "page-blocks", "parkinson",
                                  "segment",    "spambase",  "wine",      "average"};
        const char* methods[] = {"DROP3", "ENN", "ICF", "LSBo", "LSSm", "LDIS", "ISDSP"};
        const double knn[16][7] = {
            {0.63, 0.64, 0.57, 0.55, 0.67, 0.54, 0.50},
            {0.72, 0.72, 0.72, 0.73, 0.72, 0.68, 0.65},
            {0.84, 0.84, 0.79, 0.79, 0.86, 0.82, 0.82},
            {0.63, 0.63, 0.64, 0.54, 0.71, 0.62, 0.55},
            {0.67, 0.64, 0.63, 0.66, 0.66, 0.67, 0.63},
            {0.82, 0.83, 0.82, 0.88, 0.86, 0.85, 0.85},
            {0.97, 0.97, 0.95, 0.95, 0.96, 0.95, 0.95},
            {0.88, 0.90, 0.83, 0.86, 0.90, 0.87, 0.86},
            {0.88, 0.92, 0.80, 0.73, 0.93, 0.79, 0.71},
            {0.97, 0.98, 0.91, 0.91, 0.98, 0.95, 0.94},
            {0.95, 0.96, 0.93, 0.94, 0.96, 0.94, 0.77},
            {0.86, 0.88, 0.83, 0.85, 0.85, 0.74, 0.79},
            {0.92, 0.94, 0.87, 0.83, 0.94, 0.88, 0.89},
            {0.79, 0.81, 0.79, 0.81, 0.82, 0.75, 0.77},
            {0.69, 0.66, 0.66, 0.74, 0.71, 0.69, 0.75},
            {0.82, 0.82, 0.78, 0.79, 0.83, 0.78, 0.76},
        };
        const double svm[16][7] = {
            {0.64, 0.67, 0.64, 0.62, 0.67, 0.62, 0.59},
            {0.75, 0.77, 0.76, 0.75, 0.77, 0.75, 0.73},
            {0.81, 0.82, 0.78, 0.74, 0.83, 0.77, 0.78},
            {0.47, 0.49, 0.49, 0.42, 0.55, 0.50, 0.51},
            {0.81, 0.83, 0.79, 0.81, 0.84, 0.81, 0.78},
            {0.81, 0.87, 0.58, 0.45, 0.88, 0.84, 0.86},
            {0.94, 0.96, 0.73, 0.47, 0.96, 0.81, 0.80},
            {0.86, 0.87, 0.85, 0.85, 0.87, 0.84, 0.84},
            {0.80, 0.84, 0.75, 0.73, 0.84, 0.75, 0.74},
            {0.98, 0.98, 0.97, 0.98, 0.99, 0.96, 0.97},
            {0.93, 0.94, 0.93, 0.92, 0.94, 0.94, 0.91},
            {0.85, 0.87, 0.85, 0.82, 0.87, 0.82, 0.85},
            {0.91, 0.92, 0.91, 0.80, 0.91, 0.89, 0.88},
            {0.90, 0.90, 0.90, 0.90, 0.90, 0.89, 0.87},
            {0.93, 0.95, 0.94, 0.96, 0.97, 0.94, 0.93},
            {0.83, 0.84, 0.79, 0.75, 0.85, 0.81, 0.80},
        };
        const double red[16][7] = {
            {0.70, 0.32, 0.71, 0.69, 0.14, 0.86, 0.90},
            {0.77, 0.31, 0.85, 0.76, 0.13, 0.90, 0.90},
            {0.72, 0.17, 0.87, 0.83, 0.09, 0.92, 0.90},
            {0.75, 0.35, 0.69, 0.70, 0.13, 0.90, 0.90},
            {0.74, 0.35, 0.78, 0.67, 0.15, 0.93, 0.90},
            {0.86, 0.15, 0.96, 0.81, 0.04, 0.91, 0.90},
            {0.70, 0.04, 0.61, 0.92, 0.05, 0.87, 0.90},
            {0.72, 0.10, 0.91, 0.88, 0.05, 0.92, 0.90},
            {0.68, 0.05, 0.80, 0.84, 0.04, 0.82, 0.90},
            {0.72, 0.01, 0.93, 0.92, 0.02, 0.92, 0.90},
            {0.71, 0.04, 0.95, 0.96, 0.03, 0.87, 0.90},
            {0.72, 0.15, 0.80, 0.87, 0.11, 0.83, 0.90},
            {0.68, 0.05, 0.79, 0.90, 0.05, 0.83, 0.90},
            {0.74, 0.19, 0.79, 0.82, 0.10, 0.82, 0.90},
            {0.80, 0.30, 0.82, 0.75, 0.11, 0.88, 0.90},
            {0.73, 0.17, 0.82, 0.82, 0.08, 0.88, 0.90},
        };
        std::vector<PublishedRow> v;
        for (int d = 0; d < 16; ++d)
            for (int m = 0; m < 7; ++m)
                v.push_back({datasets[d], methods[m], knn[d][m], svm[d][m], red[d][m]});
        return v;
    }();
    return rows;
}

} // namespace voteselect
