#pragma once

#include "voteselect/baselines.hpp"
#include "voteselect/classify.hpp"
#include "voteselect/dataset.hpp"
#include "voteselect/voting.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace voteselect {

enum class SelectorKind { none, rule, baseline };

// One training-set reduction strategy: nothing, a voting rule over
// local-set ballots, or one of the classical selectors.
struct SelectorSpec {
    SelectorKind kind = SelectorKind::none;

    VotingRule rule = VotingRule::sejr;
    Rational q = 1;
    BallotVariant variant = BallotVariant::included;

    std::string baseline; // random | noapproved | cnn | enn | lssm | lsbo | icf
    double fraction = 0.9; // random only
    int k_param = 3;       // enn / icf neighborhood

    std::string label() const;

    static SelectorSpec keep_all();
    static SelectorSpec voting(VotingRule rule, Rational q, BallotVariant variant);
    static SelectorSpec classical(std::string name, double fraction = 0.9, int k = 3);
};

struct ExperimentConfig {
    int knn_k = 3;
    int folds = 10;
    std::uint64_t seed = 42;
    bool normalize = false;
};

// Cross-validated accuracy of KNN trained on the reduced set, plus the
// mean reduction over folds. accuracy = total correct / dataset size.
struct ExperimentResult {
    std::string dataset;
    SelectorSpec selector;
    int knn_k = 3;
    double accuracy = 0.0;
    double reduction = 0.0;
    std::vector<std::string> flags; // union over folds, sorted
    double seconds = 0.0;
};

// Runs one selector over one dataset with seeded folds. The selector is
// re-run from scratch on every fold's training part; fold randomness and
// the random baseline draw from per-fold streams derived from the seed.
// A selector failure aborts the run with the fold id in the message.
ExperimentResult run_experiment(const Dataset& ds, const SelectorSpec& selector,
                                const ExperimentConfig& config);

struct GridError {
    std::string dataset;
    std::string selector;
    std::string message;
};

struct GridOutcome {
    std::vector<ExperimentResult> results; // dataset-major, canonical order
    std::vector<GridError> errors;
};

// Cross product of datasets and selectors. Cells run independently (in
// parallel when jobs > 1) and failures are recorded without stopping the
// rest; the output order never depends on scheduling.
GridOutcome run_grid(const std::vector<Dataset>& datasets,
                     const std::vector<SelectorSpec>& selectors,
                     const ExperimentConfig& config, int jobs = 1);

// The reported configurations: each rule at its two headline q values, in
// both ballot variants.
std::vector<SelectorSpec> reported_selectors();

// Full sweep: the voting rules at q in {2, 3/2, 1, 3/4, 1/2, 1/4} and the
// load-balancing rule at q in {9/10 .. 1/10}, both variants.
std::vector<SelectorSpec> full_rule_grid();

// Keep-all, the local-set selectors, condensation/edition methods and the
// random fractions used for comparison.
std::vector<SelectorSpec> baseline_selectors();

// Result rows as comma-separated text with a fixed header. Wall time is
// only written when `timings` is set so that reruns are byte-identical.
std::string results_csv(const GridOutcome& outcome, bool timings = false,
                        bool include_published = false);

// One accuracy/reduction point per computed config (and per published
// method row when requested).
std::string scatter_csv(const GridOutcome& outcome, bool include_published = false);

// Results reported in prior work for the classical selectors, shipped for
// side-by-side rendering only; never computed here. Reduction and KNN
// accuracy columns; SVM accuracy kept for completeness.
struct PublishedRow {
    std::string dataset;
    std::string method;
    double knn_accuracy;
    double svm_accuracy;
    double reduction;
};

const std::vector<PublishedRow>& published_reference();

} // namespace voteselect
