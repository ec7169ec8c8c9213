#include "voteselect/axioms.hpp"
#include "voteselect/baselines.hpp"
#include "voteselect/classify.hpp"
#include "voteselect/dataset.hpp"
#include "voteselect/errors.hpp"
#include "voteselect/harness.hpp"
#include "voteselect/localset.hpp"
#include "voteselect/rng.hpp"
#include "voteselect/voting.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace vs = voteselect;

namespace {

// Flag combinations that make a request unexecutable; mapped to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw vs::Error("cannot open output file: " + path);
    out << text;
}

vs::Dataset load_named(const std::string& token, const std::string& data_dir,
                       const vs::LoadOptions& options) {
    std::string path = token;
    if (token.find('/') == std::string::npos && token.find(".csv") == std::string::npos)
        path = data_dir + "/" + token + ".csv";
    return vs::load_dataset(path, options);
}

vs::Election builtin_election(const std::string& name,
                              const std::optional<vs::Rational>& q_override) {
    if (name == "two-blocks") {
        // four voters split over two candidate groups plus one candidate
        // nobody approves, q = 1
        return vs::make_election(4, 4, {{0, 1}, {0, 1}, {2}, {2}},
                                 q_override.value_or(vs::Rational(1)));
    }
    if (name == "single-voter-q3") {
        // one voter approving everything, q = 3
        return vs::make_election(1, 3, {{0, 1, 2}}, q_override.value_or(vs::Rational(3)));
    }
    throw UsageError("unknown builtin election '" + name +
                     "' (available: two-blocks, single-voter-q3)");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct ReduceArgs {
    std::string dataset;
    std::string rule;
    std::string baseline;
    std::string q = "2";
    std::string variant = "included";
    double fraction = 0.9;
    int k_param = 3;
    std::uint64_t seed = 42;
    bool normalize = false;
    bool header = false;
    int label_column = -1;
    bool trace = false;
    bool adapted_stop = false;
    std::string output;
};

vs::BallotVariant parse_variant(const std::string& v) {
    if (v == "included") return vs::BallotVariant::included;
    if (v == "excluded") return vs::BallotVariant::excluded;
    throw UsageError("variant must be 'included' or 'excluded'");
}

int cmd_reduce(const ReduceArgs& a) {
    if (a.rule.empty() == a.baseline.empty())
        throw UsageError("reduce needs exactly one of --rule or --baseline");

    vs::LoadOptions load_opts;
    load_opts.has_header = a.header;
    load_opts.label_column = a.label_column;
    vs::Dataset ds = vs::load_dataset(a.dataset, load_opts);
    vs::Dataset work = a.normalize ? vs::normalize_minmax(ds) : ds;

    std::vector<int> kept;
    std::vector<std::string> flags;
    std::string trace_text;

    if (!a.rule.empty()) {
        vs::VotingRule rule = vs::parse_rule(a.rule);
        vs::DistanceMatrix dist = vs::DistanceMatrix::compute(work);
        vs::Election e = vs::build_election(work, dist, parse_variant(a.variant),
                                            vs::parse_ratio(a.q));
        vs::RuleResult r = vs::run_rule(e, rule, vs::TraceOptions{.record_state = a.trace},
                                        a.adapted_stop);
        kept = r.committee.members;
        std::sort(kept.begin(), kept.end());
        flags = r.committee.flags;
        if (a.trace) trace_text = vs::format_trace(r.trace);
    } else {
        vs::SelectionResult s;
        if (a.baseline == "random") {
            s = vs::select_random(work.n(), a.fraction, a.seed);
        } else {
            vs::DistanceMatrix dist = vs::DistanceMatrix::compute(work);
            if (a.baseline == "noapproved")
                s = vs::select_noapproved(work, dist);
            else if (a.baseline == "cnn")
                s = vs::select_cnn(work, dist);
            else if (a.baseline == "enn")
                s = vs::select_enn(work, dist, a.k_param);
            else if (a.baseline == "lssm")
                s = vs::select_lssm(work, dist);
            else if (a.baseline == "lsbo")
                s = vs::select_lsbo(work, dist);
            else if (a.baseline == "icf")
                s = vs::select_icf(work, dist, a.k_param);
            else
                throw UsageError("unknown baseline: " + a.baseline);
        }
        kept = s.kept;
        flags = s.flags;
    }

    std::string out;
    for (int idx : kept) out += std::to_string(idx) + "\n";
    double reduction = static_cast<double>(work.n() - static_cast<int>(kept.size())) /
                       static_cast<double>(work.n());
    out += "kept=" + std::to_string(kept.size()) + " reduction=" + fixed6(reduction) + "\n";
    write_text(a.output, out);

    if (!flags.empty()) {
        std::cerr << "flags:";
        for (const std::string& f : flags) std::cerr << " " << f;
        std::cerr << "\n";
    }
    if (a.trace) std::cerr << trace_text;
    return 0;
}

struct VerifyArgs {
    std::string dataset;
    std::string election_file;
    std::string builtin;
    int random_count = 0;
    std::string rule = "sejr";
    std::string check;
    std::string q;
    std::string variant = "included";
    int knn_k = 3;
    int level = 0;
    std::uint64_t seed = 42;
    bool normalize = false;
    bool header = false;
    int label_column = -1;
    std::string data_dir = "data";
};

void print_violation(const vs::AxiomViolation& v) {
    std::cout << "  level=" << v.level << " voters=";
    for (std::size_t i = 0; i < v.witness_voters.size(); ++i)
        std::cout << (i ? "," : "") << v.witness_voters[i];
    std::cout << " candidates=";
    for (std::size_t i = 0; i < v.witness_candidates.size(); ++i)
        std::cout << (i ? "," : "") << v.witness_candidates[i];
    if (v.union_winner_count >= 0) std::cout << " union_winners=" << v.union_winner_count;
    std::cout << "\n";
}

int cmd_verify(const VerifyArgs& a) {
    static const std::vector<std::string> checks = {"ejr", "pjr", "2ejr", "safe-trace",
                                                    "theorem-knn"};
    if (std::find(checks.begin(), checks.end(), a.check) == checks.end())
        throw UsageError("--check must be one of ejr|pjr|2ejr|safe-trace|theorem-knn");
    vs::VotingRule rule = vs::parse_rule(a.rule);

    int violations = 0;
    int checked = 0;
    int skipped = 0;

    if (a.check == "theorem-knn") {
        std::vector<vs::Dataset> cases;
        if (!a.dataset.empty()) {
            vs::LoadOptions lo;
            lo.has_header = a.header;
            lo.label_column = a.label_column;
            vs::Dataset ds = load_named(a.dataset, a.data_dir, lo);
            cases.push_back(a.normalize ? vs::normalize_minmax(ds) : ds);
        } else if (a.random_count > 0) {
            for (int i = 0; i < a.random_count; ++i)
                cases.push_back(vs::corpus_dataset(a.seed, static_cast<std::size_t>(i)));
        } else {
            throw UsageError("theorem-knn needs a dataset or --random N");
        }
        for (const vs::Dataset& ds : cases) {
            vs::GuaranteeReport rep = vs::check_knn_guarantee(ds, rule, a.knn_k);
            ++checked;
            std::cout << "case " << ds.name << ": eligible=" << rep.eligible.size()
                      << " kept=" << rep.kept.size() << " violations=" << rep.violations.size()
                      << "\n";
            for (int idx : rep.violations) std::cout << "  misclassified instance " << idx << "\n";
            violations += static_cast<int>(rep.violations.size());
        }
        std::cout << "checked " << checked << " case(s), " << violations << " violation(s)\n";
        return violations ? 1 : 0;
    }

    struct Case {
        std::string name;
        vs::Election e;
    };
    std::vector<Case> cases;
    std::optional<vs::Rational> q_override;
    if (!a.q.empty()) q_override = vs::parse_ratio(a.q);

    if (!a.dataset.empty()) {
        vs::LoadOptions lo;
        lo.has_header = a.header;
        lo.label_column = a.label_column;
        vs::Dataset ds = load_named(a.dataset, a.data_dir, lo);
        if (a.normalize) ds = vs::normalize_minmax(ds);
        vs::DistanceMatrix dist = vs::DistanceMatrix::compute(ds);
        vs::Election e = vs::build_election(ds, dist, parse_variant(a.variant),
                                            q_override.value_or(vs::Rational(2)));
        cases.push_back({ds.name, std::move(e)});
    } else if (!a.election_file.empty()) {
        if (!q_override) throw UsageError("--election needs --q");
        std::ifstream in(a.election_file);
        if (!in) throw vs::Error("cannot open election file: " + a.election_file);
        cases.push_back({a.election_file, vs::parse_election(in, *q_override)});
    } else if (!a.builtin.empty()) {
        cases.push_back({a.builtin, builtin_election(a.builtin, q_override)});
    } else if (a.random_count > 0) {
        for (int i = 0; i < a.random_count; ++i) {
            std::size_t idx = static_cast<std::size_t>(i);
            vs::Election e = q_override
                                 ? vs::random_election(vs::derive_seed(a.seed, idx), 10,
                                                       (i % 2 == 0) ? 0.2 : 0.5, *q_override)
                                 : vs::corpus_election(a.seed, idx);
            cases.push_back({"random-" + std::to_string(i), std::move(e)});
        }
    } else {
        throw UsageError("verify needs a dataset, --election, --builtin, or --random N");
    }

    for (Case& c : cases) {
        const vs::Election& e = c.e;
        if (rule == vs::VotingRule::seqp) {
            // load balancing needs a positive integer target and q <= 1
            if (e.q > vs::Rational(1) || !e.t_int || *e.t_int < 1) {
                ++skipped;
                std::cout << "case " << c.name << ": skipped (target size "
                          << (e.t_int ? *e.t_int : 0) << " outside rule domain)\n";
                continue;
            }
        }
        bool want_state = a.check == "safe-trace";
        vs::RuleResult r = vs::run_rule(e, rule, vs::TraceOptions{.record_state = want_state},
                                        /*seqp_adapted_stop=*/true);
        std::vector<int> w = r.committee.members;
        std::sort(w.begin(), w.end());
        ++checked;

        if (a.check == "safe-trace") {
            if (rule != vs::VotingRule::es)
                throw UsageError("safe-trace applies to the budget-spending rule (--rule es)");
            vs::SafetyReport rep = vs::check_safe_trace(e, r.trace);
            bool ok = rep.all_safe && rep.budget_floor_ok && rep.terminal_all_weak;
            std::cout << "case " << c.name << ": " << (ok ? "safe" : "UNSAFE")
                      << " iterations=" << rep.iterations.size() << "\n";
            if (!ok) {
                ++violations;
                for (std::size_t i = 0; i < rep.iterations.size(); ++i) {
                    const vs::IterationVerdict& iv = rep.iterations[i];
                    if (!iv.safe || !iv.budget_floor_ok)
                        std::cout << "  iteration " << i << ": condition "
                                  << iv.failed_condition << " floor="
                                  << (iv.budget_floor_ok ? "ok" : "broken") << "\n";
                }
                for (int cand : rep.nonweak_candidates)
                    std::cout << "  affordable unelected candidate " << cand << "\n";
            }
            continue;
        }

        std::optional<vs::AxiomViolation> v;
        if (a.check == "ejr") {
            v = a.level > 0 ? vs::check_l_ejr(e, w, a.level) : vs::check_ejr(e, w);
        } else if (a.check == "pjr") {
            v = a.level > 0 ? vs::check_l_pjr(e, w, a.level) : vs::check_pjr(e, w);
        } else { // 2ejr: the capped rule's claim, levels 1 and 2 only
            for (int l = 1; l <= 2 && !v; ++l) v = vs::check_l_ejr(e, w, l);
        }
        if (v) {
            ++violations;
            std::cout << "case " << c.name << ": VIOLATION\n";
            print_violation(*v);
        } else {
            std::cout << "case " << c.name << ": pass\n";
        }
    }

    std::cout << "checked " << checked << " case(s), " << skipped << " skipped, " << violations
              << " violation(s)\n";
    return violations ? 1 : 0;
}

struct ExperimentArgs {
    std::vector<std::string> datasets;
    std::string dataset_list;
    std::string data_dir = "data";
    std::string rules;
    std::string q;
    std::string variant = "included";
    std::string baselines_list;
    double fraction = 0.9;
    bool full_grid = false;
    bool reported = false;
    bool standard_baselines = false;
    int knn_k = 3;
    int folds = 10;
    std::uint64_t seed = 42;
    bool normalize = false;
    int jobs = 1;
    bool timings = false;
    bool published = false;
    bool header = false;
    int label_column = -1;
    std::string output;
    std::string scatter;
};

int cmd_experiment(const ExperimentArgs& a) {
    std::vector<std::string> tokens = a.datasets;
    for (const std::string& t : split_list(a.dataset_list)) tokens.push_back(t);
    if (tokens.empty()) throw UsageError("experiment needs at least one dataset");

    vs::LoadOptions lo;
    lo.has_header = a.header;
    lo.label_column = a.label_column;
    std::vector<vs::Dataset> datasets;
    for (const std::string& t : tokens) datasets.push_back(load_named(t, a.data_dir, lo));

    std::vector<vs::BallotVariant> variants;
    if (a.variant == "both")
        variants = {vs::BallotVariant::included, vs::BallotVariant::excluded};
    else
        variants = {parse_variant(a.variant)};

    std::vector<vs::SelectorSpec> selectors;
    if (a.full_grid) {
        for (vs::SelectorSpec& s : vs::full_rule_grid()) selectors.push_back(std::move(s));
    }
    if (a.reported) {
        for (vs::SelectorSpec& s : vs::reported_selectors()) selectors.push_back(std::move(s));
    }
    if (!a.rules.empty()) {
        if (a.q.empty()) throw UsageError("--rules needs --q");
        vs::Rational q = vs::parse_ratio(a.q);
        for (const std::string& r : split_list(a.rules))
            for (vs::BallotVariant v : variants)
                selectors.push_back(vs::SelectorSpec::voting(vs::parse_rule(r), q, v));
    }
    for (const std::string& b : split_list(a.baselines_list))
        selectors.push_back(b == "none" ? vs::SelectorSpec::keep_all()
                                        : vs::SelectorSpec::classical(b, a.fraction, a.knn_k));
    if (a.standard_baselines) {
        for (vs::SelectorSpec& s : vs::baseline_selectors()) selectors.push_back(std::move(s));
    }
    if (selectors.empty()) {
        for (vs::SelectorSpec& s : vs::reported_selectors()) selectors.push_back(std::move(s));
        for (vs::SelectorSpec& s : vs::baseline_selectors()) selectors.push_back(std::move(s));
    }

    vs::ExperimentConfig config;
    config.knn_k = a.knn_k;
    config.folds = a.folds;
    config.seed = a.seed;
    config.normalize = a.normalize;

    vs::GridOutcome outcome = vs::run_grid(datasets, selectors, config, a.jobs);
    for (const vs::GridError& err : outcome.errors)
        std::cerr << "error: " << err.dataset << " " << err.selector << ": " << err.message
                  << "\n";

    std::string table = vs::results_csv(outcome, a.timings, a.published);
    write_text(a.output, table);
    if (!a.output.empty() && a.output != "-") {
        // file output: still show the summary rows on the console
        std::stringstream ss(table);
        std::string line;
        bool first = true;
        while (std::getline(ss, line)) {
            if (first || line.rfind("average,", 0) == 0) std::cout << line << "\n";
            first = false;
        }
    }
    if (!a.scatter.empty()) write_text(a.scatter, vs::scatter_csv(outcome, a.published));

    return (outcome.results.empty() && !outcome.errors.empty()) ? 1 : 0;
}

struct PcaArgs {
    std::string dataset;
    int dims = 2;
    bool normalize = false;
    bool header = false;
    int label_column = -1;
    std::string output;
};

int cmd_pca(const PcaArgs& a) {
    vs::LoadOptions lo;
    lo.has_header = a.header;
    lo.label_column = a.label_column;
    vs::Dataset ds = vs::load_dataset(a.dataset, lo);
    if (a.normalize) ds = vs::normalize_minmax(ds);

    std::string out = "index";
    for (int d = 1; d <= a.dims; ++d) out += ",pc" + std::to_string(d);
    out += ",label\n";
    for (const vs::PcaPoint& p : vs::pca_project(ds, a.dims)) {
        out += std::to_string(p.index);
        for (double c : p.coords) out += "," + fixed6(c);
        out += "," + p.label + "\n";
    }
    write_text(a.output, out);
    return 0;
}

struct DemoArgs {
    std::string election_file;
    std::string builtin = "two-blocks";
    std::string q;
    std::string seqp_q = "1/2";
    bool adapted_stop = false;
};

int cmd_rules_demo(const DemoArgs& a) {
    std::optional<vs::Rational> q_override;
    if (!a.q.empty()) q_override = vs::parse_ratio(a.q);

    vs::Election base;
    std::string source;
    if (!a.election_file.empty()) {
        if (!q_override) throw UsageError("--election needs --q");
        std::ifstream in(a.election_file);
        if (!in) throw vs::Error("cannot open election file: " + a.election_file);
        base = vs::parse_election(in, *q_override);
        source = a.election_file;
    } else {
        base = builtin_election(a.builtin, q_override);
        source = a.builtin;
    }

    std::cout << "election " << source << ": voters=" << base.voters
              << " candidates=" << base.candidates << " q=" << vs::format_ratio(base.q) << "\n";
    std::cout << vs::format_election(base);

    auto show = [&](vs::VotingRule rule, const vs::Election& e) {
        std::cout << "== " << vs::rule_name(rule) << " q=" << vs::format_ratio(e.q) << " ==\n";
        try {
            vs::RuleResult r = vs::run_rule(e, rule, vs::TraceOptions{.record_state = true},
                                            a.adapted_stop);
            std::cout << "committee:";
            for (int c : r.committee.members) std::cout << " " << c;
            std::cout << "\n";
            if (!r.committee.flags.empty()) {
                std::cout << "flags:";
                for (const std::string& f : r.committee.flags) std::cout << " " << f;
                std::cout << "\n";
            }
            std::cout << vs::format_trace(r.trace);
        } catch (const vs::Error& err) {
            std::cout << "error: " << err.what() << "\n";
        }
    };

    for (vs::VotingRule rule : {vs::VotingRule::sejr, vs::VotingRule::s2ejr, vs::VotingRule::es})
        show(rule, base);

    // the load-balancing rule targets floor(q * voters) seats, so it gets
    // its own quota (default 1/2) unless the main q already fits
    vs::Election seqp_e = base;
    seqp_e.q = vs::parse_ratio(a.seqp_q);
    seqp_e.t_int = vs::floor_to_long(seqp_e.q * seqp_e.voters);
    show(vs::VotingRule::seqp, seqp_e);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Instance selection via committee elections over local-set ballots"};
    app.require_subcommand(1);

    ReduceArgs red;
    CLI::App* reduce = app.add_subcommand("reduce", "Select a reduced training set");
    reduce->add_option("dataset", red.dataset, "CSV file (label in last column)")->required();
    reduce->add_option("--rule", red.rule, "Voting rule: sejr|s2ejr|es|seqp");
    reduce->add_option("--baseline", red.baseline,
                       "Baseline: random|noapproved|cnn|enn|lssm|lsbo|icf");
    reduce->add_option("--q", red.q, "Committee quota t/n as a fraction")->capture_default_str();
    reduce->add_option("--variant", red.variant, "Ballot variant: included|excluded")
        ->capture_default_str();
    reduce->add_option("--fraction", red.fraction, "Kept fraction for --baseline random")
        ->capture_default_str();
    reduce->add_option("--k", red.k_param, "Neighborhood size for enn/icf")
        ->capture_default_str();
    reduce->add_option("--seed", red.seed, "Random seed")->capture_default_str();
    reduce->add_flag("--normalize", red.normalize, "Min-max normalize features first");
    reduce->add_flag("--header", red.header, "Input file has a header row");
    reduce->add_option("--label-column", red.label_column, "Label column (default last)")
        ->capture_default_str();
    reduce->add_flag("--trace", red.trace, "Print the rule trace to stderr");
    reduce->add_flag("--adapted-stop", red.adapted_stop,
                     "Let seqp stop early instead of failing when ballots run dry");
    reduce->add_option("--output,-o", red.output, "Output file (default stdout)");

    VerifyArgs ver;
    CLI::App* verify = app.add_subcommand("verify", "Check representation axioms and guarantees");
    verify->add_option("dataset", ver.dataset, "CSV file or bare name under --data-dir");
    verify->add_option("--election", ver.election_file, "Election fixture file (needs --q)");
    verify->add_option("--builtin", ver.builtin,
                       "Builtin election: two-blocks|single-voter-q3");
    verify->add_option("--random", ver.random_count, "Run N seeded random cases");
    verify->add_option("--rule", ver.rule, "Voting rule: sejr|s2ejr|es|seqp")
        ->capture_default_str();
    verify->add_option("--check", ver.check, "ejr|pjr|2ejr|safe-trace|theorem-knn")->required();
    verify->add_option("--q", ver.q, "Quota t/n (default 2 for datasets)");
    verify->add_option("--variant", ver.variant, "Ballot variant: included|excluded")
        ->capture_default_str();
    verify->add_option("--k", ver.knn_k, "K for theorem-knn")->capture_default_str();
    verify->add_option("--level", ver.level, "Check one level only (0 = scan all)")
        ->capture_default_str();
    verify->add_option("--seed", ver.seed, "Random seed")->capture_default_str();
    verify->add_flag("--normalize", ver.normalize, "Min-max normalize features first");
    verify->add_flag("--header", ver.header, "Input file has a header row");
    verify->add_option("--label-column", ver.label_column, "Label column (default last)")
        ->capture_default_str();
    verify->add_option("--data-dir", ver.data_dir, "Directory for bare dataset names")
        ->capture_default_str();

    ExperimentArgs exp;
    CLI::App* experiment =
        app.add_subcommand("experiment", "Cross-validated accuracy/reduction grid");
    experiment->add_option("inputs", exp.datasets, "CSV files or bare names under --data-dir");
    experiment->add_option("--datasets", exp.dataset_list, "Comma-separated dataset list");
    experiment->add_option("--data-dir", exp.data_dir, "Directory for bare dataset names")
        ->capture_default_str();
    experiment->add_option("--rules", exp.rules, "Comma-separated rules (needs --q)");
    experiment->add_option("--q", exp.q, "Quota t/n for --rules");
    experiment->add_option("--variant", exp.variant, "included|excluded|both")
        ->capture_default_str();
    experiment->add_option("--baseline", exp.baselines_list,
                           "Comma-separated baselines (none|random|noapproved|cnn|enn|lssm|lsbo|icf)");
    experiment->add_option("--fraction", exp.fraction, "Kept fraction for the random baseline")
        ->capture_default_str();
    experiment->add_flag("--full-grid", exp.full_grid, "All rules at the full q grid");
    experiment->add_flag("--reported", exp.reported, "The rule configurations reported upstream");
    experiment->add_flag("--baselines", exp.standard_baselines, "The standard baseline set");
    experiment->add_option("--k", exp.knn_k, "KNN neighborhood size")->capture_default_str();
    experiment->add_option("--folds", exp.folds, "Cross-validation folds")->capture_default_str();
    experiment->add_option("--seed", exp.seed, "Fold/random seed")->capture_default_str();
    experiment->add_flag("--normalize", exp.normalize, "Min-max normalize features first");
    experiment->add_option("--jobs", exp.jobs, "Parallel grid cells")->capture_default_str();
    experiment->add_flag("--timings", exp.timings, "Write wall-clock seconds (breaks rerun identity)");
    experiment->add_flag("--published", exp.published, "Append published reference rows");
    experiment->add_flag("--header", exp.header, "Input files have a header row");
    experiment->add_option("--label-column", exp.label_column, "Label column (default last)")
        ->capture_default_str();
    experiment->add_option("--output,-o", exp.output, "Results CSV file (default stdout)");
    experiment->add_option("--scatter", exp.scatter, "Also write scatter CSV to this file");

    PcaArgs pca;
    CLI::App* pca_cmd = app.add_subcommand("pca", "Project onto principal components");
    pca_cmd->add_option("dataset", pca.dataset, "CSV file")->required();
    pca_cmd->add_option("--dims", pca.dims, "Number of components")->capture_default_str();
    pca_cmd->add_flag("--normalize", pca.normalize, "Min-max normalize features first");
    pca_cmd->add_flag("--header", pca.header, "Input file has a header row");
    pca_cmd->add_option("--label-column", pca.label_column, "Label column (default last)")
        ->capture_default_str();
    pca_cmd->add_option("--output,-o", pca.output, "Output file (default stdout)");

    DemoArgs demo;
    CLI::App* demo_cmd = app.add_subcommand("rules-demo", "Run all four rules on a small election");
    demo_cmd->add_option("--election", demo.election_file, "Election fixture file (needs --q)");
    demo_cmd->add_option("--builtin", demo.builtin, "two-blocks|single-voter-q3")
        ->capture_default_str();
    demo_cmd->add_option("--q", demo.q, "Quota override for the greedy/budget rules");
    demo_cmd->add_option("--seqp-q", demo.seqp_q, "Quota for the load-balancing rule")
        ->capture_default_str();
    demo_cmd->add_flag("--adapted-stop", demo.adapted_stop,
                       "Let seqp stop early instead of failing when ballots run dry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(red);
        if (verify->parsed()) return cmd_verify(ver);
        if (experiment->parsed()) return cmd_experiment(exp);
        if (pca_cmd->parsed()) return cmd_pca(pca);
        if (demo_cmd->parsed()) return cmd_rules_demo(demo);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const vs::EnumLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
