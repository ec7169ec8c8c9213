#include "voteselect/classify.hpp"
#include "voteselect/errors.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace voteselect;

TEST_CASE("fit validates its arguments") {
    Dataset ds = testutil::three_points();
    CHECK_THROWS_AS(KnnModel::fit(ds, {0, 1, 2}, 2), ArgumentError);
    CHECK_THROWS_AS(KnnModel::fit(ds, {0, 1, 2}, 0), ArgumentError);
    CHECK_THROWS_AS(KnnModel::fit(ds, {0, 1, 2}, -1), ArgumentError);
    CHECK_THROWS_AS(KnnModel::fit(ds, {}, 3), ArgumentError);
    CHECK_THROWS_AS(KnnModel::fit(ds, {0, 3}, 3), ArgumentError);

    KnnModel model = KnnModel::fit(ds, {2, 0}, 3);
    CHECK(model.k == 3);
    CHECK(model.original_indices == std::vector<int>{2, 0});
    CHECK(model.labels == std::vector<std::string>{"B", "A"});
}

TEST_CASE("majority vote on the three-point set") {
    Dataset ds = testutil::three_points();
    KnnModel model = KnnModel::fit(ds, {0, 1, 2}, 3);
    // With k=3 every query sees two A's and one B.
    CHECK(knn_predict(model, {0.5}) == "A");
    CHECK(knn_predict(model, {10.0}) == "A");
    // Restricting the kept rows changes the electorate.
    KnnModel reduced = KnnModel::fit(ds, {2}, 3);
    CHECK(knn_predict(reduced, {0.0}) == "B");
}

TEST_CASE("fewer training rows than k still predicts") {
    Dataset ds = make_dataset({{0.0}}, {"A"});
    KnnModel model = KnnModel::fit(ds, {0}, 3);
    CHECK(knn_predict(model, {100.0}) == "A");
}

TEST_CASE("k=1 takes the nearest label") {
    Dataset ds = make_dataset({{0.0}, {2.0}}, {"A", "B"});
    KnnModel model = KnnModel::fit(ds, {0, 1}, 1);
    CHECK(knn_predict(model, {0.5}) == "A");
    CHECK(knn_predict(model, {1.5}) == "B");
}

TEST_CASE("frequency ties go to the nearest tied label") {
    Dataset ds = make_dataset({{0.0}, {1.0}, {2.0}}, {"A", "B", "C"});
    KnnModel model = KnnModel::fit(ds, {0, 1, 2}, 3);
    // All three labels appear once; the nearest neighbor decides.
    CHECK(knn_predict(model, {1.9}) == "C");
    CHECK(knn_predict(model, {0.1}) == "A");

    // Two-label tie with equidistant neighbors: the lower original index
    // comes first in the neighbor order and wins.
    Dataset pair = make_dataset({{0.0}, {1.0}}, {"A", "B"});
    KnnModel two = KnnModel::fit(pair, {0, 1}, 3);
    CHECK(knn_predict(two, {0.5}) == "A");
}

TEST_CASE("evaluate_accuracy scores a test set") {
    Dataset train = make_dataset({{0.0}, {1.0}, {3.0}, {4.0}}, {"A", "A", "B", "B"});
    KnnModel model = KnnModel::fit(train, {0, 1, 2, 3}, 3);
    Dataset test = make_dataset({{0.5}, {3.5}}, {"A", "B"});
    CHECK(evaluate_accuracy(model, test) == doctest::Approx(1.0));

    Dataset wrong = make_dataset({{0.5}, {3.5}}, {"B", "B"});
    CHECK(evaluate_accuracy(model, wrong) == doctest::Approx(0.5));

    Dataset empty;
    CHECK_THROWS_AS(evaluate_accuracy(model, empty), ArgumentError);
}

TEST_CASE("a duplicate-free training set self-classifies at k=1") {
    Dataset ds = testutil::three_points();
    KnnModel model = KnnModel::fit(ds, {0, 1, 2}, 1);
    CHECK(evaluate_accuracy(model, ds) == doctest::Approx(1.0));
}

TEST_CASE("selection guarantee holds on the bundled iris data") {
    Dataset ds = load_dataset(testutil::data_path("iris.csv"));
    for (VotingRule rule : {VotingRule::sejr, VotingRule::es}) {
        GuaranteeReport report = check_knn_guarantee(ds, rule, 3);
        CHECK(report.eligible.size() == 144);
        CHECK(report.violations.empty());
        CHECK(!report.kept.empty());
        CHECK(std::is_sorted(report.kept.begin(), report.kept.end()));
        CHECK(std::adjacent_find(report.kept.begin(), report.kept.end()) == report.kept.end());
        for (int i : report.kept) {
            CHECK(i >= 0);
            CHECK(i < ds.n());
        }
    }
}

TEST_CASE("selection guarantee holds on synthetic corpora") {
    for (std::size_t i = 0; i < 30; ++i) {
        Dataset ds = corpus_dataset(42, i);
        for (int k : {1, 3})
            for (VotingRule rule : {VotingRule::sejr, VotingRule::es})
                CHECK(check_knn_guarantee(ds, rule, k).violations.empty());
    }
}

TEST_CASE("the capped rule only supports small k") {
    Dataset ds = testutil::three_points();
    CHECK(check_knn_guarantee(ds, VotingRule::s2ejr, 3).violations.empty());
    CHECK_THROWS_AS(check_knn_guarantee(ds, VotingRule::s2ejr, 5), ArgumentError);
    CHECK_THROWS_AS(check_knn_guarantee(ds, VotingRule::seqp, 3), ArgumentError);
    CHECK_THROWS_AS(check_knn_guarantee(ds, VotingRule::sejr, 4), ArgumentError);
    CHECK_THROWS_AS(check_knn_guarantee(ds, VotingRule::sejr, 0), ArgumentError);
}

TEST_CASE("eligibility counts ballots large enough for the guarantee") {
    // Ballots: {0,1}, {0,1}, {2}. K=3 needs two approved candidates, so
    // instance 2 is not covered.
    Dataset ds = testutil::three_points();
    GuaranteeReport report = check_knn_guarantee(ds, VotingRule::sejr, 3);
    CHECK(report.eligible == std::vector<int>{0, 1});
    CHECK(report.violations.empty());
}
