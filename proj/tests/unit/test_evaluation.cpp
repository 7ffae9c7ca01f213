#include <doctest.h>

#include <random>

#include "lperc/errors.hpp"
#include "lperc/evaluation.hpp"

using namespace lperc;

namespace {

Dataset indicator_dataset(int n) {
    // feature equals the label indicator: trivially separable
    Dataset ds;
    ds.name = "indicator";
    for (int i = 0; i < n; ++i) {
        const bool pos = i % 2 == 0;
        ds.features.push_back({pos ? 1.0 : 0.0});
        ds.missing.push_back({false});
        ds.labels.push_back(pos ? Label::Positive : Label::Negative);
    }
    return ds;
}

} // namespace

TEST_CASE("confusion: counting") {
    SUBCASE("one true positive") {
        const auto cm = confusion({Label::Positive}, {Label::Positive});
        CHECK(cm.tp == 1);
        CHECK(cm.fp + cm.tn + cm.fn == 0);
    }
    SUBCASE("crossed predictions") {
        const auto cm = confusion({Label::Positive, Label::Negative},
                                  {Label::Negative, Label::Positive});
        CHECK(cm.fp == 1);
        CHECK(cm.fn == 1);
        CHECK(cm.tp + cm.tn == 0);
    }
    SUBCASE("all negative") {
        const std::vector<Label> v(5, Label::Negative);
        const auto cm = confusion(v, v);
        CHECK(cm.tn == 5);
        CHECK(cm.total() == 5);
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(confusion({Label::Positive}, {}), DimensionError);
    }
}

TEST_CASE("metrics: definitions") {
    SUBCASE("perfect classifier") {
        const Metrics m = metrics({1, 0, 1, 0});
        CHECK(m.accuracy == doctest::Approx(1.0));
        CHECK(m.sensitivity == doctest::Approx(1.0));
        CHECK(m.specificity == doctest::Approx(1.0));
        CHECK(m.f1 == doctest::Approx(1.0));
        CHECK_FALSE(m.degenerate);
    }
    SUBCASE("degenerate precision yields 0 with the flag set") {
        const Metrics m = metrics({0, 0, 1, 1}); // tp=0 fp=0 tn=1 fn=1
        CHECK(m.accuracy == doctest::Approx(0.5));
        CHECK(m.sensitivity == doctest::Approx(0.0));
        CHECK(m.specificity == doctest::Approx(1.0));
        CHECK(m.f1 == doctest::Approx(0.0));
        CHECK(m.degenerate);
    }
    SUBCASE("hand-computed mixed counts") {
        // tp=9 fp=1 tn=8 fn=2: precision 0.9, sensitivity 9/11,
        // f1 = 2*0.9*(9/11)/(0.9+9/11)
        const Metrics m = metrics({9, 1, 8, 2});
        CHECK(m.accuracy == doctest::Approx(0.85));
        CHECK(m.sensitivity == doctest::Approx(9.0 / 11.0));
        CHECK(m.specificity == doctest::Approx(8.0 / 9.0));
        CHECK(m.f1 == doctest::Approx(2.0 * 0.9 * (9.0 / 11.0) /
                                      (0.9 + 9.0 / 11.0)));
        CHECK(m.f1 == doctest::Approx(0.857142857142857));
    }
    SUBCASE("empty matrix is an error") {
        CHECK_THROWS_AS(metrics({0, 0, 0, 0}), DataError);
    }
}

TEST_CASE("cross_validate: separable dataset is perfect") {
    const Dataset ds = indicator_dataset(20);
    Hyperparameters h{1.0, -1.0, 1, 1, 0, 0.0};
    const auto report = cross_validate(ds, 10, 42, make_lperceptron_trainer(h));
    CHECK(report.pooled_metrics.accuracy == doctest::Approx(1.0));
    CHECK(report.pooled.total() == 20);
}

TEST_CASE("cross_validate: leave-one-out fold arithmetic") {
    const Dataset ds = indicator_dataset(6);
    Hyperparameters h{1.0, -1.0, 1, 1, 0, 0.0};
    const auto report = cross_validate(ds, 6, 1, make_lperceptron_trainer(h));
    CHECK(report.per_fold.size() == 6);
    for (const auto& cm : report.per_fold) CHECK(cm.total() == 1);
    CHECK(report.pooled.total() == 6);
}

TEST_CASE("cross_validate: metric identities on a real run") {
    const Dataset ds =
        load_csv(std::string(LPERC_DATA_DIR) + "/haberman.data",
                 CsvSchema{3, "1", {}, false}, "hsd");
    Hyperparameters h{-1.3, 2.9, 1, 1, 0, 0.42};
    const auto report = cross_validate(ds, 10, 5, make_lperceptron_trainer(h));

    CHECK(report.pooled.total() == 306);
    const Metrics& m = report.pooled_metrics;
    for (double v : {m.accuracy, m.sensitivity, m.specificity, m.f1}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    const double p = double(report.pooled.tp + report.pooled.fn);
    const double n = double(report.pooled.tn + report.pooled.fp);
    CHECK(m.accuracy ==
          doctest::Approx((m.sensitivity * p + m.specificity * n) / (p + n)));

    // pooled equals the entrywise sum of the folds
    ConfusionMatrix sum;
    for (const auto& cm : report.per_fold) sum += cm;
    CHECK(sum.tp == report.pooled.tp);
    CHECK(sum.fp == report.pooled.fp);
    CHECK(sum.tn == report.pooled.tn);
    CHECK(sum.fn == report.pooled.fn);
}

TEST_CASE("cross_validate: reports are byte-identical across runs") {
    const Dataset ds =
        load_csv(std::string(LPERC_DATA_DIR) + "/haberman.data",
                 CsvSchema{3, "1", {}, false}, "hsd");
    Hyperparameters h{-1.3, 2.9, 1, 1, 0, 0.42};
    const auto a = cross_validate(ds, 10, 9, make_lperceptron_trainer(h));
    const auto b = cross_validate(ds, 10, 9, make_lperceptron_trainer(h));
    CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));
}

TEST_CASE("reports_to_csv renders two-decimal percentages") {
    EvaluationReport r;
    r.method = "lperceptron";
    r.dataset = "toy";
    r.pooled = {9, 1, 8, 2};
    r.pooled_metrics = metrics(r.pooled);
    const std::string csv = reports_to_csv({r});
    CHECK(csv.find("method,dataset,accuracy,sensitivity,specificity,f1,source") !=
          std::string::npos);
    CHECK(csv.find("lperceptron,toy,85.00,81.82,88.89,85.71,measured") !=
          std::string::npos);
}
