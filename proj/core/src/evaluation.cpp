#include "lperc/evaluation.hpp"

#include <cmath>
#include <cstdio>

#include "lperc/baselines.hpp"
#include "lperc/errors.hpp"

namespace lperc {

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& o) {
    tp += o.tp;
    fp += o.fp;
    tn += o.tn;
    fn += o.fn;
    return *this;
}

ConfusionMatrix confusion(const std::vector<Label>& predicted,
                          const std::vector<Label>& actual) {
    if (predicted.size() != actual.size())
        throw DimensionError("confusion: predicted/actual length mismatch");
    if (predicted.empty()) throw DataError("confusion: empty input");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const bool p = predicted[i] == Label::Positive;
        const bool a = actual[i] == Label::Positive;
        if (p && a) ++cm.tp;
        else if (p && !a) ++cm.fp;
        else if (!p && a) ++cm.fn;
        else ++cm.tn;
    }
    return cm;
}

Metrics metrics(const ConfusionMatrix& cm) {
    if (cm.total() == 0) throw DataError("metrics: empty confusion matrix");
    Metrics m;
    auto ratio = [&m](std::int64_t num, std::int64_t den) {
        if (den == 0) {
            m.degenerate = true;
            return 0.0;
        }
        return static_cast<double>(num) / static_cast<double>(den);
    };
    m.accuracy = static_cast<double>(cm.tp + cm.tn) /
                 static_cast<double>(cm.total());
    m.sensitivity = ratio(cm.tp, cm.tp + cm.fn);
    m.specificity = ratio(cm.tn, cm.tn + cm.fp);
    const double precision = ratio(cm.tp, cm.tp + cm.fp);
    if (precision + m.sensitivity == 0.0) {
        m.degenerate = true;
        m.f1 = 0.0;
    } else {
        m.f1 = 2.0 * precision * m.sensitivity / (precision + m.sensitivity);
    }
    return m;
}

EvaluationReport cross_validate(const Dataset& ds, int k, std::uint64_t seed,
                                const Trainer& trainer) {
    EvaluationReport report;
    report.method = trainer.name;
    report.dataset = ds.name;
    report.k = k;
    report.seed = seed;

    const FoldAssignment folds = stratified_folds(ds, k, seed, &report.warnings);

    for (int f = 0; f < k; ++f) {
        std::vector<std::size_t> train_rows, test_rows;
        for (std::size_t i = 0; i < ds.rows(); ++i)
            (folds.fold_of[i] == f ? test_rows : train_rows).push_back(i);
        if (train_rows.empty() || test_rows.empty())
            throw ConfigError("fold " + std::to_string(f) +
                              " leaves an empty partition");

        const Dataset filled = ds.has_missing() ? impute(ds, train_rows) : ds;

        std::vector<std::vector<double>> train_x;
        std::vector<Label> train_y;
        train_x.reserve(train_rows.size());
        for (std::size_t r : train_rows) {
            train_x.push_back(filled.features[r]);
            train_y.push_back(filled.labels[r]);
        }

        bool single_class = true;
        for (const Label y : train_y)
            if (y != train_y[0]) { single_class = false; break; }
        if (single_class)
            report.warnings.push_back("fold " + std::to_string(f) +
                                      ": single-class training partition");

        nlohmann::json info = nlohmann::json::object();
        auto predictor = trainer.fit(train_x, train_y, info);

        std::vector<Label> predicted, actual;
        for (std::size_t r : test_rows) {
            predicted.push_back(predictor(filled.features[r]));
            actual.push_back(filled.labels[r]);
        }
        report.per_fold.push_back(confusion(predicted, actual));
        report.fold_info.push_back(std::move(info));
    }

    for (const auto& cm : report.per_fold) report.pooled += cm;
    if (report.pooled.total() != static_cast<std::int64_t>(ds.rows()))
        throw NumericError("cross_validate: pooled total != instance count");
    report.pooled_metrics = metrics(report.pooled);

    Metrics mean;
    for (const auto& cm : report.per_fold) {
        const Metrics fm = metrics(cm);
        mean.accuracy += fm.accuracy;
        mean.sensitivity += fm.sensitivity;
        mean.specificity += fm.specificity;
        mean.f1 += fm.f1;
        mean.degenerate = mean.degenerate || fm.degenerate;
    }
    mean.accuracy /= k;
    mean.sensitivity /= k;
    mean.specificity /= k;
    mean.f1 /= k;
    report.fold_mean_metrics = mean;

    return report;
}

Trainer make_lperceptron_trainer(const Hyperparameters& hyper) {
    Trainer t;
    t.name = "lperceptron";
    t.fit = [hyper](const std::vector<std::vector<double>>& x,
                    const std::vector<Label>& y, nlohmann::json& info) {
        auto model = std::make_shared<LPerceptronModel>(train(x, y, hyper));
        info["positive_above"] = model->positive_above;
        info["degrees"] = model->degrees;
        return [model](std::span<const double> row) {
            return predict(*model, row);
        };
    };
    return t;
}

Trainer make_gnb_trainer() {
    Trainer t;
    t.name = "naive-bayes";
    t.fit = [](const std::vector<std::vector<double>>& x,
               const std::vector<Label>& y, nlohmann::json&) {
        auto model = std::make_shared<GnbModel>(gnb_train(x, y));
        return [model](std::span<const double> row) {
            return gnb_predict(*model, row);
        };
    };
    return t;
}

Trainer make_knn_trainer(int k) {
    Trainer t;
    t.name = "knn";
    t.fit = [k](const std::vector<std::vector<double>>& x,
                const std::vector<Label>& y, nlohmann::json&) {
        auto model = std::make_shared<KnnModel>(knn_train(x, y, k));
        return [model](std::span<const double> row) {
            return knn_predict(*model, row);
        };
    };
    return t;
}

namespace {

nlohmann::json cm_to_json(const ConfusionMatrix& cm) {
    return {{"tp", cm.tp}, {"fp", cm.fp}, {"tn", cm.tn}, {"fn", cm.fn}};
}

nlohmann::json metrics_to_json(const Metrics& m) {
    return {{"accuracy", m.accuracy},
            {"sensitivity", m.sensitivity},
            {"specificity", m.specificity},
            {"f1", m.f1},
            {"degenerate", m.degenerate}};
}

std::string pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v * 100.0);
    return buf;
}

} // namespace

nlohmann::json report_to_json(const EvaluationReport& report) {
    nlohmann::json folds = nlohmann::json::array();
    for (std::size_t f = 0; f < report.per_fold.size(); ++f) {
        nlohmann::json jf = cm_to_json(report.per_fold[f]);
        jf["info"] = report.fold_info[f];
        folds.push_back(jf);
    }
    nlohmann::json j{{"schema_version", 1},
                     {"method", report.method},
                     {"dataset", report.dataset},
                     {"k", report.k},
                     {"seed", report.seed},
                     {"per_fold", folds},
                     {"pooled", cm_to_json(report.pooled)},
                     {"metrics", metrics_to_json(report.pooled_metrics)},
                     {"fold_mean_metrics", metrics_to_json(report.fold_mean_metrics)},
                     {"warnings", report.warnings}};
    if (report.hyper) j["hyperparameters"] = hyper_to_json(*report.hyper);
    return j;
}

std::string reports_to_csv(const std::vector<EvaluationReport>& reports) {
    std::string out =
        "method,dataset,accuracy,sensitivity,specificity,f1,source\n";
    for (const auto& r : reports) {
        const Metrics& m = r.pooled_metrics;
        out += r.method + "," + r.dataset + "," + pct(m.accuracy) + "," +
               pct(m.sensitivity) + "," + pct(m.specificity) + "," + pct(m.f1) +
               ",measured\n";
    }
    return out;
}

} // namespace lperc
