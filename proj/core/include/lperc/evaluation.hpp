#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lperc/dataset.hpp"
#include "lperc/lperceptron.hpp"

namespace lperc {

struct ConfusionMatrix {
    std::int64_t tp = 0, fp = 0, tn = 0, fn = 0;

    std::int64_t total() const { return tp + fp + tn + fn; }
    ConfusionMatrix& operator+=(const ConfusionMatrix& o);
};

struct Metrics {
    double accuracy = 0.0;
    double sensitivity = 0.0;
    double specificity = 0.0;
    double f1 = 0.0;
    bool degenerate = false; // some 0/0 denominator was mapped to 0
};

ConfusionMatrix confusion(const std::vector<Label>& predicted,
                          const std::vector<Label>& actual);

/// accuracy = (tp+tn)/total, sensitivity = tp/(tp+fn),
/// specificity = tn/(tn+fp), f1 from precision and sensitivity.
/// 0/0 denominators yield 0 and set the degenerate flag.
Metrics metrics(const ConfusionMatrix& cm);

/// A classifier wired into the cross-validation driver. fit() receives the
/// imputed training partition and returns a predictor; per-fold details
/// (degrees, orientation, ...) may be recorded into `info`.
struct Trainer {
    std::string name;
    std::function<std::function<Label(std::span<const double>)>(
        const std::vector<std::vector<double>>& features,
        const std::vector<Label>& labels, nlohmann::json& info)>
        fit;
};

struct EvaluationReport {
    std::string method;
    std::string dataset;
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<ConfusionMatrix> per_fold;
    std::vector<nlohmann::json> fold_info;
    ConfusionMatrix pooled;
    Metrics pooled_metrics;
    Metrics fold_mean_metrics; // mean of per-fold metric values
    std::optional<Hyperparameters> hyper;
    std::vector<std::string> warnings;
};

/// k-fold cross-validation: folds are stratified with the given seed,
/// imputation statistics come from each fold's training rows only, and
/// the headline metrics are computed from the pooled confusion matrix.
EvaluationReport cross_validate(const Dataset& ds, int k, std::uint64_t seed,
                                const Trainer& trainer);

Trainer make_lperceptron_trainer(const Hyperparameters& hyper);
Trainer make_gnb_trainer();
Trainer make_knn_trainer(int k);

nlohmann::json report_to_json(const EvaluationReport& report);
/// Flat CSV, percentages with 2 decimals: header plus one row per report.
std::string reports_to_csv(const std::vector<EvaluationReport>& reports);

nlohmann::json hyper_to_json(const Hyperparameters& hyper);
Hyperparameters hyper_from_json(const nlohmann::json& j);

} // namespace lperc
