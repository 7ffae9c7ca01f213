#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lperc/dataset.hpp"
#include "lperc/polyfit.hpp"

namespace lperc {

/// Error measure driving the greedy degree updates.
enum class UpdateMetric { Misclassification, SumSquaredError };

struct Hyperparameters {
    double p1 = 1.0;        // regression target, see p1_to_positive
    double p2 = -1.0;       // regression target of the other class
    int dlb = 1;            // degree lower bound (initial degree)
    int dub = 1;            // degree upper bound
    int ite = 0;            // max update passes over the features
    double threshold = 0.0; // activation cut on the summed feature outputs
    // Which class p1 attaches to. The reference experiments on the breast
    // cancer data need p1 on the negative (benign) class to reproduce the
    // published numbers; the survival data uses the default.
    bool p1_to_positive = true;
    UpdateMetric update_metric = UpdateMetric::Misclassification;

    void validate() const; // throws ConfigError on a bad combination
};

/// Trained model: one fitted polynomial per input feature plus the
/// orientation of the decision rule.
struct LPerceptronModel {
    std::vector<Polynomial> per_feature;
    std::vector<int> degrees;
    Hyperparameters hyper;
    // true: predict positive when score > threshold; false: when score <=.
    bool positive_above = true;

    std::size_t feature_count() const { return per_feature.size(); }
};

/// Optional record of the greedy search, mainly for tests and verbose
/// reporting. errors is non-increasing by construction.
struct TrainTrace {
    std::vector<double> errors; // accepted Error values, initial first
    int passes = 0;
    bool single_class_warning = false;
};

double score(const LPerceptronModel& model, std::span<const double> instance);

Label predict(const LPerceptronModel& model, std::span<const double> instance);

std::vector<Label> predict_batch(const LPerceptronModel& model,
                                 const std::vector<std::vector<double>>& features);

/// Fit one polynomial per feature against the p1/p2 target vector, then
/// greedily raise per-feature degrees while the training error improves,
/// bounded by [dlb, dub] and at most `ite` passes. The decision-rule
/// orientation is picked to maximize training accuracy (ties keep
/// positive_above == (p1 > p2)).
LPerceptronModel train(const std::vector<std::vector<double>>& features,
                       const std::vector<Label>& labels,
                       const Hyperparameters& hyper,
                       TrainTrace* trace = nullptr);

nlohmann::json model_to_json(const LPerceptronModel& model);
LPerceptronModel model_from_json(const nlohmann::json& j);
void save_model(const LPerceptronModel& model, const std::string& path);
LPerceptronModel load_model(const std::string& path);

std::string to_string(UpdateMetric m);
UpdateMetric update_metric_from_string(const std::string& s);

} // namespace lperc
