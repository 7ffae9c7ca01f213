#include "lperc/lperceptron.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "lperc/errors.hpp"

namespace lperc {

void Hyperparameters::validate() const {
    if (dlb < 0) throw ConfigError("dlb must be >= 0");
    if (dub < dlb) throw ConfigError("dub must be >= dlb");
    if (ite < 0) throw ConfigError("ite must be >= 0");
    if (p1 == p2) throw ConfigError("p1 and p2 must differ");
    if (!std::isfinite(p1) || !std::isfinite(p2) || !std::isfinite(threshold))
        throw ConfigError("p1, p2 and threshold must be finite");
}

std::string to_string(UpdateMetric m) {
    return m == UpdateMetric::Misclassification ? "misclassification" : "sse";
}

UpdateMetric update_metric_from_string(const std::string& s) {
    if (s == "misclassification") return UpdateMetric::Misclassification;
    if (s == "sse") return UpdateMetric::SumSquaredError;
    throw ConfigError("unknown update metric: " + s);
}

double score(const LPerceptronModel& model, std::span<const double> instance) {
    if (instance.size() != model.feature_count())
        throw DimensionError("score: instance has " +
                             std::to_string(instance.size()) +
                             " features, model expects " +
                             std::to_string(model.feature_count()));
    double s = 0.0;
    for (std::size_t j = 0; j < instance.size(); ++j)
        s += evaluate(model.per_feature[j], instance[j]);
    return s;
}

Label predict(const LPerceptronModel& model, std::span<const double> instance) {
    const bool above = score(model, instance) > model.hyper.threshold;
    return (above == model.positive_above) ? Label::Positive : Label::Negative;
}

std::vector<Label> predict_batch(const LPerceptronModel& model,
                                 const std::vector<std::vector<double>>& features) {
    std::vector<Label> out;
    out.reserve(features.size());
    for (const auto& row : features) out.push_back(predict(model, row));
    return out;
}

namespace {

// Training-set error of the polynomials, taking whichever orientation of
// the decision rule does better (the orientation itself is only fixed at
// the end of training).
std::int64_t misclassification_error(const std::vector<double>& scores,
                                     const std::vector<Label>& labels,
                                     double threshold) {
    std::int64_t err_above = 0, err_below = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const bool above = scores[i] > threshold;
        const bool positive = labels[i] == Label::Positive;
        if (above != positive) ++err_above;
        if (above == positive) ++err_below;
    }
    return std::min(err_above, err_below);
}

} // namespace

LPerceptronModel train(const std::vector<std::vector<double>>& features,
                       const std::vector<Label>& labels,
                       const Hyperparameters& hyper, TrainTrace* trace) {
    hyper.validate();
    const std::size_t n = features.size();
    if (n == 0) throw DataError("train: empty training set");
    if (labels.size() != n)
        throw DimensionError("train: feature/label count mismatch");
    const std::size_t m = features[0].size();
    if (m == 0) throw DataError("train: no features");
    for (const auto& row : features) {
        if (row.size() != m) throw DimensionError("train: ragged feature matrix");
        for (double v : row)
            if (!std::isfinite(v))
                throw NumericError("train: non-finite feature value");
    }

    bool single_class = true;
    for (std::size_t i = 1; i < n; ++i)
        if (labels[i] != labels[0]) { single_class = false; break; }
    if (trace) trace->single_class_warning = single_class;

    const double pos_target = hyper.p1_to_positive ? hyper.p1 : hyper.p2;
    const double neg_target = hyper.p1_to_positive ? hyper.p2 : hyper.p1;
    const std::vector<double> targets =
        build_targets(labels, pos_target, neg_target);

    std::vector<std::vector<double>> columns(m, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) columns[j][i] = features[i][j];

    LPerceptronModel model;
    model.hyper = hyper;
    model.degrees.assign(m, hyper.dlb);
    model.per_feature.resize(m);
    for (std::size_t j = 0; j < m; ++j)
        model.per_feature[j] = fit_polynomial(columns[j], targets, hyper.dlb);

    // Per-row sums of feature outputs, updated incrementally when a single
    // feature is refitted.
    std::vector<double> scores(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            scores[i] += evaluate(model.per_feature[j], features[i][j]);

    auto current_error = [&]() -> double {
        if (hyper.update_metric == UpdateMetric::Misclassification)
            return static_cast<double>(
                misclassification_error(scores, labels, hyper.threshold));
        double total = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            total += sse(model.per_feature[j], columns[j], targets);
        return total;
    };

    double error = current_error();
    if (trace) {
        trace->errors.clear();
        trace->errors.push_back(error);
        trace->passes = 0;
    }

    for (int pass = 0; pass < hyper.ite; ++pass) {
        bool changed = false;
        for (std::size_t j = 0; j < m; ++j) {
            if (model.degrees[j] >= hyper.dub) continue;
            Polynomial candidate =
                fit_polynomial(columns[j], targets, model.degrees[j] + 1);
            for (std::size_t i = 0; i < n; ++i)
                scores[i] += evaluate(candidate, features[i][j]) -
                             evaluate(model.per_feature[j], features[i][j]);
            Polynomial previous = std::move(model.per_feature[j]);
            model.per_feature[j] = std::move(candidate);
            ++model.degrees[j];

            const double new_error = current_error();
            if (new_error < error) {
                error = new_error;
                changed = true;
                if (trace) trace->errors.push_back(error);
            } else {
                --model.degrees[j];
                for (std::size_t i = 0; i < n; ++i)
                    scores[i] += evaluate(previous, features[i][j]) -
                                 evaluate(model.per_feature[j], features[i][j]);
                model.per_feature[j] = std::move(previous);
            }
        }
        if (trace) trace->passes = pass + 1;
        if (!changed) break;
    }

    // Fix the decision-rule orientation on training accuracy.
    std::int64_t err_above = 0, err_below = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool above = scores[i] > hyper.threshold;
        const bool positive = labels[i] == Label::Positive;
        if (above != positive) ++err_above;
        if (above == positive) ++err_below;
    }
    if (err_above < err_below)
        model.positive_above = true;
    else if (err_below < err_above)
        model.positive_above = false;
    else
        model.positive_above = hyper.p1 > hyper.p2;

    return model;
}

nlohmann::json hyper_to_json(const Hyperparameters& h) {
    return nlohmann::json{{"p1", h.p1},
                          {"p2", h.p2},
                          {"dlb", h.dlb},
                          {"dub", h.dub},
                          {"ite", h.ite},
                          {"threshold", h.threshold},
                          {"p1_to_positive", h.p1_to_positive},
                          {"update_metric", to_string(h.update_metric)}};
}

Hyperparameters hyper_from_json(const nlohmann::json& j) {
    Hyperparameters h;
    h.p1 = j.at("p1").get<double>();
    h.p2 = j.at("p2").get<double>();
    h.dlb = j.at("dlb").get<int>();
    h.dub = j.at("dub").get<int>();
    h.ite = j.at("ite").get<int>();
    h.threshold = j.at("threshold").get<double>();
    h.p1_to_positive = j.value("p1_to_positive", true);
    h.update_metric =
        update_metric_from_string(j.value("update_metric", "misclassification"));
    return h;
}

nlohmann::json model_to_json(const LPerceptronModel& model) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& poly : model.per_feature) coeffs.push_back(poly.coefficients);
    return nlohmann::json{{"schema_version", 1},
                          {"feature_count", model.feature_count()},
                          {"degrees", model.degrees},
                          {"coefficients", coeffs},
                          {"hyperparameters", hyper_to_json(model.hyper)},
                          {"positive_above", model.positive_above}};
}

LPerceptronModel model_from_json(const nlohmann::json& j) {
    if (j.value("schema_version", 0) != 1)
        throw DataError("model file: unsupported schema version");
    LPerceptronModel model;
    model.hyper = hyper_from_json(j.at("hyperparameters"));
    model.degrees = j.at("degrees").get<std::vector<int>>();
    for (const auto& c : j.at("coefficients"))
        model.per_feature.push_back({c.get<std::vector<double>>()});
    model.positive_above = j.at("positive_above").get<bool>();
    if (model.per_feature.size() != model.degrees.size() ||
        model.per_feature.size() != j.at("feature_count").get<std::size_t>())
        throw DataError("model file: inconsistent feature count");
    for (std::size_t i = 0; i < model.degrees.size(); ++i)
        if (model.per_feature[i].degree() != model.degrees[i])
            throw DataError("model file: coefficient/degree mismatch");
    return model;
}

void save_model(const LPerceptronModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write model file: " + path);
    out << model_to_json(model).dump(2) << '\n';
}

LPerceptronModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open model file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("model file " + path + ": " + e.what());
    }
    return model_from_json(j);
}

} // namespace lperc
