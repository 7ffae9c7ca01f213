#include "lperc/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lperc/errors.hpp"

namespace lperc {

namespace {
constexpr double kVarianceFloor = 1e-9;

void check_matrix(const std::vector<std::vector<double>>& x,
                  const std::vector<Label>& y) {
    if (x.empty()) throw DataError("baseline train: empty training set");
    if (x.size() != y.size())
        throw DimensionError("baseline train: feature/label count mismatch");
    const std::size_t m = x[0].size();
    for (const auto& row : x)
        if (row.size() != m)
            throw DimensionError("baseline train: ragged feature matrix");
}
} // namespace

GnbModel gnb_train(const std::vector<std::vector<double>>& features,
                   const std::vector<Label>& labels) {
    check_matrix(features, labels);
    const std::size_t m = features[0].size();

    std::size_t n_pos = 0, n_neg = 0;
    for (Label y : labels) (y == Label::Positive ? n_pos : n_neg)++;
    if (n_pos == 0 || n_neg == 0)
        throw DataError("gnb_train: training set has a single class");

    GnbModel model;
    model.prior_positive = static_cast<double>(n_pos) / labels.size();
    model.prior_negative = static_cast<double>(n_neg) / labels.size();
    model.mean_positive.assign(m, 0.0);
    model.mean_negative.assign(m, 0.0);
    model.var_positive.assign(m, 0.0);
    model.var_negative.assign(m, 0.0);

    for (std::size_t i = 0; i < features.size(); ++i) {
        auto& mean = labels[i] == Label::Positive ? model.mean_positive
                                                  : model.mean_negative;
        for (std::size_t j = 0; j < m; ++j) mean[j] += features[i][j];
    }
    for (std::size_t j = 0; j < m; ++j) {
        model.mean_positive[j] /= static_cast<double>(n_pos);
        model.mean_negative[j] /= static_cast<double>(n_neg);
    }
    for (std::size_t i = 0; i < features.size(); ++i) {
        const bool pos = labels[i] == Label::Positive;
        const auto& mean = pos ? model.mean_positive : model.mean_negative;
        auto& var = pos ? model.var_positive : model.var_negative;
        for (std::size_t j = 0; j < m; ++j) {
            const double d = features[i][j] - mean[j];
            var[j] += d * d;
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        model.var_positive[j] = std::max(
            model.var_positive[j] / static_cast<double>(n_pos), kVarianceFloor);
        model.var_negative[j] = std::max(
            model.var_negative[j] / static_cast<double>(n_neg), kVarianceFloor);
    }
    return model;
}

namespace {
double gaussian_log_likelihood(std::span<const double> instance,
                               const std::vector<double>& mean,
                               const std::vector<double>& var, double prior) {
    double ll = std::log(prior);
    for (std::size_t j = 0; j < instance.size(); ++j) {
        const double d = instance[j] - mean[j];
        ll -= 0.5 * (std::log(2.0 * std::numbers::pi * var[j]) + d * d / var[j]);
    }
    return ll;
}
} // namespace

Label gnb_predict(const GnbModel& model, std::span<const double> instance) {
    if (instance.size() != model.mean_positive.size())
        throw DimensionError("gnb_predict: feature count mismatch");
    const double lp = gaussian_log_likelihood(instance, model.mean_positive,
                                              model.var_positive,
                                              model.prior_positive);
    const double ln = gaussian_log_likelihood(instance, model.mean_negative,
                                              model.var_negative,
                                              model.prior_negative);
    return lp > ln ? Label::Positive : Label::Negative;
}

KnnModel knn_train(const std::vector<std::vector<double>>& features,
                   const std::vector<Label>& labels, int k) {
    check_matrix(features, labels);
    if (k < 1 || k % 2 == 0)
        throw ConfigError("knn: k must be a positive odd integer");
    if (static_cast<std::size_t>(k) > features.size())
        throw ConfigError("knn: k exceeds training set size");
    return KnnModel{features, labels, k};
}

Label knn_predict(const KnnModel& model, std::span<const double> instance) {
    if (instance.size() != model.features[0].size())
        throw DimensionError("knn_predict: feature count mismatch");

    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(model.features.size());
    for (std::size_t i = 0; i < model.features.size(); ++i) {
        double d2 = 0.0;
        for (std::size_t j = 0; j < instance.size(); ++j) {
            const double d = instance[j] - model.features[i][j];
            d2 += d * d;
        }
        dist.emplace_back(d2, i);
    }
    // pair ordering gives the tie rule: equal distances pick the lower row.
    std::partial_sort(dist.begin(), dist.begin() + model.k, dist.end());

    int votes = 0;
    for (int i = 0; i < model.k; ++i)
        votes += model.labels[dist[i].second] == Label::Positive ? 1 : -1;
    return votes > 0 ? Label::Positive : Label::Negative;
}

} // namespace lperc
