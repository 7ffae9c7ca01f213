#pragma once

#include <span>
#include <vector>

#include "lperc/dataset.hpp"

namespace lperc {

/// Gaussian naive Bayes with per-class feature means/variances.
/// Variances are floored at 1e-9 so constant features stay usable.
struct GnbModel {
    double prior_positive = 0.0;
    double prior_negative = 0.0;
    std::vector<double> mean_positive, var_positive;
    std::vector<double> mean_negative, var_negative;
};

GnbModel gnb_train(const std::vector<std::vector<double>>& features,
                   const std::vector<Label>& labels);

/// argmax of log-prior + summed Gaussian log-densities; exact ties go to
/// the negative class.
Label gnb_predict(const GnbModel& model, std::span<const double> instance);

/// Plain k-nearest-neighbors over Euclidean distance; k must be odd so a
/// binary majority vote cannot tie. Distance ties prefer the lower row.
struct KnnModel {
    std::vector<std::vector<double>> features;
    std::vector<Label> labels;
    int k = 5;
};

KnnModel knn_train(const std::vector<std::vector<double>>& features,
                   const std::vector<Label>& labels, int k);

Label knn_predict(const KnnModel& model, std::span<const double> instance);

} // namespace lperc
