#pragma once

#include <span>
#include <vector>

#include "lperc/dataset.hpp"

namespace lperc {

/// Dense univariate polynomial, coefficients[j] multiplies x^j.
struct Polynomial {
    std::vector<double> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Map labels to regression targets: positive -> p1, negative -> p2.
std::vector<double> build_targets(const std::vector<Label>& labels,
                                  double p1, double p2);

/// Least-squares fit of a degree-`degree` polynomial to (xs, targets).
/// Rank-deficient systems (e.g. fewer distinct xs than degree+1 unknowns)
/// yield the minimum-norm solution instead of failing.
Polynomial fit_polynomial(std::span<const double> xs,
                          std::span<const double> targets, int degree);

/// Horner evaluation.
double evaluate(const Polynomial& poly, double x);

/// Sum of squared residuals of poly against (xs, targets).
double sse(const Polynomial& poly, std::span<const double> xs,
           std::span<const double> targets);

} // namespace lperc
