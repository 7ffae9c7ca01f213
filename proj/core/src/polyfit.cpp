#include "lperc/polyfit.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "lperc/errors.hpp"

namespace lperc {

std::vector<double> build_targets(const std::vector<Label>& labels,
                                  double p1, double p2) {
    if (labels.empty()) throw DataError("build_targets: empty label vector");
    std::vector<double> v(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        v[i] = labels[i] == Label::Positive ? p1 : p2;
    return v;
}

Polynomial fit_polynomial(std::span<const double> xs,
                          std::span<const double> targets, int degree) {
    if (xs.size() != targets.size())
        throw DimensionError("fit_polynomial: xs/targets length mismatch");
    if (xs.empty()) throw DataError("fit_polynomial: empty input");
    if (degree < 0) throw ConfigError("fit_polynomial: negative degree");
    for (double x : xs)
        if (!std::isfinite(x)) throw NumericError("fit_polynomial: non-finite x");
    for (double t : targets)
        if (!std::isfinite(t))
            throw NumericError("fit_polynomial: non-finite target");

    const Eigen::Index n = static_cast<Eigen::Index>(xs.size());
    const Eigen::Index cols = degree + 1;

    Eigen::MatrixXd vand(n, cols);
    for (Eigen::Index i = 0; i < n; ++i) {
        double p = 1.0;
        for (Eigen::Index j = 0; j < cols; ++j) {
            vand(i, j) = p;
            p *= xs[static_cast<std::size_t>(i)];
        }
    }
    Eigen::VectorXd rhs =
        Eigen::Map<const Eigen::VectorXd>(targets.data(), n);

    // Complete orthogonal decomposition: rank-revealing, and gives the
    // minimum-norm solution when the Vandermonde matrix is rank deficient.
    Eigen::VectorXd c = vand.completeOrthogonalDecomposition().solve(rhs);

    Polynomial poly;
    poly.coefficients.assign(c.data(), c.data() + c.size());
    return poly;
}

double evaluate(const Polynomial& poly, double x) {
    double acc = 0.0;
    for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend();
         ++it)
        acc = acc * x + *it;
    return acc;
}

double sse(const Polynomial& poly, std::span<const double> xs,
           std::span<const double> targets) {
    if (xs.size() != targets.size())
        throw DimensionError("sse: xs/targets length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = targets[i] - evaluate(poly, xs[i]);
        s += r * r;
    }
    return s;
}

} // namespace lperc
