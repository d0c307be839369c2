#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Core>

#include "lexirank/error.hpp"

namespace lexirank::stats {

using Vector = Eigen::VectorXd;

struct SampleSummary {
    double mean = 0.0;
    double sd = 0.0;
    std::uint64_t n = 1;
};

struct WelchResult {
    double t = 0.0;
    std::int64_t dof = 1;
    double p_two_tailed = 1.0;
};

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

struct CorrelationTest {
    bool significant = false;
    double p = 1.0;
};

struct PowerLawFit {
    double alpha = 0.0;      // density ~ x^-alpha
    double std_error = 0.0;  // (alpha - 1) / sqrt(n)
    std::size_t n = 0;       // samples >= x_min
    // Signed exponent as reported for rank-frequency plots: -alpha.
    double exponent() const { return -alpha; }
};

// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

// Upper tail P(T > t) of Student's t with `dof` degrees of freedom.
double student_t_sf(double t, double dof);

// Upper tail of the standard normal.
double normal_sf(double z);

// Welch's unequal-variance t-test; dof is the floored Welch-Satterthwaite
// estimate. Throws DomainError for n < 2 or when both sd are zero.
WelchResult welch_t_test(const SampleSummary& a, const SampleSummary& b);

// Two-tailed test of r != 0 via t = r sqrt((n-2)/(1-r^2)), dof n-2.
CorrelationTest correlation_significant(double r, std::size_t n, double level);

namespace detail {

template <typename DerivedX, typename DerivedY>
void check_paired(const Eigen::DenseBase<DerivedX>& x, const Eigen::DenseBase<DerivedY>& y, Eigen::Index min_n) {
    if (x.size() != y.size()) throw DomainError("length mismatch");
    if (x.size() < min_n) throw DomainError("need at least " + std::to_string(min_n) + " points");
}

}  // namespace detail

// Pearson product-moment correlation.
template <typename DerivedX, typename DerivedY>
double pearson(const Eigen::DenseBase<DerivedX>& x, const Eigen::DenseBase<DerivedY>& y) {
    detail::check_paired(x, y, 3);
    const Vector dx = x.derived().template cast<double>().array() - x.derived().template cast<double>().mean();
    const Vector dy = y.derived().template cast<double>().array() - y.derived().template cast<double>().mean();
    const double sxx = dx.squaredNorm();
    const double syy = dy.squaredNorm();
    if (sxx == 0.0 || syy == 0.0) throw DomainError("constant input");
    const double r = dx.dot(dy) / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

// 1-based ranks; tied values get the mean of the positions they cover.
template <typename Derived>
Vector fractional_ranks(const Eigen::DenseBase<Derived>& values) {
    const Eigen::Index n = values.size();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return values(i) < values(j); });
    Vector ranks(n);
    for (Eigen::Index lo = 0; lo < n;) {
        Eigen::Index hi = lo + 1;
        while (hi < n && !(values(order[lo]) < values(order[hi]))) ++hi;
        const double mean_rank = 0.5 * static_cast<double>(lo + 1 + hi);
        for (Eigen::Index k = lo; k < hi; ++k) ranks(order[k]) = mean_rank;
        lo = hi;
    }
    return ranks;
}

template <typename DerivedX, typename DerivedY>
double spearman(const Eigen::DenseBase<DerivedX>& x, const Eigen::DenseBase<DerivedY>& y) {
    detail::check_paired(x, y, 3);
    return pearson(fractional_ranks(x), fractional_ranks(y));
}

// Least squares y = slope * x + intercept. R^2 is 0 when y is constant.
template <typename DerivedX, typename DerivedY>
RegressionFit ols_fit(const Eigen::DenseBase<DerivedX>& x, const Eigen::DenseBase<DerivedY>& y) {
    detail::check_paired(x, y, 2);
    const Vector xs = x.derived().template cast<double>();
    const Vector ys = y.derived().template cast<double>();
    const Vector dx = xs.array() - xs.mean();
    const Vector dy = ys.array() - ys.mean();
    const double sxx = dx.squaredNorm();
    if (sxx == 0.0) throw DomainError("constant regressor");

    RegressionFit fit;
    fit.slope = dx.dot(dy) / sxx;
    fit.intercept = ys.mean() - fit.slope * xs.mean();
    const double ss_tot = dy.squaredNorm();
    if (ss_tot > 0.0) {
        const Vector residual = ys.array() - (fit.slope * xs.array() + fit.intercept);
        fit.r_squared = std::clamp(1.0 - residual.squaredNorm() / ss_tot, 0.0, 1.0);
    }
    return fit;
}

// Continuous power-law MLE over the samples >= x_min:
// alpha = 1 + n / sum(ln(x_i / x_min)).
template <typename Derived>
PowerLawFit power_law_mle(const Eigen::DenseBase<Derived>& values, double x_min) {
    if (!(x_min > 0.0)) throw DomainError("x_min must be positive");
    double log_sum = 0.0;
    std::size_t n = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const double v = static_cast<double>(values(i));
        if (v >= x_min) {
            log_sum += std::log(v / x_min);
            ++n;
        }
    }
    if (n < 10) throw DomainError("power-law fit needs at least 10 samples >= x_min");
    if (!(log_sum > 0.0)) throw DomainError("all samples equal x_min; exponent diverges");
    PowerLawFit fit;
    fit.n = n;
    fit.alpha = 1.0 + static_cast<double>(n) / log_sum;
    fit.std_error = (fit.alpha - 1.0) / std::sqrt(static_cast<double>(n));
    return fit;
}

}  // namespace lexirank::stats
