#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's numeric code.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

// Pearson straight from the covariance definition.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) mx += x[i], my += y[i];
    mx /= n, my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

// O(n^2) mid-ranks: 1 + #smaller + (#equal - 1) / 2.
inline std::vector<double> mid_ranks(const std::vector<double>& x) {
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double smaller = 0, equal = 0;
        for (double v : x) {
            if (v < x[i]) ++smaller;
            if (v == x[i]) ++equal;
        }
        r[i] = 1 + smaller + (equal - 1) / 2;
    }
    return r;
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(mid_ranks(x), mid_ranks(y));
}

inline double t_density(double x, double dof) {
    const double c = std::exp(std::lgamma((dof + 1) / 2) - std::lgamma(dof / 2)) / std::sqrt(dof * M_PI);
    return c * std::pow(1 + x * x / dof, -(dof + 1) / 2);
}

// P(T > t) = 1/2 - integral_0^t density, composite Simpson.
inline double t_sf_quadrature(double t, double dof, int intervals = 20000) {
    const double h = t / intervals;
    double s = t_density(0, dof) + t_density(t, dof);
    for (int i = 1; i < intervals; ++i) s += (i % 2 ? 4 : 2) * t_density(i * h, dof);
    return 0.5 - s * h / 3;
}

// Krippendorff's Alpha from raw pairs by enumerating pairable values:
// D_o averages delta^2 over the within-unit ordered value pairs, D_e over
// all ordered pairs of distinct value instances.
inline double alpha_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> values;
    double observed = 0;
    for (auto [a, b] : pairs) {
        values.push_back(a);
        values.push_back(b);
        observed += 2.0 * (a - b) * (a - b);
    }
    const double n = static_cast<double>(values.size());
    observed /= n;
    double expected = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = 0; j < values.size(); ++j)
            if (i != j) expected += double(values[i] - values[j]) * (values[i] - values[j]);
    expected /= n * (n - 1);
    return 1 - observed / expected;
}

// Pareto(x_min, alpha) samples by inverse CDF: x = x_min (1 - u)^(-1/(alpha-1)).
inline std::vector<double> pareto_samples(std::size_t n, double alpha, double x_min, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> out(n);
    for (auto& v : out) v = x_min * std::pow(1.0 - u(rng), -1.0 / (alpha - 1.0));
    return out;
}

}  // namespace oracle
