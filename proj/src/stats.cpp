#include "lexirank/stats.hpp"

#include <limits>

namespace lexirank::stats {

namespace {

// Continued fraction for I_x(a, b) (modified Lentz), valid for
// x < (a + 1) / (a + b + 2). `y` is 1 - x supplied by the caller so that
// it keeps full precision when x is close to 1.
double beta_continued_fraction(double a, double b, double x) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    constexpr int max_iter = 1'000'000;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

double incomplete_beta(double a, double b, double x, double y) {
    if (x <= 0.0) return 0.0;
    if (y <= 0.0) return 1.0;
    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log(y);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, y) / b;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0 && b > 0.0)) throw DomainError("incomplete beta needs a, b > 0");
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete beta needs x in [0, 1]");
    return incomplete_beta(a, b, x, 1.0 - x);
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double student_t_sf(double t, double dof) {
    if (!(dof > 0.0)) throw DomainError("degrees of freedom must be positive");
    if (t == 0.0) return 0.5;
    if (std::isinf(t)) return t > 0 ? 0.0 : 1.0;
    const double t2 = t * t;
    // P(|T| > |t|) = I_{dof/(dof+t^2)}(dof/2, 1/2)
    const double two_tail = incomplete_beta(0.5 * dof, 0.5, dof / (dof + t2), t2 / (dof + t2));
    return t > 0.0 ? 0.5 * two_tail : 1.0 - 0.5 * two_tail;
}

WelchResult welch_t_test(const SampleSummary& a, const SampleSummary& b) {
    if (a.n < 2 || b.n < 2) throw DomainError("Welch's t-test needs n >= 2 in both samples");
    if (a.sd < 0.0 || b.sd < 0.0) throw DomainError("negative standard deviation");
    const double na = static_cast<double>(a.n);
    const double nb = static_cast<double>(b.n);
    const double va = a.sd * a.sd / na;
    const double vb = b.sd * b.sd / nb;
    if (va + vb == 0.0) throw DomainError("both samples have zero variance");

    WelchResult r;
    r.t = (a.mean - b.mean) / std::sqrt(va + vb);
    const double nu = (va + vb) * (va + vb) / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
    r.dof = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(nu)));
    r.p_two_tailed = std::clamp(2.0 * student_t_sf(std::fabs(r.t), static_cast<double>(r.dof)), 0.0, 1.0);
    return r;
}

CorrelationTest correlation_significant(double r, std::size_t n, double level) {
    if (n < 4) throw DomainError("significance test needs n >= 4");
    if (!(std::fabs(r) <= 1.0)) throw DomainError("correlation outside [-1, 1]");
    if (std::fabs(r) == 1.0) return {true, 0.0};
    const double dof = static_cast<double>(n - 2);
    const double t = r * std::sqrt(dof / (1.0 - r * r));
    CorrelationTest out;
    out.p = std::clamp(2.0 * student_t_sf(std::fabs(t), dof), 0.0, 1.0);
    out.significant = out.p < level;
    return out;
}

}  // namespace lexirank::stats
