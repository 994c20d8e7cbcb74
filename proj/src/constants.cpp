#include "qcurv/constants.hpp"

#include <cmath>

namespace qcurv {

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
    return std::lgamma(x);
}

double sphere_area(int d) {
    if (d < 0) throw DomainError("sphere_area: dimension must be >= 0");
    const double a = 0.5 * (d + 1);
    return 2.0 * std::exp(a * std::log(kPi) - log_gamma(a));
}

double gamma_n(int n) { return 0.5 * lambda_1(n); }

double lambda_1(int n) {
    if (n < 2) throw DomainError("lambda_1: n must be >= 2");
    double fac = 0.0;  // ln (n-1)!
    for (int k = 2; k < n; ++k) fac += std::log(static_cast<double>(k));
    return std::exp(fac) * sphere_area(n);
}

double K_ns(int n, double s) {
    DimensionContext ctx(n, s);  // validates
    return std::exp(log_gamma(0.5 * (n - s)) - log_gamma(0.5 * s) - s * std::log(2.0) -
                    0.5 * n * std::log(kPi));
}

namespace {

// Is x a non-positive integer, up to the tolerance used for the pole test?
bool is_nonpositive_integer(double x) {
    if (x > 1e-12) return false;
    return std::abs(x - std::round(x)) < 1e-12;
}

}  // namespace

double paneitz_multiplier(long l, const DimensionContext& ctx) {
    if (l < 0) throw DomainError("paneitz_multiplier: l must be >= 0");
    if (ctx.s > 0.5 * ctx.n + 1e-12)
        throw DomainError("paneitz_multiplier: requires s <= n/2");
    const double a = l + 0.5 * ctx.n + ctx.s;
    const double b = l + 0.5 * ctx.n - ctx.s;
    if (is_nonpositive_integer(b)) return 0.0;
    // Ratio via log-gammas: the multipliers grow like l^{2s}.
    return std::exp(log_gamma(a) - log_gamma(b));
}

double paneitz_sqrt_multiplier(long l, const DimensionContext& ctx) {
    return std::sqrt(paneitz_multiplier(l, ctx));
}

double harmonic_dimension(long l, int n) {
    if (l < 0) throw DomainError("harmonic_dimension: l must be >= 0");
    if (l == 0) return 1.0;
    // (2l + n - 1) (l + n - 2)! / (l! (n-1)!)
    double lg = std::log(2.0 * l + n - 1.0) + log_gamma(l + n - 1.0) - log_gamma(l + 1.0) -
                log_gamma(static_cast<double>(n));
    return std::exp(lg);
}

}  // namespace qcurv
