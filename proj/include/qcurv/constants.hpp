#pragma once

#include "qcurv/errors.hpp"

namespace qcurv {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Dimension n >= 2 together with a derivative order s in (0, n).
struct DimensionContext {
    int n;
    double s;
    DimensionContext(int n_, double s_) : n(n_), s(s_) {
        if (n < 2) throw DomainError("DimensionContext: n must be >= 2");
        if (!(s > 0.0) || !(s < static_cast<double>(n)))
            throw DomainError("DimensionContext: s must lie in (0, n)");
    }
};

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Surface area |S^d| = 2 pi^{(d+1)/2} / Gamma((d+1)/2), d >= 0.
double sphere_area(int d);

// gamma_n = (n-1)! |S^n| / 2, the Green constant of (-Delta)^{n/2} ln(1/|x|).
double gamma_n(int n);

// Lambda_1 = (n-1)! |S^n|, the mass of the bubble solutions.
double lambda_1(int n);

// K_{n,s} = Gamma((n-s)/2) / (Gamma(s/2) 2^s pi^{n/2}); Riesz kernel constant.
double K_ns(int n, double s);

// Spectral multiplier Gamma(l + n/2 + s) / Gamma(l + n/2 - s) of the order-2s
// operator on degree-l spherical harmonics.  Returns exactly 0 when
// l + n/2 - s is a non-positive integer (1/Gamma pole convention).
// Requires 0 < s <= n/2 so the ratio is nonnegative.
double paneitz_multiplier(long l, const DimensionContext& ctx);

double paneitz_sqrt_multiplier(long l, const DimensionContext& ctx);

// dim of the space of degree-l spherical harmonics on S^n.
double harmonic_dimension(long l, int n);

}  // namespace qcurv
