#include "qcurv/conformal.hpp"

#include <algorithm>
#include <cmath>

#include "qcurv/constants.hpp"
#include "qcurv/quadrature.hpp"

namespace qcurv {

std::vector<double> stereo(std::span<const double> x) {
    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    const double d = 1.0 + r2;
    std::vector<double> eta(x.size() + 1);
    for (std::size_t j = 0; j < x.size(); ++j) eta[j] = 2.0 * x[j] / d;
    eta[x.size()] = (1.0 - r2) / d;
    return eta;
}

std::vector<double> stereo_inv(std::span<const double> eta) {
    if (eta.size() < 2) throw DomainError("stereo_inv: point must lie in R^{n+1}, n >= 1");
    const double last = eta[eta.size() - 1];
    if (last <= -1.0 + 1e-15) throw DomainError("stereo_inv: south pole has no preimage");
    std::vector<double> x(eta.size() - 1);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = eta[j] / (1.0 + last);
    return x;
}

double jacobian_S(double r, int n) {
    if (r < 0.0) throw DomainError("jacobian_S: r must be >= 0");
    return std::pow(2.0 / (1.0 + r * r), n);
}

double chordal_from_radii(double r, double rho, double phi) {
    if (r < 0.0 || rho < 0.0) throw DomainError("chordal_from_radii: radii must be >= 0");
    const double d2 = r * r + rho * rho - 2.0 * r * rho * std::cos(phi);
    // |S(x)-S(y)| = J(x)^{1/2n} |x-y| J(y)^{1/2n}; the n-th roots cancel.
    return std::sqrt(std::max(0.0, d2) * (2.0 / (1.0 + r * r)) * (2.0 / (1.0 + rho * rho)));
}

double geodesic_from_chordal(double chordal) {
    const double half = std::clamp(0.5 * chordal, -1.0, 1.0);
    return 2.0 * std::asin(half);
}

double geodesic_distance(std::span<const double> eta, std::span<const double> xi) {
    if (eta.size() != xi.size()) throw DomainError("geodesic_distance: dimension mismatch");
    double d2 = 0.0;
    for (std::size_t j = 0; j < eta.size(); ++j) d2 += (eta[j] - xi[j]) * (eta[j] - xi[j]);
    return geodesic_from_chordal(std::sqrt(d2));
}

RadialField kelvin(const RadialField& u) {
    if (u.chart != Chart::EuclideanRadius)
        throw DomainError("kelvin: field must be on the EuclideanRadius chart");
    const std::size_t m = u.size();
    if (m < 2) throw DomainError("kelvin: field too small");
    for (std::size_t j = 0; j < m; ++j) {
        const double prod = u.grid[j] * u.grid[m - 1 - j];
        if (std::abs(std::log(prod)) > 1e-9)
            throw DomainError("kelvin: grid is not log-symmetric (not closed under r -> 1/r)");
    }
    RadialField v = u;
    for (std::size_t j = 0; j < m; ++j)
        v.values[j] = u.values[m - 1 - j] - 2.0 * std::log(u.grid[j]);
    if (u.fn) {
        auto f = u.fn;
        v.fn = [f](double r) { return f(1.0 / r) - 2.0 * std::log(r); };
    }
    const double inf = std::numeric_limits<double>::infinity();
    v.support_lo = (std::isfinite(u.support_hi) && u.support_hi > 0.0) ? 1.0 / u.support_hi : 0.0;
    v.support_hi = (std::isfinite(u.support_lo) && u.support_lo > 0.0) ? 1.0 / u.support_lo : inf;
    return v;
}

RadialField pushforward_density(const RadialField& f_sphere, double s) {
    if (f_sphere.chart != Chart::SpherePolar)
        throw DomainError("pushforward_density: input must be on the SpherePolar chart");
    const int n = f_sphere.n;
    const double e = s / static_cast<double>(n);
    RadialField f_theta = f_sphere;  // capture by value
    auto fn = [f_theta, n, e](double r) {
        return f_theta(2.0 * std::atan(r)) * std::pow(jacobian_S(r, n), e);
    };
    RadialField out = make_default_field(n, fn);
    const double inf = std::numeric_limits<double>::infinity();
    const double lo = std::max(0.0, f_sphere.support_lo);
    const double hi = std::min(kPi, f_sphere.support_hi);
    out.support_lo = std::tan(0.5 * lo);
    out.support_hi = hi >= kPi ? inf : std::tan(0.5 * hi);
    return out;
}

double integrate_sphere_field(const RadialField& f, int quad_nodes) {
    if (f.chart != Chart::SpherePolar)
        throw DomainError("integrate_sphere_field: field must be on the SpherePolar chart");
    const int n = f.n;
    const Quadrature& q = gauss_gegenbauer(quad_nodes, 0.5 * (n - 2));
    double total = 0.0;
    for (std::size_t i = 0; i < q.x.size(); ++i)
        total += q.w[i] * f(std::acos(q.x[i]));
    return sphere_area(n - 1) * total;
}

double lp_norm_sphere(const RadialField& f, double p, int quad_nodes) {
    if (f.chart != Chart::SpherePolar)
        throw DomainError("lp_norm_sphere: field must be on the SpherePolar chart");
    const int n = f.n;
    const Quadrature& q = gauss_gegenbauer(quad_nodes, 0.5 * (n - 2));
    double total = 0.0;
    for (std::size_t i = 0; i < q.x.size(); ++i)
        total += q.w[i] * std::pow(std::abs(f(std::acos(q.x[i]))), p);
    return std::pow(sphere_area(n - 1) * total, 1.0 / p);
}

}  // namespace qcurv
