#include "qcurv/spectral.hpp"

#include <cmath>

#include "qcurv/constants.hpp"

namespace qcurv {

namespace {

// L^2(S^n) norm^2 of the Gegenbauer polynomial C_l^lambda against the sphere
// polar weight: h_l = pi 2^{1-2 lambda} Gamma(l+2 lambda) / (l! (l+lambda) Gamma(lambda)^2).
double gegenbauer_h(int l, double lambda) {
    return std::exp(std::log(kPi) + (1.0 - 2.0 * lambda) * std::log(2.0) +
                    log_gamma(l + 2.0 * lambda) - log_gamma(l + 1.0) - std::log(l + lambda) -
                    2.0 * log_gamma(lambda));
}

}  // namespace

ZonalBasis::ZonalBasis(int n, int lmax, int quad_nodes)
    : n_(n), lmax_(lmax), nodes_(quad_nodes), lambda_(0.5 * (n - 1)) {
    if (n < 2) throw DomainError("ZonalBasis: n must be >= 2");
    if (lmax < 0) throw DomainError("ZonalBasis: lmax must be >= 0");
    if (lmax > quad_nodes / 2)
        throw ConfigError("ZonalBasis: lmax exceeds the quadrature resolving power (nodes/2)");
    quad_ = gauss_gegenbauer(quad_nodes, 0.5 * (n - 2));
    const double area = sphere_area(n - 1);
    norm_.resize(lmax + 1);
    for (int l = 0; l <= lmax; ++l) norm_[l] = 1.0 / std::sqrt(area * gegenbauer_h(l, lambda_));
    ztab_.resize(static_cast<std::size_t>(quad_nodes) * (lmax + 1));
    std::vector<double> row(lmax + 1);
    for (int i = 0; i < quad_nodes; ++i) {
        zonal_all(quad_.x[i], lmax, row);
        for (int l = 0; l <= lmax; ++l) ztab_[static_cast<std::size_t>(i) * (lmax + 1) + l] = row[l];
    }
}

void ZonalBasis::zonal_all(double x, int L, std::span<double> out) const {
    double c0 = 1.0, c1 = 2.0 * lambda_ * x;
    if (L >= 0) out[0] = c0 * norm_[0];
    if (L >= 1) out[1] = c1 * norm_[1];
    for (int l = 2; l <= L; ++l) {
        const double c2 = (2.0 * x * (l + lambda_ - 1.0) * c1 - (l + 2.0 * lambda_ - 2.0) * c0) / l;
        out[l] = c2 * norm_[l];
        c0 = c1;
        c1 = c2;
    }
}

double ZonalBasis::zonal(int l, double x) const {
    if (l < 0 || l > lmax_) throw DomainError("ZonalBasis::zonal: l out of range");
    double c0 = 1.0, c1 = 2.0 * lambda_ * x;
    if (l == 0) return norm_[0];
    for (int k = 2; k <= l; ++k) {
        const double c2 = (2.0 * x * (k + lambda_ - 1.0) * c1 - (k + 2.0 * lambda_ - 2.0) * c0) / k;
        c0 = c1;
        c1 = c2;
    }
    return c1 * norm_[l];
}

ZonalSpectrum ZonalBasis::analyze(const std::function<double(double)>& u, int L) const {
    if (L > lmax_) throw ConfigError("ZonalBasis::analyze: L exceeds the basis truncation");
    ZonalSpectrum spec;
    spec.n = n_;
    spec.coeffs.assign(L + 1, 0.0);
    const double area = sphere_area(n_ - 1);
    for (int i = 0; i < nodes_; ++i) {
        const double ui = u(std::acos(quad_.x[i]));
        const double wu = area * quad_.w[i] * ui;
        const double* z = &ztab_[static_cast<std::size_t>(i) * (lmax_ + 1)];
        for (int l = 0; l <= L; ++l) spec.coeffs[l] += wu * z[l];
    }
    return spec;
}

ZonalSpectrum ZonalBasis::analyze(const RadialField& u_sphere, int L) const {
    if (u_sphere.chart != Chart::SpherePolar)
        throw DomainError("ZonalBasis::analyze: field must be on the SpherePolar chart");
    if (u_sphere.n != n_) throw DomainError("ZonalBasis::analyze: dimension mismatch");
    return analyze([&](double theta) { return u_sphere(theta); }, L);
}

namespace {

double zonal_series(double lambda, const std::vector<double>& norms,
                    const std::vector<double>& coeffs, double x) {
    const int L = static_cast<int>(coeffs.size()) - 1;
    double c0 = 1.0, c1 = 2.0 * lambda * x;
    double acc = coeffs[0] * norms[0];
    if (L >= 1) acc += coeffs[1] * c1 * norms[1];
    for (int l = 2; l <= L; ++l) {
        const double c2 = (2.0 * x * (l + lambda - 1.0) * c1 - (l + 2.0 * lambda - 2.0) * c0) / l;
        acc += coeffs[l] * c2 * norms[l];
        c0 = c1;
        c1 = c2;
    }
    return acc;
}

}  // namespace

double ZonalBasis::synthesize_at_theta(const ZonalSpectrum& spec, double theta) const {
    if (spec.lmax() > lmax_)
        throw ConfigError("ZonalBasis: spectrum exceeds the basis truncation");
    return zonal_series(lambda_, norm_, spec.coeffs, std::cos(theta));
}

RadialField ZonalBasis::synthesize(const ZonalSpectrum& spec) const {
    if (spec.lmax() > lmax_)
        throw ConfigError("ZonalBasis::synthesize: spectrum exceeds the basis truncation");
    RadialField f;
    f.chart = Chart::SpherePolar;
    f.n = n_;
    f.grid.resize(nodes_);
    f.values.resize(nodes_);
    const double lam = lambda_;
    std::vector<double> norms(norm_.begin(), norm_.begin() + spec.lmax() + 1);
    std::vector<double> coeffs = spec.coeffs;
    for (int i = 0; i < nodes_; ++i) {
        // Gauss nodes are increasing in x = cos(theta); reverse for theta.
        const double x = quad_.x[nodes_ - 1 - i];
        f.grid[i] = std::acos(x);
        f.values[i] = zonal_series(lam, norms, coeffs, x);
    }
    f.fn = [lam, norms, coeffs](double theta) {
        return zonal_series(lam, norms, coeffs, std::cos(theta));
    };
    return f;
}

double ZonalBasis::integrate(const std::function<double(double)>& f) const {
    const double area = sphere_area(n_ - 1);
    double total = 0.0;
    for (int i = 0; i < nodes_; ++i) total += quad_.w[i] * f(std::acos(quad_.x[i]));
    return area * total;
}

double paneitz_variant_multiplier(long l, int n, double s, PaneitzVariant v) {
    switch (v) {
        case PaneitzVariant::P2s: return paneitz_multiplier(l, DimensionContext(n, s));
        case PaneitzVariant::P2sSqrt: return paneitz_sqrt_multiplier(l, DimensionContext(n, s));
        case PaneitzVariant::Ps: return paneitz_multiplier(l, DimensionContext(n, 0.5 * s));
    }
    return 0.0;
}

ZonalSpectrum apply_paneitz(const ZonalSpectrum& spec, PaneitzVariant v, double s) {
    ZonalSpectrum out = spec;
    for (int l = 0; l <= spec.lmax(); ++l)
        out.coeffs[l] *= paneitz_variant_multiplier(l, spec.n, s, v);
    return out;
}

double l2_norm(const ZonalSpectrum& spec) {
    double s2 = 0.0;
    for (double c : spec.coeffs) s2 += c * c;
    return std::sqrt(s2);
}

double pn_half_norm(const ZonalSpectrum& spec) {
    const double s = 0.5 * spec.n;
    double acc = 0.0;
    for (int l = 0; l <= spec.lmax(); ++l) {
        const double m = paneitz_variant_multiplier(l, spec.n, s, PaneitzVariant::P2s);
        acc += m * spec.coeffs[l] * spec.coeffs[l];
    }
    return std::sqrt(acc);
}

double h_half_norm(const ZonalSpectrum& spec) {
    const double l2 = l2_norm(spec);
    const double pn = pn_half_norm(spec);
    return std::sqrt(l2 * l2 + pn * pn);
}

namespace {

// 9-point central stencils on a uniform grid, in units of 1/h^2 and 1/h^4.
const double kD2[9] = {-1.0 / 560, 8.0 / 315,  -1.0 / 5, 8.0 / 5, -205.0 / 72,
                       8.0 / 5,    -1.0 / 5, 8.0 / 315, -1.0 / 560};
const double kD4[9] = {7.0 / 240,   -2.0 / 5, 169.0 / 60, -122.0 / 15, 91.0 / 8,
                       -122.0 / 15, 169.0 / 60, -2.0 / 5, 7.0 / 240};

}  // namespace

double conformal_norm_identity_check(const ZonalSpectrum& u, const ZonalBasis& basis) {
    if (u.n != 4 || basis.n() != 4)
        throw ConfigError("conformal_norm_identity_check: only n = 4 is supported");
    double spectral = 0.0;
    for (int l = 0; l <= u.lmax(); ++l) {
        const double m = paneitz_variant_multiplier(l, 4, 2.0, PaneitzVariant::P2s);
        spectral += m * u.coeffs[l] * u.coeffs[l];
    }

    // w(lam) = u(S(x)) with lam = ln r; for n = 4,
    //   Delta^2 w = r^{-4} (w'''' - 4 w'') and dx = |S^3| r^4 dlam,
    // so ∫ w Delta^2 w dx = |S^3| ∫ w (w'''' - 4 w'') dlam.
    auto w = [&](double lam) { return basis.synthesize_at_theta(u, 2.0 * std::atan(std::exp(lam))); };
    const double h = 0.05;
    auto integrand = [&](double lam) {
        double s2 = 0.0, s4 = 0.0;
        for (int k = 0; k < 9; ++k) {
            const double wk = w(lam + (k - 4) * h);
            s2 += kD2[k] * wk;
            s4 += kD4[k] * wk;
        }
        return w(lam) * (s4 / (h * h * h * h) - 4.0 * s2 / (h * h));
    };
    const double euclid = sphere_area(3) * integrate_panels(integrand, -14.0, 14.0, 220, 10);

    if (spectral == 0.0) return std::abs(euclid);
    return std::abs(spectral - euclid) / spectral;
}

}  // namespace qcurv
