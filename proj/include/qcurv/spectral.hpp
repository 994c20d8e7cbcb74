#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qcurv/quadrature.hpp"
#include "qcurv/radial_field.hpp"

namespace qcurv {

// Coefficients of a radial sphere function against L^2-normalized zonal
// harmonics Z_l(cos theta), l = 0..L.
struct ZonalSpectrum {
    int n = 4;
    std::vector<double> coeffs;
    int lmax() const { return static_cast<int>(coeffs.size()) - 1; }
};

enum class PaneitzVariant { P2s, P2sSqrt, Ps };

// Zonal (Gegenbauer) analysis/synthesis tables for S^n.
class ZonalBasis {
public:
    ZonalBasis(int n, int lmax, int quad_nodes = 256);

    int n() const { return n_; }
    int lmax() const { return lmax_; }
    int nodes() const { return nodes_; }
    const Quadrature& quad() const { return quad_; }  // x = cos(theta) nodes

    // Normalized zonal harmonic Z_l at x = cos(theta).
    double zonal(int l, double x) const;
    // Z_0..Z_L at one point (three-term recurrence).
    void zonal_all(double x, int L, std::span<double> out) const;

    ZonalSpectrum analyze(const std::function<double(double /*theta*/)>& u, int L) const;
    ZonalSpectrum analyze(const RadialField& u_sphere, int L) const;
    // fn-backed SpherePolar field evaluating the truncated series.
    RadialField synthesize(const ZonalSpectrum& spec) const;
    double synthesize_at_theta(const ZonalSpectrum& spec, double theta) const;

    // ∫ f dsigma over S^n with the basis quadrature.
    double integrate(const std::function<double(double /*theta*/)>& f) const;

    // Value table Z_l(x_i) for the quadrature nodes, row-major [node][l].
    const std::vector<double>& node_table() const { return ztab_; }

private:
    int n_, lmax_, nodes_;
    double lambda_;  // Gegenbauer index (n-1)/2
    Quadrature quad_;
    std::vector<double> norm_;  // 1 / sqrt(|S^n| h_l)
    std::vector<double> ztab_;
};

double paneitz_variant_multiplier(long l, int n, double s, PaneitzVariant v);

// Coefficient-wise application of P_{2s}, P_{2s}^{1/2} or P_s.
ZonalSpectrum apply_paneitz(const ZonalSpectrum& spec, PaneitzVariant v, double s);

double l2_norm(const ZonalSpectrum& spec);
// ||P_n^{1/2} u||_2 (order s = n/2).
double pn_half_norm(const ZonalSpectrum& spec);
// Full H^{n/2} norm: sqrt(||u||_2^2 + ||P_n^{1/2} u||_2^2).
double h_half_norm(const ZonalSpectrum& spec);

// Relative gap between the spectral energy sum m_l u_l^2 and the Euclidean
// biharmonic energy ∫ w Delta^2 w dx of w = u ∘ S, computed by log-radial
// finite differences.  n = 4 only.
double conformal_norm_identity_check(const ZonalSpectrum& u, const ZonalBasis& basis);

}  // namespace qcurv
