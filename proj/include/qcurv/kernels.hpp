#pragma once

#include <span>
#include <vector>

#include "qcurv/radial_field.hpp"
#include "qcurv/spectral.hpp"

namespace qcurv {

// Angular average g_alpha(R) = |S^{n-1}|^{-1} ∫_{S^{n-1}} |e_1 - R w|^{-alpha} dsigma(w),
// for R in [0, 1), alpha in (0, n).  g_alpha(0) = 1 exactly.
double g_alpha(double R, double alpha, int n);

// Angular average of ln|e_1 - R w| for R in [0, 1].
double a_log_A(double R, int n);

// Angular average of ln|r e_1 - rho w|; symmetric in (r, rho).
double a_log(double r, double rho, int n);

// Sampled kernel with the Lemma trichotomy classification.
struct GAlphaTable {
    int n = 4;
    double alpha = 1.0;
    std::vector<double> R, value;
    enum class Regime { Decreasing, Constant, Increasing } regime = Regime::Constant;
    static GAlphaTable build(int n, double alpha, std::span<const double> R_list);
};

// Normalized log-kernel potential
//   v(x) = gamma_n^{-1} ∫ ln((1+|y|)/|x-y|) e^{n u(y)} dy
// for a radial u on a geometric grid; returned on the same grid.
RadialField potential_v(const RadialField& u);

enum class ConvMode { Flat, SphereConformal };

struct ConvAccuracy {
    bool warned = false;
    double est_error = 0.0;
};

// Radial convolution Tf against the kernel |x-y|^{-n+s}, optionally carrying
// the stereographic conformal factors ((1+|x|^2)/(1+|y|^2))^{(n-s)/2} and a
// correction term of kernel order s + corr_alpha with amplitude C_corr:
//   Tf(r) = |S^{n-1}| [ r^{s-n} ∫_0^r g_{n-s}(rho/r) w f rho^{n-1} drho
//                      + ∫_r^inf g_{n-s}(r/rho) w f rho^{s-1} drho ] + correction.
RadialField conv_T_radial(const RadialField& f, double s, ConvMode mode, double C_corr = 0.0,
                          double corr_alpha = 1.0, ConvAccuracy* accuracy = nullptr);

struct GreenValue {
    double value = 0.0;
    double tail_estimate = 0.0;
};

// Truncated spectral Green's kernel of P_s (order s) or P_{2s}^{1/2} at
// geodesic angle theta; the oscillatory zonal tail is resummed by iterated
// averaging of partial sums, and the residual spread is reported.
GreenValue green_spectral(PaneitzVariant variant, double s, double theta, int lmax, int n);

// Least-squares fit of the exponent a in G(theta) theta^{n-s}/K_{n,s} = 1 + O(theta^a),
// from samples at the given angles.  The Green's expansion fixes no explicit a;
// this reports the empirical one.
double green_fit_exponent(PaneitzVariant variant, double s, int n, int lmax,
                          std::span<const double> theta_list);

}  // namespace qcurv
