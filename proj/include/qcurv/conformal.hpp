#pragma once

#include <span>
#include <vector>

#include "qcurv/radial_field.hpp"

namespace qcurv {

// Inverse stereographic projection S: R^n -> S^n c R^{n+1}; S(0) = north pole.
std::vector<double> stereo(std::span<const double> x);

// Inverse map; throws DomainError at the south pole.
std::vector<double> stereo_inv(std::span<const double> eta);

// Jacobian J_S(x) = (2 / (1 + |x|^2))^n as a function of r = |x|.
double jacobian_S(double r, int n);

// Chordal distance |S(x) - S(y)| from radii r, rho and the angle between x and y.
double chordal_from_radii(double r, double rho, double phi);

// Geodesic distance on the unit sphere between points of R^{n+1}.
double geodesic_distance(std::span<const double> eta, std::span<const double> xi);
double geodesic_from_chordal(double chordal);

// Kelvin transform u(1/r) - 2 ln r on a log-symmetric geometric grid
// (an index reversal plus an affine shift; no interpolation).
RadialField kelvin(const RadialField& u);

// Density pushforward f~(x) = f(S(x)) J_S(x)^{s/n}; SpherePolar -> EuclideanRadius.
// Preserves the L^{n/s} norm.
RadialField pushforward_density(const RadialField& f_sphere, double s);

// ∫ f dsigma over S^n of a SpherePolar-chart field.
double integrate_sphere_field(const RadialField& f, int quad_nodes = 512);

// ( ∫ |f|^p dsigma )^{1/p} over S^n.
double lp_norm_sphere(const RadialField& f, double p, int quad_nodes = 512);

}  // namespace qcurv
