#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "qcurv/errors.hpp"

namespace qcurv {

// Coordinate chart of a radial function.
//   SpherePolar:     theta in [0, pi], geodesic angle from the north pole
//   EuclideanRadius: r > 0
//   LogRadial:       t with r = exp(-t)
enum class Chart { SpherePolar, EuclideanRadius, LogRadial };

// A radial scalar function sampled on a strictly increasing 1-D grid,
// optionally backed by an exact evaluator in the chart coordinate.
// Values are taken to vanish outside [support_lo, support_hi].
struct RadialField {
    Chart chart = Chart::EuclideanRadius;
    int n = 4;
    std::vector<double> grid;
    std::vector<double> values;
    std::function<double(double)> fn;
    double support_lo = -std::numeric_limits<double>::infinity();
    double support_hi = std::numeric_limits<double>::infinity();

    std::size_t size() const { return grid.size(); }
    bool has_fn() const { return static_cast<bool>(fn); }

    // Evaluate at a chart coordinate: exact fn if present, otherwise
    // 4-point Lagrange interpolation of the samples (0 outside support/grid).
    double operator()(double coord) const;

    void validate() const;  // monotone grid, sizes, finite interior values
};

// Field on a geometric radial grid: r_j = exp(lnr_lo + j h), EuclideanRadius chart.
RadialField make_log_radial_field(int n, double lnr_lo, double lnr_hi, std::size_t count,
                                  const std::function<double(double)>& fn_of_r = nullptr);

// Default grid of the library: ln r in [-18, 18], 4096 nodes.
RadialField make_default_field(int n, const std::function<double(double)>& fn_of_r = nullptr);

// Uniform-in-log description of a Euclidean-chart grid.
struct LogGridInfo {
    double lnr_lo;
    double h;
    std::size_t count;
};
// Throws ConfigError unless the grid is geometric (uniform in ln r).
LogGridInfo log_grid_info(const RadialField& f);

// Chart conversions re-express the same function; no resampling is involved.
RadialField to_chart(const RadialField& f, Chart target);

// Integrate h(r) d(ln r) across the field's grid range (clipped to its support):
// Gauss-Legendre panels when the field is fn-backed, Gregory weights otherwise.
// The integrand callback receives (r, f(r)).
double log_integrate(const RadialField& f,
                     const std::function<double(double r, double fr)>& integrand);

// As above restricted to ln r in [lnr_a, lnr_b].
double log_integrate_range(const RadialField& f, double lnr_a, double lnr_b,
                           const std::function<double(double, double)>& integrand);

// ∫_{R^n} g(|x|) dx with g = integrand(r, f(r)); includes |S^{n-1}| r^n factors.
double integrate_euclidean(const RadialField& f,
                           const std::function<double(double, double)>& integrand);

// Mass ∫ e^{n u} dx of a Euclidean-chart radial field u.
double field_mass(const RadialField& u);

// ( ∫ |f|^p dx )^{1/p} over R^n.
double lp_norm_euclidean(const RadialField& f, double p);

}  // namespace qcurv
