#include "qcurv/radial_field.hpp"

#include <algorithm>
#include <cmath>

#include "qcurv/constants.hpp"
#include "qcurv/quadrature.hpp"

namespace qcurv {

namespace {

double lagrange4(const std::vector<double>& xs, const std::vector<double>& ys, std::size_t i0,
                 double x) {
    double acc = 0.0;
    for (std::size_t j = i0; j < i0 + 4; ++j) {
        double lj = 1.0;
        for (std::size_t k = i0; k < i0 + 4; ++k) {
            if (k == j) continue;
            lj *= (x - xs[k]) / (xs[j] - xs[k]);
        }
        acc += lj * ys[j];
    }
    return acc;
}

}  // namespace

double RadialField::operator()(double coord) const {
    if (coord < support_lo || coord > support_hi) return 0.0;
    if (fn) return fn(coord);
    if (grid.empty()) throw DomainError("RadialField: empty field");
    if (coord < grid.front() || coord > grid.back()) return 0.0;
    auto it = std::upper_bound(grid.begin(), grid.end(), coord);
    std::size_t i = static_cast<std::size_t>(it - grid.begin());
    std::size_t i0 = (i >= 2) ? i - 2 : 0;
    if (i0 + 4 > grid.size()) i0 = grid.size() - 4;
    if (grid.size() < 4) {  // degenerate small grids: nearest value
        std::size_t j = std::min<std::size_t>(i > 0 ? i - 1 : 0, grid.size() - 1);
        return values[j];
    }
    return lagrange4(grid, values, i0, coord);
}

void RadialField::validate() const {
    if (grid.size() != values.size())
        throw DomainError("RadialField: grid/value size mismatch");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw DomainError("RadialField: grid not strictly increasing");
    for (std::size_t i = 1; i + 1 < grid.size(); ++i)
        if (!std::isfinite(values[i]))
            throw DomainError("RadialField: non-finite interior value");
}

RadialField make_log_radial_field(int n, double lnr_lo, double lnr_hi, std::size_t count,
                                  const std::function<double(double)>& fn_of_r) {
    if (count < 2 || !(lnr_hi > lnr_lo))
        throw DomainError("make_log_radial_field: bad grid controls");
    RadialField f;
    f.chart = Chart::EuclideanRadius;
    f.n = n;
    f.grid.resize(count);
    f.values.assign(count, 0.0);
    const double h = (lnr_hi - lnr_lo) / static_cast<double>(count - 1);
    for (std::size_t j = 0; j < count; ++j) f.grid[j] = std::exp(lnr_lo + j * h);
    if (fn_of_r) {
        f.fn = fn_of_r;
        for (std::size_t j = 0; j < count; ++j) f.values[j] = fn_of_r(f.grid[j]);
    }
    return f;
}

RadialField make_default_field(int n, const std::function<double(double)>& fn_of_r) {
    return make_log_radial_field(n, -18.0, 18.0, 4096, fn_of_r);
}

LogGridInfo log_grid_info(const RadialField& f) {
    if (f.chart != Chart::EuclideanRadius)
        throw ConfigError("log_grid_info: field must be on the EuclideanRadius chart");
    if (f.grid.size() < 2) throw ConfigError("log_grid_info: grid too small");
    const double l0 = std::log(f.grid.front());
    const double h = (std::log(f.grid.back()) - l0) / static_cast<double>(f.grid.size() - 1);
    for (std::size_t j = 1; j + 1 < f.grid.size(); j += std::max<std::size_t>(1, f.grid.size() / 64))
        if (std::abs(std::log(f.grid[j]) - (l0 + j * h)) > 1e-9 * std::max(1.0, std::abs(l0)))
            throw ConfigError("log_grid_info: grid is not geometric");
    return {l0, h, f.grid.size()};
}

namespace {

double to_euclid_coord(Chart from, double c) {
    switch (from) {
        case Chart::EuclideanRadius: return c;
        case Chart::LogRadial: return std::exp(-c);
        case Chart::SpherePolar: return std::tan(0.5 * c);
    }
    return c;
}

double from_euclid_coord(Chart to, double r) {
    switch (to) {
        case Chart::EuclideanRadius: return r;
        case Chart::LogRadial: return -std::log(r);
        case Chart::SpherePolar: return 2.0 * std::atan(r);
    }
    return r;
}

// Is the coordinate map from -> to orientation reversing?
bool reverses(Chart from, Chart to) {
    auto sign = [](Chart c) { return c == Chart::LogRadial ? -1 : +1; };
    return sign(from) != sign(to);
}

}  // namespace

RadialField to_chart(const RadialField& f, Chart target) {
    if (f.chart == target) return f;
    RadialField g;
    g.chart = target;
    g.n = f.n;
    const Chart from = f.chart;
    auto map = [from, target](double c) {
        return from_euclid_coord(target, to_euclid_coord(from, c));
    };
    g.grid.resize(f.grid.size());
    g.values.resize(f.values.size());
    const bool rev = reverses(from, target);
    for (std::size_t j = 0; j < f.grid.size(); ++j) {
        const std::size_t k = rev ? f.grid.size() - 1 - j : j;
        g.grid[j] = map(f.grid[k]);
        g.values[j] = f.values[k];
        if (!std::isfinite(g.grid[j]))
            throw DomainError("to_chart: grid point maps outside the target chart");
    }
    if (f.fn) {
        auto old_fn = f.fn;
        g.fn = [old_fn, from, target](double c) {
            return old_fn(from_euclid_coord(from, to_euclid_coord(target, c)));
        };
    }
    const double inf = std::numeric_limits<double>::infinity();
    const double a = std::isfinite(f.support_lo) ? map(f.support_lo) : (rev ? inf : -inf);
    const double b = std::isfinite(f.support_hi) ? map(f.support_hi) : (rev ? -inf : inf);
    g.support_lo = std::min(a, b);
    g.support_hi = std::max(a, b);
    return g;
}

double log_integrate(const RadialField& f,
                     const std::function<double(double, double)>& integrand) {
    return log_integrate_range(f, -std::numeric_limits<double>::infinity(),
                               std::numeric_limits<double>::infinity(), integrand);
}

double log_integrate_range(const RadialField& f, double lnr_a, double lnr_b,
                           const std::function<double(double, double)>& integrand) {
    if (f.chart != Chart::EuclideanRadius)
        throw ConfigError("log_integrate: field must be on the EuclideanRadius chart");
    double lo = std::max({lnr_a, std::log(f.grid.front()),
                          std::isfinite(f.support_lo) ? std::log(std::max(f.support_lo, 1e-300))
                                                      : -std::numeric_limits<double>::infinity()});
    double hi = std::min({lnr_b, std::log(f.grid.back()),
                          std::isfinite(f.support_hi) ? std::log(f.support_hi)
                                                      : std::numeric_limits<double>::infinity()});
    if (!(hi > lo)) return 0.0;

    if (f.has_fn()) {
        auto g = [&](double l) {
            const double r = std::exp(l);
            return integrand(r, f(r));
        };
        const int panels = std::max(32, static_cast<int>((hi - lo) / 0.12));
        return integrate_panels(g, lo, hi, panels, 12);
    }

    // Sample-backed: Gregory rule over the node sub-range.
    const LogGridInfo info = log_grid_info(f);
    const auto j_of = [&](double l) { return (l - info.lnr_lo) / info.h; };
    std::size_t j0 = static_cast<std::size_t>(std::max(0.0, std::ceil(j_of(lo) - 1e-9)));
    std::size_t j1 =
        static_cast<std::size_t>(std::min<double>(info.count - 1.0, std::floor(j_of(hi) + 1e-9)));
    if (j1 <= j0) return 0.0;
    const std::size_t m = j1 - j0 + 1;
    std::vector<double> w = gregory_weights(m, info.h);
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j)
        total += w[j] * integrand(f.grid[j0 + j], f.values[j0 + j]);
    return total;
}

double integrate_euclidean(const RadialField& f,
                           const std::function<double(double, double)>& integrand) {
    const double area = sphere_area(f.n - 1);
    return area * log_integrate(f, [&](double r, double fr) {
               return integrand(r, fr) * std::pow(r, static_cast<double>(f.n));
           });
}

double field_mass(const RadialField& u) {
    return integrate_euclidean(
        u, [&](double, double ur) { return std::exp(u.n * ur); });
}

double lp_norm_euclidean(const RadialField& f, double p) {
    const double ip = integrate_euclidean(
        f, [&](double, double fr) { return std::pow(std::abs(fr), p); });
    return std::pow(ip, 1.0 / p);
}

}  // namespace qcurv
