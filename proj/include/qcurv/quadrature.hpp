#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qcurv {

struct Quadrature {
    std::vector<double> x, w;
};

// Gauss-Legendre rule on [-1, 1]; cached per order.
const Quadrature& gauss_legendre(int order);

// Gauss rule for the weight (1 - x^2)^gamma on [-1, 1]; cached per (order, gamma).
const Quadrature& gauss_gegenbauer(int order, double gamma);

// Composite Gauss-Legendre integration of f on [a, b].
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels = 16, int order = 12);

// As above, with panel boundaries geometrically refined toward `a`
// (resolves integrable endpoint singularities: powers, logs).
double integrate_refined_left(const std::function<double(double)>& f, double a, double b,
                              int levels = 40, int order = 16);

// Composite integration with interior split points (kinks, support edges).
double integrate_split(const std::function<double(double)>& f, std::span<const double> breaks,
                       int panels_per_piece = 8, int order = 12);

// Gregory end-corrected trapezoid weights for N uniform samples, spacing h.
// Fourth-order accurate for smooth integrands; all weights positive.
std::vector<double> gregory_weights(std::size_t count, double h);

// Accumulates sum_i exp(L_i) in log space; tracks the arg-max term.
class LogSumExp {
public:
    void add(double log_term, double tag = 0.0);
    double log_value() const;
    bool empty() const { return !has_; }
    double max_log() const { return max_; }
    double max_tag() const { return max_tag_; }

private:
    bool has_ = false;
    double max_ = 0.0, max_tag_ = 0.0;
    double sum_ = 0.0;  // sum of exp(L_i - max_)
};

}  // namespace qcurv
