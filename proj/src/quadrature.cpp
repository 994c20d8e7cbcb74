#include "qcurv/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qcurv/constants.hpp"

namespace qcurv {

namespace {

Quadrature make_gauss_legendre(int order) {
    Quadrature q;
    q.x.resize(order);
    q.w.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev initial guess, then Newton on P_order.
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        q.x[i] = -x;
        q.x[order - 1 - i] = x;
        q.w[i] = q.w[order - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return q;
}

Quadrature make_gauss_gegenbauer(int order, double g) {
    // Golub-Welsch for the weight (1-x^2)^g: symmetric Jacobi matrix from the
    // monic three-term recurrence, eigenvalues = nodes.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        double bk = k * (k + 2.0 * g) / ((2.0 * k + 2.0 * g + 1.0) * (2.0 * k + 2.0 * g - 1.0));
        J(k, k - 1) = J(k - 1, k) = std::sqrt(bk);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    const double beta0 =
        std::sqrt(kPi) * std::exp(log_gamma(g + 1.0) - log_gamma(g + 1.5));
    Quadrature q;
    q.x.resize(order);
    q.w.resize(order);
    for (int i = 0; i < order; ++i) {
        q.x[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        q.w[i] = beta0 * v0 * v0;
    }
    return q;
}

std::mutex cache_mutex;

}  // namespace

const Quadrature& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::map<int, Quadrature> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_gauss_legendre(order)).first;
    return it->second;
}

const Quadrature& gauss_gegenbauer(int order, double gamma) {
    if (order < 1) throw std::invalid_argument("gauss_gegenbauer: order must be >= 1");
    static std::map<std::pair<int, long long>, Quadrature> cache;
    const long long key = std::llround(gamma * 1e9);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({order, key});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(order, key), make_gauss_gegenbauer(order, gamma)).first;
    return it->second;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        int order) {
    if (!(b > a)) return 0.0;
    const Quadrature& q = gauss_legendre(order);
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double s = 0.0;
        for (std::size_t i = 0; i < q.x.size(); ++i) s += q.w[i] * f(mid + 0.5 * h * q.x[i]);
        total += 0.5 * h * s;
    }
    return total;
}

double integrate_refined_left(const std::function<double(double)>& f, double a, double b,
                              int levels, int order) {
    if (!(b > a)) return 0.0;
    const Quadrature& q = gauss_legendre(order);
    const double len = b - a;
    double total = 0.0;
    // Panels [a + len 2^{-j-1}, a + len 2^{-j}], plus the leftmost sliver.
    double hi = len;
    for (int j = 0; j < levels; ++j) {
        const double lo = hi * 0.5;
        const double mid = a + 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        double s = 0.0;
        for (std::size_t i = 0; i < q.x.size(); ++i) s += q.w[i] * f(mid + half * q.x[i]);
        total += half * s;
        hi = lo;
    }
    {
        const double mid = a + 0.5 * hi;
        const double half = 0.5 * hi;
        double s = 0.0;
        for (std::size_t i = 0; i < q.x.size(); ++i) s += q.w[i] * f(mid + half * q.x[i]);
        total += half * s;
    }
    return total;
}

double integrate_split(const std::function<double(double)>& f, std::span<const double> breaks,
                       int panels_per_piece, int order) {
    if (breaks.size() < 2) return 0.0;
    std::vector<double> b(breaks.begin(), breaks.end());
    std::sort(b.begin(), b.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        total += integrate_panels(f, b[i], b[i + 1], panels_per_piece, order);
    return total;
}

std::vector<double> gregory_weights(std::size_t count, double h) {
    std::vector<double> w(count, h);
    if (count < 2) {
        if (count == 1) w[0] = 0.0;
        return w;
    }
    if (count < 8) {  // plain trapezoid for short runs
        w.front() = w.back() = 0.5 * h;
        return w;
    }
    static const double c[3] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0};
    for (int i = 0; i < 3; ++i) {
        w[i] = c[i] * h;
        w[count - 1 - i] = c[i] * h;
    }
    return w;
}

void LogSumExp::add(double log_term, double tag) {
    if (std::isinf(log_term) && log_term < 0) return;
    if (!has_) {
        has_ = true;
        max_ = log_term;
        max_tag_ = tag;
        sum_ = 1.0;
        return;
    }
    if (log_term > max_) {
        sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
        max_ = log_term;
        max_tag_ = tag;
    } else {
        sum_ += std::exp(log_term - max_);
    }
}

double LogSumExp::log_value() const {
    if (!has_) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(sum_);
}

}  // namespace qcurv
