// Adaptive Gauss-Kronrod 7/15, tanh-sinh for endpoint singularities, and
// spectrally accurate trapezoid contour integration for Laurent coefficients.

#include "qtheta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace qtheta {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double integral;
    double error;
    int depth;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b, int depth,
           std::size_t& evaluations) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    auto eval = [&](double x) {
        const double v = f(x);
        ++evaluations;
        if (!std::isfinite(v)) throw NonFiniteError("integrate_adaptive: non-finite integrand");
        return v;
    };

    const double fc = eval(center);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = eval(center - dx) + eval(center + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    return Panel{a, b, kronrod, std::abs(kronrod - gauss), depth};
}

}  // namespace

IntegrationResult integrate_adaptive(const std::function<double(double)>& f,
                                     double a, double b, const QuadConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw DomainError("integrate_adaptive: requires a < b");

    std::size_t evaluations = 0;
    std::priority_queue<Panel> queue;
    queue.push(gk15(f, a, b, 0, evaluations));

    double total = queue.top().integral;
    double total_err = queue.top().error;

    // Globally adaptive: always bisect the panel with the largest estimate.
    const std::size_t max_panels = 100000;
    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        const Panel worst = queue.top();
        if (worst.depth >= cfg.max_depth)
            throw ConvergenceError("integrate_adaptive: max_depth exhausted above tolerance");
        if (queue.size() > max_panels)
            throw ConvergenceError("integrate_adaptive: panel budget exhausted");
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gk15(f, worst.a, mid, worst.depth + 1, evaluations);
        const Panel right = gk15(f, mid, worst.b, worst.depth + 1, evaluations);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }
    return IntegrationResult{total, total_err, evaluations};
}

IntegrationResult integrate_tanh_sinh(const std::function<double(double)>& f,
                                      double a, double b, const QuadConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw DomainError("integrate_tanh_sinh: requires a < b");

    const double half_width = 0.5 * (b - a);
    const double center = 0.5 * (a + b);
    constexpr double kHalfPi = 1.5707963267948966;
    // |t| <= 6 keeps e^{2u} with u = (pi/2) sinh t below double overflow while
    // the node offsets from the endpoints stay representable (> 1e-276).
    constexpr double kTMax = 6.0;

    std::size_t evaluations = 0;

    // Weighted integrand sum at abscissa t; nodes are located by their offset
    // from the nearer endpoint so that integrands singular at a or b see a
    // full-precision argument.
    auto node_term = [&](double t) -> double {
        const double u = kHalfPi * std::sinh(t);
        const double au = std::abs(u);
        const double offset = half_width * 2.0 / (1.0 + std::exp(2.0 * au));
        double x;
        if (t > 0.0)
            x = b - offset;
        else if (t < 0.0)
            x = a + offset;
        else
            x = center;
        if (x <= a || x >= b) return 0.0;  // underflowed to an endpoint: weight is ~0
        const double cu = std::cosh(u);
        const double weight = half_width * kHalfPi * std::cosh(t) / (cu * cu);
        if (weight == 0.0 || !std::isfinite(weight)) return 0.0;
        const double v = f(x);
        ++evaluations;
        if (!std::isfinite(v)) throw NonFiniteError("integrate_tanh_sinh: non-finite integrand");
        return weight * v;
    };

    // Level 0: h = 1.  Each level halves h; previous nodes are reused, the
    // new ones sit at odd multiples of h.
    double weighted_sum = node_term(0.0);
    for (int j = 1; j <= int(kTMax); ++j) weighted_sum += node_term(j) + node_term(-j);

    double h = 1.0;
    double previous = h * weighted_sum;
    for (int level = 1; level <= cfg.ts_max_level; ++level) {
        h *= 0.5;
        for (long j = 1; j * h <= kTMax; j += 2)
            weighted_sum += node_term(j * h) + node_term(-j * h);
        const double current = h * weighted_sum;
        const double delta = std::abs(current - previous);
        if (level >= 3 && delta <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(current)))
            return IntegrationResult{current, delta, evaluations};
        previous = current;
    }
    throw ConvergenceError("integrate_tanh_sinh: ts_max_level reached above tolerance");
}

void ContourConfig::validate() const {
    if (!(radius > 0.0 && radius <= 0.75))
        throw DomainError("ContourConfig: radius must lie in (0, 0.75]");
    auto is_pow2 = [](std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; };
    if (!is_pow2(min_nodes) || !is_pow2(max_nodes) || min_nodes > max_nodes)
        throw DomainError("ContourConfig: node counts must be powers of two, min <= max");
    if (!(stabilization_tol > 0.0))
        throw DomainError("ContourConfig: stabilization_tol must be > 0");
}

LaurentCoefficients contour_laurent(const std::function<Complex(Complex)>& g,
                                    unsigned pole_order_sought, const ContourConfig& cfg) {
    cfg.validate();
    if (pole_order_sought > 3)
        throw DomainError("contour_laurent: pole order must be <= 3");

    constexpr double kTwoPi = 6.283185307179586;
    const double r = cfg.radius;

    // c_m = (1/N) sum_j g(r e^{i theta_j}) (r e^{i theta_j})^{-m}.  Doubling N
    // interleaves new nodes between the old ones, so partial sums are reused.
    Complex sum_m1 = 0.0, sum_0 = 0.0, sum_1 = 0.0;
    std::size_t nodes = 0;

    auto accumulate = [&](std::size_t total, std::size_t stride, std::size_t first) {
        for (std::size_t j = first; j < total; j += stride) {
            const double theta = kTwoPi * double(j) / double(total);
            const Complex s = r * Complex(std::cos(theta), std::sin(theta));
            const Complex gs = g(s);
            sum_m1 += gs * s;  // m = -1: integrand g(s) s^{+1}
            sum_0 += gs;
            sum_1 += gs / s;
        }
        nodes = total;
    };

    accumulate(cfg.min_nodes, 1, 0);
    LaurentCoefficients prev{sum_m1 / double(nodes), sum_0 / double(nodes),
                             sum_1 / double(nodes)};

    while (nodes < cfg.max_nodes) {
        accumulate(nodes * 2, 2, 1);
        LaurentCoefficients cur{sum_m1 / double(nodes), sum_0 / double(nodes),
                                sum_1 / double(nodes)};
        const double drift = std::max({std::abs(cur.c_m1 - prev.c_m1),
                                       std::abs(cur.c0 - prev.c0),
                                       std::abs(cur.c1 - prev.c1)});
        if (drift < cfg.stabilization_tol) return cur;
        prev = cur;
    }
    throw ConvergenceError("contour_laurent: max_nodes reached unstabilized");
}

}  // namespace qtheta
