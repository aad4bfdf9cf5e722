// The q-side objects: [x]_q, the Moak q>1 gamma, C_q, the q-Hurwitz zeta with
// its continuation around s = 0, the regularized-product extraction, and
// Jacobi theta4 on and off the imaginary axis.

#include "qtheta/qspecial.hpp"

#include <cmath>

#include "qtheta/series.hpp"

namespace qtheta {

double q_number(double x, const QBase& base) {
    return std::expm1(x * base.log_q()) / (base.q() - 1.0);
}

double log_q_gamma(double z, const QBase& base, const TruncationPolicy& policy) {
    if (!(z > 0.0)) throw DomainError("log_q_gamma: z must be > 0");
    const double q = base.q();
    const double lq = base.log_q();
    const double qinv = 1.0 / q;

    const double log_num = log_q_pochhammer_inf(qinv, qinv, policy);
    // (q^-z;q^-1)_inf: split off the leading factor so that 1 - q^-z keeps
    // full precision as z -> 0.
    const double log_first = std::log(-std::expm1(-z * lq));
    const double log_rest = log_q_pochhammer_inf(std::exp(-(z + 1.0) * lq), qinv, policy);

    return (1.0 - z) * std::log(q - 1.0) + 0.5 * z * (z - 1.0) * lq + log_num -
           (log_first + log_rest);
}

double log_c_q(const QBase& base, const TruncationPolicy& policy) {
    const double q = base.q();
    const double lq = base.log_q();
    const double log_qm1 = std::log(q - 1.0);
    return -lq / 12.0 + (0.5 - log_qm1 / (2.0 * lq)) * log_qm1 +
           log_q_pochhammer_inf(1.0 / q, 1.0 / q, policy);
}

namespace {

// log [w]_q = w log q + log1p(-q^-w) - log(q-1), stable for large w.
double log_q_number(double w, double q, double lq) {
    return w * lq + std::log1p(-std::exp(-w * lq)) - std::log(q - 1.0);
}

// exp(-w) - 1 for complex w without cancellation at small |w|.
Complex expm1_neg(Complex w) {
    if (std::abs(w) < 0.5) {
        Complex sum = 0.0;
        Complex term = 1.0;
        for (int j = 1; j <= 20; ++j) {
            term *= -w / double(j);
            sum += term;
            if (std::abs(term) < 1e-20 * (1.0 + std::abs(sum))) break;
        }
        return sum;
    }
    return std::exp(-w) - 1.0;
}

}  // namespace

Complex zeta_q_direct(Complex s, double x, const QBase& base, const TruncationPolicy& policy) {
    policy.validate();
    if (!(x > 0.0)) throw DomainError("zeta_q_direct: x must be > 0");
    if (!(s.real() >= 1.0)) throw DomainError("zeta_q_direct: requires Re(s) >= 1");

    const double q = base.q();
    const double lq = base.log_q();
    const double ratio = std::exp(-s.real() * lq);  // dominates |t_{n+1}/t_n|

    Complex sum = 0.0;
    for (std::size_t n = 0; n < policy.max_terms; ++n) {
        const double logv = log_q_number(double(n) + x, q, lq);
        const Complex term = std::exp(-s * logv);
        sum += term;
        const double tail = std::abs(term) * ratio / (1.0 - ratio);
        if (tail < policy.term_eps * std::max(1.0, std::abs(sum))) return sum;
    }
    throw ConvergenceError("zeta_q_direct: max_terms reached before tail certified");
}

Complex zeta_q_continued(Complex s, double x, const QBase& base,
                         const TruncationPolicy& policy) {
    policy.validate();
    if (!(x > 0.0)) throw DomainError("zeta_q_continued: x must be > 0");
    if (s == Complex(0.0, 0.0)) throw DomainError("zeta_q_continued: simple pole at s = 0");

    const double q = base.q();
    const double lq = base.log_q();
    const double abs_s = std::abs(s);
    const double qmx = std::exp(-x * lq);  // q^-x

    // (q-1)^s sum_k (s)_k/k! q^{-x(s+k)} / (1 - q^{-(s+k)})
    Complex sum = 0.0;
    Complex rising_over_fact = 1.0;               // (s)_k / k!
    Complex power = std::exp(-x * s * lq);        // q^{-x(s+k)}
    for (std::size_t k = 0; k < policy.max_terms; ++k) {
        const Complex denom = -expm1_neg((s + double(k)) * lq);  // 1 - q^{-(s+k)}
        if (std::abs(denom) < 1e-12)
            throw DomainError("zeta_q_continued: evaluation at a pole of the continuation");
        sum += rising_over_fact * power / denom;

        rising_over_fact *= (s + double(k)) / (double(k) + 1.0);
        power *= qmx;

        // Dominating ratio for every remaining term (j >= k+1):
        //   |T_{j+1}/T_j| <= max(1,(j+|s|)/(j+1)) q^-x (1+q^-(j+Re s))/(1-q^-(j+1+Re s)),
        // each factor largest at j = k+1.
        const double j = double(k) + 1.0;
        if (j + s.real() <= 0.0) continue;  // certificate needs j + Re s > 0
        const double factor1 = std::max(1.0, (j + abs_s) / (j + 1.0));
        const double bump = (1.0 + std::exp(-(j + s.real()) * lq)) /
                            (1.0 - std::exp(-(j + 1.0 + s.real()) * lq));
        const double rho = factor1 * qmx * bump;
        if (rho < 1.0) {
            const Complex next_denom = -expm1_neg((s + j) * lq);
            const double next_term = std::abs(rising_over_fact * power / next_denom);
            if (next_term / (1.0 - rho) < policy.term_eps * std::max(1.0, std::abs(sum)))
                return std::exp(s * std::log(q - 1.0)) * sum;
        }
    }
    throw ConvergenceError("zeta_q_continued: max_terms reached before tail certified");
}

Complex zeta_q(Complex s, double x, const QBase& base, const TruncationPolicy& policy) {
    if (s.real() >= 1.0) return zeta_q_direct(s, x, base, policy);
    const double abs_s = std::abs(s);
    if (abs_s > 0.0 && abs_s <= 0.75) return zeta_q_continued(s, x, base, policy);
    throw DomainError("zeta_q: s outside the disk 0 < |s| <= 3/4 and the half-plane Re(s) >= 1");
}

double log_zeta_regularized_product(double x, const QBase& base,
                                    const ContourConfig& contour,
                                    const TruncationPolicy& policy) {
    if (!(x > 0.0)) throw DomainError("log_zeta_regularized_product: x must be > 0");
    // Nearest singularities of zeta_q: s = -k on the real axis and the
    // lattice s = 2 pi i m / log q.
    const double limit = std::min({0.75, 2.0 * 3.141592653589793 / base.log_q(), 1.0});
    if (!(contour.radius < limit))
        throw DomainError("log_zeta_regularized_product: contour radius too large for this q");

    const LaurentCoefficients lc = contour_laurent(
        [&](Complex s) { return zeta_q_continued(s, x, base, policy); }, 1, contour);
    if (std::abs(lc.c1.imag()) > 1e-9)
        throw ConvergenceError("log_zeta_regularized_product: imaginary part of c1 too large");
    return -lc.c1.real();
}

Complex theta4(Complex w, const NomeP& nome, const TruncationPolicy& policy) {
    policy.validate();
    const double p = nome.p();
    const double mu = std::abs(w.imag());
    if (mu > nome.half_gap() + 1.0)
        throw ConvergenceError("theta4: |Im w| outside the accuracy window half_gap + 1");

    const double e2mu = std::exp(2.0 * mu);
    const double p2 = p * p;
    Complex sum = 1.0;
    double gauss = 1.0;        // p^{n^2}
    double odd_pow = p;        // p^{2n-1}
    double exp_pow = e2mu;     // e^{2 n mu}
    double sign = 1.0;
    for (std::size_t n = 1; n < policy.max_terms; ++n) {
        gauss *= odd_pow;
        odd_pow *= p2;
        sign = -sign;
        sum += sign * gauss * 2.0 * std::cos(2.0 * double(n) * w);

        // Gaussian tail: t_n <= 2 p^{n^2} e^{2 n mu}, ratios p^{2n+1} e^{2 mu}.
        exp_pow *= e2mu;
        const double next = 2.0 * gauss * odd_pow * exp_pow;
        const double rho = odd_pow * p2 * e2mu;
        if (rho < 1.0 && next / (1.0 - rho) < policy.term_eps) return sum;
    }
    throw ConvergenceError("theta4: max_terms reached before Gaussian tail certified");
}

double theta4_imag(double t, const NomeP& nome, const TruncationPolicy& policy) {
    policy.validate();
    const double p = nome.p();
    const double L = nome.half_gap();
    const double at = std::abs(t);
    if (at > L * (1.0 + 1e-12) + 1e-12)
        throw ConvergenceError("theta4_imag: |t| outside [-half_gap, half_gap]");

    const double e2mu = std::exp(2.0 * at);
    const double p2 = p * p;
    double sum = 1.0;
    double gauss = 1.0;
    double odd_pow = p;
    double exp_pow = e2mu;
    double sign = 1.0;
    for (std::size_t n = 1; n < policy.max_terms; ++n) {
        gauss *= odd_pow;
        odd_pow *= p2;
        sign = -sign;
        sum += sign * gauss * 2.0 * std::cosh(2.0 * double(n) * t);

        exp_pow *= e2mu;
        const double next = 2.0 * gauss * odd_pow * exp_pow;
        const double rho = odd_pow * p2 * e2mu;
        if (rho < 1.0 && next / (1.0 - rho) < policy.term_eps) return sum;
    }
    throw ConvergenceError("theta4_imag: max_terms reached before Gaussian tail certified");
}

Rational theta_zero_cancellation(const Rational& p, unsigned n_pairs) {
    if (!(p > 0 && p < 1)) throw DomainError("theta_zero_cancellation: p must lie in (0,1)");

    // sum_{n=-N}^{N+1} (-1)^n p^{n^2-n}; exponents n^2-n are >= 0 and shared
    // between the paired indices n and 1-n.
    const BigInt num = boost::multiprecision::numerator(p);
    const BigInt den = boost::multiprecision::denominator(p);
    Rational sum = 0;
    const long N = long(n_pairs);
    for (long n = -N; n <= N + 1; ++n) {
        const unsigned e = unsigned(n * n - n);
        const Rational term(boost::multiprecision::pow(num, e),
                            boost::multiprecision::pow(den, e));
        if (n % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace qtheta
