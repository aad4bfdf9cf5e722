// Dilogarithm, the 2F1(1,1;c;z) family with parameter derivatives at c=1,
// digamma/trigamma at integers, log-gamma, and Hurwitz zeta.

#include "qtheta/special.hpp"

#include <cmath>

#include "qtheta/errors.hpp"
#include "qtheta/quadrature.hpp"

namespace qtheta {

namespace {

// Direct series sum_{n>=1} z^n/n^2 for |z| <= 1/2; geometric tail.
double dilog_series(double z) {
    double sum = 0.0;
    double zn = 1.0;
    for (int n = 1; n < 200; ++n) {
        zn *= z;
        const double term = zn / (double(n) * n);
        sum += term;
        const double tail = std::abs(zn * z) / ((double(n) + 1) * (n + 1) * (1.0 - std::abs(z)));
        if (tail < 1e-18) return sum;
    }
    return sum;
}

}  // namespace

double dilog(double z) {
    if (!(z <= 1.0)) throw DomainError("dilog: real branch requires z <= 1");
    if (z == 0.0) return 0.0;
    if (z == 1.0) return kZeta2;
    if (z < -1.0) {
        // Li2(z) + Li2(1/z) = -zeta(2) - log^2(-z)/2
        const double lg = std::log(-z);
        return -kZeta2 - 0.5 * lg * lg - dilog(1.0 / z);
    }
    if (z < -0.5) {
        // Li2(z) + Li2(-z) = Li2(z^2)/2
        return 0.5 * dilog(z * z) - dilog(-z);
    }
    if (z <= 0.5) return dilog_series(z);
    // Li2(z) + Li2(1-z) = zeta(2) - log z log(1-z)
    return kZeta2 - std::log(z) * std::log1p(-z) - dilog_series(1.0 - z);
}

Complex hyp2f1_11(Complex c, double z, const TruncationPolicy& policy) {
    policy.validate();
    if (!(std::abs(z) < 1.0)) throw DomainError("hyp2f1_11: |z| must be < 1");
    if (!(c.real() > 0.0)) throw DomainError("hyp2f1_11: Re(c) must be > 0");

    const double abs_z = std::abs(z);
    Complex sum = 0.0;
    Complex term = 1.0;  // k!/(c)_k z^k
    for (std::size_t k = 0; k < policy.max_terms; ++k) {
        sum += term;
        const Complex denom = c + double(k);
        if (std::abs(denom) == 0.0) throw DomainError("hyp2f1_11: parameter pole (c)_k = 0");
        term *= z * (double(k) + 1.0) / denom;
        // sup_{j>k} (j+1)/(j+Re c) is attained at j=k+1 when Re c < 1 and
        // approaches 1 from below otherwise.
        const double rho =
            abs_z * std::max(1.0, (double(k) + 2.0) / (double(k) + 1.0 + c.real()));
        if (rho < 1.0) {
            const double tail = std::abs(term) / (1.0 - rho);
            if (tail <= policy.term_eps * (1.0 + std::abs(sum))) return sum;
        }
    }
    throw ConvergenceError("hyp2f1_11: max_terms reached before tail certified");
}

double d_hyp2f1_dc(double z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("d_hyp2f1_dc: |z| must be < 1");
    if (z == 0.0) return 0.0;
    return std::log1p(-z) / (1.0 - z);
}

double d2_hyp2f1_dc2(double z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("d2_hyp2f1_dc2: |z| must be < 1");
    if (z == 0.0) return 0.0;
    const double l = std::log1p(-z);
    return (2.0 * dilog(z) + l * l) / (1.0 - z);
}

double digamma_int(unsigned n) {
    if (n == 0) throw DomainError("digamma_int: n must be >= 1");
    double h = 0.0;
    for (unsigned k = 1; k < n; ++k) h += 1.0 / k;
    return h - kEulerGamma;
}

double trigamma_int(unsigned n) {
    if (n == 0) throw DomainError("trigamma_int: n must be >= 1");
    double h2 = 0.0;
    for (unsigned k = 1; k < n; ++k) h2 += 1.0 / (double(k) * k);
    return kZeta2 - h2;
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: x must be > 0");
    return std::lgamma(x);
}

Complex hurwitz_zeta(Complex s, double x) {
    if (!(x > 0.0)) throw DomainError("hurwitz_zeta: x must be > 0");
    if (s == Complex(1.0, 0.0)) throw DomainError("hurwitz_zeta: pole at s = 1");

    // B_{2k}/(2k)! for the Euler-Maclaurin corrections through B10.
    static constexpr double kBernoulli[5] = {
        1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0, 1.0 / 47900160.0};

    const double abs_s = std::abs(s);
    const double target = std::max(16.0, 2.2 * abs_s);  // keeps |s|/(N+x) < 1/2
    const std::size_t N = (x >= target) ? 0 : std::size_t(std::ceil(target - x));

    Complex sum = 0.0;
    for (std::size_t n = 0; n < N; ++n) sum += std::exp(-s * std::log(n + x));

    const double A = double(N) + x;
    const double logA = std::log(A);
    sum += std::exp((1.0 - s) * logA) / (s - 1.0);
    sum += 0.5 * std::exp(-s * logA);

    // sum_k B_{2k}/(2k)! (s)_{2k-1} A^{-s-2k+1}
    Complex rising = s;  // (s)_1
    for (int k = 1; k <= 5; ++k) {
        sum += kBernoulli[k - 1] * rising * std::exp(-(s + double(2 * k - 1)) * logA);
        if (k < 5) rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
    }
    return sum;
}

double hurwitz_zeta_s_derivative_at_0(double x) {
    if (!(x > 0.0)) throw DomainError("hurwitz_zeta_s_derivative_at_0: x must be > 0");
    const LaurentCoefficients lc =
        contour_laurent([x](Complex s) { return hurwitz_zeta(s, x); }, 1);
    if (std::abs(lc.c1.imag()) > 1e-9)
        throw ConvergenceError("hurwitz_zeta_s_derivative_at_0: imaginary residue too large");
    return lc.c1.real();
}

}  // namespace qtheta
