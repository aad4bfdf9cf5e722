#ifndef QTHETA_QSPECIAL_HPP
#define QTHETA_QSPECIAL_HPP

#include <cmath>

#include "qtheta/quadrature.hpp"
#include "qtheta/rational.hpp"
#include "qtheta/special.hpp"
#include "qtheta/truncation.hpp"

namespace qtheta {

// Base parameter for the q-gamma side: q > 1 strictly, with log q cached.
class QBase {
  public:
    explicit QBase(double q) : q_(q), log_q_(std::log(q)) {
        if (!(q > 1.0)) throw DomainError("QBase: q must be > 1");
    }
    double q() const { return q_; }
    double log_q() const { return log_q_; }

  private:
    double q_;
    double log_q_;
};

// Nome parameter for the theta side: 0 < p < 1.  half_gap() is
// L = |log p|/2, the distance from 0 to the first imaginary-axis zero of
// theta4(i t, p).  from_base yields p = 1/q with L = log(q)/2 exactly.
class NomeP {
  public:
    explicit NomeP(double p) : p_(p), half_gap_(std::abs(std::log(p)) / 2.0) {
        if (!(p > 0.0 && p < 1.0)) throw DomainError("NomeP: p must lie in (0,1)");
    }
    static NomeP from_base(const QBase& base) {
        return NomeP(1.0 / base.q(), base.log_q() / 2.0);
    }
    double p() const { return p_; }
    double half_gap() const { return half_gap_; }

  private:
    NomeP(double p, double half_gap) : p_(p), half_gap_(half_gap) {}
    double p_;
    double half_gap_;
};

// q-number [x]_q = (q^x - 1)/(q - 1).
double q_number(double x, const QBase& base);

// log Gamma_q(z) for q > 1 in the Moak convention,
//   Gamma_q(z) = (q-1)^{1-z} q^{z(z-1)/2} (q^-1;q^-1)_inf / (q^-z;q^-1)_inf,
// which satisfies Gamma_q(x+1) = [x]_q Gamma_q(x) and Gamma_q(1) = Gamma_q(2) = 1.
double log_q_gamma(double z, const QBase& base, const TruncationPolicy& policy = {});

// log C_q = -(1/12) log q + (1/2 - log(q-1)/(2 log q)) log(q-1) + log (q^-1;q^-1)_inf.
double log_c_q(const QBase& base, const TruncationPolicy& policy = {});

// q-Hurwitz zeta zeta_q(s,x) = sum_{n>=0} [n+x]_q^{-s}.
//
// Two evaluation regimes:
//  - zeta_q_direct:    Re(s) >= 1, direct sum with geometric tail certificate;
//  - zeta_q_continued: the meromorphic continuation
//        (q-1)^s sum_{k>=0} (s)_k/k! * q^{-x(s+k)} / (1 - q^{-(s+k)}),
//    valid on the punctured disk 0 < |s| <= 3/4 (simple pole at s = 0 with
//    residue 1/log q) and for real s > 0 away from the poles.
// zeta_q dispatches between them.
Complex zeta_q(Complex s, double x, const QBase& base, const TruncationPolicy& policy = {});
Complex zeta_q_direct(Complex s, double x, const QBase& base, const TruncationPolicy& policy = {});
Complex zeta_q_continued(Complex s, double x, const QBase& base, const TruncationPolicy& policy = {});

// log of the zeta-regularized product of ([x]_q, [1+x]_q, ...), computed as
// -c_1 where c_1 is the s-linear Laurent coefficient of zeta_q(s,x) at s = 0
// (equivalently -Res_{s=0} zeta_q(s,x)/s^2), by contour extraction.
double log_zeta_regularized_product(double x, const QBase& base,
                                    const ContourConfig& contour = {},
                                    const TruncationPolicy& policy = {});

// Jacobi theta4(w,p) = sum_{n=-inf}^{inf} (-1)^n p^{n^2} e^{2 n i w}, paired
// n <-> -n and truncated once the Gaussian tail bound 2 p^{n^2} e^{2n|Im w|}
// certifies term_eps.  Accuracy window |Im w| <= half_gap + 1.
Complex theta4(Complex w, const NomeP& nome, const TruncationPolicy& policy = {});

// Real restriction theta4(i t, p) = 1 + 2 sum_{n>=1} (-1)^n p^{n^2} cosh(2nt)
// for |t| <= half_gap; even in t, strictly positive strictly between the
// zeros at t = +-half_gap.
double theta4_imag(double t, const NomeP& nome, const TruncationPolicy& policy = {});

// Exact partial sum sum_{n=-N}^{N+1} (-1)^n p^{n^2-n} of the theta series at
// its zero, in rational arithmetic.  The pairing n <-> 1-n cancels every
// term: the result is exactly 0 for every N >= 0 and rational p in (0,1).
Rational theta_zero_cancellation(const Rational& p, unsigned n_pairs);

}  // namespace qtheta

#endif
