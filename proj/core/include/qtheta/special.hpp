#ifndef QTHETA_SPECIAL_HPP
#define QTHETA_SPECIAL_HPP

#include <complex>

#include "qtheta/truncation.hpp"

namespace qtheta {

using Complex = std::complex<double>;

// zeta(2) = pi^2/6 = Li2(1).
inline constexpr double kZeta2 = 1.6449340668482264;
// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.5772156649015329;
inline constexpr double kLogSqrt2Pi = 0.9189385332046727;

// Real dilogarithm Li2(z) = sum_{n>=1} z^n/n^2 for z <= 1.
//   |z| <= 1/2          direct series,
//   z in (1/2, 1]       reflection Li2(z)+Li2(1-z) = zeta(2) - log z log(1-z),
//   z in [-1, -1/2)     Li2(z) = Li2(z^2)/2 - Li2(-z),
//   z < -1              inversion Li2(z)+Li2(1/z) = -zeta(2) - log^2(-z)/2.
double dilog(double z);

// 2F1(1,1;c;z) = sum_{k>=0} k!/(c)_k z^k for complex c with Re(c) > 0 and
// real |z| < 1.  Certified by a dominating geometric ratio bound; error
// <= term_eps * (1 + |result|).
Complex hyp2f1_11(Complex c, double z, const TruncationPolicy& policy = {});

// d/dc 2F1(1,1;c;z) at c=1: log(1-z)/(1-z).
double d_hyp2f1_dc(double z);

// d^2/dc^2 2F1(1,1;c;z) at c=1: (2 Li2(z) + log^2(1-z))/(1-z).
double d2_hyp2f1_dc2(double z);

// psi(n) = H_{n-1} - gamma and psi'(n) = zeta(2) - H_{n-1,2} at integers n >= 1.
double digamma_int(unsigned n);
double trigamma_int(unsigned n);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// Hurwitz zeta in the n >= 0 normalization, zeta(s,x) = sum_{n>=0} (n+x)^{-s},
// by Euler-Maclaurin with Bernoulli corrections through B10.  Contractual
// accuracy window |s| <= 10, s != 1, x > 0.
Complex hurwitz_zeta(Complex s, double x);

// zeta'(0,x), extracted as the s-linear Taylor coefficient of zeta(s,x) on a
// contour of radius 1/2 about s = 0.  Lerch: zeta'(0,x) = log(Gamma(x)/sqrt(2 pi)).
double hurwitz_zeta_s_derivative_at_0(double x);

}  // namespace qtheta

#endif
