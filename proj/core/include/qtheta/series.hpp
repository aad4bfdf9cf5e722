#ifndef QTHETA_SERIES_HPP
#define QTHETA_SERIES_HPP

#include <cstddef>
#include <vector>

#include "qtheta/check_report.hpp"
#include "qtheta/rational.hpp"
#include "qtheta/truncation.hpp"

namespace qtheta {

// q-Pochhammer infinite product (a;q)_inf = prod_{k>=0} (1 - a q^k), |q| < 1.
// Certified: stops once the geometric tail bound
//   sum_{k>N} |a q^k| / (1 - |a q^{N+1}|)
// on the log of the remaining factors drops below policy.term_eps, so the
// total relative error is <= term_eps.
double q_pochhammer_inf(double a, double q, const TruncationPolicy& policy = {});

// log (a;q)_inf = sum_{k>=0} log(1 - a q^k) for 0 <= a < 1, 0 < q < 1,
// evaluated with log1p.  Absolute error <= policy.term_eps.
double log_q_pochhammer_inf(double a, double q, const TruncationPolicy& policy = {});

// Table of partition numbers P(0..n_max), exact.
struct PartitionTable {
    std::vector<BigInt> values;

    const BigInt& operator[](std::size_t n) const { return values[n]; }
    std::size_t max_index() const { return values.size() - 1; }
};

// Euler's pentagonal-number recurrence, exact integer arithmetic.
PartitionTable partition_numbers(std::size_t n_max);

// Generating function sum_{n>=0} P(n) p^n for 0 < p < 1. The summation stops
// once a log-concavity ratio bound certifies the remaining tail < term_eps;
// n_max caps the table size.
double partition_gf(double p, std::size_t n_max, const TruncationPolicy& policy = {});
double partition_gf(double p, const TruncationPolicy& policy = {});

// Exact harmonic numbers H_n = sum 1/k and H_{n,2} = sum 1/k^2 (H_0 = 0).
Rational harmonic(unsigned n);
Rational harmonic2(unsigned n);

// Which harmonic-number generating function to expand / compare.
//   Hn      : log(1-z)/(1-z)                 -> -H_n
//   HnSq    : (Li2(z)+log^2(1-z))/(1-z)      ->  H_n^2
//   Hn2     : Li2(z)/(1-z)                   ->  H_{n,2}
//   HnOverN : Li2(z)+log^2(1-z)/2            ->  H_n/n
enum class GenFuncKind { Hn, HnSq, Hn2, HnOverN };

// Exact formal power-series coefficients of a closed form, indexed from 0.
struct RationalCoefficientList {
    std::vector<Rational> coeffs;

    const Rational& operator[](std::size_t n) const { return coeffs[n]; }
    std::size_t order() const { return coeffs.size() - 1; }
};

// Expands the closed form of `kind` as an exact power series to order N,
// built from the exact series of log(1-z), its Cauchy square, Li2(z), and
// division by (1-z) as prefix summation.
RationalCoefficientList genfunc_coeffs_closed(GenFuncKind kind, std::size_t order);

// Coefficient-by-coefficient exact comparison of the closed form against the
// directly built harmonic-number sequence.  tol is 0: pass iff every one of
// the order+1 coefficients matches exactly.
CheckReport genfunc_identity_check(GenFuncKind kind, std::size_t order);

const char* genfunc_kind_name(GenFuncKind kind);

}  // namespace qtheta

#endif
