#ifndef QTHETA_TRUNCATION_HPP
#define QTHETA_TRUNCATION_HPP

#include <cstddef>

#include "qtheta/errors.hpp"

namespace qtheta {

// Termination rule for infinite series and products.  Every summation loop in
// the library stops only once a provable bound on the remaining tail (stated
// at each call site; always a dominating geometric or Gaussian tail) drops
// below term_eps.  max_terms is the hard cap; hitting it before the bound
// certifies raises ConvergenceError.
struct TruncationPolicy {
    double term_eps = 1e-16;
    std::size_t max_terms = 10000;

    void validate() const {
        if (!(term_eps > 0.0)) throw DomainError("TruncationPolicy: term_eps must be > 0");
        if (max_terms < 1) throw DomainError("TruncationPolicy: max_terms must be >= 1");
    }
};

}  // namespace qtheta

#endif
