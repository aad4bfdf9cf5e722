#ifndef QTHETA_ERRORS_HPP
#define QTHETA_ERRORS_HPP

#include <stdexcept>

namespace qtheta {

// Argument outside the mathematical domain of an operation (q <= 1, p outside
// (0,1), evaluation at a pole, ...). Raised before any computation starts.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A series, product, quadrature or contour failed to certify its error bound
// within the configured budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An integrand produced a non-finite value at an interior point.
struct NonFiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qtheta

#endif
