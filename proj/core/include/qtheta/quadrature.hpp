#ifndef QTHETA_QUADRATURE_HPP
#define QTHETA_QUADRATURE_HPP

#include <cstddef>
#include <functional>

#include "qtheta/errors.hpp"
#include "qtheta/special.hpp"

namespace qtheta {

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 30;      // bisection depth for the adaptive rule
    int ts_max_level = 12;   // mesh-halving levels for tanh-sinh

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw DomainError("QuadConfig: tolerances must be > 0");
        if (max_depth < 3 || ts_max_level < 3)
            throw DomainError("QuadConfig: levels must be >= 3");
    }
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

struct ContourConfig {
    double radius = 0.5;                 // in (0, 0.75]
    std::size_t min_nodes = 64;          // powers of two
    std::size_t max_nodes = 1024;
    double stabilization_tol = 1e-12;

    void validate() const;
};

// Laurent coefficients of a function about s = 0: c_{-1} (residue), c_0, c_1.
struct LaurentCoefficients {
    Complex c_m1;
    Complex c0;
    Complex c1;
};

// Globally adaptive Gauss-Kronrod 7/15: bisects the panel with the largest
// error estimate until the summed |K15-G7| estimates meet
// max(abs_tol, rel_tol*|I|).  For integrands finite on [a,b].
IntegrationResult integrate_adaptive(const std::function<double(double)>& f,
                                     double a, double b,
                                     const QuadConfig& cfg = {});

// Tanh-sinh (double-exponential) rule on (a,b).  Handles endpoint
// singularities that are logarithmic or algebraic with exponent > -1, and
// never evaluates f exactly at a or b.  The mesh is halved until successive
// levels agree within tolerance or ts_max_level is reached.
IntegrationResult integrate_tanh_sinh(const std::function<double(double)>& f,
                                      double a, double b,
                                      const QuadConfig& cfg = {});

// Laurent coefficients c_{-1}, c_0, c_1 of g about 0 by the trapezoid rule on
// |s| = radius,
//   c_m = (1/2 pi i) oint g(s) s^{-m-1} ds,
// spectrally accurate for g analytic on the punctured disk with a pole of
// order <= pole_order_sought (<= 3) at 0.  Node count doubles from min_nodes
// until successive estimates agree within stabilization_tol.
LaurentCoefficients contour_laurent(const std::function<Complex(Complex)>& g,
                                    unsigned pole_order_sought,
                                    const ContourConfig& cfg = {});

}  // namespace qtheta

#endif
