#pragma once

#include <functional>

#include "lll/types.hpp"

namespace lll {

struct QuadratureOptions {
  double rel_tol = 1e-8;
  int max_refinements = 18;  // panel count doubles per refinement
};

struct QuadratureResult {
  double value = 0.0;
  double achieved_rel = 0.0;
  int refinements = 0;
};

/// Composite 16-point Gauss-Legendre quadrature on [lo, hi] with dyadic panel
/// refinement until two successive refinements agree to rel_tol.  Throws
/// NumericalError with the achieved tolerance if the refinement stagnates.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureOptions& opts = {});

Complex integrate_complex(const std::function<Complex(double)>& f, double lo,
                          double hi, const QuadratureOptions& opts = {});

}  // namespace lll
