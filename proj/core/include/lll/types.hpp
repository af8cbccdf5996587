#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace lll {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

/// Thrown when a computation leaves the representable range or an iteration
/// fails to converge (blow-up, overflow, quadrature stagnation, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Compensated (Kahan) accumulator.  All reductions in this library run in a
/// fixed ascending index order so results are reproducible bit-for-bit.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

class KahanComplexSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_;
  KahanSum im_;
};

}  // namespace lll
