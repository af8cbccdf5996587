#include "lll/wirtinger.hpp"

#include <cmath>
#include <stdexcept>

namespace lll {

namespace {

double evaluate(const RealFunctional& h, std::span<const Complex> z) {
  const double v = h(z);
  if (!std::isfinite(v)) {
    throw NumericalError("hamiltonian overflow in wirtinger_gradient");
  }
  return v;
}

}  // namespace

std::vector<Complex> wirtinger_gradient(const RealFunctional& h,
                                        std::span<const Complex> z,
                                        double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("wirtinger_gradient: step must be positive");
  }
  std::vector<Complex> work(z.begin(), z.end());
  std::vector<Complex> grad(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Complex zi = work[i];
    work[i] = zi + step;
    const double re_plus = evaluate(h, work);
    work[i] = zi - step;
    const double re_minus = evaluate(h, work);
    work[i] = zi + Complex(0.0, step);
    const double im_plus = evaluate(h, work);
    work[i] = zi - Complex(0.0, step);
    const double im_minus = evaluate(h, work);
    work[i] = zi;
    const double d_re = (re_plus - re_minus) / (2.0 * step);
    const double d_im = (im_plus - im_minus) / (2.0 * step);
    grad[i] = 0.5 * Complex(d_re, d_im);
  }
  return grad;
}

}  // namespace lll
