#pragma once

#include <functional>

#include "lll/types.hpp"

namespace lll {

/// A spectral profile s -> g(s) together with the frequency beyond which it
/// is (numerically) zero.  Profiles used with the Fock Ansatz must satisfy
/// g(0) = 0 exactly.
struct Profile {
  std::function<Complex(double)> value;
  double support_end = 0.0;

  Complex operator()(double s) const { return value(s); }
};

/// amplitude * exp(-flatness / ((s - s_lo)(s_hi - s))) on (s_lo, s_hi),
/// identically zero outside.  Smooth, compactly supported, vanishes to all
/// orders at both edges.
Profile smooth_bump(double s_lo, double s_hi, Complex amplitude = 1.0,
                    double flatness = 1.0);

/// amplitude * exp(-(s - center)^2 / (2 width^2)), clamped to zero at s = 0
/// and below so the Ansatz constraint g(0) = 0 holds exactly.
Profile gaussian_bump(double center, double width, Complex amplitude = 1.0);

}  // namespace lll
