#include "lll/profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace lll {

Profile smooth_bump(double s_lo, double s_hi, Complex amplitude,
                    double flatness) {
  if (!(0.0 <= s_lo && s_lo < s_hi) || !(flatness > 0.0)) {
    throw std::invalid_argument("smooth_bump: need 0 <= s_lo < s_hi and flatness > 0");
  }
  Profile p;
  p.support_end = s_hi;
  p.value = [=](double s) -> Complex {
    if (s <= s_lo || s >= s_hi) return Complex{};
    return amplitude * std::exp(-flatness / ((s - s_lo) * (s_hi - s)));
  };
  return p;
}

Profile gaussian_bump(double center, double width, Complex amplitude) {
  if (!(width > 0.0)) {
    throw std::invalid_argument("gaussian_bump: width must be positive");
  }
  Profile p;
  // 10 sigma: below the double-precision floor relative to the peak.
  p.support_end = center + 10.0 * width;
  p.value = [=](double s) -> Complex {
    if (s <= 0.0) return Complex{};
    const double u = (s - center) / width;
    return amplitude * std::exp(-0.5 * u * u);
  };
  return p;
}

}  // namespace lll
