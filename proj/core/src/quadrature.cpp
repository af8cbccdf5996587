#include "lll/quadrature.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace lll {

namespace {

constexpr int kNodes = 16;

struct GaussRule {
  std::array<double, kNodes> x;  // nodes on (-1, 1)
  std::array<double, kNodes> w;
};

// Legendre nodes by Newton iteration from the Chebyshev initial guess;
// deterministic to the last bit and accurate to machine precision.
GaussRule make_rule() {
  GaussRule rule{};
  const int n = kNodes;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[i] = x;
    rule.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return rule;
}

const GaussRule& rule() {
  static const GaussRule r = make_rule();
  return r;
}

template <typename T, typename F>
T composite(const F& f, double lo, double hi, int panels) {
  const GaussRule& r = rule();
  const double h = (hi - lo) / panels;
  KahanSum re, im;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * h;
    const double mid = a + 0.5 * h;
    for (int i = 0; i < kNodes; ++i) {
      const T v = f(mid + 0.5 * h * r.x[i]);
      if constexpr (std::is_same_v<T, double>) {
        re.add(0.5 * h * r.w[i] * v);
      } else {
        re.add(0.5 * h * r.w[i] * v.real());
        im.add(0.5 * h * r.w[i] * v.imag());
      }
    }
  }
  if constexpr (std::is_same_v<T, double>) {
    return re.value();
  } else {
    return T{re.value(), im.value()};
  }
}

template <typename T, typename F>
T refine(const F& f, double lo, double hi, const QuadratureOptions& opts,
         QuadratureResult* info) {
  if (!(hi >= lo)) {
    throw std::invalid_argument("integrate: upper limit below lower limit");
  }
  if (hi == lo) return T{};
  T prev = composite<T>(f, lo, hi, 1);
  double achieved = HUGE_VAL;
  int panels = 1;
  for (int k = 1; k <= opts.max_refinements; ++k) {
    panels *= 2;
    const T next = composite<T>(f, lo, hi, panels);
    const double diff = std::abs(next - prev);
    const double scale = std::max(std::abs(next), 1e-300);
    achieved = diff / scale;
    prev = next;
    if (achieved <= opts.rel_tol) {
      if (info) {
        info->achieved_rel = achieved;
        info->refinements = k;
      }
      return next;
    }
  }
  throw NumericalError("quadrature did not converge: achieved relative tolerance " +
                       std::to_string(achieved) + " > requested " +
                       std::to_string(opts.rel_tol));
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureOptions& opts) {
  QuadratureResult out;
  out.value = refine<double>(f, lo, hi, opts, &out);
  return out;
}

Complex integrate_complex(const std::function<Complex(double)>& f, double lo,
                          double hi, const QuadratureOptions& opts) {
  return refine<Complex>(f, lo, hi, opts, nullptr);
}

}  // namespace lll
