#include "lll/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lll {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_same_truncation(const FockState& x, const FockState& y) {
  if (x.truncation() != y.truncation()) {
    throw std::invalid_argument("Fock states have mismatched truncation N");
  }
}

}  // namespace

FockState::FockState(std::vector<Complex> amplitudes) : c(std::move(amplitudes)) {
  if (c.empty()) {
    throw std::invalid_argument("FockState: truncation N must be >= 0");
  }
  for (const Complex& z : c) {
    if (!is_finite(z)) {
      throw std::invalid_argument("FockState: amplitudes must be finite");
    }
  }
}

FockState FockState::zero(int truncation) {
  if (truncation < 0) {
    throw std::invalid_argument("FockState: truncation N must be >= 0");
  }
  FockState s;
  s.c.assign(static_cast<std::size_t>(truncation) + 1, Complex{});
  return s;
}

WeightTable::WeightTable(int max_index) : max_index_(max_index) {
  if (max_index < 0) {
    throw std::invalid_argument("WeightTable: max index must be >= 0");
  }
  log_factorials_.resize(2 * static_cast<std::size_t>(max_index) + 1);
  for (std::size_t n = 0; n < log_factorials_.size(); ++n) {
    log_factorials_[n] = std::lgamma(static_cast<double>(n) + 1.0);
  }
}

double WeightTable::interaction_weight(int k, int l, int m, int n) const {
  if (k + l != m + n) {
    throw std::invalid_argument("momentum mismatch: interaction weight requires k+l = m+n");
  }
  const int S = k + l;
  if (k < 0 || l < 0 || m < 0 || n < 0 || S > 2 * max_index_) {
    throw std::out_of_range("interaction_weight: index outside the weight table");
  }
  const double lf = log_factorials_[S] - S * kLn2 -
                    0.5 * (log_factorials_[k] + log_factorials_[l] +
                           log_factorials_[m] + log_factorials_[n]);
  return std::exp(lf);
}

double WeightTable::half_weight(int S, int k) const {
  return std::exp(0.5 * (log_factorials_[S] - log_factorials_[k] -
                         log_factorials_[S - k] - S * kLn2));
}

Complex multilinear_H(const FockState& e, const FockState& f,
                      const FockState& g, const FockState& h,
                      const WeightTable& table) {
  check_same_truncation(e, f);
  check_same_truncation(e, g);
  check_same_truncation(e, h);
  const int N = e.truncation();
  if (N > table.max_index()) {
    throw std::out_of_range("multilinear_H: weight table too small for state");
  }
  KahanComplexSum total;
  for (int S = 0; S <= 2 * N; ++S) {
    const int k_lo = std::max(0, S - N);
    const int k_hi = std::min(S, N);
    KahanComplexSum P, Q;
    for (int k = k_lo; k <= k_hi; ++k) {
      const double u = table.half_weight(S, k);
      P.add(u * e.c[k] * f.c[S - k]);
      Q.add(u * g.c[k] * h.c[S - k]);
    }
    total.add(P.value() * std::conj(Q.value()));
  }
  return total.value();
}

FockState lll_rhs_direct(const FockState& c, const WeightTable& table) {
  const int N = c.truncation();
  if (N > table.max_index()) {
    throw std::out_of_range("lll_rhs_direct: weight table too small for state");
  }
  FockState out = FockState::zero(N);
  for (int n = 0; n <= N; ++n) {
    KahanComplexSum sum;
    for (int k = 0; k <= N; ++k) {
      for (int l = 0; l <= N; ++l) {
        const int m = k + l - n;
        if (m < 0 || m > N) continue;
        const double w = table.interaction_weight(k, l, m, n);
        sum.add(w * c.c[k] * c.c[l] * std::conj(c.c[m]));
      }
    }
    out.c[n] = Complex(0.0, -2.0) * sum.value();
  }
  return out;
}

FockState lll_rhs_fast(const FockState& c, const WeightTable& table) {
  const int N = c.truncation();
  if (N > table.max_index()) {
    throw std::out_of_range("lll_rhs_fast: weight table too small for state");
  }
  // Renormalized convolution blocks D_S = sum_{k+l=S} half_weight(S,k) c_k c_l.
  // half_weight <= 1, so |D_S| <= (S+1) max|c|^2 and nothing drifts out of
  // range for sane states; a non-finite block names its S.
  std::vector<Complex> D(2 * static_cast<std::size_t>(N) + 1);
  for (int S = 0; S <= 2 * N; ++S) {
    const int k_lo = std::max(0, S - N);
    const int k_hi = std::min(S, N);
    KahanComplexSum block;
    for (int k = k_lo; k <= k_hi; ++k) {
      block.add(table.half_weight(S, k) * c.c[k] * c.c[S - k]);
    }
    D[S] = block.value();
    if (!is_finite(D[S])) {
      throw NumericalError("lll_rhs_fast: overflow in renormalized block S=" +
                           std::to_string(S));
    }
  }
  FockState out = FockState::zero(N);
  for (int n = 0; n <= N; ++n) {
    KahanComplexSum sum;
    for (int S = n; S <= n + N; ++S) {
      const int m = S - n;
      sum.add(D[S] * table.half_weight(S, m) * std::conj(c.c[m]));
    }
    out.c[n] = Complex(0.0, -2.0) * sum.value();
    if (!is_finite(out.c[n])) {
      for (int S = n; S <= n + N; ++S) {
        if (!is_finite(D[S] * table.half_weight(S, S - n) * std::conj(c.c[S - n]))) {
          throw NumericalError("lll_rhs_fast: overflow in renormalized block S=" +
                               std::to_string(S));
        }
      }
      throw NumericalError("lll_rhs_fast: overflow accumulating row n=" +
                           std::to_string(n));
    }
  }
  return out;
}

FockState ansatz_coefficients(Complex a, std::span<const Complex> g_samples,
                              int lambda, int N) {
  if (lambda < 1) {
    throw std::invalid_argument("ansatz_coefficients: lambda must be an integer >= 1");
  }
  if (!g_samples.empty() && g_samples[0] != Complex{}) {
    throw std::invalid_argument("ansatz_coefficients: profile must satisfy g(0) = 0");
  }
  FockState out = FockState::zero(N);
  out.c[0] = a;
  const double scale = 1.0 / std::sqrt(static_cast<double>(lambda));
  const int last = std::min<int>(static_cast<int>(g_samples.size()) - 1, N);
  for (int j = 1; j <= last; ++j) {
    out.c[j] += scale * g_samples[j];
  }
  return out;
}

FockInvariants fock_invariants(const FockState& c, const WeightTable& table) {
  KahanSum mass, momentum;
  for (int n = 0; n <= c.truncation(); ++n) {
    const double p = std::norm(c.c[n]);
    mass.add(p);
    momentum.add(n * p);
  }
  return FockInvariants{mass.value(), momentum.value(),
                        multilinear_H(c, c, c, c, table).real()};
}

}  // namespace lll
