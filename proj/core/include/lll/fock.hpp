#pragma once

#include <span>
#include <vector>

#include "lll/types.hpp"

namespace lll {

/// Truncated state in the Fock basis: amplitudes c_0..c_N.
struct FockState {
  std::vector<Complex> c;

  FockState() = default;
  explicit FockState(std::vector<Complex> amplitudes);
  static FockState zero(int truncation);

  int truncation() const { return static_cast<int>(c.size()) - 1; }
};

/// Precomputed ln(n!) for n = 0..2N.  Everything factorial-valued in this
/// module goes through this table in log space; raw factorials overflow
/// doubles already at n = 171 while the combined exponents stay O(N).
class WeightTable {
 public:
  explicit WeightTable(int max_index);

  int max_index() const { return max_index_; }
  double log_factorial(int n) const { return log_factorials_[n]; }

  /// (k+l)! / (2^(k+l) sqrt(k! l! m! n!)).  Requires k+l = m+n (the momentum
  /// constraint is structural) and all indices <= 2N.
  double interaction_weight(int k, int l, int m, int n) const;

  /// sqrt(binomial(S,k) / 2^S), the symmetric square-root factor with
  /// interaction_weight(k,l,m,n) = half_weight(S,k) * half_weight(S,m).
  /// Always in (0, 1], so renormalized per-S sums never under/overflow.
  double half_weight(int S, int k) const;

 private:
  int max_index_;
  std::vector<double> log_factorials_;
};

/// The quartic form H(e,f,g,h) = sum_{k+l=m+n} w(k,l,m,n) e_k f_l
/// conj(g_m) conj(h_n), evaluated in O(N^2) by factorizing over S = k+l.
/// H(c,c,c,c) is real up to rounding and is the Hamiltonian of the flow.
Complex multilinear_H(const FockState& e, const FockState& f,
                      const FockState& g, const FockState& h,
                      const WeightTable& table);

/// Time derivative dc_n/dt = -2i sum_{k+l=m+n} w(k,l,m,n) c_k c_l conj(c_m).
/// Plain triple loop, O(N^3); the reference oracle for lll_rhs_fast.
FockState lll_rhs_direct(const FockState& c, const WeightTable& table);

/// Same value as lll_rhs_direct in O(N^2) via
///   dc_n/dt = -2i sum_S D_S half_weight(S, S-n) conj(c_{S-n}),
///   D_S     = sum_{k+l=S} half_weight(S,k) c_k c_l,
/// i.e. the per-S renormalized form of (S!/2^S) d_S conj(a_{S-n}) with
/// a_m = c_m/sqrt(m!); every stored factor is O(1).  Throws NumericalError
/// naming the offending S if a block still overflows.
FockState lll_rhs_fast(const FockState& c, const WeightTable& table);

/// Fock coefficients of a phi_0 + v_lambda where v_lambda places
/// g_samples[j] = g(j/lambda) at index j with amplitude g_samples[j]/sqrt(lambda).
/// Samples beyond N are dropped; the caller is responsible for choosing
/// N >= lambda * k_max.  Throws if g_samples[0] != 0.
FockState ansatz_coefficients(Complex a, std::span<const Complex> g_samples,
                              int lambda, int N);

struct FockInvariants {
  double mass;              // sum |c_n|^2
  double angular_momentum;  // sum n |c_n|^2
  double hamiltonian;       // Re H(c,c,c,c)
};

FockInvariants fock_invariants(const FockState& c, const WeightTable& table);

}  // namespace lll
