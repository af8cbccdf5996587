#pragma once

#include <vector>

#include "lll/constants.hpp"
#include "lll/limit.hpp"
#include "lll/types.hpp"

namespace lll {

/// Dyadic shell model state: condensate amplitude plus one complex amplitude
/// g_j per shell [2^j, 2^j(1+epsilon)], j in [j_min, j_max].
///
/// The shell system is the single-ray limit system on the grid s_j = 2^j with
/// weights w_j = epsilon 2^j and symplectic weights lambda epsilon 2^j; at
/// epsilon = ln 2 those coincide with the single-ray quadrature weights.
struct ShellState {
  ModelConstants constants;
  int j_min;
  int j_max;
  double epsilon;
  Complex a{};
  std::vector<Complex> gj;  // indexed j_min..j_max

  ShellState(ModelConstants constants_, int j_min_, int j_max_,
             double epsilon_, Complex a_, std::vector<Complex> gj_);

  int shells() const { return j_max - j_min + 1; }
};

/// The weight-overridden single-ray grid view of a shell state.
LimitState as_limit_state(const ShellState& state);

/// |a|^4 + 4 eps sum_j 2^j |a g_j 2^(-lambda 2^(j-1)) + K (2^j/lambda)^(1/4) g_{j-1}^2|^2,
/// evaluated from the closed shell formula (g at j_min - 1 reads as 0).
/// Identical to discrete_hamiltonian of as_limit_state up to rounding.
double shell_hamiltonian(const ShellState& state);

struct ShellDerivative {
  Complex a_dot{};
  std::vector<Complex> g_dot;
};

/// One RHS kernel serves both models: this delegates to limit_rhs on the
/// weight-overridden grid.  dg_j/dt is independent of epsilon (epsilon
/// cancels between the Hamiltonian and the symplectic weight); only da/dt
/// carries it.
ShellDerivative shell_rhs(const ShellState& state,
                          LimitRHSMode mode = LimitRHSMode::gradient_consistent);

/// M = |a|^2 + lambda eps sum 2^j |g_j|^2, E = eps sum 2^(2j) |g_j|^2, etc.
LimitInvariants shell_invariants(const ShellState& state, double alpha);

}  // namespace lll
