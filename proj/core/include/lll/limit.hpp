#pragma once

#include <vector>

#include "lll/constants.hpp"
#include "lll/grid.hpp"
#include "lll/types.hpp"

namespace lll {

/// Right-hand side variant for the limit and shell systems.
///
/// gradient_consistent (default) derives dg/dt from the discrete Hamiltonian
/// through the symplectic weights lambda w_{r,j}; the s <-> 2s coupling then
/// carries the coefficient 16K.  paper_literal transcribes the displayed
/// system verbatim with 8K in that one term; it is not the gradient of the
/// Hamiltonian and measurably fails to conserve it.
enum class LimitRHSMode { gradient_consistent, paper_literal };

/// Condensate amplitude plus spectral profile on a dyadic-ray grid.
/// g vanishes by convention at all frequencies outside the grid.
struct LimitState {
  DyadicGrid grid;
  ModelConstants constants;
  Complex a{};
  std::vector<Complex> g;

  LimitState(DyadicGrid grid_, ModelConstants constants_, Complex a_,
             std::vector<Complex> g_);
};

/// X_{r,j} = a g_{r,j} 2^(-lambda s/2) + K (s/lambda)^(1/4) g_{r,j-1}^2,
/// the integrand amplitude of the Hamiltonian; g at j_min - 1 reads as 0.
std::vector<Complex> x_field(const LimitState& state);

/// |a|^4 + 4 sum_{r,j} w_{r,j} |X_{r,j}|^2.
double discrete_hamiltonian(const LimitState& state);

struct LimitDerivative {
  Complex a_dot{};
  std::vector<Complex> g_dot;
};

/// i da/dt = 2|a|^2 a + 4 sum w conj(g) 2^(-lambda s/2) X   (both modes)
/// i lambda dg/dt at s:
///   4 |a|^2 g 2^(-lambda s) + 4K (s/lambda)^(1/4) conj(a) 2^(-lambda s/2) g(s/2)^2
///   + c3 (2s/lambda)^(1/4) a 2^(-lambda s) conj(g) g(2s)
///   + 16 K^2 (2s/lambda)^(1/2) |g|^2 g
/// with c3 = 16K in gradient_consistent mode (= the exact Wirtinger gradient
/// of discrete_hamiltonian for these weights) and c3 = 8K in paper_literal
/// mode.  Off-grid neighbors are zero; at j_max the upper-coupling terms drop.
LimitDerivative limit_rhs(const LimitState& state,
                          LimitRHSMode mode = LimitRHSMode::gradient_consistent);

struct LimitInvariants {
  double mass;         // |a|^2 + lambda sum w |g|^2
  double energy;       // sum w s |g|^2
  double xalpha;       // |a| + max over grid of (1+s^2)^(alpha/2) |g(s)|
  double hamiltonian;  // discrete_hamiltonian
};

/// The grid sup in xalpha is a lower bound of the continuum sup.
LimitInvariants limit_invariants(const LimitState& state, double alpha);

}  // namespace lll
