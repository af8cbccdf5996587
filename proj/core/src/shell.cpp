#include "lll/shell.hpp"

#include <cmath>
#include <stdexcept>

namespace lll {

ShellState::ShellState(ModelConstants constants_, int j_min_, int j_max_,
                       double epsilon_, Complex a_, std::vector<Complex> gj_)
    : constants(constants_),
      j_min(j_min_),
      j_max(j_max_),
      epsilon(epsilon_),
      a(a_),
      gj(std::move(gj_)) {
  if (j_min > j_max) {
    throw std::invalid_argument("ShellState: j_min > j_max");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("ShellState: epsilon must be positive");
  }
  if (gj.size() != static_cast<std::size_t>(shells())) {
    throw std::invalid_argument("ShellState: one amplitude per shell required");
  }
}

LimitState as_limit_state(const ShellState& state) {
  return LimitState(DyadicGrid::shell(state.j_min, state.j_max, state.epsilon),
                    state.constants, state.a, state.gj);
}

double shell_hamiltonian(const ShellState& state) {
  const double lambda = state.constants.lambda();
  const double K = state.constants.K();
  KahanSum sum;
  for (int j = state.j_min; j <= state.j_max; ++j) {
    const std::size_t i = j - state.j_min;
    const double sj = std::exp2(static_cast<double>(j));
    Complex X = state.a * state.gj[i] * std::exp2(-lambda * std::exp2(j - 1.0));
    if (j > state.j_min) {
      X += K * std::pow(sj / lambda, 0.25) * state.gj[i - 1] * state.gj[i - 1];
    }
    sum.add(state.epsilon * sj * std::norm(X));
  }
  const double a2 = std::norm(state.a);
  return a2 * a2 + 4.0 * sum.value();
}

ShellDerivative shell_rhs(const ShellState& state, LimitRHSMode mode) {
  const LimitDerivative d = limit_rhs(as_limit_state(state), mode);
  return ShellDerivative{d.a_dot, d.g_dot};
}

LimitInvariants shell_invariants(const ShellState& state, double alpha) {
  return limit_invariants(as_limit_state(state), alpha);
}

}  // namespace lll
