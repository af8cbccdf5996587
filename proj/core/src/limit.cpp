#include "lll/limit.hpp"

#include <cmath>
#include <stdexcept>

namespace lll {

LimitState::LimitState(DyadicGrid grid_, ModelConstants constants_, Complex a_,
                       std::vector<Complex> g_)
    : grid(std::move(grid_)), constants(constants_), a(a_), g(std::move(g_)) {
  if (g.size() != grid.size()) {
    throw std::invalid_argument("LimitState: g must have one value per grid point");
  }
  if (!is_finite(a)) {
    throw std::invalid_argument("LimitState: amplitudes must be finite");
  }
  for (const Complex& z : g) {
    if (!is_finite(z)) {
      throw std::invalid_argument("LimitState: amplitudes must be finite");
    }
  }
}

std::vector<Complex> x_field(const LimitState& state) {
  const double lambda = state.constants.lambda();
  const double K = state.constants.K();
  std::vector<Complex> X(state.g.size());
  for (std::size_t idx = 0; idx < state.g.size(); ++idx) {
    const double s = state.grid.frequency(idx);
    Complex x = state.a * state.g[idx] * std::exp2(-0.5 * lambda * s);
    if (state.grid.has_lower_neighbor(idx)) {
      const Complex half = state.g[idx - 1];
      x += K * std::pow(s / lambda, 0.25) * half * half;
    }
    X[idx] = x;
  }
  return X;
}

double discrete_hamiltonian(const LimitState& state) {
  const auto X = x_field(state);
  KahanSum sum;
  for (std::size_t idx = 0; idx < X.size(); ++idx) {
    sum.add(state.grid.weight(idx) * std::norm(X[idx]));
  }
  const double a2 = std::norm(state.a);
  return a2 * a2 + 4.0 * sum.value();
}

LimitDerivative limit_rhs(const LimitState& state, LimitRHSMode mode) {
  const DyadicGrid& grid = state.grid;
  const double lambda = state.constants.lambda();
  const double K = state.constants.K();
  const auto X = x_field(state);
  const Complex minus_i(0.0, -1.0);

  // i da/dt = 2|a|^2 a + 4 sum w conj(g) beta X  (the two integrals of the
  // condensate equation in one pass; identical in both modes).
  KahanComplexSum coupling;
  for (std::size_t idx = 0; idx < X.size(); ++idx) {
    const double beta =
        std::exp2(-0.5 * lambda * grid.frequency(idx));
    coupling.add(grid.weight(idx) * std::conj(state.g[idx]) * beta * X[idx]);
  }
  LimitDerivative out;
  out.a_dot = minus_i * (2.0 * std::norm(state.a) * state.a +
                         4.0 * coupling.value());

  out.g_dot.resize(state.g.size());
  for (std::size_t idx = 0; idx < state.g.size(); ++idx) {
    const double s = grid.frequency(idx);
    const double beta = std::exp2(-0.5 * lambda * s);
    Complex i_lambda_gdot = 4.0 * std::conj(state.a) * beta * X[idx];
    if (grid.has_upper_neighbor(idx)) {
      const double gamma_up = std::pow(2.0 * s / lambda, 0.25);
      const double beta_up = beta * beta;  // 2^(-lambda s) = beta(2s)
      if (mode == LimitRHSMode::gradient_consistent) {
        // d h / d conj(g_j) picks up |X_{j+1}|^2 through g_j^2; the weight
        // ratio w_{j+1}/w_j (= 2 on dyadic grids) rides along.
        const double rho = grid.weight(idx + 1) / grid.weight(idx);
        i_lambda_gdot += 8.0 * K * rho * gamma_up * std::conj(state.g[idx]) *
                         X[idx + 1];
      } else {
        // Verbatim transcription: 8K on the s <-> 2s exchange term, 16K^2 on
        // the quartic self term.
        i_lambda_gdot += 8.0 * K * gamma_up * state.a * beta_up *
                         std::conj(state.g[idx]) * state.g[idx + 1];
        i_lambda_gdot += 16.0 * K * K * gamma_up * gamma_up *
                         std::norm(state.g[idx]) * state.g[idx];
      }
    }
    out.g_dot[idx] = minus_i * i_lambda_gdot / lambda;
  }
  return out;
}

LimitInvariants limit_invariants(const LimitState& state, double alpha) {
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("limit_invariants: alpha must be >= 0");
  }
  const double lambda = state.constants.lambda();
  KahanSum mass_tail, energy;
  double sup = 0.0;
  for (std::size_t idx = 0; idx < state.g.size(); ++idx) {
    const double s = state.grid.frequency(idx);
    const double w = state.grid.weight(idx);
    const double p = std::norm(state.g[idx]);
    mass_tail.add(w * p);
    energy.add(w * s * p);
    const double bracket = std::pow(1.0 + s * s, 0.5 * alpha);
    sup = std::max(sup, bracket * std::abs(state.g[idx]));
  }
  LimitInvariants out;
  out.mass = std::norm(state.a) + lambda * mass_tail.value();
  out.energy = energy.value();
  out.xalpha = std::abs(state.a) + sup;
  out.hamiltonian = discrete_hamiltonian(state);
  return out;
}

}  // namespace lll
