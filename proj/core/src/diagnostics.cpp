#include "lll/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lll {

namespace {

DriftEntry drift_of(const Trajectory& traj, double Observables::* field) {
  const double v0 = traj.observables.front().*field;
  DriftEntry entry;
  for (const Observables& row : traj.observables) {
    entry.max_abs = std::max(entry.max_abs, std::abs(row.*field - v0));
  }
  entry.max_rel = entry.max_abs / std::max(std::abs(v0), 1e-300);
  return entry;
}

StateVector transformed(const HamiltonianSystem& system,
                        std::span<const Complex> z, double parameter,
                        SymmetryKind symmetry) {
  StateVector out(z.begin(), z.end());
  switch (symmetry) {
    case SymmetryKind::rotation: {
      const Complex phase = std::polar(1.0, parameter);
      for (Complex& v : out) v *= phase;
      break;
    }
    case SymmetryKind::modulation:
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= std::polar(1.0, parameter * system.coordinate_frequency(i));
      }
      break;
    case SymmetryKind::scaling:
      for (Complex& v : out) v *= parameter;
      break;
  }
  return out;
}

}  // namespace

DriftReport drift_report(const Trajectory& traj) {
  if (traj.observables.size() < 2) {
    throw std::invalid_argument("drift_report: need at least two snapshots");
  }
  DriftReport report;
  report.mass = drift_of(traj, &Observables::mass);
  report.energy = drift_of(traj, &Observables::energy);
  report.hamiltonian = drift_of(traj, &Observables::hamiltonian);
  report.xalpha = drift_of(traj, &Observables::xalpha);
  return report;
}

double spectral_front(std::span<const double> frequency,
                      std::span<const double> mass, double p) {
  if (frequency.size() != mass.size()) {
    throw std::invalid_argument("spectral_front: frequency/mass size mismatch");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("spectral_front: p must lie in (0,1)");
  }
  std::vector<std::size_t> order(frequency.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return frequency[a] < frequency[b]; });
  KahanSum total;
  for (double m : mass) total.add(m);
  if (!(total.value() > 0.0)) {
    throw std::invalid_argument("spectral_front: total mass is zero");
  }
  const double threshold = p * total.value();
  KahanSum cumulative;
  for (std::size_t idx : order) {
    cumulative.add(mass[idx]);
    if (cumulative.value() >= threshold) return frequency[idx];
  }
  return frequency[order.back()];  // guards against rounding in the last bin
}

double spectral_front(const LimitState& state, double p) {
  std::vector<double> s(state.g.size()), mass(state.g.size());
  for (std::size_t idx = 0; idx < state.g.size(); ++idx) {
    s[idx] = state.grid.frequency(idx);
    mass[idx] =
        state.constants.lambda() * state.grid.weight(idx) * std::norm(state.g[idx]);
  }
  return spectral_front(s, mass, p);
}

double spectral_front(const ShellState& state, double p) {
  return spectral_front(as_limit_state(state), p);
}

double symmetry_orbit_check(const HamiltonianSystem& system,
                            std::span<const Complex> z, double parameter,
                            SymmetryKind symmetry, double t, double dt,
                            const SymmetryCheckOptions& opts) {
  EvolveOptions forward;
  forward.scheme = opts.scheme;
  forward.midpoint_tol = opts.midpoint_tol;
  forward.dt = dt;
  forward.t_end = t;
  forward.observe_every = 1 << 20;  // endpoints only

  // Path A: transform first, then evolve to time t.
  EvolveOptions path_a = forward;
  const StateVector za0 = transformed(system, z, parameter, symmetry);
  const StateVector za = evolve(system, za0, path_a).final_state;

  // Path B: evolve, then transform.  Scaling maps time as t -> mu^2 t, run
  // with the matching step so both paths take the same number of steps.
  EvolveOptions path_b = forward;
  if (symmetry == SymmetryKind::scaling) {
    path_b.t_end = parameter * parameter * t;
    path_b.dt = parameter * parameter * dt;
  }
  const StateVector zb_raw =
      evolve(system, StateVector(z.begin(), z.end()), path_b).final_state;
  const StateVector zb = transformed(system, zb_raw, parameter, symmetry);

  double deviation = 0.0;
  for (std::size_t i = 0; i < za.size(); ++i) {
    deviation = std::max(deviation, std::abs(za[i] - zb[i]));
  }
  return deviation;
}

ExistenceProbeResult existence_time_probe(const HamiltonianSystem& system,
                                          std::span<const Complex> z,
                                          double alpha, double blowup_factor,
                                          const ExistenceProbeOptions& opts) {
  if (!(alpha >= 0.25)) {
    throw std::invalid_argument("existence_time_probe: alpha must be >= 1/4");
  }
  if (!(blowup_factor > 0.0)) {
    throw std::invalid_argument("existence_time_probe: blowup_factor must be positive");
  }
  ObservableOptions obs;
  obs.alpha = alpha;
  const RhsFn rhs = [&system](std::span<const Complex> state, std::span<Complex> d) {
    system.rhs(state, d);
  };

  StateVector state(z.begin(), z.end());
  const double norm0 = system.observe(state, obs).xalpha;
  ExistenceProbeResult result;
  result.initial_norm = norm0;
  result.bound = opts.reference_c / std::max(norm0 * norm0, 1e-300);

  const auto steps = static_cast<long long>(std::llround(opts.t_max / opts.dt));
  for (long long k = 1; k <= steps; ++k) {
    state = opts.scheme == Scheme::rk4
                ? rk4_step(rhs, state, opts.dt)
                : implicit_midpoint_step(rhs, state, opts.dt);
    if (system.observe(state, obs).xalpha > blowup_factor * norm0) {
      if (k == 1) {
        throw NumericalError("existence_time_probe: immediate blow-up at the first step");
      }
      result.T_observed = k * opts.dt;
      return result;
    }
  }
  result.T_observed = steps * opts.dt;
  result.reached_t_max = true;
  return result;
}

}  // namespace lll
