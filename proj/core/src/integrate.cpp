#include "lll/integrate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lll/wirtinger.hpp"

namespace lll {

namespace {

bool all_finite(std::span<const Complex> z) {
  for (const Complex& v : z) {
    if (!is_finite(v)) return false;
  }
  return true;
}

}  // namespace

StateVector rk4_step(const RhsFn& rhs, std::span<const Complex> z, double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("rk4_step: dt must be positive");
  }
  const std::size_t n = z.size();
  StateVector k1(n), k2(n), k3(n), k4(n), work(n), out(n);

  rhs(z, k1);
  for (std::size_t i = 0; i < n; ++i) work[i] = z[i] + 0.5 * dt * k1[i];
  rhs(work, k2);
  for (std::size_t i = 0; i < n; ++i) work[i] = z[i] + 0.5 * dt * k2[i];
  rhs(work, k3);
  for (std::size_t i = 0; i < n; ++i) work[i] = z[i] + dt * k3[i];
  rhs(work, k4);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = z[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  if (!all_finite(out)) {
    throw NumericalError("blow-up detected: non-finite state after rk4 step");
  }
  return out;
}

StateVector implicit_midpoint_step(const RhsFn& rhs, std::span<const Complex> z,
                                   double dt, double tol, int max_iter) {
  if (!(dt > 0.0) || !(tol > 0.0)) {
    throw std::invalid_argument("implicit_midpoint_step: dt and tol must be positive");
  }
  const std::size_t n = z.size();
  StateVector f(n), mid(n), next(n);

  rhs(z, f);
  for (std::size_t i = 0; i < n; ++i) mid[i] = z[i] + 0.5 * dt * f[i];

  bool converged = false;
  for (int it = 0; it < max_iter; ++it) {
    rhs(mid, f);
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = z[i] + 0.5 * dt * f[i];
      delta = std::max(delta, std::abs(next[i] - mid[i]));
    }
    mid.swap(next);
    if (!all_finite(mid)) {
      throw NumericalError("blow-up detected: non-finite midpoint iterate");
    }
    if (delta < tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NumericalError(
        "implicit midpoint did not converge in " + std::to_string(max_iter) +
        " iterations; use a smaller dt");
  }
  // next = 2*mid - z enforces mid = (z + next)/2 exactly, which is what makes
  // quadratic invariants exact up to the iteration residual.
  StateVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 2.0 * mid[i] - z[i];
  return out;
}

Trajectory evolve(const HamiltonianSystem& system, StateVector z0,
                  const EvolveOptions& opts) {
  if (!(opts.t_end > 0.0)) {
    throw std::invalid_argument("evolve: t_end must be positive");
  }
  if (!(opts.dt > 0.0)) {
    throw std::invalid_argument("evolve: dt must be positive");
  }
  if (opts.observe_every < 1) {
    throw std::invalid_argument("evolve: observe_every must be >= 1");
  }
  if (z0.size() != system.dimension()) {
    throw std::invalid_argument("evolve: state has wrong dimension");
  }
  const auto steps = static_cast<long long>(std::llround(opts.t_end / opts.dt));
  if (steps < 1) {
    throw std::invalid_argument("evolve: t_end must cover at least one step");
  }
  const RhsFn rhs = [&system](std::span<const Complex> z, std::span<Complex> d) {
    system.rhs(z, d);
  };

  Trajectory traj;
  StateVector z = std::move(z0);
  for (long long k = 0;; ++k) {
    if (k % opts.observe_every == 0) {
      traj.times.push_back(k * opts.dt);
      traj.states.push_back(z);
      traj.observables.push_back(system.observe(z, opts.observables));
    }
    if (k == steps) break;
    try {
      z = opts.scheme == Scheme::rk4
              ? rk4_step(rhs, z, opts.dt)
              : implicit_midpoint_step(rhs, z, opts.dt, opts.midpoint_tol,
                                       opts.midpoint_max_iter);
    } catch (const NumericalError& err) {
      traj.blew_up = true;
      traj.failure_time = (k + 1) * opts.dt;
      traj.failure_message = "blow-up detected at t=" +
                             std::to_string(traj.failure_time) + ": " + err.what();
      break;
    }
  }
  traj.final_state = std::move(z);
  traj.final_time = traj.blew_up ? traj.failure_time : steps * opts.dt;
  return traj;
}

FlowConsistencyReport flow_consistency_check(const HamiltonianSystem& system,
                                             std::span<const Complex> z,
                                             double fd_step) {
  const std::size_t n = system.dimension();
  if (z.size() != n) {
    throw std::invalid_argument("flow_consistency_check: state has wrong dimension");
  }
  StateVector rhs_value(n);
  system.rhs(z, rhs_value);

  const auto grad = wirtinger_gradient(
      [&system](std::span<const Complex> state) { return system.hamiltonian(state); },
      z, fd_step);

  FlowConsistencyReport report;
  report.rhs = rhs_value;
  report.expected.resize(n);
  report.abs_error.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.expected[i] =
        Complex(0.0, -1.0) * grad[i] / system.symplectic_weight(i);
    report.scale = std::max(report.scale, std::abs(rhs_value[i]));
  }
  const double denom = std::max(report.scale, 1e-300);
  for (std::size_t i = 0; i < n; ++i) {
    report.abs_error[i] = std::abs(rhs_value[i] - report.expected[i]);
    if (report.abs_error[i] > report.abs_error[report.worst_index]) {
      report.worst_index = i;
    }
  }
  report.max_rel_error = report.abs_error[report.worst_index] / denom;
  return report;
}

}  // namespace lll
