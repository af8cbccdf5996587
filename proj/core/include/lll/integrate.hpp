#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lll/system.hpp"
#include "lll/types.hpp"

namespace lll {

using RhsFn = std::function<void(std::span<const Complex>, std::span<Complex>)>;

/// Classical explicit 4-stage Runge-Kutta step.  Throws NumericalError if the
/// result is non-finite (blow-up).
StateVector rk4_step(const RhsFn& rhs, std::span<const Complex> z, double dt);

/// Implicit midpoint step solved by fixed-point iteration on the midpoint
/// equation until successive iterates differ by less than tol.  Symmetric and
/// symplectic; conserves quadratic invariants to the iteration tolerance.
/// Throws NumericalError if the iteration does not converge within max_iter
/// (use a smaller dt) or the result is non-finite.
StateVector implicit_midpoint_step(const RhsFn& rhs, std::span<const Complex> z,
                                   double dt, double tol = 1e-13,
                                   int max_iter = 50);

enum class Scheme { rk4, implicit_midpoint };

struct EvolveOptions {
  Scheme scheme = Scheme::rk4;
  double dt = 1e-3;
  double t_end = 1.0;
  int observe_every = 1;
  double midpoint_tol = 1e-13;
  int midpoint_max_iter = 50;
  ObservableOptions observables{};
};

/// Time-stamped snapshots with one observable row per snapshot.  Observables
/// are always recomputed from the snapshot, never accumulated incrementally.
struct Trajectory {
  std::vector<double> times;           // strictly increasing
  std::vector<StateVector> states;     // one per observation
  std::vector<Observables> observables;
  StateVector final_state;
  double final_time = 0.0;
  bool blew_up = false;
  double failure_time = 0.0;
  std::string failure_message;

  std::size_t rows() const { return times.size(); }
};

/// Fixed-step march over [0, t_end] recording every observe_every steps
/// (step 0 included): floor(t_end/(dt*observe_every)) + 1 rows.  A blow-up
/// stops the march; the partial trajectory carries the last finite snapshot
/// and the failure time.
Trajectory evolve(const HamiltonianSystem& system, StateVector z0,
                  const EvolveOptions& opts);

struct FlowConsistencyReport {
  double max_rel_error = 0.0;   // max_i |rhs_i - expected_i| / max_i |rhs_i|
  std::size_t worst_index = 0;
  double scale = 0.0;           // max_i |rhs_i|
  std::vector<double> abs_error;
  std::vector<Complex> rhs;
  std::vector<Complex> expected;  // -i / w_i * (finite-difference gradient)_i
};

/// Checks rhs = -i w^(-1) dH/d(conj z) coordinate-wise against the
/// central-difference Wirtinger gradient of the system Hamiltonian.
FlowConsistencyReport flow_consistency_check(const HamiltonianSystem& system,
                                             std::span<const Complex> z,
                                             double fd_step = 1e-5);

}  // namespace lll
