#pragma once

#include <span>

#include "lll/integrate.hpp"
#include "lll/limit.hpp"
#include "lll/shell.hpp"
#include "lll/types.hpp"

namespace lll {

struct DriftEntry {
  double max_abs = 0.0;
  double max_rel = 0.0;
};

/// Drift of each observable against its t = 0 value over a trajectory.
struct DriftReport {
  DriftEntry mass, energy, hamiltonian, xalpha;
};

DriftReport drift_report(const Trajectory& traj);

/// Smallest frequency s* whose cumulative mass reaches fraction p of the
/// total; ties resolve to the smaller s.  Throws on zero total mass.
double spectral_front(std::span<const double> frequency,
                      std::span<const double> mass, double p);

/// Front of the tail mass measure lambda w |g|^2 over the grid.
double spectral_front(const LimitState& state, double p);
double spectral_front(const ShellState& state, double p);

enum class SymmetryKind {
  rotation,    // z -> exp(i theta) z
  modulation,  // z_i -> exp(i theta s_i) z_i, condensate fixed
  scaling,     // z -> mu z together with t -> t / mu^2
};

struct SymmetryCheckOptions {
  Scheme scheme = Scheme::rk4;
  double midpoint_tol = 1e-13;
};

/// Evolves the transformed initial state and transforms the evolved state;
/// returns the max coordinate-wise deviation.  For scaling, mu*z evolved to
/// time t is compared against z evolved to mu^2 t (same step count) and then
/// scaled.
double symmetry_orbit_check(const HamiltonianSystem& system,
                            std::span<const Complex> z, double parameter,
                            SymmetryKind symmetry, double t, double dt,
                            const SymmetryCheckOptions& opts = {});

struct ExistenceProbeOptions {
  double t_max = 10.0;
  double dt = 1e-3;
  double reference_c = 1.0;  // constant in the reference bound c / |state|_alpha^2
  Scheme scheme = Scheme::rk4;
};

struct ExistenceProbeResult {
  double T_observed = 0.0;
  double bound = 0.0;
  double initial_norm = 0.0;
  bool reached_t_max = false;
};

/// Integrates until the weighted sup norm |a| + sup <s>^alpha |g| exceeds
/// blowup_factor times its initial value, or t_max.  Reports the observed
/// time alongside the reference bound; no inequality is asserted.  Requires
/// alpha >= 1/4; throws if the factor is already exceeded after one step.
ExistenceProbeResult existence_time_probe(const HamiltonianSystem& system,
                                          std::span<const Complex> z,
                                          double alpha, double blowup_factor,
                                          const ExistenceProbeOptions& opts = {});

}  // namespace lll
