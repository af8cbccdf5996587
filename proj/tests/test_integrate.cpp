#include <doctest.h>

#include <cmath>
#include <string>

#include "lll/integrate.hpp"
#include "lll/system.hpp"
#include "test_support.hpp"

using namespace lll;
using lll::testing::rel_err;

namespace {

Complex condensate_solution(Complex a0, double t) {
  return a0 * std::polar(1.0, -2.0 * std::norm(a0) * t);
}

/// Minimal non-Hamiltonian test system y' = y^2 with finite-time blow-up.
class BlowupSystem final : public HamiltonianSystem {
 public:
  std::size_t dimension() const override { return 1; }
  void rhs(std::span<const Complex> z, std::span<Complex> d) const override {
    d[0] = z[0] * z[0];
  }
  double hamiltonian(std::span<const Complex>) const override { return 0.0; }
  double symplectic_weight(std::size_t) const override { return 1.0; }
  double coordinate_frequency(std::size_t) const override { return 0.0; }
  Observables observe(std::span<const Complex> z,
                      const ObservableOptions&) const override {
    Observables o;
    o.mass = std::norm(z[0]);
    return o;
  }
  std::string describe() const override { return "y' = y^2 test system\n"; }
};

}  // namespace

TEST_SUITE("integrate") {

TEST_CASE("rk4 reproduces the condensate closed form") {
  ShellSystem system(ModelConstants(2.0), 0, 3, 0.5);
  StateVector z(system.dimension(), Complex{});
  z[0] = Complex(1.0, 0.0);
  const RhsFn rhs = [&](std::span<const Complex> v, std::span<Complex> d) {
    system.rhs(v, d);
  };
  for (int step = 0; step < 1000; ++step) {
    z = rk4_step(rhs, z, 1e-3);
  }
  CHECK(std::abs(z[0] - condensate_solution(Complex(1.0, 0.0), 1.0)) < 1e-10);
}

TEST_CASE("rk4 is fourth order on a linear problem") {
  const RhsFn decay = [](std::span<const Complex> z, std::span<Complex> d) {
    d[0] = -z[0];
  };
  const auto error_at = [&](double dt) {
    StateVector z{Complex(1.0, 0.0)};
    const int steps = static_cast<int>(std::llround(1.0 / dt));
    for (int k = 0; k < steps; ++k) z = rk4_step(decay, z, dt);
    return std::abs(z[0] - std::exp(-1.0));
  };
  const double ratio = error_at(0.1) / error_at(0.05);
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("zero state stays zero") {
  ShellSystem system(ModelConstants(2.0), 0, 3, 0.5);
  const RhsFn rhs = [&](std::span<const Complex> v, std::span<Complex> d) {
    system.rhs(v, d);
  };
  StateVector z(system.dimension(), Complex{});
  z = rk4_step(rhs, z, 0.1);
  for (const Complex& v : z) CHECK(v == Complex(0.0, 0.0));
  z = implicit_midpoint_step(rhs, z, 0.1);
  for (const Complex& v : z) CHECK(v == Complex(0.0, 0.0));
}

TEST_CASE("implicit midpoint conserves |a|^2 regardless of dt") {
  ShellSystem system(ModelConstants(2.0), 0, 3, 0.5);
  const RhsFn rhs = [&](std::span<const Complex> v, std::span<Complex> d) {
    system.rhs(v, d);
  };
  StateVector z(system.dimension(), Complex{});
  z[0] = Complex(1.0, 0.0);
  for (int step = 0; step < 8; ++step) {
    z = implicit_midpoint_step(rhs, z, 0.25, 1e-14, 100);
  }
  CHECK(std::abs(std::norm(z[0]) - 1.0) < 1e-12);
}

TEST_CASE("implicit midpoint is second order") {
  ShellSystem system(ModelConstants(2.0), 0, 3, 0.5);
  const RhsFn rhs = [&](std::span<const Complex> v, std::span<Complex> d) {
    system.rhs(v, d);
  };
  const Complex a0(1.0, 0.0);
  const auto error_at = [&](double dt) {
    StateVector z(system.dimension(), Complex{});
    z[0] = a0;
    const int steps = static_cast<int>(std::llround(1.0 / dt));
    for (int k = 0; k < steps; ++k) z = implicit_midpoint_step(rhs, z, dt);
    return std::abs(z[0] - condensate_solution(a0, 1.0));
  };
  const double ratio = error_at(0.02) / error_at(0.01);
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}

TEST_CASE("implicit midpoint reports non-convergence") {
  ShellSystem system(ModelConstants(1.0), 0, 3, 0.5);
  const RhsFn rhs = [&](std::span<const Complex> v, std::span<Complex> d) {
    system.rhs(v, d);
  };
  StateVector z(system.dimension(), Complex(2.0, 0.0));
  try {
    implicit_midpoint_step(rhs, z, 10.0, 1e-13, 5);
    CHECK(false);
  } catch (const NumericalError& err) {
    CHECK(std::string(err.what()).find("smaller dt") != std::string::npos);
  }
}

TEST_CASE("evolve validates its inputs") {
  ShellSystem system(ModelConstants(2.0), 0, 3, 0.5);
  StateVector z(system.dimension(), Complex{});
  EvolveOptions opts;
  opts.t_end = 0.0;
  CHECK_THROWS_AS(evolve(system, z, opts), std::invalid_argument);
  opts.t_end = -1.0;
  CHECK_THROWS_AS(evolve(system, z, opts), std::invalid_argument);
  opts.t_end = 1.0;
  opts.dt = -0.1;
  CHECK_THROWS_AS(evolve(system, z, opts), std::invalid_argument);
}

TEST_CASE("evolve tracks the condensate phase") {
  ShellSystem system(ModelConstants(2.0), 0, 3, 0.5);
  StateVector z(system.dimension(), Complex{});
  const Complex a0(0.8, 0.3);
  z[0] = a0;
  EvolveOptions opts;
  opts.scheme = Scheme::rk4;
  opts.dt = 1e-3;
  opts.t_end = 2.0;
  opts.observe_every = 100;
  const Trajectory traj = evolve(system, z, opts);
  for (std::size_t i = 0; i < traj.rows(); ++i) {
    CHECK(std::abs(traj.states[i][0] -
                   condensate_solution(a0, traj.times[i])) < 1e-9);
  }
}

TEST_CASE("observation row count") {
  ShellSystem system(ModelConstants(2.0), 0, 2, 0.5);
  StateVector z(system.dimension(), Complex{});
  z[0] = Complex(0.5, 0.0);
  EvolveOptions opts;
  opts.dt = 1e-3;
  opts.observe_every = 10;

  opts.t_end = 1.0;  // 1000 steps -> rows at 0,10,...,1000
  CHECK(evolve(system, z, opts).rows() == 101);

  opts.t_end = 1.005;  // 1005 steps -> floor(100.5) + 1
  CHECK(evolve(system, z, opts).rows() == 101);
}

TEST_CASE("blow-up surfaces the last finite snapshot") {
  BlowupSystem system;
  StateVector z{Complex(1.0, 0.0)};
  EvolveOptions opts;
  opts.scheme = Scheme::rk4;
  opts.dt = 0.01;
  opts.t_end = 2.0;
  opts.observe_every = 1;
  const Trajectory traj = evolve(system, z, opts);
  CHECK(traj.blew_up);
  CHECK(traj.failure_time > 0.5);  // y = 1/(1-t) explodes near t = 1
  CHECK(traj.failure_time < 1.5);
  CHECK(traj.rows() >= 2);
  CHECK(traj.failure_message.find("blow-up detected at t=") != std::string::npos);
  for (const auto& state : traj.states) {
    CHECK(is_finite(state[0]));
  }
}

TEST_CASE("flow consistency across the three systems") {
  lll::testing::RandomState random(2024);

  SUBCASE("fock") {
    FockSystem system(16);
    const StateVector z = random.vector(system.dimension(), 0.6);
    CHECK(flow_consistency_check(system, z, 1e-5).max_rel_error < 1e-6);
  }
  SUBCASE("limit gradient mode") {
    LimitSystem system(build_grid(4, -2, 4), ModelConstants(2.0));
    const StateVector z = random.vector(system.dimension(), 0.5);
    CHECK(flow_consistency_check(system, z, 1e-5).max_rel_error < 1e-6);
  }
  SUBCASE("shell gradient mode") {
    ShellSystem system(ModelConstants(2.0), 0, 7, 0.5);
    const StateVector z = random.vector(system.dimension(), 0.5);
    CHECK(flow_consistency_check(system, z, 1e-5).max_rel_error < 1e-6);
  }
}

TEST_CASE("paper mode mismatch isolates to the exchange coefficient") {
  ShellSystem gradient(ModelConstants(2.0), 0, 7, 0.5);
  ShellSystem literal(ModelConstants(2.0), 0, 7, 0.5, LimitRHSMode::paper_literal);
  StateVector z(gradient.dimension(), Complex{});
  z[0] = Complex(0.6, 0.0);
  z[1] = std::polar(0.5, 0.3);  // j = 0
  z[2] = std::polar(0.4, 1.2);  // j = 1

  CHECK(flow_consistency_check(gradient, z, 1e-5).max_rel_error < 1e-6);

  const FlowConsistencyReport report = flow_consistency_check(literal, z, 1e-5);
  // The only mismatching coordinate is g_0, whose 2s-exchange term carries 8K
  // instead of 16K: the defect equals one unit of the literal term, i.e. the
  // coefficient ratio is 2.
  CHECK(report.worst_index == 1);
  const double lambda = 2.0;
  const double K = ModelConstants::interaction_constant();
  const double s = 1.0;  // j = 0
  const Complex unit = Complex(0.0, -1.0) / lambda * 8.0 * K *
                       std::pow(2.0 * s / lambda, 0.25) * z[0] *
                       std::exp2(-lambda * s) * std::conj(z[1]) * z[2];
  CHECK(report.abs_error[1] == doctest::Approx(std::abs(unit)).epsilon(1e-4));
  for (std::size_t i = 0; i < report.abs_error.size(); ++i) {
    if (i != 1) CHECK(report.abs_error[i] < 1e-6 * report.scale);
  }
}

}  // TEST_SUITE
