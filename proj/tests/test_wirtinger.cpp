#include <doctest.h>

#include <cmath>

#include "lll/shell.hpp"
#include "lll/system.hpp"
#include "lll/wirtinger.hpp"
#include "test_support.hpp"

using namespace lll;
using lll::testing::rel_err;

TEST_SUITE("wirtinger") {

TEST_CASE("gradient of |z|^2 is z") {
  const StateVector z{Complex(3.0, 0.0)};
  const auto grad = wirtinger_gradient(
      [](std::span<const Complex> v) { return std::norm(v[0]); }, z, 1e-6);
  CHECK(rel_err(grad[0], Complex(3.0, 0.0)) < 1e-9);
}

TEST_CASE("gradient of |z|^4 is 2|z|^2 z") {
  const StateVector z{Complex(1.0, 0.0)};
  const auto grad = wirtinger_gradient(
      [](std::span<const Complex> v) {
        const double p = std::norm(v[0]);
        return p * p;
      },
      z, 1e-5);
  CHECK(rel_err(grad[0], Complex(2.0, 0.0)) < 1e-8);

  const StateVector w{Complex(0.7, -0.4)};
  const auto grad2 = wirtinger_gradient(
      [](std::span<const Complex> v) {
        const double p = std::norm(v[0]);
        return p * p;
      },
      w, 1e-5);
  CHECK(rel_err(grad2[0], 2.0 * std::norm(w[0]) * w[0]) < 1e-8);
}

TEST_CASE("second-order convergence on a polynomial hamiltonian") {
  // h = |z0|^4 + Re(z0^2 conj(z1)): gradient known in closed form.
  const auto h = [](std::span<const Complex> v) {
    const double p = std::norm(v[0]);
    return p * p + (v[0] * v[0] * std::conj(v[1])).real();
  };
  const StateVector z{Complex(0.9, 0.3), Complex(-0.2, 0.6)};
  const Complex g0 = 2.0 * std::norm(z[0]) * z[0] + std::conj(z[0] * z[0]) * z[1];
  // d/dconj(z1) of Re(z0^2 conj(z1)) = z0^2 / 2
  const Complex g1 = 0.5 * z[0] * z[0];

  double err_coarse = 0.0, err_fine = 0.0;
  {
    const auto grad = wirtinger_gradient(h, z, 2e-2);
    err_coarse = std::abs(grad[0] - g0) + std::abs(grad[1] - g1);
  }
  {
    const auto grad = wirtinger_gradient(h, z, 1e-2);
    err_fine = std::abs(grad[0] - g0) + std::abs(grad[1] - g1);
  }
  CHECK(err_coarse / err_fine > 3.0);
  CHECK(err_coarse / err_fine < 5.0);
}

TEST_CASE("non-finite hamiltonian reports overflow") {
  const StateVector z{Complex(1.0, 0.0)};
  CHECK_THROWS_AS(
      wirtinger_gradient(
          [](std::span<const Complex>) { return std::nan(""); }, z, 1e-6),
      NumericalError);
  try {
    wirtinger_gradient([](std::span<const Complex>) { return HUGE_VAL; }, z, 1e-6);
    CHECK(false);
  } catch (const NumericalError& err) {
    CHECK(std::string(err.what()).find("hamiltonian overflow") != std::string::npos);
  }
}

TEST_CASE("step must be positive") {
  const StateVector z{Complex(1.0, 0.0)};
  CHECK_THROWS_AS(
      wirtinger_gradient([](std::span<const Complex>) { return 0.0; }, z, 0.0),
      std::invalid_argument);
}

TEST_CASE("matches the shell RHS through the symplectic weights") {
  // i w_i dz_i/dt = dh/d(conj z_i) with weights (1, lambda eps 2^j).
  ShellSystem system(ModelConstants(2.0), 0, 5, 0.4);
  lll::testing::RandomState random(91);
  StateVector z = random.vector(system.dimension(), 0.6);

  const auto grad = wirtinger_gradient(
      [&system](std::span<const Complex> v) { return system.hamiltonian(v); }, z,
      1e-6);
  StateVector rhs(system.dimension());
  system.rhs(z, rhs);

  double scale = 0.0;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    scale = std::max(scale, std::abs(grad[i]));
  }
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    const Complex via_weights =
        Complex(0.0, 1.0) * rhs[i] * system.symplectic_weight(i);
    CHECK(std::abs(via_weights - grad[i]) < 1e-6 * scale);
  }
}

}  // TEST_SUITE
