#include <doctest.h>

#include <cmath>
#include <string>

#include "lll/diagnostics.hpp"
#include "lll/fock.hpp"
#include "lll/integrate.hpp"
#include "lll/system.hpp"
#include "lll/wirtinger.hpp"
#include "test_support.hpp"

using namespace lll;
using lll::testing::rel_err;

namespace {

// Brute-force oracles with raw factorials, valid for small indices only.
double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double weight_brute(int k, int l, int m, int n) {
  return factorial(k + l) /
         (std::pow(2.0, k + l) *
          std::sqrt(factorial(k) * factorial(l) * factorial(m) * factorial(n)));
}

Complex multilinear_brute(const FockState& e, const FockState& f,
                          const FockState& g, const FockState& h) {
  const int N = e.truncation();
  Complex total{};
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l)
      for (int m = 0; m <= N; ++m) {
        const int n = k + l - m;
        if (n < 0 || n > N) continue;
        total += weight_brute(k, l, m, n) * e.c[k] * f.c[l] *
                 std::conj(g.c[m]) * std::conj(h.c[n]);
      }
  return total;
}

FockState rhs_brute(const FockState& c) {
  const int N = c.truncation();
  FockState out = FockState::zero(N);
  for (int n = 0; n <= N; ++n) {
    Complex sum{};
    for (int k = 0; k <= N; ++k)
      for (int l = 0; l <= N; ++l) {
        const int m = k + l - n;
        if (m < 0 || m > N) continue;
        sum += weight_brute(k, l, m, n) * c.c[k] * c.c[l] * std::conj(c.c[m]);
      }
    out.c[n] = Complex(0.0, -2.0) * sum;
  }
  return out;
}

FockState random_fock(int N, double radius, std::uint64_t seed) {
  lll::testing::RandomState random(seed);
  FockState s = FockState::zero(N);
  for (auto& v : s.c) v = random.amplitude(radius);
  return s;
}

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("weight table invariants") {
  const WeightTable table(16);
  CHECK(table.log_factorial(0) == 0.0);
  CHECK(table.log_factorial(1) == 0.0);
  for (int n = 2; n <= 32; ++n) {
    CHECK(table.log_factorial(n) > table.log_factorial(n - 1));
  }
}

TEST_CASE("interaction weight examples") {
  const WeightTable table(4);
  CHECK(table.interaction_weight(0, 0, 0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(table.interaction_weight(0, 1, 0, 1) == doctest::Approx(0.5).epsilon(1e-14));
  // 4!/(2^4 sqrt(2! 2! 1! 3!)) = 24/(16 sqrt(24))
  const double expected = 24.0 / (16.0 * std::sqrt(24.0));
  CHECK(rel_err(table.interaction_weight(2, 2, 1, 3), expected) < 1e-13);
  CHECK(table.interaction_weight(2, 2, 1, 3) == doctest::Approx(0.306186).epsilon(1e-5));
}

TEST_CASE("interaction weight rejects momentum mismatch") {
  const WeightTable table(4);
  try {
    table.interaction_weight(1, 2, 1, 1);
    CHECK(false);
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("momentum mismatch") != std::string::npos);
  }
}

TEST_CASE("interaction weight symmetries") {
  const WeightTable table(12);
  lll::testing::RandomState random(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = random.integer(0, 10);
    const int l = random.integer(0, 10);
    const int m = random.integer(0, k + l);
    const int n = k + l - m;
    const double w = table.interaction_weight(k, l, m, n);
    CHECK(rel_err(table.interaction_weight(l, k, m, n), w) < 1e-14);
    CHECK(rel_err(table.interaction_weight(k, l, n, m), w) < 1e-14);
  }
}

TEST_CASE("multilinear form examples") {
  const WeightTable table(4);
  FockState ground = FockState::zero(3);
  ground.c[0] = 1.0;
  CHECK(multilinear_H(ground, ground, ground, ground, table).real() ==
        doctest::Approx(1.0).epsilon(1e-15));

  FockState two = FockState::zero(3);
  two.c[0] = 1.0;
  two.c[1] = 1.0;
  const Complex brute = multilinear_brute(two, two, two, two);
  CHECK(rel_err(brute, Complex(3.5, 0.0)) < 1e-14);  // oracle agrees with 3.5
  CHECK(rel_err(multilinear_H(two, two, two, two, table), brute) < 1e-14);

  // Condensate in three slots against a tail with g(0) = 0: every admissible
  // quadruple hits a zero amplitude.
  FockState tail = FockState::zero(3);
  tail.c[2] = Complex(0.3, 0.7);
  const Complex vanishes = multilinear_H(ground, ground, tail, ground, table);
  CHECK(vanishes == Complex(0.0, 0.0));
}

TEST_CASE("multilinear form matches brute force on random states") {
  const int N = 8;
  const WeightTable table(N);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const FockState e = random_fock(N, 1.0, 100 + seed);
    const FockState f = random_fock(N, 1.0, 200 + seed);
    const FockState g = random_fock(N, 1.0, 300 + seed);
    const FockState h = random_fock(N, 1.0, 400 + seed);
    CHECK(rel_err(multilinear_H(e, f, g, h, table), multilinear_brute(e, f, g, h)) <
          1e-12);
  }
}

TEST_CASE("multilinear form conjugate symmetry") {
  const int N = 6;
  const WeightTable table(N);
  const FockState e = random_fock(N, 1.0, 11);
  const FockState f = random_fock(N, 1.0, 12);
  const FockState g = random_fock(N, 1.0, 13);
  const FockState h = random_fock(N, 1.0, 14);
  CHECK(rel_err(std::conj(multilinear_H(e, f, g, h, table)),
                multilinear_H(g, h, e, f, table)) < 1e-13);
}

TEST_CASE("multilinear form rejects mismatched truncation") {
  const WeightTable table(4);
  const FockState a = FockState::zero(3);
  const FockState b = FockState::zero(4);
  CHECK_THROWS_AS(multilinear_H(a, a, b, a, table), std::invalid_argument);
}

TEST_CASE("direct RHS examples") {
  const WeightTable table(4);
  FockState ground = FockState::zero(2);
  ground.c[0] = 1.0;
  const FockState d0 = lll_rhs_direct(ground, table);
  CHECK(rel_err(d0.c[0], Complex(0.0, -2.0)) < 1e-15);
  CHECK(d0.c[1] == Complex(0.0, 0.0));

  FockState two = FockState::zero(2);
  two.c[0] = 1.0;
  two.c[1] = 1.0;
  const FockState oracle = rhs_brute(two);
  CHECK(rel_err(oracle.c[0], Complex(0.0, -4.0)) < 1e-14);
  CHECK(rel_err(oracle.c[1], Complex(0.0, -3.0)) < 1e-14);
  const FockState d1 = lll_rhs_direct(two, table);
  for (int n = 0; n <= 2; ++n) CHECK(rel_err(d1.c[n], oracle.c[n]) < 1e-14);

  const FockState zero = FockState::zero(2);
  for (const Complex& v : lll_rhs_direct(zero, table).c) {
    CHECK(v == Complex(0.0, 0.0));
  }
}

TEST_CASE("direct RHS matches brute force on random states") {
  const int N = 8;
  const WeightTable table(N);
  const FockState c = random_fock(N, 0.9, 77);
  const FockState got = lll_rhs_direct(c, table);
  const FockState want = rhs_brute(c);
  for (int n = 0; n <= N; ++n) CHECK(rel_err(got.c[n], want.c[n]) < 1e-12);
}

TEST_CASE("fast RHS equals direct RHS") {
  const WeightTable small(2);
  FockState two = FockState::zero(2);
  two.c[0] = 1.0;
  two.c[1] = 1.0;
  const FockState a = lll_rhs_direct(two, small);
  const FockState b = lll_rhs_fast(two, small);
  for (int n = 0; n <= 2; ++n) CHECK(rel_err(b.c[n], a.c[n]) < 1e-14);

  const int N = 64;
  const WeightTable table(N);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const FockState c = random_fock(N, 1.0, 500 + seed);
    const FockState direct = lll_rhs_direct(c, table);
    const FockState fast = lll_rhs_fast(c, table);
    double scale = 0.0;
    for (int n = 0; n <= N; ++n) scale = std::max(scale, std::abs(direct.c[n]));
    for (int n = 0; n <= N; ++n) {
      CHECK(std::abs(fast.c[n] - direct.c[n]) < 1e-12 * scale);
    }
  }

  const FockState zero = FockState::zero(N);
  for (const Complex& v : lll_rhs_fast(zero, table).c) {
    CHECK(v == Complex(0.0, 0.0));
  }
}

TEST_CASE("fast RHS overflow names the offending block") {
  const int N = 8;
  const WeightTable table(N);
  FockState huge = FockState::zero(N);
  for (auto& v : huge.c) v = 1e140;
  try {
    lll_rhs_fast(huge, table);
    CHECK(false);
  } catch (const NumericalError& err) {
    CHECK(std::string(err.what()).find("S=") != std::string::npos);
  }
}

TEST_CASE("ansatz coefficients") {
  SUBCASE("condensate only") {
    const FockState s = ansatz_coefficients(Complex(2.0, 0.0), {}, 4, 6);
    CHECK(s.c[0] == Complex(2.0, 0.0));
    for (int j = 1; j <= 6; ++j) CHECK(s.c[j] == Complex(0.0, 0.0));
  }
  SUBCASE("sample at k = 1 lands on index lambda") {
    std::vector<Complex> samples(5);
    samples[4] = 1.0;  // g(1) with lambda = 4
    const FockState s = ansatz_coefficients(Complex(0.7, 0.0), samples, 4, 8);
    CHECK(s.c[0] == Complex(0.7, 0.0));
    CHECK(rel_err(s.c[4], Complex(0.5, 0.0)) < 1e-15);  // 1/sqrt(4)
    for (int j = 1; j <= 8; ++j) {
      if (j != 4) CHECK(s.c[j] == Complex(0.0, 0.0));
    }
  }
  SUBCASE("nonzero g(0) is rejected") {
    std::vector<Complex> samples{Complex(1.0, 0.0)};
    CHECK_THROWS_AS(ansatz_coefficients(Complex{}, samples, 4, 8),
                    std::invalid_argument);
  }
  SUBCASE("samples beyond N are dropped") {
    std::vector<Complex> samples(12, Complex(0.0, 0.0));
    samples[10] = 1.0;
    const FockState s = ansatz_coefficients(Complex{}, samples, 2, 6);
    for (int j = 0; j <= 6; ++j) CHECK(s.c[j] == Complex(0.0, 0.0));
  }
}

TEST_CASE("fock invariants") {
  const WeightTable table(3);
  FockState two = FockState::zero(3);
  two.c[0] = 1.0;
  two.c[1] = 1.0;
  const FockInvariants inv = fock_invariants(two, table);
  CHECK(inv.mass == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(inv.angular_momentum == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(inv.hamiltonian == doctest::Approx(3.5).epsilon(1e-14));

  FockState condensate = FockState::zero(3);
  condensate.c[0] = Complex(0.6, -0.8);
  const FockInvariants ci = fock_invariants(condensate, table);
  CHECK(ci.mass == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ci.angular_momentum == 0.0);
  CHECK(ci.hamiltonian == doctest::Approx(1.0).epsilon(1e-13));

  const FockInvariants zi = fock_invariants(FockState::zero(3), table);
  CHECK(zi.mass == 0.0);
  CHECK(zi.angular_momentum == 0.0);
  CHECK(zi.hamiltonian == 0.0);
}

TEST_CASE("RHS is the Wirtinger gradient of the Hamiltonian") {
  const int N = 16;
  FockSystem system(N);
  const FockState c = random_fock(N, 0.7, 321);
  const StateVector z(c.c.begin(), c.c.end());
  const FlowConsistencyReport report = flow_consistency_check(system, z, 1e-5);
  CHECK(report.max_rel_error < 1e-6);
}

TEST_CASE("RK4 invariant drift shrinks at fourth order") {
  const int N = 10;
  FockSystem system(N);
  const FockState c = random_fock(N, 0.8, 99);
  const StateVector z0(c.c.begin(), c.c.end());

  const auto max_drift = [&](double dt) {
    EvolveOptions opts;
    opts.scheme = Scheme::rk4;
    opts.dt = dt;
    opts.t_end = 0.5;
    opts.observe_every = 1;
    const Trajectory traj = evolve(system, z0, opts);
    const DriftReport report = drift_report(traj);
    return std::max({report.mass.max_abs, report.energy.max_abs,
                     report.hamiltonian.max_abs});
  };

  const double coarse = max_drift(0.05);
  const double fine = max_drift(0.025);
  CHECK(coarse > 1e-13);  // above the rounding floor, the ratio is meaningful
  CHECK(coarse / fine >= 8.0);
}

}  // TEST_SUITE
