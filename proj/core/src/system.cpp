#include "lll/system.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lll/diagnostics.hpp"

namespace lll {

namespace {

void check_dimension(std::size_t have, std::size_t want, const char* who) {
  if (have != want) {
    throw std::invalid_argument(std::string(who) + ": state has wrong dimension");
  }
}

/// Front of a (frequency, mass) tail distribution; 0 when the tail is empty.
double front_or_zero(const std::vector<double>& s, const std::vector<double>& mass,
                     double p) {
  double total = 0.0;
  for (double m : mass) total += m;
  if (total <= 0.0) return 0.0;
  return spectral_front(s, mass, p);
}

}  // namespace

FockSystem::FockSystem(int truncation)
    : truncation_(truncation), table_(truncation) {
  if (truncation < 0) {
    throw std::invalid_argument("FockSystem: truncation must be >= 0");
  }
}

std::size_t FockSystem::dimension() const {
  return static_cast<std::size_t>(truncation_) + 1;
}

void FockSystem::rhs(std::span<const Complex> z, std::span<Complex> dzdt) const {
  check_dimension(z.size(), dimension(), "FockSystem::rhs");
  FockState state;
  state.c.assign(z.begin(), z.end());
  const FockState d = lll_rhs_fast(state, table_);
  std::copy(d.c.begin(), d.c.end(), dzdt.begin());
}

double FockSystem::hamiltonian(std::span<const Complex> z) const {
  check_dimension(z.size(), dimension(), "FockSystem::hamiltonian");
  FockState state;
  state.c.assign(z.begin(), z.end());
  return multilinear_H(state, state, state, state, table_).real();
}

double FockSystem::symplectic_weight(std::size_t) const { return 1.0; }

double FockSystem::coordinate_frequency(std::size_t i) const {
  return static_cast<double>(i);
}

Observables FockSystem::observe(std::span<const Complex> z,
                                const ObservableOptions& opts) const {
  check_dimension(z.size(), dimension(), "FockSystem::observe");
  Observables out;
  KahanSum mass, momentum;
  double sup = 0.0;
  std::vector<double> s, tail;
  s.reserve(z.size());
  tail.reserve(z.size());
  for (std::size_t n = 0; n < z.size(); ++n) {
    const double p = std::norm(z[n]);
    mass.add(p);
    momentum.add(static_cast<double>(n) * p);
    if (n >= 1) {
      const double nn = static_cast<double>(n);
      sup = std::max(sup, std::pow(1.0 + nn * nn, 0.5 * opts.alpha) * std::abs(z[n]));
      s.push_back(nn);
      tail.push_back(p);
    }
  }
  out.mass = mass.value();
  out.energy = momentum.value();
  out.hamiltonian = hamiltonian(z);
  out.xalpha = std::abs(z[0]) + sup;
  out.front_lo = front_or_zero(s, tail, opts.front_lo);
  out.front_hi = front_or_zero(s, tail, opts.front_hi);
  return out;
}

std::string FockSystem::describe() const {
  std::ostringstream os;
  os << "fock system: truncated Fock-coefficient dynamics\n"
     << "  i dc_n/dt = 2 sum_{k+l=m+n} (k+l)! / (2^(k+l) sqrt(k! l! m! n!)) "
        "c_k c_l conj(c_m)\n"
     << "  truncation: N = " << truncation_ << " (" << dimension() << " modes)\n"
     << "  symplectic weights: 1\n"
     << "  invariants: mass sum |c_n|^2, angular momentum sum n |c_n|^2, "
        "H = Re H(c,c,c,c)\n";
  return os.str();
}

LimitSystem::LimitSystem(DyadicGrid grid, ModelConstants constants,
                         LimitRHSMode mode)
    : grid_(std::move(grid)), constants_(constants), mode_(mode) {}

std::size_t LimitSystem::dimension() const { return grid_.size() + 1; }

LimitState LimitSystem::unpack(std::span<const Complex> z) const {
  check_dimension(z.size(), dimension(), "LimitSystem");
  return LimitState(grid_, constants_, z[0],
                    std::vector<Complex>(z.begin() + 1, z.end()));
}

StateVector LimitSystem::pack(const LimitState& state) {
  StateVector z;
  z.reserve(state.g.size() + 1);
  z.push_back(state.a);
  z.insert(z.end(), state.g.begin(), state.g.end());
  return z;
}

void LimitSystem::rhs(std::span<const Complex> z, std::span<Complex> dzdt) const {
  const LimitDerivative d = limit_rhs(unpack(z), mode_);
  dzdt[0] = d.a_dot;
  std::copy(d.g_dot.begin(), d.g_dot.end(), dzdt.begin() + 1);
}

double LimitSystem::hamiltonian(std::span<const Complex> z) const {
  return discrete_hamiltonian(unpack(z));
}

double LimitSystem::symplectic_weight(std::size_t i) const {
  if (i == 0) return 1.0;
  return constants_.lambda() * grid_.weight(i - 1);
}

double LimitSystem::coordinate_frequency(std::size_t i) const {
  if (i == 0) return 0.0;
  return grid_.frequency(i - 1);
}

Observables LimitSystem::observe(std::span<const Complex> z,
                                 const ObservableOptions& opts) const {
  const LimitState state = unpack(z);
  const LimitInvariants inv = limit_invariants(state, opts.alpha);
  Observables out;
  out.mass = inv.mass;
  out.energy = inv.energy;
  out.hamiltonian = inv.hamiltonian;
  out.xalpha = inv.xalpha;
  std::vector<double> s(state.g.size()), tail(state.g.size());
  for (std::size_t idx = 0; idx < state.g.size(); ++idx) {
    s[idx] = grid_.frequency(idx);
    tail[idx] = constants_.lambda() * grid_.weight(idx) * std::norm(state.g[idx]);
  }
  out.front_lo = front_or_zero(s, tail, opts.front_lo);
  out.front_hi = front_or_zero(s, tail, opts.front_hi);
  return out;
}

std::string LimitSystem::describe() const {
  const char* c3 = mode_ == LimitRHSMode::gradient_consistent ? "16K" : "8K";
  std::ostringstream os;
  os << "limit system: integro-differential model on a dyadic-ray grid\n"
     << "  i da/dt = 2|a|^2 a + 4 a int |g(s)|^2 2^(-lambda s) ds\n"
     << "            + 4K int conj(g(s)) 2^(-lambda s/2) (s/lambda)^(1/4) "
        "g(s/2)^2 ds\n"
     << "  i dg/dt(s) = (1/lambda) [ 4|a|^2 g(s) 2^(-lambda s)\n"
     << "               + 4K (s/lambda)^(1/4) conj(a) 2^(-lambda s/2) g(s/2)^2\n"
     << "               + " << c3
     << " (2s/lambda)^(1/4) a 2^(-lambda s) conj(g(s)) g(2s)\n"
     << "               + 16K^2 (2s/lambda)^(1/2) |g(s)|^2 g(s) ]\n"
     << "  mode: "
     << (mode_ == LimitRHSMode::gradient_consistent
             ? "gradient_consistent (RHS = Wirtinger gradient of the discrete "
               "Hamiltonian; s<->2s coefficient 16K)"
             : "paper_literal (verbatim coefficients; s<->2s coefficient 8K, "
               "does not conserve the Hamiltonian)")
     << "\n"
     << "  constants: K = " << constants_.K() << ", lambda = " << constants_.lambda()
     << "\n"
     << "  grid: R = " << grid_.ray_count() << " rays, j in [" << grid_.j_min()
     << ", " << grid_.j_max() << "], " << grid_.size()
     << " points, weight rule w = s ln2 / R\n"
     << "  symplectic weights: 1 for a, lambda w_{r,j} for g\n";
  return os.str();
}

ShellSystem::ShellSystem(ModelConstants constants, int j_min, int j_max,
                         double epsilon, LimitRHSMode mode)
    : LimitSystem(DyadicGrid::shell(j_min, j_max, epsilon), constants, mode),
      epsilon_(epsilon) {}

ShellState ShellSystem::unpack_shell(std::span<const Complex> z) const {
  check_dimension(z.size(), dimension(), "ShellSystem");
  return ShellState(constants_, grid_.j_min(), grid_.j_max(), epsilon_, z[0],
                    std::vector<Complex>(z.begin() + 1, z.end()));
}

StateVector ShellSystem::pack(const ShellState& state) {
  StateVector z;
  z.reserve(state.gj.size() + 1);
  z.push_back(state.a);
  z.insert(z.end(), state.gj.begin(), state.gj.end());
  return z;
}

std::string ShellSystem::describe() const {
  const char* c3 = mode_ == LimitRHSMode::gradient_consistent ? "16K" : "8K";
  std::ostringstream os;
  os << "shell system: dyadic shell model\n"
     << "  i da/dt = 2|a|^2 a + 4 a eps sum_j 2^j |g_j|^2 2^(-lambda 2^j)\n"
     << "            + 4K eps sum_j 2^j conj(g_j) 2^(-lambda 2^(j-1)) "
        "(2^j/lambda)^(1/4) g_{j-1}^2\n"
     << "  i dg_j/dt = (1/lambda) [ 4|a|^2 g_j 2^(-lambda 2^j)\n"
     << "              + 4K (2^j/lambda)^(1/4) conj(a) 2^(-lambda 2^(j-1)) "
        "g_{j-1}^2\n"
     << "              + " << c3
     << " (2^(j+1)/lambda)^(1/4) a 2^(-lambda 2^j) conj(g_j) g_{j+1}\n"
     << "              + 16K^2 (2^(j+1)/lambda)^(1/2) |g_j|^2 g_j ]\n"
     << "  mode: "
     << (mode_ == LimitRHSMode::gradient_consistent ? "gradient_consistent"
                                                    : "paper_literal")
     << "\n"
     << "  constants: K = " << constants_.K() << ", lambda = " << constants_.lambda()
     << "\n"
     << "  shells: j in [" << grid_.j_min() << ", " << grid_.j_max()
     << "], epsilon = " << epsilon_ << "\n"
     << "  symplectic weights: 1 for a, lambda eps 2^j for g_j\n";
  return os.str();
}

}  // namespace lll
