#pragma once

#include <memory>
#include <span>
#include <string>

#include "lll/fock.hpp"
#include "lll/limit.hpp"
#include "lll/shell.hpp"
#include "lll/types.hpp"

namespace lll {

struct ObservableOptions {
  double alpha = 0.25;    // exponent of the weighted sup norm
  double front_lo = 0.5;  // mass quantiles tracked as spectral fronts
  double front_hi = 0.9;
};

/// Per-snapshot observable row.  Fronts are 0 when the tail carries no mass.
struct Observables {
  double mass = 0;
  double energy = 0;
  double hamiltonian = 0;
  double xalpha = 0;
  double front_lo = 0;
  double front_hi = 0;
};

/// A finite-dimensional Hamiltonian system on complex coordinates z with
///   i w_i dz_i/dt = dH/d(conj z_i),
/// where w_i are the (real, constant) symplectic weights.  The flat layout
/// puts the condensate amplitude first.
class HamiltonianSystem {
 public:
  virtual ~HamiltonianSystem() = default;

  virtual std::size_t dimension() const = 0;
  virtual void rhs(std::span<const Complex> z, std::span<Complex> dzdt) const = 0;
  virtual double hamiltonian(std::span<const Complex> z) const = 0;
  virtual double symplectic_weight(std::size_t i) const = 0;
  /// Frequency s_i carried by coordinate i (0 for the condensate); generates
  /// the phase-modulation symmetry z_i -> exp(i theta s_i) z_i.
  virtual double coordinate_frequency(std::size_t i) const = 0;
  virtual Observables observe(std::span<const Complex> z,
                              const ObservableOptions& opts) const = 0;
  /// Active equations, mode, constants and grid summary as plain text.
  virtual std::string describe() const = 0;
};

/// The full truncated equation in Fock coefficients; z = (c_0..c_N), all
/// symplectic weights 1, coordinate frequency n.
class FockSystem : public HamiltonianSystem {
 public:
  explicit FockSystem(int truncation);

  std::size_t dimension() const override;
  void rhs(std::span<const Complex> z, std::span<Complex> dzdt) const override;
  double hamiltonian(std::span<const Complex> z) const override;
  double symplectic_weight(std::size_t i) const override;
  double coordinate_frequency(std::size_t i) const override;
  Observables observe(std::span<const Complex> z,
                      const ObservableOptions& opts) const override;
  std::string describe() const override;

  const WeightTable& table() const { return table_; }

 private:
  int truncation_;
  WeightTable table_;
};

/// The limiting integro-differential system discretized on a dyadic-ray
/// grid; z = (a, g_{r,j}...) ray-major, symplectic weights (1, lambda w_{r,j}).
class LimitSystem : public HamiltonianSystem {
 public:
  LimitSystem(DyadicGrid grid, ModelConstants constants,
              LimitRHSMode mode = LimitRHSMode::gradient_consistent);

  std::size_t dimension() const override;
  void rhs(std::span<const Complex> z, std::span<Complex> dzdt) const override;
  double hamiltonian(std::span<const Complex> z) const override;
  double symplectic_weight(std::size_t i) const override;
  double coordinate_frequency(std::size_t i) const override;
  Observables observe(std::span<const Complex> z,
                      const ObservableOptions& opts) const override;
  std::string describe() const override;

  const DyadicGrid& grid() const { return grid_; }
  const ModelConstants& constants() const { return constants_; }
  LimitRHSMode mode() const { return mode_; }

  LimitState unpack(std::span<const Complex> z) const;
  static StateVector pack(const LimitState& state);

 protected:
  DyadicGrid grid_;
  ModelConstants constants_;
  LimitRHSMode mode_;
};

/// The dyadic shell model; same kernel as LimitSystem on the shell grid.
class ShellSystem : public LimitSystem {
 public:
  ShellSystem(ModelConstants constants, int j_min, int j_max, double epsilon,
              LimitRHSMode mode = LimitRHSMode::gradient_consistent);

  std::string describe() const override;

  double epsilon() const { return epsilon_; }
  ShellState unpack_shell(std::span<const Complex> z) const;
  static StateVector pack(const ShellState& state);

 private:
  double epsilon_;
};

}  // namespace lll
