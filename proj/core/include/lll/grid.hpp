#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lll/types.hpp"

namespace lll {

/// Dyadic-ray frequency grid: s_{r,j} = sigma_r 2^j with sigma_r = 2^((r+1/2)/R)
/// for r = 0..R-1 and j in [j_min, j_max].  Doubling maps grid points to grid
/// points exactly (s_{r,j+1} = 2 s_{r,j} in floating point as well), so the
/// s <-> s/2 <-> 2s couplings never interpolate.  The union over (r,j) is a
/// geometric sequence of ratio 2^(1/R).
///
/// The standard weights w_{r,j} = s_{r,j} ln2 / R make sum w F(s) a midpoint
/// rule in log2 s for int_0^inf F; a weight override (used by the shell
/// model, w_j = eps 2^j) is supported through the explicit constructor.
class DyadicGrid {
 public:
  /// Standard quadrature grid with R rays.
  static DyadicGrid rays(int ray_count, int j_min, int j_max);

  /// Single-ray grid at sigma = 1 (s_j = 2^j) with shell weights eps * 2^j.
  static DyadicGrid shell(int j_min, int j_max, double epsilon);

  int ray_count() const { return ray_count_; }
  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }
  int levels() const { return j_max_ - j_min_ + 1; }
  std::size_t size() const { return frequency_.size(); }

  std::size_t index(int r, int j) const {
    return static_cast<std::size_t>(r) * levels() + (j - j_min_);
  }
  int ray_of(std::size_t idx) const { return static_cast<int>(idx) / levels(); }
  int level_of(std::size_t idx) const {
    return j_min_ + static_cast<int>(idx) % levels();
  }
  /// True unless idx sits at j_min of its ray (the zero-padded boundary).
  bool has_lower_neighbor(std::size_t idx) const {
    return level_of(idx) > j_min_;
  }
  bool has_upper_neighbor(std::size_t idx) const {
    return level_of(idx) < j_max_;
  }

  double sigma(int r) const { return sigma_[r]; }
  double frequency(std::size_t idx) const { return frequency_[idx]; }
  double weight(std::size_t idx) const { return weight_[idx]; }

 private:
  DyadicGrid(int ray_count, int j_min, int j_max, std::vector<double> sigma,
             std::vector<double> frequency, std::vector<double> weight);

  int ray_count_;
  int j_min_;
  int j_max_;
  std::vector<double> sigma_;
  std::vector<double> frequency_;
  std::vector<double> weight_;
};

/// Standard grid factory, see DyadicGrid::rays.
DyadicGrid build_grid(int ray_count, int j_min, int j_max);

/// sum_{r,j} w_{r,j} F(s_{r,j}); approximates int_0^inf F for continuous
/// integrable F, converging as R grows and [j_min, j_max] widens.
double grid_quadrature(const DyadicGrid& grid,
                       const std::function<double(double)>& F);

}  // namespace lll
