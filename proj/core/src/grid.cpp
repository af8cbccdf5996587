#include "lll/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lll {

DyadicGrid::DyadicGrid(int ray_count, int j_min, int j_max,
                       std::vector<double> sigma, std::vector<double> frequency,
                       std::vector<double> weight)
    : ray_count_(ray_count),
      j_min_(j_min),
      j_max_(j_max),
      sigma_(std::move(sigma)),
      frequency_(std::move(frequency)),
      weight_(std::move(weight)) {}

DyadicGrid DyadicGrid::rays(int ray_count, int j_min, int j_max) {
  if (ray_count < 1) {
    throw std::invalid_argument("DyadicGrid: ray count must be >= 1");
  }
  if (j_min > j_max) {
    throw std::invalid_argument("DyadicGrid: j_min > j_max");
  }
  const int levels = j_max - j_min + 1;
  std::vector<double> sigma(ray_count);
  std::vector<double> freq, weight;
  freq.reserve(static_cast<std::size_t>(ray_count) * levels);
  weight.reserve(freq.capacity());
  for (int r = 0; r < ray_count; ++r) {
    sigma[r] = std::exp2((r + 0.5) / ray_count);
    for (int j = j_min; j <= j_max; ++j) {
      const double s = sigma[r] * std::exp2(static_cast<double>(j));
      freq.push_back(s);
      weight.push_back(s * std::numbers::ln2 / ray_count);
    }
  }
  return DyadicGrid(ray_count, j_min, j_max, std::move(sigma), std::move(freq),
                    std::move(weight));
}

DyadicGrid DyadicGrid::shell(int j_min, int j_max, double epsilon) {
  if (j_min > j_max) {
    throw std::invalid_argument("DyadicGrid: j_min > j_max");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("DyadicGrid: epsilon must be positive");
  }
  const int levels = j_max - j_min + 1;
  std::vector<double> freq, weight;
  freq.reserve(levels);
  weight.reserve(levels);
  for (int j = j_min; j <= j_max; ++j) {
    const double s = std::exp2(static_cast<double>(j));
    freq.push_back(s);
    weight.push_back(epsilon * s);
  }
  return DyadicGrid(1, j_min, j_max, {1.0}, std::move(freq), std::move(weight));
}

DyadicGrid build_grid(int ray_count, int j_min, int j_max) {
  return DyadicGrid::rays(ray_count, j_min, j_max);
}

double grid_quadrature(const DyadicGrid& grid,
                       const std::function<double(double)>& F) {
  KahanSum sum;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    sum.add(grid.weight(idx) * F(grid.frequency(idx)));
  }
  return sum.value();
}

}  // namespace lll
