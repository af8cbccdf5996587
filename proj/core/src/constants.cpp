#include "lll/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace lll {

double ModelConstants::interaction_constant() {
  return std::pow(2.0, -0.75) * std::pow(M_PI, 0.25);
}

ModelConstants::ModelConstants(double lambda)
    : k_(interaction_constant()), lambda_(lambda) {
  if (!(lambda >= 1.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("ModelConstants: lambda must be >= 1");
  }
}

}  // namespace lll
