#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lll/types.hpp"

namespace lll {

using RealFunctional = std::function<double(std::span<const Complex>)>;

/// Central-difference approximation of dh/d(conj z) for every complex
/// coordinate of z, with the convention
///
///   dh/d(conj z) = 1/2 (dh/d(Re z) + i dh/d(Im z)),
///
/// under which i dz/dt = dh/d(conj z) generates the Hamiltonian flow of h.
/// Converges at O(step^2) on smooth h.  Throws NumericalError
/// ("hamiltonian overflow") if h evaluates to a non-finite value.
std::vector<Complex> wirtinger_gradient(const RealFunctional& h,
                                        std::span<const Complex> z,
                                        double step);

}  // namespace lll
