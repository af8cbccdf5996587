#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lll/profiles.hpp"
#include "lll/types.hpp"

namespace lll {

/// psi(theta) = 1 / (theta^theta (1-theta)^(1-theta)) on (0,1).
/// Evaluated as exp2 of the base-2 entropy so that psi(1/2) == 2 exactly in
/// double precision.  Values lie in (1, 2]; peak at theta = 1/2 with
/// psi(1/2 + d) = 2 - 4 d^2 + O(d^3).
double psi(double theta);

struct LaplaceResult {
  double integral;   // int_0^1 psi(theta)^(alpha lambda) F(theta) dtheta
  double asymptote;  // F(1/2) 2^(alpha lambda) sqrt(pi) / sqrt(2 alpha lambda)
  double ratio;      // integral / asymptote
};

/// Compares the peaked integral against its closed-form asymptote.  Both are
/// computed in log2 space relative to the peak value 2^(alpha lambda), so no
/// intermediate quantity overflows for alpha*lambda up to ~1000.  Requires
/// alpha*lambda >= 4.  Throws "asymptote not applicable" when F(1/2) <= 0
/// and F changes sign (the peak normalization is meaningless then).
LaplaceResult laplace_ratio(const std::function<double(double)>& F,
                            double alpha, double lambda,
                            double quad_rel_tol = 1e-10);

/// The five exact pieces of the quartic Hamiltonian split by the number of
/// tail factors, together with their limiting equivalents.
struct HamiltonianBreakdown {
  Complex H0{}, H1{}, H2{}, H3{}, H4{};   // exact finite sums
  double h0 = 0, h2 = 0, h3 = 0, h4 = 0;  // limit equivalents (h1 = 0)
  double combined = 0;  // |a|^4 + 4 int |a g(s) 2^(-lambda s/2) + K (s/lambda)^(1/4) g(s/2)^2|^2 ds
  double lambda = 0;
};

/// Exact decomposition of the Fock Hamiltonian of a phi_0 + v_lambda into the
/// pieces H0..H4, each built from the one multilinear kernel:
///   H0 = H(A,A,A,A)
///   H1 = 2 [H(V,A,A,A) + H(A,A,V,A)]
///   H2 = H(V,V,A,A) + H(A,A,V,V) + 4 H(V,A,V,A)
///   H3 = 2 [H(V,V,V,A) + H(A,V,V,V)]
///   H4 = H(V,V,V,V)
/// Their sum equals the Hamiltonian of the combined state identically, and
/// H1 = 0 whenever g_samples[0] = 0.  g_samples[j] = g(j/lambda) as in
/// ansatz_coefficients; requires N >= the last sampled index.
HamiltonianBreakdown exact_H_terms(Complex a,
                                   std::span<const Complex> g_samples,
                                   int lambda, int N);

/// Limiting equivalents by quadrature over the profile's support:
///   h0 = |a|^4
///   h2 = 4 |a|^2 int 2^(-lambda x) |g(x)|^2 dx
///   h3 = 2^(9/4) pi^(1/4) lambda^(-1/4) Re a int x^(1/4) 2^(-lambda x/2)
///        conj(g(x/2))^2 g(x) dx
///   h4 = sqrt(2 pi / lambda) int sqrt(s) |g(s/2)|^4 ds
/// Also evaluates the combined single-integral form and checks
/// combined = h0 + h2 + h3 + h4 within the quadrature tolerance (the cross
/// term equals h3 because 8K = 2^(9/4) pi^(1/4)); throws NumericalError if
/// the identity fails.
HamiltonianBreakdown limit_h_terms(Complex a, const Profile& g, double lambda,
                                   double quad_rel_tol = 1e-8);

/// g(j/lambda) for j = 0..N.
std::vector<Complex> sample_profile(const Profile& g, int lambda, int N);

struct AsymptoticsRow {
  double lambda;
  double H2, h2, H3, h3, H4, h4;
  double ratio2() const { return H2 / h2; }
  double ratio3() const { return H3 / h3; }
  double ratio4() const { return H4 / h4; }
};

/// Exact-versus-limit comparison of H2/H3/H4 across a lambda sweep, with the
/// Fock truncation N = ceil(lambda * k_max) per row.
std::vector<AsymptoticsRow> asymptotics_sweep(Complex a, const Profile& g,
                                              std::span<const int> lambdas,
                                              double k_max,
                                              double quad_rel_tol = 1e-8);

}  // namespace lll
