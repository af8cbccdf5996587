#pragma once

namespace lll {

/// Model constants shared by the limit and shell systems.
///
/// K is the interaction constant 2^(-3/4) pi^(1/4) ~= 0.791670, fixed by the
/// model; lambda >= 1 is the frequency-scale parameter.  Both are immutable
/// for the lifetime of a state.
class ModelConstants {
 public:
  explicit ModelConstants(double lambda);

  double lambda() const { return lambda_; }
  double K() const { return k_; }

  /// 2^(-3/4) pi^(1/4) as evaluated in double precision.
  static double interaction_constant();

 private:
  double k_;
  double lambda_;
};

}  // namespace lll
