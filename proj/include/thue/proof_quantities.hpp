#pragma once

#include <cstdint>

#include "thue/asymptotics.hpp"
#include "thue/real.hpp"
#include "thue/signed_log.hpp"

namespace thue {

/// The Cramer-rule quantities of the lower-bound argument for one (n, s, t).
///
/// With L_i = log|lambda_i|, D12 = log|a1 - a2| and D13 = log|a1 - a3|:
///   u1 = L0 - L2,              u2 = L1 - L2
///   v1 = D12 L0 - D13 L2,      v2 = L1 D13 - L2 D12
///   w1 = L0/(a1-a2) - L2/(a1-a3), w2 = L1/(a1-a3) - L2/(a1-a2)
///   u_bar = -u1 - u2, w_bar = -w1 - w2, v_bar = b0 R - v1 - v2
/// where b0 is the integer placing v_bar in (0, R).
struct ProofQuantities {
  BigInt n;
  std::int64_t s = 0;
  std::int64_t t = 0;
  long precision_bits = 0;
  long working_bits = 0;

  Real R;
  /// L1 L0 - L2^2, the determinant of the unit system; equals -R.
  Real det;
  Real u1, u2, v1, v2;
  SignedLog w1, w2;
  Real u_bar;
  Real v_bar;
  /// R - v_bar, kept separately because v_bar can sit within e^{-huge} of R.
  Real r_minus_v_bar;
  SignedLog w_bar;
  BigInt b0;
  LogDifferences diffs;
  /// log(|w_bar| / (2 |a1-a2| |a1-a3|)).
  Real log_wbar_ratio;
  bool v_bar_in_window = false;
  /// True when v1 + v2 = k * det + C with an exactly known integer k, so that
  /// v_bar is C or R - C up to sign; C may be far below the working ulp.
  bool lattice = false;
  /// log|C| in the lattice case (sign in lattice_sign).
  Real log_abs_c;
  int lattice_sign = 0;
};

/// Throws DegenerateTwist for st == 0 and PrecisionExhausted when v_bar
/// cannot be separated from 0 and R.
ProofQuantities compute_proof_quantities(const BigInt& n, std::int64_t s, std::int64_t t,
                                         long precision_bits = Real::kDefaultPrecision);

}  // namespace thue
