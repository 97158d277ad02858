#pragma once

#include <utility>

#include "thue/real.hpp"

namespace thue {

/// sign * exp(log_abs). Used for quantities such as 1/(alpha1 - alpha2)
/// whose exponent can leave the MPFR range at extreme twists.
struct SignedLog {
  int sign = 0;  // -1, 0 or +1; log_abs is ignored when sign == 0
  Real log_abs;

  static SignedLog zero(mpfr_prec_t prec) { return {0, Real(0L, prec)}; }
  static SignedLog from_log(int sign, Real log_abs) { return {sign, std::move(log_abs)}; }
};

SignedLog to_signed_log(const Real& x);
/// exp(log_abs) with the sign; underflows to zero / overflows to inf like MPFR.
Real to_real(const SignedLog& a);

SignedLog operator-(const SignedLog& a);
SignedLog operator+(const SignedLog& a, const SignedLog& b);
SignedLog operator-(const SignedLog& a, const SignedLog& b);
SignedLog operator*(const SignedLog& a, const SignedLog& b);
SignedLog operator/(const SignedLog& a, const SignedLog& b);

/// Sign and log|.| of log(1 + sigma e^{-delta}) for delta >= 0, without
/// forming e^{-delta} when it would underflow.
SignedLog log1p_signed_exp(int sigma, const Real& delta);

}  // namespace thue
