#include "thue/signed_log.hpp"

#include <utility>

#include "thue/error.hpp"

namespace thue {

namespace {

// e^{-d} is below half an ulp of 1 once d exceeds prec * log 2 + 1.
bool negligible_against_one(const Real& d) {
  Real limit = const_log2(d.precision()) * static_cast<long>(d.precision() + 2);
  return d > limit;
}

}  // namespace

SignedLog to_signed_log(const Real& x) {
  if (x.is_zero()) return SignedLog::zero(x.precision());
  return {x.sign(), log(abs(x))};
}

Real to_real(const SignedLog& a) {
  if (a.sign == 0) return Real(0L, a.log_abs.precision());
  Real v = exp(a.log_abs);
  return a.sign < 0 ? -v : v;
}

SignedLog operator-(const SignedLog& a) { return {-a.sign, a.log_abs}; }

SignedLog operator+(const SignedLog& a, const SignedLog& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  const bool a_big = a.log_abs >= b.log_abs;
  const SignedLog& big = a_big ? a : b;
  const SignedLog& small = a_big ? b : a;
  const Real d = big.log_abs - small.log_abs;
  if (a.sign == b.sign) {
    if (negligible_against_one(d)) return big;
    return {big.sign, big.log_abs + log1p(exp(-d))};
  }
  if (d.is_zero()) return SignedLog::zero(big.log_abs.precision());
  if (negligible_against_one(d)) return big;
  // |big| - |small| = |big| (1 - e^{-d}) = -|big| expm1(-d)
  return {big.sign, big.log_abs + log(-expm1(-d))};
}

SignedLog operator-(const SignedLog& a, const SignedLog& b) { return a + (-b); }

SignedLog operator*(const SignedLog& a, const SignedLog& b) {
  if (a.sign == 0 || b.sign == 0) return SignedLog::zero(max(a.log_abs, b.log_abs).precision());
  return {a.sign * b.sign, a.log_abs + b.log_abs};
}

SignedLog operator/(const SignedLog& a, const SignedLog& b) {
  if (b.sign == 0) throw Error(ErrorKind::InvalidArgument, "division by zero in signed-log arithmetic");
  if (a.sign == 0) return a;
  return {a.sign * b.sign, a.log_abs - b.log_abs};
}

SignedLog log1p_signed_exp(int sigma, const Real& delta) {
  const mpfr_prec_t prec = delta.precision();
  if (negligible_against_one(delta)) {
    // log(1 + sigma x) = sigma x (1 + O(x)) with x below the working ulp.
    return {sigma, -delta};
  }
  const Real x = exp(-delta);
  Real v = sigma > 0 ? log1p(x) : log1p(-x);
  if (v.is_zero()) return SignedLog::zero(prec);
  return {v.sign(), log(abs(v))};
}

}  // namespace thue
