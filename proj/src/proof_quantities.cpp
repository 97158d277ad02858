#include "thue/proof_quantities.hpp"

#include <algorithm>
#include <array>

#include "thue/error.hpp"

namespace thue {

namespace {

using i128 = __int128;
using Coeffs = std::array<i128, 3>;  // coefficients of (L0, L1, L2)

BigInt to_bigint(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(m >> 64));
  BigInt lo(static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFULL));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

struct PairSplit {
  Coeffs lead;  // log of the larger of |a1|, |ak|
  int sigma;    // |a1 - ak| = e^{lead} |1 + sigma e^{-delta}|
  Real delta;
};

PairSplit split_pair(const RootSet& roots, std::int64_t s, std::int64_t t, int k) {
  const auto& L = roots.log_abs_lambda;
  const std::array<Coeffs, 3> c = {Coeffs{s, t, 0}, Coeffs{0, s, t}, Coeffs{t, 0, s}};
  const std::array<int, 3> sg = {parity_sign(t), parity_sign(s) * parity_sign(t), parity_sign(s)};
  auto eval = [&](const Coeffs& v) {
    return L[0] * static_cast<long>(v[0]) + L[1] * static_cast<long>(v[1]) + L[2] * static_cast<long>(v[2]);
  };
  const Real la1 = eval(c[0]);
  const Real lak = eval(c[k]);
  PairSplit p;
  p.sigma = -sg[0] * sg[k];
  if (la1 >= lak) {
    p.lead = c[0];
    p.delta = la1 - lak;
  } else {
    p.lead = c[k];
    p.delta = lak - la1;
  }
  return p;
}

// Q = (a.L)(L0 - L2) + (b.L)(L1 - L2) reduced with L2 = -L0 - L1 to
// q00 L0^2 + q01 L0 L1 + q11 L1^2. Returns k with Q = k det when it exists,
// det = -(L0^2 + L0 L1 + L1^2).
bool lattice_multiple(const Coeffs& a, const Coeffs& b, i128& k) {
  const i128 A0 = a[0] - a[2], A1 = a[1] - a[2];
  const i128 B0 = b[0] - b[2], B1 = b[1] - b[2];
  const i128 q00 = 2 * A0 + B0;
  const i128 q01 = A0 + 2 * A1 + 2 * B0 + B1;
  const i128 q11 = A1 + 2 * B1;
  if (q00 != q01 || q01 != q11) return false;
  k = -q00;
  return true;
}

}  // namespace

ProofQuantities compute_proof_quantities(const BigInt& n, std::int64_t s, std::int64_t t, long precision_bits) {
  if (s == 0 || t == 0) throw Error(ErrorKind::DegenerateTwist, "proof quantities need st != 0");
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "proof quantities need n >= 2");
  widen_exponent_range();
  const std::int64_t m = std::max(s < 0 ? -(s + 1) : s, t < 0 ? -(t + 1) : t);
  const long extra = 2 * bit_length(n) + 2 * bit_length(BigInt(static_cast<long>(m)) + 1) + 64;

  for (int attempt = 0; attempt < 5; ++attempt) {
    const long p_int = precision_bits + (extra << attempt);
    const RootSet roots = compute_roots(n, p_int);
    const auto& L = roots.log_abs_lambda;
    const long wp = roots.working_bits;

    ProofQuantities q;
    q.n = n;
    q.s = s;
    q.t = t;
    q.precision_bits = precision_bits;
    q.working_bits = wp;
    q.det = roots.determinant;
    q.R = roots.regulator;
    q.diffs = log_differences(roots, s, t);
    const Real& d12 = q.diffs.d12;
    const Real& d13 = q.diffs.d13;

    q.u1 = L[0] - L[2];
    q.u2 = L[1] - L[2];
    // -u1 - u2 collapses to 3 L2 through L0 + L1 + L2 = 0; the explicit
    // form is kept so the identity stays testable.
    q.u_bar = -q.u1 - q.u2;
    q.v1 = d12 * L[0] - d13 * L[2];
    q.v2 = L[1] * d13 - L[2] * d12;

    const SignedLog inv12{q.diffs.sign12, -d12};
    const SignedLog inv13{q.diffs.sign13, -d13};
    q.w1 = to_signed_log(L[0]) * inv12 - to_signed_log(L[2]) * inv13;
    q.w2 = to_signed_log(L[1]) * inv13 - to_signed_log(L[2]) * inv12;
    // -w1 - w2 regrouped by denominator, which avoids cancelling two large
    // terms when |a1 - a2| and |a1 - a3| are small.
    q.w_bar = to_signed_log(L[2] - L[0]) * inv12 + to_signed_log(L[2] - L[1]) * inv13;
    q.log_wbar_ratio = q.w_bar.log_abs - const_log2(wp) - d12 - d13;

    const PairSplit p12 = split_pair(roots, s, t, 1);
    const PairSplit p13 = split_pair(roots, s, t, 2);
    i128 k = 0;
    if (lattice_multiple(p12.lead, p13.lead, k)) {
      const SignedLog c12 = log1p_signed_exp(p12.sigma, p12.delta);
      const SignedLog c13 = log1p_signed_exp(p13.sigma, p13.delta);
      const SignedLog C = c12 * to_signed_log(L[0] - L[2]) + c13 * to_signed_log(L[1] - L[2]);
      const Real logR = log(q.R);
      if (C.sign != 0 && C.log_abs < logR) {
        q.lattice = true;
        q.log_abs_c = C.log_abs;
        q.lattice_sign = C.sign;
        const Real c_abs = exp(C.log_abs);
        if (C.sign < 0) {
          q.b0 = to_bigint(-k);
          q.v_bar = c_abs;
          q.r_minus_v_bar = q.R - c_abs;
        } else {
          q.b0 = to_bigint(1 - k);
          q.v_bar = q.R - c_abs;
          q.r_minus_v_bar = c_abs;
        }
        q.v_bar_in_window = true;
        return q;
      }
    }

    const Real vsum = q.v1 + q.v2;
    const BigInt b0 = (vsum / q.R).floor() + 1;
    const Real vbar = q.R * b0 - vsum;
    const Real scale = abs(q.v1) + abs(q.v2) + abs(q.R * b0);
    Real err = scale;
    mpfr_mul_2si(err.get(), err.get(), -(wp - 8) + precision_bits / 2, MPFR_RNDN);
    const Real rem = q.R - vbar;
    if (vbar > err && rem > err) {
      q.b0 = b0;
      q.v_bar = vbar;
      q.r_minus_v_bar = rem;
      q.v_bar_in_window = true;
      return q;
    }
  }
  throw Error(ErrorKind::PrecisionExhausted, "v_bar not separated from 0 or R at n=" + n.get_str() +
                                                 ", (s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ")");
}

}  // namespace thue
