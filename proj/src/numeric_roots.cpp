#include "thue/numeric_roots.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <utility>

#include "thue/error.hpp"

namespace thue {

namespace {

struct Bracket {
  Real lo;
  Real hi;
};

Real eval_fn_derivative(const BigInt& n, const Real& x) {
  // 3x^2 - 2(n-1)x - (n+2)
  Real d = x * 3;
  d -= Real(BigInt(2 * (n - 1)), x.precision());
  d *= x;
  d -= Real(BigInt(n + 2), x.precision());
  return d;
}

bool opposite_signs(const BigInt& n, const Real& a, const Real& b) {
  const int sa = eval_fn(n, a).sign();
  const int sb = eval_fn(n, b).sign();
  return sa * sb < 0;
}

// Coarse brackets valid for every n >= 0: f_n(n) < 0 < f_n(n+2),
// f_n(-1) = 1 > 0 > f_n(0) = -1, and f_n(-2) = -2n-1 < 0.
Bracket coarse_bracket(const BigInt& n, int which, long prec) {
  switch (which) {
    case 0: return {Real(n, prec), Real(BigInt(n + 2), prec)};
    case 1: return {Real(-1L, prec), Real(0L, prec)};
    default: return {Real(-2L, prec), Real(-1L, prec)};
  }
}

// Leading terms of the root expansions padded by 3 n^{-2} (l0) or
// 3 n^{-3} (l1, l2).
std::optional<Bracket> tight_bracket(const BigInt& n, int which, long prec) {
  if (n < 10) return std::nullopt;
  const Real nr(n, prec);
  const Real inv = 1L / nr;
  const Real inv2 = inv * inv;
  Real centre(prec);
  Real pad(prec);
  switch (which) {
    case 0:
      centre = nr + inv * 2;
      pad = inv2 * 3;
      break;
    case 1:
      centre = inv2 - inv;
      pad = inv2 * inv * 3;
      break;
    default:
      centre = -inv - 1;
      pad = inv2 * inv * 3;
      break;
  }
  Bracket b{centre - pad, centre + pad};
  if (!opposite_signs(n, b.lo, b.hi)) return std::nullopt;
  return b;
}

// Safeguarded Newton iteration inside a sign-change bracket, then a final
// sign-change certificate at radius 2^{-(certified_bits)} |x|.
Real certified_root(const BigInt& n, int which, long working, long certified_bits) {
  Bracket br = tight_bracket(n, which, working).value_or(coarse_bracket(n, which, working));
  const int sign_lo = eval_fn(n, br.lo).sign();
  Real x = (br.lo + br.hi) / 2L;
  for (int iter = 0; iter < 4 * working + 64; ++iter) {
    const Real fx = eval_fn(n, x);
    if (fx.is_zero()) break;
    if (fx.sign() == sign_lo) {
      br.lo = x;
    } else {
      br.hi = x;
    }
    const Real d = eval_fn_derivative(n, x);
    Real next = d.is_zero() ? Real((br.lo + br.hi) / 2L) : Real(x - fx / d);
    if (next <= br.lo || next >= br.hi) next = (br.lo + br.hi) / 2L;
    Real step = abs(next - x);
    x = std::move(next);
    Real scale = max(abs(x), Real(1L, working));
    mpfr_mul_2si(scale.get(), scale.get(), -(working - 2), MPFR_RNDN);
    if (step <= scale) break;
  }
  Real radius = max(abs(x), Real(1L, working));
  mpfr_mul_2si(radius.get(), radius.get(), -certified_bits, MPFR_RNDN);
  if (!opposite_signs(n, x - radius, x + radius)) {
    throw Error(ErrorKind::PrecisionExhausted,
                "root " + std::to_string(which) + " of f_n not certified at " + std::to_string(certified_bits) +
                    " bits for n=" + n.get_str());
  }
  return x;
}

}  // namespace

Real eval_fn(const BigInt& n, const Real& x) {
  const long prec = x.precision();
  Real v = x - Real(BigInt(n - 1), prec);
  v *= x;
  v -= Real(BigInt(n + 2), prec);
  v *= x;
  v = v - 1L;
  return v;
}

long root_working_precision(const BigInt& n, long precision_bits) {
  return precision_bits + 3 * bit_length(n) + 40;
}

long alpha_working_precision(const BigInt& n, std::int64_t s, std::int64_t t, long precision_bits) {
  const double exps = std::fabs(static_cast<double>(s)) + std::fabs(static_cast<double>(t));
  const double lg = std::log2(Real(BigInt(n + 2), 64).to_double());
  return precision_bits + static_cast<long>(std::ceil(exps * lg)) + 32;
}

RootSet compute_roots(const BigInt& n, long precision_bits) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be non-negative");
  if (precision_bits < 64) throw Error(ErrorKind::InvalidArgument, "precision_bits must be at least 64");
  widen_exponent_range();
  // Sweeps ask for the same n over and over; keep the last few per thread.
  thread_local std::map<std::pair<std::string, long>, RootSet> memo;
  const auto key = std::pair{n.get_str(16), precision_bits};
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  if (memo.size() >= 256) memo.clear();
  const long working = root_working_precision(n, precision_bits);
  RootSet rs;
  rs.n = n;
  rs.precision_bits = precision_bits;
  rs.working_bits = working;
  for (int k = 0; k < 3; ++k) rs.lambda[k] = certified_root(n, k, working, precision_bits + 8);
  rs.log_abs_lambda[0] = log(rs.lambda[0]);
  rs.log_abs_lambda[1] = log(-rs.lambda[1]);
  // |l2| = 1 + (-l2 - 1) with -l2 - 1 in (0, 1); log1p keeps full relative
  // precision of this small logarithm.
  rs.log_abs_lambda[2] = log1p(-rs.lambda[2] - 1L);
  const auto& L = rs.log_abs_lambda;
  rs.determinant = L[1] * L[0] - L[2] * L[2];
  rs.regulator = abs(rs.determinant);
  memo.emplace(key, rs);
  return rs;
}

AlphaTriple compute_alphas(const BigInt& n, std::int64_t s, std::int64_t t, long precision_bits) {
  const long working = alpha_working_precision(n, s, t, precision_bits);
  const RootSet rs = compute_roots(n, working);
  AlphaTriple at;
  at.n = n;
  at.s = s;
  at.t = t;
  at.precision_bits = precision_bits;
  at.working_bits = rs.working_bits;
  const auto& l = rs.lambda;
  at.alpha[0] = pow(l[0], s) * pow(l[1], t);
  at.alpha[1] = pow(l[1], s) * pow(l[2], t);
  at.alpha[2] = pow(l[2], s) * pow(l[0], t);
  return at;
}

Real embed(const FieldInt& a, const Real& lambda) {
  const long prec = lambda.precision();
  Real v = Real(a.c2(), prec) * lambda;
  v += Real(a.c1(), prec);
  v *= lambda;
  v += Real(a.c0(), prec);
  return v;
}

Real regulator_from_pair(const RootSet& roots, int i, int j) {
  const auto& L = roots.log_abs_lambda;
  return abs(L[i % 3] * L[(j + 1) % 3] - L[j % 3] * L[(i + 1) % 3]);
}

}  // namespace thue
