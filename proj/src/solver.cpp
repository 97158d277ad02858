#include "thue/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>

#include "thue/error.hpp"
#include "thue/exact_field.hpp"
#include "thue/form_builder.hpp"
#include "thue/grid.hpp"

namespace thue {

namespace {

struct Hit {
  BigInt x;
  BigInt y;
  int value = 0;
};

long magnitude_bits(const AlphaTriple& a) {
  long bits = 0;
  for (const Real& v : a.alpha) bits = std::max(bits, static_cast<long>(mpfr_get_exp(v.get())));
  return bits;
}

// alpha = ip + hi + lo with ip integral and hi + lo the fractional part to
// about 106 bits.
struct SplitAlpha {
  std::int64_t ip = 0;
  double hi = 0.0;
  double lo = 0.0;
};

SplitAlpha split_alpha(const Real& a) {
  SplitAlpha sa;
  const BigInt fl = a.floor();
  sa.ip = fl.get_si();
  const Real frac = a - fl;
  sa.hi = frac.to_double();
  sa.lo = (frac - Real(sa.hi, frac.precision())).to_double();
  return sa;
}

void check_candidate(const BinaryCubicForm& form, std::int64_t x, std::int64_t y, std::vector<Hit>& hits) {
  const BigInt bx(static_cast<long>(x));
  const BigInt by(static_cast<long>(y));
  const BigInt v = eval_form(form, bx, by);
  if (v == 1 || v == -1) hits.push_back({bx, by, static_cast<int>(v.get_si())});
}

std::vector<Hit> scan_fast(const BinaryCubicForm& form, const std::array<SplitAlpha, 3>& sa, std::int64_t y0,
                           std::int64_t y1) {
  std::vector<Hit> hits;
  constexpr double kRel = 0x1p-50;
  constexpr double kAbs = 0x1p-90;
  std::array<std::int64_t, 9> cand{};
  for (std::int64_t y = y0; y <= y1; ++y) {
    const double yd = static_cast<double>(y);
    int nc = 0;
    for (int i = 0; i < 3; ++i) {
      const std::int64_t r = sa[i].ip * y + std::llround(sa[i].hi * yd);
      for (int d = -1; d <= 1; ++d) cand[nc++] = r + d;
    }
    std::sort(cand.begin(), cand.begin() + nc);
    nc = static_cast<int>(std::unique(cand.begin(), cand.begin() + nc) - cand.begin());
    for (int c = 0; c < nc; ++c) {
      const std::int64_t x = cand[c];
      double p_lo = 1.0;
      double p_hi = 1.0;
      for (int k = 0; k < 3; ++k) {
        const std::int64_t xi = x - sa[k].ip * y;
        const double ph = sa[k].hi * yd;
        const double pe = std::fma(sa[k].hi, yd, -ph);
        const double b = std::fabs(((static_cast<double>(xi) - ph) - pe) - sa[k].lo * yd);
        const double e = kRel * b + kAbs * yd;
        p_lo *= std::max(b - e, 0.0);
        p_hi *= b + e;
      }
      if (p_lo <= 1.0 && p_hi >= 1.0) check_candidate(form, x, y, hits);
    }
  }
  return hits;
}

std::vector<Hit> scan_slow(const BinaryCubicForm& form, const AlphaTriple& alphas, std::int64_t y0, std::int64_t y1) {
  std::vector<Hit> hits;
  for (std::int64_t y = y0; y <= y1; ++y) {
    const BigInt by(static_cast<long>(y));
    std::vector<BigInt> cand;
    for (const Real& a : alphas.alpha) {
      const BigInt r = (a * by).round();
      for (int d = -1; d <= 1; ++d) cand.push_back(r + d);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (const BigInt& x : cand) {
      const BigInt v = eval_form(form, x, by);
      if (v == 1 || v == -1) hits.push_back({x, by, static_cast<int>(v.get_si())});
    }
  }
  return hits;
}

}  // namespace

long beta_precision(const AlphaTriple& probe, const BigInt& x_max, const BigInt& y_max, long precision_bits) {
  const long size = std::max(bit_length(x_max), bit_length(y_max) + magnitude_bits(probe) + 1);
  return precision_bits + 3 * std::max(size, 1L) + 64;
}

std::array<Real, 3> beta_values(const BigInt& x, const BigInt& y, const AlphaTriple& alphas) {
  std::array<Real, 3> b;
  for (int i = 0; i < 3; ++i) {
    const long prec = alphas.alpha[i].precision();
    b[i] = Real(x, prec) - alphas.alpha[i] * y;
  }
  return b;
}

int classify_type(const BigInt& x, const BigInt& y, const AlphaTriple& alphas) {
  const auto b = beta_values(x, y, alphas);
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (abs(b[i]) < abs(b[best])) best = i;
  }
  return best + 1;
}

std::vector<SolutionRecord> solve_box(const BigInt& n, std::int64_t s, std::int64_t t, std::int64_t y_bound,
                                      const SolveOptions& options) {
  if (s == 0 && t == 0) throw Error(ErrorKind::DegenerateTwist, "(s,t) = (0,0) gives the form (x-y)^3");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be non-negative");
  if (y_bound < 1) throw Error(ErrorKind::InvalidArgument, "y_bound must be at least 1");
  widen_exponent_range();
  const BinaryCubicForm form = build_form(n, s, t);
  const AlphaTriple probe = compute_alphas(n, s, t, 64);
  const long mbits = magnitude_bits(probe);
  const BigInt ymax(static_cast<long>(y_bound));
  BigInt xmax = ymax + 2;
  xmax <<= static_cast<unsigned long>(std::max(mbits, 0L));
  const long prec = beta_precision(probe, xmax, ymax, options.precision_bits);
  const AlphaTriple alphas = compute_alphas(n, s, t, prec);

  const bool fast = mbits + bit_length(BigInt(static_cast<long>(y_bound) + 2)) <= 61;
  std::array<SplitAlpha, 3> sa{};
  if (fast) {
    for (int i = 0; i < 3; ++i) sa[i] = split_alpha(alphas.alpha[i]);
  }

  const unsigned jobs = std::max(1u, options.jobs);
  const std::int64_t stripes = std::min<std::int64_t>(y_bound, 16 * static_cast<std::int64_t>(jobs));
  const std::int64_t width = (y_bound + stripes - 1) / stripes;
  auto per_stripe = parallel_map(static_cast<std::size_t>(stripes), jobs, [&](std::size_t k) {
    const std::int64_t y0 = 1 + static_cast<std::int64_t>(k) * width;
    const std::int64_t y1 = std::min(y_bound, y0 + width - 1);
    if (y0 > y1) return std::vector<Hit>{};
    return fast ? scan_fast(form, sa, y0, y1) : scan_slow(form, alphas, y0, y1);
  });

  std::vector<Hit> hits = {{BigInt(1), BigInt(0), 1}, {BigInt(-1), BigInt(0), -1}};
  for (auto& stripe : per_stripe) {
    for (auto& h : stripe) {
      const BigInt mx = -h.x;
      const BigInt my = -h.y;
      const BigInt mv = eval_form(form, mx, my);
      hits.push_back(std::move(h));
      hits.push_back({mx, my, static_cast<int>(mv.get_si())});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    const int c = mpz_cmpabs(a.y.get_mpz_t(), b.y.get_mpz_t());
    if (c != 0) return c < 0;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  });
  hits.erase(std::unique(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.x == b.x && a.y == b.y; }),
             hits.end());

  std::vector<SolutionRecord> out;
  out.reserve(hits.size());
  for (const Hit& h : hits) {
    SolutionRecord r;
    r.x = h.x;
    r.y = h.y;
    r.value = h.value;
    const auto b = beta_values(h.x, h.y, alphas);
    for (int i = 0; i < 3; ++i) r.beta_abs[i] = abs(b[i]);
    r.type_j = classify_type(h.x, h.y, alphas);
    r.trivial = mpz_cmpabs_ui(h.y.get_mpz_t(), 1) <= 0;
    out.push_back(std::move(r));
  }
  return out;
}

TypeReduction reduce_to_type1(const BigInt& n, std::int64_t s, std::int64_t t, const SolutionRecord& rec,
                              long precision_bits) {
  TypeReduction red;
  if (rec.type_j == 2) {
    red.s = -t;
    red.t = s - t;
  } else if (rec.type_j == 3) {
    red.s = -s + t;
    red.t = -s;
  } else {
    throw Error(ErrorKind::InvalidArgument, "only type-2 and type-3 records are reduced");
  }
  const BinaryCubicForm f = build_form(n, red.s, red.t);
  if (eval_form(f, rec.x, rec.y) != rec.value) {
    throw Error(ErrorKind::NotReducible, "(" + rec.x.get_str() + "," + rec.y.get_str() +
                                             ") is not a solution under the transformed parameters");
  }
  const AlphaTriple probe = compute_alphas(n, red.s, red.t, 64);
  const long prec = beta_precision(probe, abs(rec.x), abs(rec.y), precision_bits);
  red.new_type = classify_type(rec.x, rec.y, compute_alphas(n, red.s, red.t, prec));
  if (red.new_type != 1) {
    throw Error(ErrorKind::NotReducible, "record re-classifies as type " + std::to_string(red.new_type));
  }
  return red;
}

UnitDecomposition decompose_unit(const BigInt& n, std::int64_t s, std::int64_t t, const SolutionRecord& rec,
                                 long precision_bits, const ProofQuantities* quantities) {
  const FieldInt beta1 = FieldInt::integer(n, rec.x) - alpha_element(n, s, t) * rec.y;
  const AlphaTriple probe = compute_alphas(n, s, t, 64);
  for (int attempt = 0; attempt < 4; ++attempt) {
    const long prec = beta_precision(probe, abs(rec.x), abs(rec.y), precision_bits << attempt);
    const AlphaTriple alphas = compute_alphas(n, s, t, prec);
    const RootSet roots = compute_roots(n, prec);
    const auto b = beta_values(rec.x, rec.y, alphas);
    if (b[1].is_zero() || b[2].is_zero()) continue;
    const auto& L = roots.log_abs_lambda;
    const Real lb2 = log(abs(b[1]));
    const Real lb3 = log(abs(b[2]));
    // log|beta2| = b1 L1 + b2 L2, log|beta3| = b1 L2 + b2 L0
    const Real b1r = (lb2 * L[0] - L[2] * lb3) / roots.determinant;
    const Real b2r = (L[1] * lb3 - L[2] * lb2) / roots.determinant;
    const BigInt r1 = b1r.round();
    const BigInt r2 = b2r.round();
    if (abs(b1r - r1) > Real(0.25, 64) || abs(b2r - r2) > Real(0.25, 64)) continue;
    if (!r1.fits_slong_p() || !r2.fits_slong_p()) {
      throw Error(ErrorKind::RoundingAmbiguous, "unit exponents exceed the machine range");
    }
    const FieldInt unit = alpha_element(n, r1.get_si(), r2.get_si());
    int sign = 0;
    if (beta1 == unit) {
      sign = 1;
    } else if (beta1 == -unit) {
      sign = -1;
    } else {
      continue;
    }
    UnitDecomposition d{r1, r2, sign, std::nullopt};
    if (quantities != nullptr) d.b_bar = quantities->b0 + r1 + r2;
    return d;
  }
  throw Error(ErrorKind::RoundingAmbiguous, "unit exponents of (" + rec.x.get_str() + "," + rec.y.get_str() +
                                                ") not resolved after precision retries");
}

}  // namespace thue
