#include "thue/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thue/error.hpp"

namespace thue {

namespace {

int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

Real log_abs_int(std::int64_t k, long prec) { return log_of(abs(BigInt(std::to_string(k))), prec); }

Rational q(std::int64_t num, std::int64_t den = 1) {
  Rational r(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
  r.canonicalize();
  return r;
}

// log|1 + sigma e^{-delta}| for delta >= 0.
Real log_one_plus_signed_exp(int sigma, const Real& delta) {
  if (sigma > 0) return log1p(exp(-delta));
  return log(-expm1(-delta));
}

}  // namespace

RootExpansion predict_root_expansion(const BigInt& n, int which, long precision_bits) {
  if (n < 4) throw Error(ErrorKind::InvalidArgument, "root expansions need n >= 4");
  const Real nr(n, precision_bits);
  const Real L = log(nr);
  const Real inv = 1L / nr;
  const Real inv2 = inv * inv;
  RootExpansion e;
  switch (which) {
    case 0:
      e.value = {nr, inv * 2, -2.0};
      e.log = {L, inv2 * 2, -3.0};
      break;
    case 1:
      e.value = {-inv, inv2, -3.0};
      e.log = {-L, -inv - inv2 * 3 / 2L, -3.0};
      break;
    case 2:
      e.value = {Real(-1L, precision_bits), -inv, -3.0};
      e.log = {inv, -inv2 / 2L, -3.0};
      break;
    default:
      throw Error(ErrorKind::InvalidArgument, "root index must be 0, 1 or 2");
  }
  return e;
}

Expansion predict_power(const BigInt& n, std::int64_t a, int which, const Rational& epsilon, long precision_bits) {
  const Real nr(n, precision_bits);
  const double eps2 = 2.0 * epsilon.get_d();
  const double ad = static_cast<double>(a);
  const int sg = parity_sign(a);
  switch (which) {
    case 0: {
      Real lead = pow(nr, static_cast<long>(a));
      Real corr = pow(nr, static_cast<long>(a - 2)) * static_cast<long>(2 * a);
      return {lead, corr, ad - 2.0 - eps2};
    }
    case 1: {
      Real lead = pow(nr, static_cast<long>(-a)) * static_cast<long>(sg);
      Real corr = pow(nr, static_cast<long>(-a - 1)) * static_cast<long>(-sg * a);
      return {lead, corr, -ad - 1.0 - eps2};
    }
    case 2: {
      Real lead(static_cast<long>(sg), precision_bits);
      Real corr = Real(static_cast<long>(sg * a), precision_bits) / nr;
      return {lead, corr, -1.0 - eps2};
    }
    default:
      throw Error(ErrorKind::InvalidArgument, "root index must be 0, 1 or 2");
  }
}

BigInt twist_limit(const BigInt& n, const Rational& epsilon) {
  Rational e = Rational(1, 2) - epsilon;
  e.canonicalize();
  if (sgn(e) <= 0 || epsilon <= 0) throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1/2)");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be non-negative");
  BigInt np;
  mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), e.get_num().get_ui());
  BigInt r;
  mpz_root(r.get_mpz_t(), np.get_mpz_t(), e.get_den().get_ui());
  return r;
}

std::string_view branch_name(LogDiffBranch b) {
  switch (b) {
    case LogDiffBranch::D12Above: return "d12_above";
    case LogDiffBranch::D12EdgeAbove: return "d12_edge_above";
    case LogDiffBranch::D12EqualOdd: return "d12_equal_odd";
    case LogDiffBranch::D12EqualEven: return "d12_equal_even";
    case LogDiffBranch::D12EdgeBelow: return "d12_edge_below";
    case LogDiffBranch::D12Below: return "d12_below";
    case LogDiffBranch::D13Above: return "d13_above";
    case LogDiffBranch::D13EdgeAbove: return "d13_edge_above";
    case LogDiffBranch::D13EqualEven: return "d13_equal_even";
    case LogDiffBranch::D13EqualOdd: return "d13_equal_odd";
    case LogDiffBranch::D13EdgeBelow: return "d13_edge_below";
    case LogDiffBranch::D13Below: return "d13_below";
  }
  return "?";
}

std::string_view branch_condition(LogDiffBranch b) {
  switch (b) {
    case LogDiffBranch::D12Above: return "2s > t+1";
    case LogDiffBranch::D12EdgeAbove: return "2s = t+1";
    case LogDiffBranch::D12EqualOdd: return "2s = t, s odd";
    case LogDiffBranch::D12EqualEven: return "2s = t, s even";
    case LogDiffBranch::D12EdgeBelow: return "2s = t-1";
    case LogDiffBranch::D12Below: return "2s < t-1";
    case LogDiffBranch::D13Above: return "s > 2t+1";
    case LogDiffBranch::D13EdgeAbove: return "s = 2t+1";
    case LogDiffBranch::D13EqualEven: return "s = 2t, t even";
    case LogDiffBranch::D13EqualOdd: return "s = 2t, t odd";
    case LogDiffBranch::D13EdgeBelow: return "s = 2t-1";
    case LogDiffBranch::D13Below: return "s < 2t-1";
  }
  return "?";
}

std::array<LogDiffBranch, kLogDiffBranchCount> all_branches() {
  std::array<LogDiffBranch, kLogDiffBranchCount> out{};
  for (int i = 0; i < kLogDiffBranchCount; ++i) out[i] = static_cast<LogDiffBranch>(i);
  return out;
}

CaseLabel classify_case(std::int64_t s, std::int64_t t) {
  const __int128 S = s;
  const __int128 T = t;
  CaseLabel c{};
  if (2 * S > T + 1) {
    c.d12 = LogDiffBranch::D12Above;
  } else if (2 * S == T + 1) {
    c.d12 = LogDiffBranch::D12EdgeAbove;
  } else if (2 * S == T) {
    c.d12 = (s % 2 != 0) ? LogDiffBranch::D12EqualOdd : LogDiffBranch::D12EqualEven;
  } else if (2 * S == T - 1) {
    c.d12 = LogDiffBranch::D12EdgeBelow;
  } else {
    c.d12 = LogDiffBranch::D12Below;
  }
  if (S > 2 * T + 1) {
    c.d13 = LogDiffBranch::D13Above;
  } else if (S == 2 * T + 1) {
    c.d13 = LogDiffBranch::D13EdgeAbove;
  } else if (S == 2 * T) {
    c.d13 = (t % 2 == 0) ? LogDiffBranch::D13EqualEven : LogDiffBranch::D13EqualOdd;
  } else if (S == 2 * T - 1) {
    c.d13 = LogDiffBranch::D13EdgeBelow;
  } else {
    c.d13 = LogDiffBranch::D13Below;
  }
  return c;
}

std::pair<Expansion, Expansion> predict_logdiff(const BigInt& n, std::int64_t s, std::int64_t t, LogDiffTable table,
                                                const Rational& epsilon, long precision_bits) {
  if (s == 0 || t == 0) throw Error(ErrorKind::DegenerateTwist, "log differences need st != 0");
  const long p = precision_bits;
  const Real nr(n, p);
  const Real L = log(nr);
  const Real log2 = const_log2(p);
  const double order = -1.0 - 2.0 * epsilon.get_d();
  const bool published = table == LogDiffTable::Published;
  const int ss = parity_sign(s);
  const int st = parity_sign(t);
  // k/n as an exact rational scaled into a Real
  auto over_n = [&](const Rational& k) { return Real(k, p) / nr; };
  auto lin = [&](std::int64_t k) { return L * static_cast<long>(k); };

  const CaseLabel c = classify_case(s, t);
  Expansion e12;
  e12.error_order = order;
  switch (c.d12) {
    case LogDiffBranch::D12Above:
      e12.leading = lin(s - t);
      e12.correction = over_n(q(-t));
      break;
    case LogDiffBranch::D12EdgeAbove:
      e12.leading = lin(s - t);
      e12.correction = over_n(published ? q(-(t - ss)) : q(-(t + ss)));
      break;
    case LogDiffBranch::D12EqualOdd:
      e12.leading = lin(s - t) + log2;
      e12.correction = over_n(published ? q(s - 2 * t, 2) : q(-s, 2));
      break;
    case LogDiffBranch::D12EqualEven:
      if (published) {
        e12.leading = lin(s - t - 1) + log_abs_int(s, p);
        e12.correction = Real(0L, p);
      } else {
        e12.leading = lin(s - t - 1) + log_abs_int(3 * s, p);
        e12.correction = over_n(q(-(s + 1), 2));
      }
      break;
    case LogDiffBranch::D12EdgeBelow:
      e12.leading = lin(-s);
      e12.correction = over_n(published ? q(s - t - ss) : q(t - s - ss));
      break;
    default:
      e12.leading = lin(-s);
      e12.correction = over_n(published ? q(s - t) : q(t - s));
      break;
  }

  Expansion e13;
  e13.error_order = order;
  switch (c.d13) {
    case LogDiffBranch::D13Above:
      e13.leading = lin(s - t);
      e13.correction = over_n(q(-t));
      break;
    case LogDiffBranch::D13EdgeAbove:
      e13.leading = lin(s - t);
      e13.correction = over_n(published ? q(-(t + st)) : q(-(t - st)));
      break;
    case LogDiffBranch::D13EqualEven:
      if (published) {
        e13.leading = lin(t) + log2;
        e13.correction = over_n(q(s - 2 * t, 2));
      } else {
        e13.leading = lin(t - 1) + log_abs_int(s + t, p);
        e13.correction = over_n(q(t - 1, 2));
      }
      break;
    case LogDiffBranch::D13EqualOdd:
      if (published) {
        e13.leading = lin(t - 1) + log_abs_int(s + t, p);
        e13.correction = Real(0L, p);
      } else {
        e13.leading = lin(t) + log2;
        e13.correction = over_n(q(t, 2));
      }
      break;
    case LogDiffBranch::D13EdgeBelow:
      e13.leading = lin(t);
      e13.correction = over_n(published ? q(s - st) : q(s + st));
      break;
    default:
      e13.leading = lin(t);
      e13.correction = over_n(q(s));
      break;
  }
  return {e12, e13};
}

LogDifferences log_differences(const RootSet& roots, std::int64_t s, std::int64_t t) {
  const auto& L = roots.log_abs_lambda;
  const std::array<Real, 3> la = {L[0] * static_cast<long>(s) + L[1] * static_cast<long>(t),
                                  L[1] * static_cast<long>(s) + L[2] * static_cast<long>(t),
                                  L[2] * static_cast<long>(s) + L[0] * static_cast<long>(t)};
  const std::array<int, 3> sg = {parity_sign(t), parity_sign(s) * parity_sign(t), parity_sign(s)};
  auto diff = [&](int k, Real& d, int& sign) {
    // |alpha1 - alphak| = e^{max} |1 - (alpha_small / alpha_big)|
    const int sigma = -sg[0] * sg[k];
    if (la[0] >= la[k]) {
      d = la[0] + log_one_plus_signed_exp(sigma, la[0] - la[k]);
      sign = sg[0];
    } else {
      d = la[k] + log_one_plus_signed_exp(sigma, la[k] - la[0]);
      sign = -sg[k];
    }
  };
  LogDifferences out;
  diff(1, out.d12, out.sign12);
  diff(2, out.d13, out.sign13);
  return out;
}

LogDifferences log_differences(const AlphaTriple& alphas) {
  const Real a12 = alphas.alpha[0] - alphas.alpha[1];
  const Real a13 = alphas.alpha[0] - alphas.alpha[2];
  return {log(abs(a12)), log(abs(a13)), a12.sign(), a13.sign()};
}

ErrorProductReport check_error_products(const BigInt& n, std::int64_t s, std::int64_t t,
                                        const LogDifferences& diffs) {
  ErrorProductReport r;
  r.n = n;
  r.s = s;
  r.t = t;
  r.first_exempt = (s == 1 && t == 1) || (s == -1 && t == -1);
  const long p = diffs.d12.precision();
  const Real logn = log_of(n, p);
  const Real log23 = log(Real(Rational(2, 3), p));
  r.log_product = diffs.d12 + diffs.d13;
  const Real m1 = diffs.d12 * 2 + diffs.d13;
  const Real m2 = diffs.d12 + diffs.d13 * 2;
  r.log_min_mixed = min(m1, m2);
  r.log_max_mixed = max(m1, m2);
  r.log_margin[0] = r.log_product - (log23 + logn * 2);
  r.log_margin[1] = r.log_min_mixed - (log23 + logn);
  r.log_margin[2] = r.log_max_mixed - (log23 + logn * 2);
  for (int i = 0; i < 3; ++i) r.holds[i] = r.log_margin[i] > 0;
  return r;
}

ErrorProductReport check_error_products(const BigInt& n, std::int64_t s, std::int64_t t,
                                        const AlphaTriple& alphas) {
  return check_error_products(n, s, t, log_differences(alphas));
}

ExponentFit fit_error_exponent(const std::vector<FitSample>& samples) {
  std::vector<double> xs;
  std::vector<double> ys;
  bool any_nonzero = false;
  for (const auto& smp : samples) {
    if (smp.residual.is_zero()) continue;
    any_nonzero = true;
    xs.push_back(log_of(smp.n, 64).to_double());
    ys.push_back(log(abs(smp.residual)).to_double());
  }
  if (!samples.empty() && !any_nonzero) throw Error(ErrorKind::ExactMatch, "every residual is exactly zero");
  if (xs.size() < 5) {
    throw Error(ErrorKind::InsufficientSamples, std::to_string(xs.size()) + " usable samples, need at least 5");
  }
  const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  const double decades = (*xmax - *xmin) / std::log(10.0);
  if (decades < 2.0 - 1e-9) {
    throw Error(ErrorKind::InsufficientSamples, "samples span " + std::to_string(decades) + " decades, need 2");
  }
  const double N = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= N;
  my /= N;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  ExponentFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (f.intercept + f.slope * xs[i]);
    sse += e * e;
  }
  f.rms = std::sqrt(sse / N);
  f.slope_stderr = std::sqrt(sse / (N - 2) / sxx);
  f.samples = xs.size();
  f.decades = decades;
  return f;
}

}  // namespace thue
