#include "thue/lemma_harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "thue/error.hpp"
#include "thue/grid.hpp"
#include "thue/numeric_roots.hpp"
#include "thue/proof_quantities.hpp"

namespace thue {

namespace {

using Rows = std::vector<LemmaRow>;

std::string pair_label(std::int64_t s, std::int64_t t) {
  return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

LemmaRow value_row(const BigInt& n, std::string quantity, const Real& predicted, const Real& actual,
                   const Real& scale) {
  LemmaRow r;
  r.n = n;
  r.quantity = std::move(quantity);
  r.predicted = predicted;
  r.actual = actual;
  r.residual = actual - predicted;
  r.scaled = r.residual * scale;
  return r;
}

LemmaRow margin_row(const BigInt& n, std::int64_t s, std::int64_t t, std::string quantity, const Real& actual,
                    const Real& margin, bool counted) {
  LemmaRow r;
  r.n = n;
  r.s = s;
  r.t = t;
  r.quantity = std::move(quantity);
  r.actual = actual;
  r.residual = margin;
  r.scaled = margin;
  r.holds = margin.sign() > 0;
  r.counted = counted;
  return r;
}

LemmaFit make_fit(std::string quantity, const std::vector<FitSample>& samples, double target, double tolerance,
                  SlopeRule rule) {
  LemmaFit f;
  f.quantity = std::move(quantity);
  f.target = target;
  f.tolerance = tolerance;
  f.rule = rule;
  try {
    f.fit = fit_error_exponent(samples);
    const double s = f.fit->slope;
    switch (rule) {
      case SlopeRule::AtMost: f.pass = s <= target + tolerance; break;
      case SlopeRule::Within: f.pass = s >= target - tolerance && s <= target + tolerance; break;
      case SlopeRule::AtLeast: f.pass = s >= target - tolerance; break;
    }
  } catch (const Error& e) {
    f.fit_error = e.what();
    // Exact zeros satisfy any error bound; a missing fit is reported but
    // neither passes nor fails the lemma.
    f.pass = e.kind() == ErrorKind::ExactMatch;
  }
  return f;
}

// Samples grouped by a key, keeping first-seen order of keys.
struct SampleGroups {
  std::vector<std::string> order;
  std::map<std::string, std::vector<FitSample>> by_key;

  void add(const std::string& key, const BigInt& n, const Real& v) {
    auto [it, fresh] = by_key.try_emplace(key);
    if (fresh) order.push_back(key);
    it->second.push_back({n, v});
  }
};

struct Context {
  const LemmaOptions& opt;
  BigInt n_min;
  std::int64_t smax;  // capped by the twist limit at n_min

  long guard(const BigInt& n) const {
    return 2 * bit_length(n) + 2 * bit_length(BigInt(std::to_string(smax)) + 1) + 64;
  }
  RootSet roots(const BigInt& n) const { return compute_roots(n, opt.precision_bits + guard(n)); }
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t s = -smax; s <= smax; ++s) {
      for (std::int64_t t = -smax; t <= smax; ++t) {
        if (s != 0 && t != 0) out.push_back({s, t});
      }
    }
    return out;
  }
  template <class F>
  Rows per_n(F&& fn) const {
    auto parts = parallel_map(opt.n_grid.size(), opt.jobs, [&](std::size_t i) { return fn(opt.n_grid[i]); });
    Rows rows;
    for (auto& p : parts) {
      for (auto& r : p) rows.push_back(std::move(r));
    }
    return rows;
  }
  template <class F>
  Rows per_point(F&& fn) const {
    const auto ps = pairs();
    const std::size_t cells = opt.n_grid.size() * ps.size();
    auto parts = parallel_map(cells, opt.jobs, [&](std::size_t k) {
      const auto& [s, t] = ps[k % ps.size()];
      return fn(opt.n_grid[k / ps.size()], s, t);
    });
    Rows rows;
    for (auto& p : parts) {
      for (auto& r : p) rows.push_back(std::move(r));
    }
    return rows;
  }
};

Real pow_n(const BigInt& n, double e, long prec) { return pow(Real(n, prec), Real(e, prec)); }

void lapprox(const Context& c, LemmaReport& rep) {
  if (c.n_min < 4) throw Error(ErrorKind::InvalidArgument, "root expansions need n >= 4");
  const long p = c.opt.precision_bits;
  rep.rows = c.per_n([&](const BigInt& n) {
    const RootSet roots = c.roots(n);
    Rows out;
    for (int which = 0; which < 3; ++which) {
      const RootExpansion e = predict_root_expansion(n, which, roots.working_bits);
      const std::string idx = std::to_string(which);
      out.push_back(value_row(n, "lambda" + idx, e.value.value(), roots.lambda[which],
                              pow_n(n, -e.value.error_order, p)));
      out.push_back(value_row(n, "log|lambda" + idx + "|", e.log.value(), roots.log_abs_lambda[which],
                              pow_n(n, -e.log.error_order, p)));
    }
    return out;
  });
  SampleGroups g;
  std::map<std::string, double> order;
  for (int which = 0; which < 3; ++which) {
    const RootExpansion e = predict_root_expansion(BigInt(4), which, 64);
    order["lambda" + std::to_string(which)] = e.value.error_order;
    order["log|lambda" + std::to_string(which) + "|"] = e.log.error_order;
  }
  for (const auto& r : rep.rows) g.add(r.quantity, r.n, r.residual);
  for (const auto& k : g.order) rep.fits.push_back(make_fit(k, g.by_key[k], order[k], 0.3, SlopeRule::AtMost));
}

void lpowers(const Context& c, LemmaReport& rep) {
  if (c.n_min < 4) throw Error(ErrorKind::InvalidArgument, "power expansions need n >= 4");
  const long p = c.opt.precision_bits;
  std::map<std::string, double> order;
  rep.rows = c.per_n([&](const BigInt& n) {
    const RootSet roots = c.roots(n);
    Rows out;
    for (int which = 0; which < 3; ++which) {
      for (std::int64_t a = -c.smax; a <= c.smax; ++a) {
        if (a == 0) continue;
        const Expansion e = predict_power(n, a, which, c.opt.epsilon, roots.working_bits);
        const Real actual = pow(roots.lambda[which], static_cast<long>(a));
        out.push_back(value_row(n, "lambda" + std::to_string(which) + "^" + std::to_string(a), e.value(), actual,
                                pow_n(n, -e.error_order, p)));
      }
    }
    return out;
  });
  for (int which = 0; which < 3; ++which) {
    for (std::int64_t a = -c.smax; a <= c.smax; ++a) {
      if (a == 0) continue;
      order["lambda" + std::to_string(which) + "^" + std::to_string(a)] =
          predict_power(BigInt(4), a, which, c.opt.epsilon, 64).error_order;
    }
  }
  SampleGroups g;
  for (const auto& r : rep.rows) g.add(r.quantity, r.n, r.residual);
  for (const auto& k : g.order) rep.fits.push_back(make_fit(k, g.by_key[k], order[k], 0.3, SlopeRule::AtMost));
}

void regulator(const Context& c, LemmaReport& rep) {
  if (c.n_min < 2) throw Error(ErrorKind::InvalidArgument, "regulator expansion needs n >= 2");
  rep.rows = c.per_n([&](const BigInt& n) {
    const RootSet roots = c.roots(n);
    const long p = roots.working_bits;
    const Real L = log(Real(n, p));
    const Real predicted = L * L + L / Real(n, p);
    Rows out;
    out.push_back(value_row(n, "(R - (log n)^2 - log n/n)/log n", predicted / L, roots.regulator / L, Real(1L, p)));
    // every fundamental pair gives the same regulator
    Real worst(0L, p);
    for (int i = 0; i < 3; ++i) worst = max(worst, abs(regulator_from_pair(roots, i, (i + 1) % 3) - roots.regulator));
    Real tol = roots.regulator;
    mpfr_mul_2si(tol.get(), tol.get(), -(c.opt.precision_bits - 16), MPFR_RNDN);
    out.push_back(margin_row(n, 0, 0, "unit pairs agree", worst, tol - worst, true));
    return out;
  });
  std::vector<FitSample> samples;
  for (const auto& r : rep.rows) {
    if (r.predicted) samples.push_back({r.n, r.residual});
  }
  rep.fits.push_back(make_fit("(R - (log n)^2 - log n/n)/log n", samples, -2.0, 0.3, SlopeRule::Within));
}

void logdiff(const Context& c, LemmaReport& rep) {
  if (c.n_min < 4) throw Error(ErrorKind::InvalidArgument, "log differences need n >= 4");
  const long p = c.opt.precision_bits;
  const double order = -1.0 - 2.0 * c.opt.epsilon.get_d();
  rep.rows = c.per_n([&](const BigInt& n) {
    const RootSet roots = c.roots(n);
    const Real scale = pow_n(n, -order, p);
    Rows out;
    for (const auto& [s, t] : c.pairs()) {
      const LogDifferences d = log_differences(roots, s, t);
      const auto [e12, e13] = predict_logdiff(n, s, t, c.opt.table, c.opt.epsilon, roots.working_bits);
      const CaseLabel cl = classify_case(s, t);
      LemmaRow r12 = value_row(n, std::string(branch_name(cl.d12)), e12.value(), d.d12, scale);
      LemmaRow r13 = value_row(n, std::string(branch_name(cl.d13)), e13.value(), d.d13, scale);
      r12.s = r13.s = s;
      r12.t = r13.t = t;
      out.push_back(std::move(r12));
      out.push_back(std::move(r13));
    }
    return out;
  });
  SampleGroups g;
  std::set<std::string> seen;
  for (const auto& r : rep.rows) {
    seen.insert(r.quantity);
    g.add(r.quantity + " " + pair_label(r.s, r.t), r.n, r.scaled);
  }
  for (const auto& k : g.order) rep.fits.push_back(make_fit(k, g.by_key[k], 0.0, 0.3, SlopeRule::AtMost));
  std::string missing;
  for (LogDiffBranch b : all_branches()) {
    if (!seen.count(std::string(branch_name(b)))) missing += " " + std::string(branch_name(b));
  }
  rep.summary.push_back("branches exercised: " + std::to_string(seen.size()) + "/" +
                        std::to_string(kLogDiffBranchCount) + (missing.empty() ? "" : ", missing:" + missing));
  rep.summary.push_back(std::string("table: ") +
                        (c.opt.table == LogDiffTable::Published ? "published" : "corrected"));
  if (!missing.empty()) rep.summary.push_back("coverage incomplete");
}

void errorbound(const Context& c, LemmaReport& rep) {
  if (c.n_min < 2) throw Error(ErrorKind::InvalidArgument, "error products need n >= 2");
  static const char* kNames[3] = {"|a12||a13| > 2/3 n^2", "min mixed > 2/3 n", "max mixed > 2/3 n^2"};
  rep.rows = c.per_n([&](const BigInt& n) {
    const RootSet roots = c.roots(n);
    Rows out;
    for (const auto& [s, t] : c.pairs()) {
      const ErrorProductReport e = check_error_products(n, s, t, log_differences(roots, s, t));
      const std::array<const Real*, 3> actual = {&e.log_product, &e.log_min_mixed, &e.log_max_mixed};
      for (int i = 0; i < 3; ++i) {
        const bool counted = !(i == 0 && e.first_exempt);
        out.push_back(margin_row(n, s, t, kNames[i], *actual[i], e.log_margin[i], counted));
      }
    }
    return out;
  });
}

void vbar(const Context& c, LemmaReport& rep) {
  rep.rows = c.per_point([&](const BigInt& n, std::int64_t s, std::int64_t t) {
    const ProofQuantities q = compute_proof_quantities(n, s, t, c.opt.precision_bits);
    const long p = q.working_bits;
    const Real nr(n, p);
    const Real logn = log(nr);
    const bool grown = n >= c.opt.growth_from;
    Rows out;
    out.push_back(margin_row(n, s, t, "0 < v_bar < R", q.v_bar, min(q.v_bar, q.r_minus_v_bar), true));
    out.push_back(margin_row(n, s, t, "v_bar n/log n >= 1/2", q.v_bar * nr / logn,
                             q.v_bar * nr / logn - Real(Rational(1, 2), p), grown));
    LemmaRow g = margin_row(n, s, t, "(R - v_bar)/log n", q.r_minus_v_bar / logn, q.r_minus_v_bar / logn, grown);
    out.push_back(std::move(g));
    return out;
  });
  SampleGroups g;
  std::optional<Real> least;
  std::pair<std::int64_t, std::int64_t> least_at{0, 0};
  for (const auto& r : rep.rows) {
    if (r.quantity != "(R - v_bar)/log n" || !r.counted) continue;
    g.add(r.quantity + " " + pair_label(r.s, r.t), r.n, r.actual);
    if (!least || r.actual < *least) {
      least = r.actual;
      least_at = {r.s, r.t};
    }
  }
  for (const auto& k : g.order) rep.fits.push_back(make_fit(k, g.by_key[k], 0.0, 0.3, SlopeRule::AtLeast));
  if (least) {
    rep.summary.push_back("min (R - v_bar)/log n for n >= " + c.opt.growth_from.get_str() + ": " + least->str(6) +
                          " at " + pair_label(least_at.first, least_at.second));
  }
}

void ubar(const Context& c, LemmaReport& rep) {
  if (c.n_min < 2) throw Error(ErrorKind::InvalidArgument, "u_bar needs n >= 2");
  rep.rows = c.per_n([&](const BigInt& n) {
    const ProofQuantities q = compute_proof_quantities(n, 1, 1, c.opt.precision_bits);
    const long p = q.working_bits;
    Rows out;
    out.push_back(value_row(n, "u_bar n", Real(3L, p), q.u_bar * Real(n, p), Real(n, p)));
    if (n >= 1000000) {
      out.push_back(margin_row(n, 0, 0, "|u_bar n - 3| < 0.1", q.u_bar * Real(n, p),
                               Real(Rational(1, 10), p) - abs(q.u_bar * Real(n, p) - 3L), true));
    }
    return out;
  });
  std::vector<FitSample> samples;
  for (const auto& r : rep.rows) {
    if (r.predicted) samples.push_back({r.n, r.residual});
  }
  rep.fits.push_back(make_fit("u_bar n - 3", samples, -1.0, 0.3, SlopeRule::AtMost));
}

void wbar(const Context& c, LemmaReport& rep) {
  rep.rows = c.per_point([&](const BigInt& n, std::int64_t s, std::int64_t t) {
    const ProofQuantities q = compute_proof_quantities(n, s, t, c.opt.precision_bits);
    const long p = q.working_bits;
    const Real nr(n, p);
    const Real bound = log(log(nr) / nr * 3 / 4L);
    Rows out;
    if (q.w_bar.sign == 0) {
      out.push_back(margin_row(n, s, t, "log(|w_bar|/(2|a12||a13|)) < log(3/4 log n/n)", bound, Real(1L, p),
                               n >= c.opt.growth_from));
    } else {
      out.push_back(margin_row(n, s, t, "log(|w_bar|/(2|a12||a13|)) < log(3/4 log n/n)", q.log_wbar_ratio,
                               bound - q.log_wbar_ratio, n >= c.opt.growth_from));
    }
    return out;
  });
}

struct LemmaDef {
  std::string_view name;
  std::string_view anchor;
  void (*run)(const Context&, LemmaReport&);
};

const std::vector<LemmaDef>& registry() {
  static const std::vector<LemmaDef> defs = {
      {"lapprox", "lambda0 = n + 2/n + O(n^-2); lambda1 = -1/n + 1/n^2 + O(n^-3); lambda2 = -1 - 1/n + O(n^-3)",
       lapprox},
      {"lpowers", "lambda_i^a to two terms for |a| <= n^(1/2 - eps)", lpowers},
      {"regulator", "R = (log n)^2 + (log n)/n + O(log n / n^2)", regulator},
      {"logdiff", "log|a1 - a2|, log|a1 - a3| up to O(n^(-1 - 2 eps)) in 12 branches", logdiff},
      {"errorbound", "|a12||a13| > 2/3 n^2 (except (+-1,+-1)); min mixed > 2/3 n; max mixed > 2/3 n^2", errorbound},
      {"vbar", "0 < v_bar < R; v_bar >= (log n)/n (1 + o(1)); R - v_bar = Omega(log n)", vbar},
      {"ubar", "u_bar = 3/n + O(n^-2)", ubar},
      {"wbar", "|w_bar| / (2 |a12| |a13|) < (3/4) log n / n", wbar},
  };
  return defs;
}

}  // namespace

std::vector<std::string_view> lemma_names() {
  std::vector<std::string_view> out;
  for (const auto& d : registry()) out.push_back(d.name);
  return out;
}

LemmaReport run_lemma(std::string_view name, const LemmaOptions& options) {
  const LemmaDef* def = nullptr;
  for (const auto& d : registry()) {
    if (d.name == name) def = &d;
  }
  if (def == nullptr) {
    std::string valid;
    for (const auto& d : registry()) valid += (valid.empty() ? "" : ", ") + std::string(d.name);
    throw Error(ErrorKind::InvalidArgument, "unknown lemma '" + std::string(name) + "'; valid names: " + valid);
  }
  if (options.n_grid.empty()) throw Error(ErrorKind::EmptyGrid, "lemma '" + std::string(name) + "' needs n values");
  if (options.smax < 1) throw Error(ErrorKind::InvalidArgument, "smax must be at least 1");
  widen_exponent_range();

  const BigInt n_min = *std::min_element(options.n_grid.begin(), options.n_grid.end());
  const BigInt limit = twist_limit(n_min, options.epsilon);
  std::int64_t smax = options.smax;
  if (limit < smax) smax = std::max<std::int64_t>(1, limit.get_si());
  const Context ctx{options, n_min, smax};

  LemmaReport rep;
  rep.lemma = std::string(def->name);
  rep.anchor = std::string(def->anchor);
  rep.precision_bits = options.precision_bits;
  def->run(ctx, rep);

  std::size_t counted = 0, failed = 0;
  for (const auto& r : rep.rows) {
    if (!r.counted) continue;
    ++counted;
    if (!r.holds) ++failed;
  }
  std::size_t fits_failed = 0, fits_missing = 0;
  for (const auto& f : rep.fits) {
    if (!f.fit && !f.pass) ++fits_missing;
    if (f.fit && !f.pass) ++fits_failed;
  }
  if (smax < options.smax) {
    rep.summary.push_back("|s|,|t| capped at " + std::to_string(smax) + " = floor(n^(1/2-eps)) at n = " +
                          n_min.get_str());
  }
  rep.summary.push_back("checks: " + std::to_string(counted - failed) + "/" + std::to_string(counted) + " hold");
  if (!rep.fits.empty()) {
    rep.summary.push_back("fits: " + std::to_string(rep.fits.size() - fits_failed - fits_missing) + "/" +
                          std::to_string(rep.fits.size()) + " pass" +
                          (fits_missing ? ", " + std::to_string(fits_missing) + " without enough samples" : ""));
  }
  bool coverage_ok = true;
  for (const auto& s : rep.summary) {
    if (s == "coverage incomplete") coverage_ok = false;
  }
  rep.pass = failed == 0 && fits_failed == 0 && coverage_ok;
  return rep;
}

}  // namespace thue
