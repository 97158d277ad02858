// Acceptance run: one [PASS]/[FAIL] line per criterion, details indented
// below it. Exit status 0 only if every selected criterion passes.
//
// Criteria 9-11 check the solution records produced by criteria 7-8. Those
// records are regenerated when a criterion runs on its own; the timing
// printed for 9-11 covers only their own checks.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "oracle.hpp"
#include "thue/bounds.hpp"
#include "thue/error.hpp"
#include "thue/exact_field.hpp"
#include "thue/form_builder.hpp"
#include "thue/grid.hpp"
#include "thue/lemma_harness.hpp"
#include "thue/solver.hpp"

using namespace thue;

namespace {

struct Outcome {
  bool pass = false;
  std::string headline;
  std::vector<std::string> details;
};

struct Found {
  BigInt n;
  std::int64_t s, t;
  SolutionRecord rec;
};

unsigned jobs = default_jobs();

std::string fmt(double v, int digits = 3) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

std::string pair_str(std::int64_t s, std::int64_t t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

std::vector<Found> solve_cells(const std::vector<std::tuple<long, std::int64_t, std::int64_t>>& cells, std::int64_t yb) {
  auto per = parallel_map(cells.size(), jobs, [&](std::size_t k) {
    const auto& [n, s, t] = cells[k];
    return solve_box(BigInt(n), s, t, yb);
  });
  std::vector<Found> out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto& [n, s, t] = cells[k];
    for (auto& r : per[k]) out.push_back({BigInt(n), s, t, std::move(r)});
  }
  return out;
}

std::vector<std::tuple<long, std::int64_t, std::int64_t>> cells7() {
  std::vector<std::tuple<long, std::int64_t, std::int64_t>> c;
  for (long n = 0; n <= 8; ++n) {
    for (std::int64_t s = -2; s <= 2; ++s) {
      for (std::int64_t t = -2; t <= 2; ++t) {
        if (s != 0 || t != 0) c.push_back({n, s, t});
      }
    }
  }
  return c;
}

std::vector<std::tuple<long, std::int64_t, std::int64_t>> cells8() {
  std::vector<std::tuple<long, std::int64_t, std::int64_t>> c;
  for (long n = 50; n <= 200; ++n) {
    for (std::int64_t s = -3; s <= 3; ++s) {
      for (std::int64_t t = -3; t <= 3; ++t) {
        if (s != 0 && t != 0) c.push_back({n, s, t});
      }
    }
  }
  return c;
}

std::vector<Found> found7, found8;
bool have7 = false, have8 = false;

const std::vector<Found>& records7() {
  if (!have7) {
    found7 = solve_cells(cells7(), 200);
    have7 = true;
  }
  return found7;
}

const std::vector<Found>& records8() {
  if (!have8) {
    found8 = solve_cells(cells8(), 10000);
    have8 = true;
  }
  return found8;
}

std::vector<const Found*> all_records() {
  std::vector<const Found*> out;
  for (const auto& f : records7()) out.push_back(&f);
  for (const auto& f : records8()) out.push_back(&f);
  return out;
}

Outcome criterion1() {
  Outcome o;
  std::size_t forms = 0, mismatches = 0;
  double worst = 0;
  for (long n = 2; n <= 40; ++n) {
    for (std::int64_t s = -5; s <= 5; ++s) {
      for (std::int64_t t = -5; t <= 5; ++t) {
        if (s == 0 || t == 0) continue;
        ++forms;
        const auto f = build_form(BigInt(n), s, t);
        const auto a = compute_alphas(BigInt(n), s, t, 256);
        const auto& [a1, a2, a3] = a.alpha;
        const std::array<Real, 4> c = {Real(1L, a1.precision()), -(a1 + a2 + a3), a1 * a2 + a1 * a3 + a2 * a3,
                                       -(a1 * a2 * a3)};
        const std::array<BigInt, 4> want = {BigInt(1), f.A, f.B, BigInt(-1)};
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
          const Real resid = abs(c[i] - Real(want[i], c[i].precision()));
          worst = std::max(worst, resid.to_double());
          if (c[i].round() != want[i] || !(resid < Real("0.5", resid.precision()))) ok = false;
        }
        if (!ok) {
          ++mismatches;
          if (mismatches <= 5) o.details.push_back("mismatch at n=" + std::to_string(n) + " " + pair_str(s, t));
        }
      }
    }
  }
  o.pass = mismatches == 0;
  std::ostringstream h;
  h << forms << " forms, " << mismatches << " mismatches, largest pre-rounding residual " << worst;
  o.headline = h.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t bad = 0;
  for (long n = 0; n <= 1000; ++n) {
    const BigInt q = BigInt(n) * n + n + 7;
    if (discriminant(build_form(BigInt(n), 1, 0)) != q * q) {
      ++bad;
      if (bad <= 5) o.details.push_back("n=" + std::to_string(n));
    }
  }
  o.pass = bad == 0;
  o.headline = "n = 0..1000, " + std::to_string(bad) + " mismatches with (n^2+n+7)^2";
  return o;
}

LemmaOptions lemma_opts(const char* grid, std::int64_t smax) {
  LemmaOptions opt;
  opt.n_grid = parse_n_grid(grid);
  opt.smax = smax;
  opt.jobs = jobs;
  return opt;
}

void add_fit_details(const LemmaReport& rep, Outcome& o, bool failing_only) {
  for (const auto& f : rep.fits) {
    if (failing_only && f.pass) continue;
    std::string line = f.quantity + ": ";
    line += f.fit ? "slope " + fmt(f.fit->slope) : f.fit_error;
    line += f.pass ? " ok" : " FAILS";
    o.details.push_back(line);
  }
}

Outcome criterion3() {
  const LemmaReport rep = run_lemma("regulator", lemma_opts("100:1000000:log10/2", 3));
  Outcome o;
  o.pass = rep.pass;
  for (const auto& f : rep.fits) {
    if (f.fit) o.headline = "fitted exponent " + fmt(f.fit->slope) + " (want -2 +- 0.3) over " +
                            std::to_string(f.fit->samples) + " n values";
  }
  for (const auto& s : rep.summary) o.details.push_back(s);
  return o;
}

Outcome criterion4() {
  LemmaOptions opt = lemma_opts("1000:1000000:log10/2", 5);
  opt.table = LogDiffTable::Published;
  const LemmaReport pub = run_lemma("logdiff", opt);
  std::size_t failing = 0;
  for (const auto& f : pub.fits) failing += f.fit && !f.pass;
  Outcome o;
  o.pass = pub.pass;
  o.headline = "published table: " + std::to_string(failing) + " of " + std::to_string(pub.fits.size()) +
               " (branch, s, t) fits exceed slope 0 + 0.3";
  for (const auto& s : pub.summary) o.details.push_back(s);
  std::size_t shown = 0;
  for (const auto& f : pub.fits) {
    if (f.pass || !f.fit || shown >= 8) continue;
    o.details.push_back(f.quantity + ": slope " + fmt(f.fit->slope) + " FAILS");
    ++shown;
  }
  opt.table = LogDiffTable::Corrected;
  const LemmaReport cor = run_lemma("logdiff", opt);
  std::size_t cor_ok = 0;
  for (const auto& f : cor.fits) cor_ok += f.pass;
  o.details.push_back("diagnostic, corrected 1/n coefficients: " + std::to_string(cor_ok) + "/" +
                      std::to_string(cor.fits.size()) + " fits pass, overall " + (cor.pass ? "PASS" : "FAIL"));
  for (const auto& s : cor.summary) {
    if (s.find("branches") != std::string::npos) o.details.push_back("  " + s);
  }
  return o;
}

Outcome criterion5() {
  const LemmaReport rep = run_lemma("errorbound", lemma_opts("1000:1000000:log10/2", 5));
  Outcome o;
  o.pass = rep.pass;
  std::map<std::string, std::size_t> fails;
  std::size_t counted = 0, held = 0;
  for (const auto& r : rep.rows) {
    if (!r.counted) continue;
    ++counted;
    held += r.holds;
    if (!r.holds) ++fails[r.quantity + " at " + pair_str(r.s, r.t)];
  }
  o.headline = std::to_string(held) + "/" + std::to_string(counted) + " bound checks hold (n = 10^3..10^6, |s|,|t| <= 5)";
  for (const auto& [k, v] : fails) o.details.push_back(k + " fails at " + std::to_string(v) + " n values");
  return o;
}

Outcome criterion6() {
  const LemmaReport rep = run_lemma("vbar", lemma_opts("1000:1000000:log10/2", 5));
  Outcome o;
  o.pass = rep.pass;
  std::size_t counted = 0, held = 0, window = 0, window_ok = 0;
  std::map<std::string, std::size_t> fails;
  for (const auto& r : rep.rows) {
    if (r.quantity == "0 < v_bar < R") {
      ++window;
      window_ok += r.holds;
    }
    if (!r.counted) continue;
    ++counted;
    held += r.holds;
    if (!r.holds) ++fails[r.quantity];
  }
  std::size_t fits_ok = 0;
  for (const auto& f : rep.fits) fits_ok += f.pass;
  o.headline = "window " + std::to_string(window_ok) + "/" + std::to_string(window) + ", checks " + std::to_string(held) +
               "/" + std::to_string(counted) + ", growth fits " + std::to_string(fits_ok) + "/" +
               std::to_string(rep.fits.size());
  for (const auto& [k, v] : fails) o.details.push_back(k + " fails at " + std::to_string(v) + " grid points");
  for (const auto& s : rep.summary) o.details.push_back(s);
  add_fit_details(rep, o, true);
  if (o.details.size() > 14) {
    const std::size_t extra = o.details.size() - 14;
    o.details.resize(14);
    o.details.push_back("... " + std::to_string(extra) + " more");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto base = solve_box(BigInt(0), 1, 0, 10);
  const bool example = std::any_of(base.begin(), base.end(),
                                   [](const SolutionRecord& r) { return r.x == -1 && r.y == 2 && r.value == 1; });
  if (!example) o.details.push_back("(-1, 2) missing from solve_box(0, 1, 0, 10)");

  const auto& recs = records7();
  std::map<std::tuple<long, std::int64_t, std::int64_t>, std::set<oracle::Solution>> got;
  for (const auto& f : recs) got[{f.n.get_si(), f.s, f.t}].insert({f.rec.x, f.rec.y, f.rec.value});
  const oracle::DivisorTable table(200);
  std::size_t diffs = 0, cells = 0, nontrivial = 0;
  for (const auto& [n, s, t] : cells7()) {
    ++cells;
    const auto f = build_form(BigInt(n), s, t);
    const auto want = oracle::divisor_solutions(f.A, f.B, table);
    for (const auto& w : want) nontrivial += abs(std::get<1>(w)) >= 2;
    if (want != got[{n, s, t}]) {
      ++diffs;
      if (diffs <= 5) o.details.push_back("divisor oracle differs at n=" + std::to_string(n) + " " + pair_str(s, t));
    }
  }
  // literal scan of the full x range on a sub-box
  std::size_t box_diffs = 0;
  for (long n = 0; n <= 2; ++n) {
    for (std::int64_t s = -1; s <= 1; ++s) {
      for (std::int64_t t = -1; t <= 1; ++t) {
        if (s == 0 && t == 0) continue;
        const auto f = build_form(BigInt(n), s, t);
        const auto a = compute_alphas(BigInt(n), s, t, 128);
        long amax = 0;
        for (const Real& v : a.alpha) amax = std::max(amax, abs(v).ceil().get_si());
        const long yb = 30;
        std::set<oracle::Solution> mine;
        for (const auto& r : solve_box(BigInt(n), s, t, yb)) mine.insert({r.x, r.y, r.value});
        if (mine != oracle::box_scan(f.A.get_si(), f.B.get_si(), (amax + 1) * yb, yb)) {
          ++box_diffs;
          o.details.push_back("box scan differs at n=" + std::to_string(n) + " " + pair_str(s, t));
        }
      }
    }
  }
  o.pass = example && diffs == 0 && box_diffs == 0;
  o.headline = std::string(example ? "(-1,2) found; " : "") + std::to_string(cells) +
               " forms agree with the divisor oracle up to |y| = 200 (" + std::to_string(recs.size()) + " solutions, " +
               std::to_string(nontrivial) + " with |y| >= 2); " + std::to_string(box_diffs) + " literal-scan differences";
  return o;
}

Outcome criterion8() {
  const auto& recs = records8();
  Outcome o;
  std::size_t nontrivial = 0;
  for (const auto& f : recs) {
    if (f.rec.trivial) continue;
    ++nontrivial;
    if (nontrivial <= 10) {
      o.details.push_back("n=" + f.n.get_str() + " " + pair_str(f.s, f.t) + ": (" + f.rec.x.get_str() + "," +
                          f.rec.y.get_str() + ")");
    }
  }
  o.pass = nontrivial == 0;
  o.headline = std::to_string(cells8().size()) + " forms, |y| <= 10^4: " + std::to_string(recs.size()) +
               " solutions, " + std::to_string(nontrivial) + " with |y| >= 2";
  return o;
}

Outcome criterion9(double& own_seconds) {
  const auto recs = all_records();
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  std::size_t tried = 0, failed = 0;
  for (const Found* f : recs) {
    if (f->rec.type_j == 1) continue;
    ++tried;
    try {
      const TypeReduction red = reduce_to_type1(f->n, f->s, f->t, f->rec);
      if (red.new_type != 1) throw Error(ErrorKind::NotReducible, "type " + std::to_string(red.new_type));
    } catch (const Error& e) {
      ++failed;
      if (failed <= 5) o.details.push_back(std::string(e.what()));
    }
  }
  std::size_t phi_bad = 0;
  for (std::int64_t s = -50; s <= 50; ++s) {
    for (std::int64_t t = -50; t <= 50; ++t) {
      auto p = phi_transform(s, t);
      p = phi_transform(p.first, p.second);
      p = phi_transform(p.first, p.second);
      phi_bad += p != std::pair{s, t};
    }
  }
  own_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.pass = failed == 0 && phi_bad == 0 && tried > 0;
  o.headline = std::to_string(tried - failed) + "/" + std::to_string(tried) +
               " type-2/3 records reduce to type 1; phi^3 = id on |s|,|t| <= 50 (" + std::to_string(phi_bad) +
               " failures)";
  return o;
}

Outcome criterion10(double& own_seconds) {
  const auto recs = all_records();
  const auto t0 = std::chrono::steady_clock::now();
  auto results = parallel_map(recs.size(), jobs, [&](std::size_t k) -> std::string {
    const Found& f = *recs[k];
    try {
      const UnitDecomposition d = decompose_unit(f.n, f.s, f.t, f.rec);
      // exact recheck, independent of the solver's own confirmation
      const FieldInt beta = FieldInt::integer(f.n, f.rec.x) - alpha_element(f.n, f.s, f.t) * f.rec.y;
      const FieldInt unit = alpha_element(f.n, d.b1.get_si(), d.b2.get_si());
      if (beta != (d.sign > 0 ? unit : -unit)) return "product mismatch";
      return {};
    } catch (const Error& e) {
      return e.what();
    }
  });
  own_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o;
  std::size_t bad = 0;
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (results[k].empty()) continue;
    ++bad;
    if (bad <= 5) {
      const Found& f = *recs[k];
      o.details.push_back("n=" + f.n.get_str() + " " + pair_str(f.s, f.t) + " (" + f.rec.x.get_str() + "," +
                          f.rec.y.get_str() + "): " + results[k]);
    }
  }
  o.pass = bad == 0;
  o.headline = std::to_string(recs.size() - bad) + "/" + std::to_string(recs.size()) +
               " records decompose as +-lambda0^b1 lambda1^b2, checked exactly";
  return o;
}

Outcome criterion11(double& own_seconds) {
  const auto recs = all_records();
  const auto t0 = std::chrono::steady_clock::now();
  BigInt p94;
  mpz_ui_pow_ui(p94.get_mpz_t(), 3, 94);
  const bool c3ok = c3_constant(3, 2) == p94;
  std::map<std::tuple<std::string, std::int64_t, std::int64_t>, std::vector<const Found*>> by_form;
  for (const Found* f : recs) by_form[{f->n.get_str(), f->s, f->t}].push_back(f);
  std::vector<std::vector<const Found*>> groups;
  for (auto& [k, v] : by_form) groups.push_back(std::move(v));
  const auto bad = parallel_map(groups.size(), jobs, [&](std::size_t k) {
    const Found& first = *groups[k].front();
    const UpperBound ub = bg_upper_bound(first.n, first.s, first.t, 1, 128);
    std::size_t b = 0;
    for (const Found* f : groups[k]) {
      const BigInt m = std::max(abs(f->rec.x), abs(f->rec.y));
      b += !(log_of(m, ub.exponent.precision()) < ub.exponent);
    }
    return b;
  });
  own_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::size_t total_bad = 0;
  for (auto b : bad) total_bad += b;
  Outcome o;
  o.pass = c3ok && total_bad == 0;
  o.headline = std::string("c3(3,2) ") + (c3ok ? "= 3^94" : "!= 3^94") + "; " + std::to_string(recs.size() - total_bad) +
               "/" + std::to_string(recs.size()) + " solutions below the upper bound (" + std::to_string(groups.size()) +
               " forms)";
  return o;
}

Outcome criterion12() {
  // n must stay below about 10^74 so that n^(1/4) fits the twist range.
  const auto grid = parse_n_grid("10000:10^74:log10");
  const N0Report rep = n0_scan(Rational(1, 4), grid, StPolicy::extremes(), 192, jobs);
  Outcome o;
  o.pass = rep.threshold.has_value() && rep.margins_monotone;
  std::ostringstream h;
  h << "EMPIRICAL, n = 10^4..10^74, extreme (s,t) policy: threshold "
    << (rep.threshold ? rep.threshold->get_str() : std::string("none"))
    << ", ignoring undefined chains " << (rep.threshold_defined_only ? rep.threshold_defined_only->get_str() : "none");
  o.headline = h.str();
  for (const auto& r : rep.rows) {
    if (r.n.get_str().size() % 10 != 5 && &r != &rep.rows.back()) continue;
    std::ostringstream d;
    d << "n=10^" << r.n.get_str().size() - 1 << ": crossed " << r.crossed << "/" << r.tested << ", undefined "
      << r.undefined;
    if (r.min_log_margin) d << ", worst margin " << r.min_log_margin->str(5) << " at " << pair_str(r.worst.first, r.worst.second);
    o.details.push_back(d.str());
  }
  // Which pairs cross at the top of the grid, and from where.
  const N0Row& top = rep.rows.back();
  std::size_t crossing_top = 0;
  std::optional<std::string> first_all;
  {
    std::map<std::pair<std::int64_t, std::int64_t>, std::string> first_cross;
    std::size_t k = 0;
    for (const auto& r : rep.rows) {
      for (std::size_t i = 0; i < r.tested; ++i, ++k) {
        const auto& p = rep.points[k];
        if (p.crossover && !first_cross.count({p.s, p.t})) first_cross[{p.s, p.t}] = r.n.get_str();
      }
    }
    for (const auto& p : rep.points) {
      if (p.n == top.n && p.crossover) ++crossing_top;
    }
    if (first_cross.count({1, 1})) first_all = "10^" + std::to_string(first_cross[{1, 1}].size() - 1);
  }
  o.details.push_back(std::to_string(crossing_top) + "/" + std::to_string(top.tested) +
                      " pairs cross at the largest n; (1,1) first crosses at " + first_all.value_or("never"));
  std::string never;
  for (std::size_t i = 0; i < rep.never_crossing.size() && i < 12; ++i) {
    never += (i ? " " : "") + pair_str(rep.never_crossing[i].first, rep.never_crossing[i].second);
  }
  o.details.push_back("never crossing at the largest n (first 12): " + never);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome(double&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
  app.add_option("--jobs,-j", jobs, "worker threads");
  CLI11_PARSE(app, argc, argv);
  widen_exponent_range();

  auto plain = [](Outcome (*f)()) { return [f](double& s) { s = -1; return f(); }; };
  const std::vector<Criterion> criteria = {
      {1, "exact vs numeric form coefficients", 60, plain(criterion1)},
      {2, "discriminant of the untwisted form", 10, plain(criterion2)},
      {3, "regulator asymptotic", 30, plain(criterion3)},
      {4, "log-difference table", 120, plain(criterion4)},
      {5, "error-product bounds", 60, plain(criterion5)},
      {6, "v_bar window and growth", 60, plain(criterion6)},
      {7, "solver against brute-force oracles", 120, plain(criterion7)},
      {8, "no solutions with |y| >= 2 at desk scale", 600, plain(criterion8)},
      {9, "type reduction", 10, criterion9},
      {10, "unit decomposition", 60, criterion10},
      {11, "bound constant and solutions under the bound", 10, criterion11},
      {12, "empirical crossover threshold", 300, plain(criterion12)},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    double own = -1;
    try {
      o = c.run(own);
    } catch (const std::exception& e) {
      o.pass = false;
      o.headline = std::string("error: ") + e.what();
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double timed = own >= 0 ? own : wall;
    const bool in_time = timed < c.limit_seconds;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << ": " << o.headline << " ["
              << fmt(timed, 1) << " s, limit " << fmt(c.limit_seconds, 0) << " s"
              << (own >= 0 ? ", " + fmt(wall, 1) + " s with inputs" : "") << "]\n";
    if (!in_time) std::cout << "       over the time limit\n";
    for (const auto& d : o.details) std::cout << "       " << d << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
