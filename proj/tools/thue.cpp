// Command-line front end for the twisted simplest-cubic Thue family.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "thue/bounds.hpp"
#include "thue/error.hpp"
#include "thue/form_builder.hpp"
#include "thue/grid.hpp"
#include "thue/lemma_harness.hpp"
#include "thue/report.hpp"
#include "thue/solver.hpp"

using namespace thue;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;
constexpr int kPrecision = 3;

const char* kGridHelp =
    "n values: comma-separated literals (123, 10^6, 1e6) or ranges start:stop[:rule], "
    "rule = linear step (default 1), log10 (one point per decade) or log10/k (k per decade)";

// "1/4" or "0.25".
Rational parse_rational(const std::string& text) {
  Rational r;
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    if (r.set_str(text, 10) != 0) throw Error(ErrorKind::InvalidArgument, "bad rational '" + text + "'");
  } else {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    BigInt num;
    if (digits.empty() || num.set_str(digits, 10) != 0) {
      throw Error(ErrorKind::InvalidArgument, "bad rational '" + text + "'");
    }
    r = Rational(num, den);
  }
  r.canonicalize();
  return r;
}

Rational checked_epsilon(const std::string& text) {
  const Rational e = parse_rational(text);
  if (e <= 0 || e >= Rational(1, 2)) throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1/2)");
  return e;
}

struct Common {
  std::string format = "human";
  std::string output;
  long precision = default_precision();
  unsigned jobs = default_jobs();
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + c.output + "'");
  out << text;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "output format: human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  app->add_option("--output,-o", c.output, "write the report to this file instead of stdout");
  app->add_option("--precision", c.precision, "precision in bits (env THUE_PRECISION)")->check(CLI::Range(64L, 1L << 20));
  app->add_option("--jobs,-j", c.jobs, "worker threads (env THUE_JOBS)")->check(CLI::Range(1u, 4096u));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thue equations f_{n,s,t}(x,y) = +-1 over the simplest cubic fields"};
  app.require_subcommand(1);
  Common common;

  std::string n_text, grid_text;
  std::int64_t s = 0, t = 0, y_bound = 10000, smax = 3;
  std::string lemma_name, eps_text = "1/4", table_text = "published", policy_text = "extremes";
  std::string growth_text = "10000";

  auto* form = app.add_subcommand("form", "print the coefficients A, B of f_{n,s,t}");
  form->add_option("n", n_text)->required();
  form->add_option("s", s)->required();
  form->add_option("t", t)->required();
  add_common(form, common);

  auto* solve = app.add_subcommand("solve", "all solutions of f_{n,s,t}(x,y) = +-1 with |y| <= ybound");
  solve->add_option("n", n_text)->required();
  solve->add_option("s", s)->required();
  solve->add_option("t", t)->required();
  solve->add_option("--ybound", y_bound, "largest |y| searched")->check(CLI::PositiveNumber);
  add_common(solve, common);

  auto* lemma = app.add_subcommand("lemma", "measure one asymptotic claim over a grid of n");
  std::string names;
  for (auto nm : lemma_names()) names += (names.empty() ? "" : ", ") + std::string(nm);
  lemma->add_option("name", lemma_name, "one of: " + names)->required();
  lemma->add_option("--n", grid_text, kGridHelp)->required();
  lemma->add_option("--smax", smax, "largest |s|, |t| (and |a| for powers)")->check(CLI::PositiveNumber);
  lemma->add_option("--eps", eps_text, "epsilon in (0, 1/2), e.g. 1/4");
  lemma->add_option("--table", table_text, "log-difference table: published or corrected")
      ->check(CLI::IsMember({"published", "corrected"}));
  lemma->add_option("--growth-from", growth_text, "smallest n counted by the growth checks");
  add_common(lemma, common);

  auto* bound = app.add_subcommand("bound", "upper bound for log max(|x|,|y|) against the lower-bound chain");
  bound->add_option("n", n_text)->required();
  bound->add_option("s", s)->required();
  bound->add_option("t", t)->required();
  add_common(bound, common);

  auto* scan = app.add_subcommand("scan", "solve and bound every (n,s,t) of a grid, one row per cell");
  scan->add_option("--n", grid_text, kGridHelp)->required();
  scan->add_option("--smax", smax, "all st != 0 with |s|,|t| <= smax")->check(CLI::PositiveNumber);
  scan->add_option("--ybound", y_bound, "largest |y| searched")->check(CLI::PositiveNumber);
  add_common(scan, common);

  auto* n0 = app.add_subcommand("n0", "EMPIRICAL crossover scan of lower chain against upper bound");
  n0->add_option("--n", grid_text, kGridHelp)->required();
  n0->add_option("--eps", eps_text, "epsilon in (0, 1/2)");
  n0->add_option("--policy", policy_text, "extremes, or small:k for all |s|,|t| <= k");
  add_common(n0, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const Format fmt = parse_format(common.format);
    if (*form) {
      const BinaryCubicForm f = build_form(parse_integer_literal(n_text), s, t);
      if (f.degenerate()) std::cerr << "warning: (s,t) = (0,0) is degenerate, the form is (x - y)^3\n";
      emit(common, render_form(f, fmt));
      return kOk;
    }
    if (*solve) {
      const BigInt n = parse_integer_literal(n_text);
      const auto recs = solve_box(n, s, t, y_bound, {common.precision, common.jobs});
      emit(common, render_solutions(n, s, t, y_bound, recs, common.precision, fmt));
      return kOk;
    }
    if (*lemma) {
      LemmaOptions opt;
      opt.n_grid = parse_n_grid(grid_text);
      opt.epsilon = checked_epsilon(eps_text);
      opt.smax = smax;
      opt.precision_bits = common.precision;
      opt.jobs = common.jobs;
      opt.table = table_text == "corrected" ? LogDiffTable::Corrected : LogDiffTable::Published;
      opt.growth_from = parse_integer_literal(growth_text);
      const LemmaReport rep = run_lemma(lemma_name, opt);
      emit(common, render_lemma(rep, fmt));
      return rep.pass ? kOk : kVerificationFailed;
    }
    if (*bound) {
      const BoundReport rep = bound_report(parse_integer_literal(n_text), s, t, common.precision);
      emit(common, render_bound(rep, fmt));
      return kOk;
    }
    if (*scan) {
      const auto grid = parse_n_grid(grid_text);
      if (grid.empty()) throw Error(ErrorKind::EmptyGrid, "scan needs at least one n");
      struct Cell {
        BigInt n;
        std::int64_t s, t;
      };
      std::vector<Cell> cells;
      for (const auto& n : grid) {
        for (std::int64_t a = -smax; a <= smax; ++a) {
          for (std::int64_t b = -smax; b <= smax; ++b) {
            if (a != 0 && b != 0) cells.push_back({n, a, b});
          }
        }
      }
      const long prec = common.precision;
      auto rows = parallel_map(cells.size(), common.jobs, [&](std::size_t k) {
        const Cell& c = cells[k];
        ScanRow row;
        row.n = c.n;
        row.s = c.s;
        row.t = c.t;
        const auto recs = solve_box(c.n, c.s, c.t, y_bound, {prec, 1});
        row.solutions = recs.size();
        for (const auto& r : recs) {
          if (r.trivial) continue;
          ++row.nontrivial;
          row.nontrivial_list += (row.nontrivial_list.empty() ? "" : " ") + r.x.get_str() + ":" + r.y.get_str();
        }
        row.bound = bound_report(c.n, c.s, c.t, prec);
        return row;
      });
      emit(common, render_scan(rows, y_bound, prec, fmt));
      return kOk;
    }
    if (*n0) {
      StPolicy policy = StPolicy::extremes();
      if (policy_text.rfind("small:", 0) == 0) {
        policy = StPolicy::small(parse_integer_literal(policy_text.substr(6)).get_si());
        if (policy.k < 1) throw Error(ErrorKind::InvalidArgument, "small:k needs k >= 1");
      } else if (policy_text != "extremes") {
        throw Error(ErrorKind::InvalidArgument, "policy must be 'extremes' or 'small:k'");
      }
      const N0Report rep =
          n0_scan(checked_epsilon(eps_text), parse_n_grid(grid_text), policy, common.precision, common.jobs);
      emit(common, render_n0(rep, fmt));
      return rep.threshold ? kOk : kVerificationFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::PrecisionExhausted:
      case ErrorKind::RoundingAmbiguous: return kPrecision;
      case ErrorKind::InvalidArgument:
      case ErrorKind::DegenerateTwist:
      case ErrorKind::EmptyGrid:
      case ErrorKind::ReducibleForm: return kUsage;
      default: return kVerificationFailed;
    }
  }
  return kUsage;
}
