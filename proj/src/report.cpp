#include "thue/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "thue/error.hpp"

namespace thue {

namespace {

using Json = nlohmann::ordered_json;

std::string num(const Real& x) { return x.str(kReportDigits); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string rule_text(const LemmaFit& f) {
  std::ostringstream os;
  switch (f.rule) {
    case SlopeRule::AtMost: os << "<= " << f.target << " + " << f.tolerance; break;
    case SlopeRule::Within: os << f.target << " +- " << f.tolerance; break;
    case SlopeRule::AtLeast: os << ">= " << f.target << " - " << f.tolerance; break;
  }
  return os.str();
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

Json bound_json(const BoundReport& b) {
  Json j;
  j["n"] = b.n.get_str();
  j["s"] = b.s;
  j["t"] = b.t;
  j["precision_bits"] = b.precision_bits;
  j["c3"] = b.c3.get_str();
  j["log_H"] = num(b.log_H);
  j["H_exact"] = b.H_exact;
  j["B_rhs"] = num(b.B_rhs);
  j["lower_chain"] = b.lower_chain ? Json(num(*b.lower_chain)) : Json(nullptr);
  j["log_margin"] = b.log_margin ? Json(num(*b.log_margin)) : Json(nullptr);
  j["crossover"] = b.crossover;
  j["chain_failure"] = b.chain_failure;
  return j;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "human") return Format::Human;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw Error(ErrorKind::InvalidArgument, "unknown format '" + std::string(text) + "' (human, json, csv)");
}

std::string render_form(const BinaryCubicForm& f, Format fmt) {
  const std::string n = f.n.get_str();
  switch (fmt) {
    case Format::Json: {
      Json j;
      j["n"] = n;
      j["s"] = f.s;
      j["t"] = f.t;
      j["A"] = f.A.get_str();
      j["B"] = f.B.get_str();
      j["degenerate"] = f.degenerate();
      return dump(j);
    }
    case Format::Csv:
      return csv_line({"n", "s", "t", "A", "B", "degenerate"}) +
             csv_line({n, std::to_string(f.s), std::to_string(f.t), f.A.get_str(), f.B.get_str(), yes_no(f.degenerate())});
    case Format::Human: {
      std::ostringstream os;
      os << "f_{" << n << "," << f.s << "," << f.t << "}(x,y) = x^3 + (" << f.A << ") x^2 y + (" << f.B
         << ") x y^2 - y^3\n";
      os << "A = " << f.A << "\nB = " << f.B << "\n";
      if (f.degenerate()) os << "warning: degenerate twist, the form is (x - y)^3\n";
      return os.str();
    }
  }
  return {};
}

std::string render_solutions(const BigInt& n, std::int64_t s, std::int64_t t, std::int64_t y_bound,
                             const std::vector<SolutionRecord>& records, long precision_bits, Format fmt) {
  switch (fmt) {
    case Format::Json: {
      Json j;
      j["n"] = n.get_str();
      j["s"] = s;
      j["t"] = t;
      j["y_bound"] = y_bound;
      j["precision_bits"] = precision_bits;
      Json arr = Json::array();
      for (const auto& r : records) {
        Json e;
        e["n"] = n.get_str();
        e["s"] = s;
        e["t"] = t;
        e["x"] = r.x.get_str();
        e["y"] = r.y.get_str();
        e["value"] = r.value;
        e["type"] = r.type_j;
        e["trivial"] = r.trivial;
        e["beta_abs"] = {num(r.beta_abs[0]), num(r.beta_abs[1]), num(r.beta_abs[2])};
        e["precision_bits"] = precision_bits;
        arr.push_back(std::move(e));
      }
      j["solutions"] = std::move(arr);
      return dump(j);
    }
    case Format::Csv: {
      std::string out = csv_line({"n", "s", "t", "x", "y", "value", "type", "trivial"});
      for (const auto& r : records) {
        out += csv_line({n.get_str(), std::to_string(s), std::to_string(t), r.x.get_str(), r.y.get_str(),
                         std::to_string(r.value), std::to_string(r.type_j), yes_no(r.trivial)});
      }
      return out;
    }
    case Format::Human: {
      std::ostringstream os;
      os << "f_{" << n << "," << s << "," << t << "}(x,y) = +-1, |y| <= " << y_bound << ": " << records.size()
         << " solutions\n";
      os << std::setw(14) << "x" << std::setw(10) << "y" << std::setw(7) << "value" << std::setw(6) << "type"
         << "  trivial\n";
      std::size_t nontrivial = 0;
      for (const auto& r : records) {
        os << std::setw(14) << r.x.get_str() << std::setw(10) << r.y.get_str() << std::setw(7) << r.value
           << std::setw(6) << r.type_j << "  " << (r.trivial ? "yes" : "no") << "\n";
        if (!r.trivial) ++nontrivial;
      }
      os << nontrivial << " with |y| >= 2\n";
      return os.str();
    }
  }
  return {};
}

std::string render_lemma(const LemmaReport& rep, Format fmt) {
  switch (fmt) {
    case Format::Json: {
      Json j;
      j["lemma"] = rep.lemma;
      j["claim"] = rep.anchor;
      j["precision_bits"] = rep.precision_bits;
      j["pass"] = rep.pass;
      j["summary"] = rep.summary;
      Json fits = Json::array();
      for (const auto& f : rep.fits) {
        Json e;
        e["quantity"] = f.quantity;
        e["rule"] = rule_text(f);
        if (f.fit) {
          e["slope"] = f.fit->slope;
          e["slope_stderr"] = f.fit->slope_stderr;
          e["rms"] = f.fit->rms;
          e["samples"] = f.fit->samples;
          e["decades"] = f.fit->decades;
        } else {
          e["error"] = f.fit_error;
        }
        e["pass"] = f.pass;
        fits.push_back(std::move(e));
      }
      j["fits"] = std::move(fits);
      Json rows = Json::array();
      for (const auto& r : rep.rows) {
        Json e;
        e["n"] = r.n.get_str();
        e["s"] = r.s;
        e["t"] = r.t;
        e["quantity"] = r.quantity;
        e["predicted"] = r.predicted ? Json(num(*r.predicted)) : Json(nullptr);
        e["actual"] = num(r.actual);
        e["residual"] = num(r.residual);
        e["scaled"] = num(r.scaled);
        e["holds"] = r.holds;
        e["counted"] = r.counted;
        e["precision_bits"] = rep.precision_bits;
        rows.push_back(std::move(e));
      }
      j["rows"] = std::move(rows);
      return dump(j);
    }
    case Format::Csv: {
      std::string out = csv_line({"lemma", "n", "s", "t", "quantity", "predicted", "actual", "residual", "scaled",
                                  "holds", "counted", "precision_bits"});
      for (const auto& r : rep.rows) {
        out += csv_line({rep.lemma, r.n.get_str(), std::to_string(r.s), std::to_string(r.t), r.quantity,
                         r.predicted ? num(*r.predicted) : "", num(r.actual), num(r.residual), num(r.scaled),
                         yes_no(r.holds), yes_no(r.counted), std::to_string(rep.precision_bits)});
      }
      return out;
    }
    case Format::Human: {
      std::ostringstream os;
      os << "lemma " << rep.lemma << ": " << rep.anchor << "\n";
      os << "precision " << rep.precision_bits << " bits, " << rep.rows.size() << " rows\n\n";
      std::size_t shown = 0;
      for (const auto& r : rep.rows) {
        if (r.holds && r.predicted && rep.rows.size() > 60) continue;
        if (++shown > 200) {
          os << "  ... (use --format csv for every row)\n";
          break;
        }
        os << "  n=" << std::left << std::setw(10) << r.n.get_str() << std::right;
        if (r.s != 0 || r.t != 0) os << " (s,t)=" << std::left << std::setw(9) << ("(" + std::to_string(r.s) + "," + std::to_string(r.t) + ")") << std::right;
        os << " " << std::left << std::setw(46) << r.quantity << std::right;
        if (r.predicted) {
          os << " residual " << r.residual.str(6) << "  scaled " << r.scaled.str(6);
        } else {
          os << " value " << r.actual.str(8) << "  " << (r.holds ? "ok" : "FAILS") << (r.counted ? "" : " (not counted)");
        }
        os << "\n";
      }
      if (!rep.fits.empty()) {
        os << "\nfitted exponents:\n";
        for (const auto& f : rep.fits) {
          os << "  " << std::left << std::setw(40) << f.quantity << std::right;
          if (f.fit) {
            os << " slope " << std::setw(8) << fixed(f.fit->slope, 3) << " (" << f.fit->samples << " pts)  want "
               << rule_text(f) << "  " << (f.pass ? "ok" : "FAILS");
          } else {
            os << " " << f.fit_error;
          }
          os << "\n";
        }
      }
      os << "\n";
      for (const auto& s : rep.summary) os << s << "\n";
      os << (rep.pass ? "PASS" : "FAIL") << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render_bound(const BoundReport& b, Format fmt) {
  switch (fmt) {
    case Format::Json: return dump(bound_json(b));
    case Format::Csv:
      return csv_line({"n", "s", "t", "precision_bits", "c3", "log_H", "H_exact", "B_rhs", "lower_chain", "log_margin",
                       "crossover", "chain_failure"}) +
             csv_line({b.n.get_str(), std::to_string(b.s), std::to_string(b.t), std::to_string(b.precision_bits),
                       b.c3.get_str(), num(b.log_H), yes_no(b.H_exact), num(b.B_rhs),
                       b.lower_chain ? num(*b.lower_chain) : "", b.log_margin ? num(*b.log_margin) : "",
                       yes_no(b.crossover), b.chain_failure});
    case Format::Human: {
      std::ostringstream os;
      os << "n = " << b.n << ", (s,t) = (" << b.s << "," << b.t << ")\n";
      os << "c3 = 3^94 = " << b.c3 << "\n";
      os << "log H = " << b.log_H.str(10) << (b.H_exact ? "" : " (upper bound)") << "\n";
      os << "upper bound for log max(|x|,|y|): " << b.B_rhs.str(10) << "\n";
      if (b.lower_chain) {
        os << "lower bound for log|y| if |y| >= 2: " << b.lower_chain->str(10) << "\n";
        os << "log(lower/upper) = " << b.log_margin->str(8) << "\n";
      } else {
        os << "lower bound undefined: " << b.chain_failure << "\n";
      }
      os << "crossover: " << (b.crossover ? "yes" : "no") << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render_n0(const N0Report& rep, Format fmt) {
  const std::string eps = rep.epsilon.get_str();
  auto opt_str = [](const std::optional<BigInt>& v) { return v ? v->get_str() : std::string("none"); };
  switch (fmt) {
    case Format::Json: {
      Json j;
      j["label"] = "EMPIRICAL";
      j["epsilon"] = eps;
      j["precision_bits"] = rep.precision_bits;
      j["threshold"] = rep.threshold ? Json(rep.threshold->get_str()) : Json(nullptr);
      j["threshold_defined_only"] = rep.threshold_defined_only ? Json(rep.threshold_defined_only->get_str()) : Json(nullptr);
      j["margins_monotone"] = rep.margins_monotone;
      Json never = Json::array();
      for (const auto& [s, t] : rep.never_crossing) never.push_back({s, t});
      j["never_crossing"] = std::move(never);
      Json rows = Json::array();
      for (const auto& r : rep.rows) {
        Json e;
        e["n"] = r.n.get_str();
        e["m"] = r.m.get_str();
        e["tested"] = r.tested;
        e["crossed"] = r.crossed;
        e["undefined"] = r.undefined;
        e["min_log_margin"] = r.min_log_margin ? Json(num(*r.min_log_margin)) : Json(nullptr);
        e["worst"] = {r.worst.first, r.worst.second};
        e["precision_bits"] = rep.precision_bits;
        rows.push_back(std::move(e));
      }
      j["rows"] = std::move(rows);
      Json pts = Json::array();
      for (const auto& p : rep.points) pts.push_back(bound_json(p));
      j["points"] = std::move(pts);
      return dump(j);
    }
    case Format::Csv: {
      std::string out = csv_line({"label", "epsilon", "n", "m", "tested", "crossed", "undefined", "min_log_margin",
                                  "worst_s", "worst_t", "precision_bits"});
      for (const auto& r : rep.rows) {
        out += csv_line({"EMPIRICAL", eps, r.n.get_str(), r.m.get_str(), std::to_string(r.tested),
                         std::to_string(r.crossed), std::to_string(r.undefined),
                         r.min_log_margin ? num(*r.min_log_margin) : "", std::to_string(r.worst.first),
                         std::to_string(r.worst.second), std::to_string(rep.precision_bits)});
      }
      return out;
    }
    case Format::Human: {
      std::ostringstream os;
      os << "EMPIRICAL crossover scan, epsilon = " << eps << " (measured constants, not a proof)\n\n";
      os << std::setw(12) << "n" << std::setw(12) << "m" << std::setw(8) << "pairs" << std::setw(9) << "crossed"
         << std::setw(11) << "undefined" << std::setw(16) << "min log margin" << "  worst (s,t)\n";
      for (const auto& r : rep.rows) {
        std::ostringstream w;
        w << "(" << r.worst.first << "," << r.worst.second << ")";
        os << std::setw(12) << (r.n.get_str().size() > 11 ? Real(r.n, 64).str(4) : r.n.get_str()) << std::setw(12)
           << (r.m.get_str().size() > 11 ? Real(r.m, 64).str(4) : r.m.get_str()) << std::setw(8) << r.tested
           << std::setw(9) << r.crossed << std::setw(11) << r.undefined << std::setw(16)
           << (r.min_log_margin ? r.min_log_margin->str(6) : std::string("-")) << "  " << w.str() << "\n";
      }
      os << "\nthreshold (undefined chain counts as not crossed): " << opt_str(rep.threshold) << "\n";
      os << "threshold (chain-defined pairs only): " << opt_str(rep.threshold_defined_only) << "\n";
      os << "margins monotone beyond threshold: " << (rep.margins_monotone ? "yes" : "no") << "\n";
      if (!rep.never_crossing.empty()) {
        os << "not crossing at the largest n:";
        std::size_t k = 0;
        for (const auto& [s, t] : rep.never_crossing) {
          if (++k > 12) {
            os << " ...";
            break;
          }
          os << " (" << s << "," << t << ")";
        }
        os << "\n";
      }
      return os.str();
    }
  }
  return {};
}

std::string render_scan(const std::vector<ScanRow>& rows, std::int64_t y_bound, long precision_bits, Format fmt) {
  switch (fmt) {
    case Format::Json: {
      Json j;
      j["y_bound"] = y_bound;
      j["precision_bits"] = precision_bits;
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json e;
        e["n"] = r.n.get_str();
        e["s"] = r.s;
        e["t"] = r.t;
        e["solutions"] = r.solutions;
        e["nontrivial"] = r.nontrivial;
        e["nontrivial_xy"] = r.nontrivial_list;
        e["bound"] = bound_json(r.bound);
        e["precision_bits"] = precision_bits;
        arr.push_back(std::move(e));
      }
      j["rows"] = std::move(arr);
      return dump(j);
    }
    case Format::Csv: {
      std::string out = csv_line({"n", "s", "t", "y_bound", "precision_bits", "solutions", "nontrivial",
                                  "nontrivial_xy", "log_H", "H_exact", "B_rhs", "lower_chain", "log_margin",
                                  "crossover", "chain_failure"});
      for (const auto& r : rows) {
        const BoundReport& b = r.bound;
        out += csv_line({r.n.get_str(), std::to_string(r.s), std::to_string(r.t), std::to_string(y_bound),
                         std::to_string(precision_bits), std::to_string(r.solutions), std::to_string(r.nontrivial),
                         r.nontrivial_list, num(b.log_H), yes_no(b.H_exact), num(b.B_rhs),
                         b.lower_chain ? num(*b.lower_chain) : "", b.log_margin ? num(*b.log_margin) : "",
                         yes_no(b.crossover), b.chain_failure});
      }
      return out;
    }
    case Format::Human: {
      std::ostringstream os;
      std::size_t nontrivial = 0;
      os << std::setw(8) << "n" << std::setw(6) << "s" << std::setw(6) << "t" << std::setw(11) << "solutions"
         << std::setw(12) << "nontrivial" << std::setw(16) << "log margin" << "\n";
      for (const auto& r : rows) {
        nontrivial += r.nontrivial;
        os << std::setw(8) << r.n.get_str() << std::setw(6) << r.s << std::setw(6) << r.t << std::setw(11)
           << r.solutions << std::setw(12) << r.nontrivial << std::setw(16)
           << (r.bound.log_margin ? r.bound.log_margin->str(6) : std::string("-"));
        if (!r.nontrivial_list.empty()) os << "  " << r.nontrivial_list;
        os << "\n";
      }
      os << rows.size() << " cells, " << nontrivial << " solutions with |y| >= 2 (|y| <= " << y_bound << ")\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace thue
