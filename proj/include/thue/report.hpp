#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thue/bounds.hpp"
#include "thue/form_builder.hpp"
#include "thue/lemma_harness.hpp"
#include "thue/solver.hpp"

namespace thue {

enum class Format { Human, Json, Csv };

/// "human", "json" or "csv"; InvalidArgument otherwise.
Format parse_format(std::string_view text);

/// Significant digits used for every real printed in a report.
inline constexpr int kReportDigits = 20;

std::string render_form(const BinaryCubicForm& f, Format fmt);

std::string render_solutions(const BigInt& n, std::int64_t s, std::int64_t t, std::int64_t y_bound,
                             const std::vector<SolutionRecord>& records, long precision_bits, Format fmt);

std::string render_lemma(const LemmaReport& rep, Format fmt);

std::string render_bound(const BoundReport& rep, Format fmt);

std::string render_n0(const N0Report& rep, Format fmt);

struct ScanRow {
  BigInt n;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::size_t solutions = 0;
  std::size_t nontrivial = 0;
  /// Nontrivial records as "x:y" pairs, space separated.
  std::string nontrivial_list;
  BoundReport bound;
};

/// CSV columns, in order:
/// n,s,t,y_bound,precision_bits,solutions,nontrivial,nontrivial_xy,
/// log_H,H_exact,B_rhs,lower_chain,log_margin,crossover,chain_failure
std::string render_scan(const std::vector<ScanRow>& rows, std::int64_t y_bound, long precision_bits, Format fmt);

}  // namespace thue
