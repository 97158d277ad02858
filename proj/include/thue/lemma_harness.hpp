#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thue/asymptotics.hpp"
#include "thue/real.hpp"

namespace thue {

struct LemmaOptions {
  std::vector<BigInt> n_grid;
  Rational epsilon{1, 4};
  /// Largest |s|, |t| (and |a| for powers); further capped by
  /// floor(n^{1/2 - epsilon}) at the smallest grid n.
  std::int64_t smax = 3;
  long precision_bits = Real::kDefaultPrecision;
  unsigned jobs = 1;
  LogDiffTable table = LogDiffTable::Published;
  /// Growth checks (v_bar, w_bar) only count grid points with n >= this.
  BigInt growth_from{10000};
};

struct LemmaRow {
  BigInt n;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::string quantity;
  std::optional<Real> predicted;
  Real actual;
  /// actual - predicted, or the checked margin for inequality rows.
  Real residual;
  /// residual multiplied by the normalization the fit runs on.
  Real scaled;
  bool holds = true;
  /// false for rows shown for context but not counted towards pass.
  bool counted = true;
};

enum class SlopeRule { AtMost, Within, AtLeast };

struct LemmaFit {
  std::string quantity;
  std::optional<ExponentFit> fit;
  /// Why no fit was produced (too few samples, all residuals zero).
  std::string fit_error;
  double target = 0.0;
  double tolerance = 0.3;
  SlopeRule rule = SlopeRule::AtMost;
  bool pass = false;
};

struct LemmaReport {
  std::string lemma;
  /// The claim under test, in words.
  std::string anchor;
  long precision_bits = 0;
  std::vector<LemmaRow> rows;
  std::vector<LemmaFit> fits;
  std::vector<std::string> summary;
  bool pass = false;
};

std::vector<std::string_view> lemma_names();

/// InvalidArgument for unknown names (the message lists the valid ones),
/// EmptyGrid for an empty grid.
LemmaReport run_lemma(std::string_view name, const LemmaOptions& options);

}  // namespace thue
