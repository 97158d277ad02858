#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thue/proof_quantities.hpp"
#include "thue/real.hpp"

namespace thue {

/// 3^{r+27} (r+1)^{7r+19} d^{2d+6r+14} for degree d and unit rank r.
BigInt c3_constant(long degree, long rank);

struct UpperBound {
  BigInt c3;
  Real R;
  /// log H for the form height H (floored at 3). Exact when the form is
  /// small enough to build, otherwise log 3 + max |log|alpha^(i)||.
  Real log_H;
  bool H_exact = false;
  /// H itself when H_exact.
  BigInt H;
  Real log_B;
  /// c3 R max(log R, 1) (R + log H + log B), a bound for log max(|x|, |y|).
  Real exponent;
};

/// Upper bound for log max(|x|, |y|) over solutions of f_{n,s,t} = +-b.
/// B is max(b_abs, e), H is floored at 3. ReducibleForm for (0, 0).
UpperBound bg_upper_bound(const BigInt& n, std::int64_t s, std::int64_t t, const BigInt& b_abs = 1,
                          long precision_bits = Real::kDefaultPrecision);

/// Same with log H supplied by the caller (used to test monotonicity).
Real bg_exponent(const BigInt& c3, const Real& R, const Real& log_H, const Real& log_B);

/// Lower bound for log|y| implied by a solution with |y| >= 2:
/// (R - v_bar - (3/4) log n / n) * n / 3.
/// Each step of the argument is checked first; a failed step throws
/// ChainPreconditionFailed naming the inequality.
Real lower_bound_chain(const ProofQuantities& q);

struct BoundReport {
  BigInt n;
  std::int64_t s = 0;
  std::int64_t t = 0;
  long precision_bits = 0;
  BigInt c3;
  Real log_H;
  bool H_exact = false;
  Real B_rhs;
  std::optional<Real> lower_chain;
  /// Set when the chain is undefined at this point.
  std::string chain_failure;
  bool crossover = false;
  /// log(lower_chain / B_rhs) when the chain is defined.
  std::optional<Real> log_margin;
};

BoundReport bound_report(const BigInt& n, std::int64_t s, std::int64_t t,
                         long precision_bits = Real::kDefaultPrecision);

/// Which (s, t) are tested at each n, always restricted to st != 0 and
/// max(|s|, |t|) <= m = floor(n^{1/2 - epsilon}).
struct StPolicy {
  enum class Kind { Small, Extremes };
  Kind kind = Kind::Extremes;
  /// For Small: all |s|, |t| <= min(k, m).
  std::int64_t k = 3;

  static StPolicy small(std::int64_t k) { return {Kind::Small, k}; }
  /// s, t in {+-1, +-2, +-3, +-m/2, +-m} and the lines 2s = t, s = 2t,
  /// s = t at the same magnitudes.
  static StPolicy extremes() { return {Kind::Extremes, 0}; }
};

std::vector<std::pair<std::int64_t, std::int64_t>> policy_pairs(const StPolicy& policy, const BigInt& m);

struct N0Row {
  BigInt n;
  BigInt m;
  std::size_t tested = 0;
  std::size_t crossed = 0;
  std::size_t undefined = 0;
  /// Smallest log margin over chain-defined pairs.
  std::optional<Real> min_log_margin;
  std::pair<std::int64_t, std::int64_t> worst{0, 0};
};

struct N0Report {
  Rational epsilon;
  long precision_bits = 0;
  std::vector<N0Row> rows;
  std::vector<BoundReport> points;
  /// Least grid n from which every tested pair crosses at every larger
  /// grid n; a pair whose chain is undefined counts as not crossed.
  std::optional<BigInt> threshold;
  /// Same, ignoring pairs whose chain is undefined.
  std::optional<BigInt> threshold_defined_only;
  /// min_log_margin nondecreasing over the rows from the threshold on
  /// (defined-only threshold when the strict one does not exist).
  bool margins_monotone = false;
  /// Pairs that fail to cross at the largest grid n.
  std::vector<std::pair<std::int64_t, std::int64_t>> never_crossing;
};

/// EMPIRICAL crossover scan: measured constants, no certified O-terms.
N0Report n0_scan(const Rational& epsilon, const std::vector<BigInt>& n_grid, const StPolicy& policy,
                 long precision_bits = Real::kDefaultPrecision, unsigned jobs = 1);

}  // namespace thue
