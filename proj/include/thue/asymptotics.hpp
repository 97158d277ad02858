#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "thue/numeric_roots.hpp"
#include "thue/real.hpp"

namespace thue {

/// leading + correction + O(n^error_order).
struct Expansion {
  Real leading;
  Real correction;
  double error_order = 0.0;

  Real value() const { return leading + correction; }
};

struct RootExpansion {
  Expansion value;
  Expansion log;
};

/// Two-term expansion of lambda_which and up to three terms of log|lambda_which|.
RootExpansion predict_root_expansion(const BigInt& n, int which, long precision_bits = Real::kDefaultPrecision);

/// lambda_which^a to two terms. The error order carries the 2*epsilon gain
/// that holds for |a| = O(n^{1/2 - epsilon}).
Expansion predict_power(const BigInt& n, std::int64_t a, int which, const Rational& epsilon = Rational(1, 4),
                        long precision_bits = Real::kDefaultPrecision);

/// floor(n^{1/2 - epsilon}), computed exactly.
BigInt twist_limit(const BigInt& n, const Rational& epsilon);

enum class LogDiffBranch {
  // log|alpha1 - alpha2|
  D12Above,      // 2s > t+1
  D12EdgeAbove,  // 2s = t+1
  D12EqualOdd,   // 2s = t, s odd
  D12EqualEven,  // 2s = t, s even
  D12EdgeBelow,  // 2s = t-1
  D12Below,      // 2s < t-1
  // log|alpha1 - alpha3|
  D13Above,      // s > 2t+1
  D13EdgeAbove,  // s = 2t+1
  D13EqualEven,  // s = 2t, t even
  D13EqualOdd,   // s = 2t, t odd
  D13EdgeBelow,  // s = 2t-1
  D13Below,      // s < 2t-1
};

inline constexpr int kLogDiffBranchCount = 12;

std::string_view branch_name(LogDiffBranch b);
std::string_view branch_condition(LogDiffBranch b);
std::array<LogDiffBranch, kLogDiffBranchCount> all_branches();

struct CaseLabel {
  LogDiffBranch d12;
  LogDiffBranch d13;
};

CaseLabel classify_case(std::int64_t s, std::int64_t t);

/// Which closed forms to use for the log-difference prediction.
///
/// Published is the table as stated in the literature. Corrected carries
/// the 1/n coefficients and special-case constants obtained by expanding
/// the differences directly; see README for the branch-by-branch list.
enum class LogDiffTable { Published, Corrected };

/// Predictions for (log|alpha1 - alpha2|, log|alpha1 - alpha3|), claimed
/// error O(n^{-1-2 epsilon}). Throws DegenerateTwist when st == 0.
std::pair<Expansion, Expansion> predict_logdiff(const BigInt& n, std::int64_t s, std::int64_t t,
                                                LogDiffTable table = LogDiffTable::Published,
                                                const Rational& epsilon = Rational(1, 4),
                                                long precision_bits = Real::kDefaultPrecision);

/// log|alpha1 - alpha2| and log|alpha1 - alpha3| with the signs of the
/// differences.
struct LogDifferences {
  Real d12;
  Real d13;
  int sign12 = 0;
  int sign13 = 0;
};

/// From integer combinations of log|lambda_i| only: alpha is never formed,
/// so this works for twists whose alpha values leave the MPFR range.
/// Accuracy follows the precision of `roots`.
LogDifferences log_differences(const RootSet& roots, std::int64_t s, std::int64_t t);

/// Straight subtraction of the numeric alpha values.
LogDifferences log_differences(const AlphaTriple& alphas);

struct ErrorProductReport {
  BigInt n;
  std::int64_t s = 0;
  std::int64_t t = 0;
  bool first_exempt = false;
  /// log of |a12||a13|, min and max of the two squared-mixed products.
  Real log_product;
  Real log_min_mixed;
  Real log_max_mixed;
  /// log(product / bound) for the three bounds (2/3 n^2, 2/3 n, 2/3 n^2).
  std::array<Real, 3> log_margin;
  std::array<bool, 3> holds{};

  bool pass() const { return (first_exempt || holds[0]) && holds[1] && holds[2]; }
};

ErrorProductReport check_error_products(const BigInt& n, std::int64_t s, std::int64_t t,
                                        const LogDifferences& diffs);
ErrorProductReport check_error_products(const BigInt& n, std::int64_t s, std::int64_t t,
                                        const AlphaTriple& alphas);

struct FitSample {
  BigInt n;
  Real residual;
};

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Standard error of the slope.
  double slope_stderr = 0.0;
  /// Root mean square of the fit residuals in log space.
  double rms = 0.0;
  std::size_t samples = 0;
  double decades = 0.0;
};

/// Least-squares slope of log|residual| against log n. Zero residuals are
/// skipped; ExactMatch when every residual is zero, InsufficientSamples
/// with fewer than 5 usable samples or less than 2 decades of n.
ExponentFit fit_error_exponent(const std::vector<FitSample>& samples);

}  // namespace thue
