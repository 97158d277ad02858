#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "thue/numeric_roots.hpp"
#include "thue/proof_quantities.hpp"
#include "thue/real.hpp"

namespace thue {

struct SolutionRecord {
  BigInt x;
  BigInt y;
  int value = 0;   // f(x, y), +1 or -1
  int type_j = 0;  // 1, 2 or 3
  /// |x - alpha^(i) y| for i = 1, 2, 3.
  std::array<Real, 3> beta_abs;
  bool trivial = false;  // |y| <= 1
};

struct SolveOptions {
  long precision_bits = 256;
  unsigned jobs = 1;
};

/// All (x, y) with |y| <= y_bound and f_{n,s,t}(x, y) = +-1, sorted by
/// (|y|, y, x). x is unrestricted: since |beta1 beta2 beta3| = 1 some
/// |x - alpha^(i) y| is at most 1, so x is one of round(alpha^(i) y) + d,
/// d in {-1, 0, 1}. Candidates are screened in floating point and every
/// reported record is confirmed by exact evaluation.
std::vector<SolutionRecord> solve_box(const BigInt& n, std::int64_t s, std::int64_t t, std::int64_t y_bound,
                                      const SolveOptions& options = {});

/// Precision for the alphas used to evaluate beta at |x|, |y| up to the
/// given sizes without losing the small beta to cancellation.
long beta_precision(const AlphaTriple& probe, const BigInt& x_max, const BigInt& y_max, long precision_bits);

/// Signed x - alpha^(i) y.
std::array<Real, 3> beta_values(const BigInt& x, const BigInt& y, const AlphaTriple& alphas);

/// Index (1-based) of the smallest |x - alpha^(i) y|, ties to the smaller index.
int classify_type(const BigInt& x, const BigInt& y, const AlphaTriple& alphas);

struct TypeReduction {
  std::int64_t s = 0;
  std::int64_t t = 0;
  int new_type = 0;
};

/// Parameters under which a type-2 or type-3 record becomes type 1:
/// alpha^(2) of (s, t) is alpha^(1) of (-t, s-t), and alpha^(3) of (s, t)
/// is alpha^(1) of (-s+t, -s). The record is re-evaluated exactly and
/// re-classified; NotReducible if it does not come out as type 1.
TypeReduction reduce_to_type1(const BigInt& n, std::int64_t s, std::int64_t t, const SolutionRecord& rec,
                              long precision_bits = 256);

struct UnitDecomposition {
  BigInt b1;
  BigInt b2;
  int sign = 1;
  /// b0 + b1 + b2 when proof quantities were supplied.
  std::optional<BigInt> b_bar;
};

/// Writes x - alpha^(1) y = sign * lambda0^b1 * lambda1^b2 by solving the
/// log system of the two conjugates, rounding, and confirming exactly in
/// Z[lambda0]. Precision is doubled on ambiguity; RoundingAmbiguous after
/// the retries are used up.
UnitDecomposition decompose_unit(const BigInt& n, std::int64_t s, std::int64_t t, const SolutionRecord& rec,
                                 long precision_bits = 256, const ProofQuantities* quantities = nullptr);

}  // namespace thue
