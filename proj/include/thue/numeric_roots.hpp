#pragma once

#include <array>
#include <cstdint>

#include "thue/exact_field.hpp"
#include "thue/real.hpp"

namespace thue {

/// Certified high-precision roots of X^3 - (n-1)X^2 - (n+2)X - 1.
///
/// lambda[0] is the largest root, lambda[1] = -1/(lambda[0]+1) lies in
/// (-1, 0) and lambda[2] = -(lambda[0]+1)/lambda[0] lies in (-2, -1).
/// Values are held at `working_bits`, which exceeds the requested
/// `precision_bits` by guard bits that absorb the cancellation in f_n.
struct RootSet {
  BigInt n;
  long precision_bits = 0;
  long working_bits = 0;
  std::array<Real, 3> lambda;
  std::array<Real, 3> log_abs_lambda;
  /// |log|l1| log|l0| - log|l2|^2|, the regulator.
  Real regulator;
  /// The signed determinant log|l1| log|l0| - log|l2|^2 (negative).
  Real determinant;
};

/// alpha^(1) = l0^s l1^t, alpha^(2) = l1^s l2^t, alpha^(3) = l2^s l0^t.
struct AlphaTriple {
  BigInt n;
  std::int64_t s = 0;
  std::int64_t t = 0;
  long precision_bits = 0;
  long working_bits = 0;
  std::array<Real, 3> alpha;
};

/// Working precision used for a requested output precision: guard bits for
/// the cancellation of terms of size n^3 in f_n.
long root_working_precision(const BigInt& n, long precision_bits);

/// Working precision for the twisted values: the powering guard
/// ceil((|s|+|t|) log2(n+2)) + 32 on top of the request.
long alpha_working_precision(const BigInt& n, std::int64_t s, std::int64_t t, long precision_bits);

RootSet compute_roots(const BigInt& n, long precision_bits);

AlphaTriple compute_alphas(const BigInt& n, std::int64_t s, std::int64_t t, long precision_bits);

/// Value of f_n at x, evaluated in Horner form.
Real eval_fn(const BigInt& n, const Real& x);

/// c0 + c1 l + c2 l^2 for a numeric value l of the generator.
Real embed(const FieldInt& a, const Real& lambda);

/// Absolute regulator determinant from the fundamental pair (l_i, l_j),
/// rows indexed by the identity embedding and the shift l_k -> l_{k+1}.
Real regulator_from_pair(const RootSet& roots, int i, int j);

}  // namespace thue
