#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "thue/real.hpp"

namespace thue {

/// Element c0 + c1*l + c2*l^2 of Z[l], where l is a root of
/// X^3 - (n-1)X^2 - (n+2)X - 1.
///
/// Values are immutable; every operation returns a new element. Binary
/// operations require both operands to carry the same n.
class FieldInt {
 public:
  FieldInt(BigInt n, BigInt c0, BigInt c1, BigInt c2);

  static FieldInt integer(const BigInt& n, const BigInt& value);
  static FieldInt one(const BigInt& n) { return integer(n, 1); }
  /// The generator l (called lambda_0 elsewhere).
  static FieldInt generator(const BigInt& n);

  const BigInt& n() const { return n_; }
  const BigInt& c0() const { return c_[0]; }
  const BigInt& c1() const { return c_[1]; }
  const BigInt& c2() const { return c_[2]; }
  const std::array<BigInt, 3>& coefficients() const { return c_; }

  bool is_one() const { return c_[0] == 1 && c_[1] == 0 && c_[2] == 0; }
  std::string str() const;

  friend bool operator==(const FieldInt& a, const FieldInt& b);

 private:
  BigInt n_;
  std::array<BigInt, 3> c_;
};

using Matrix3 = std::array<std::array<BigInt, 3>, 3>;

FieldInt operator+(const FieldInt& a, const FieldInt& b);
FieldInt operator-(const FieldInt& a, const FieldInt& b);
FieldInt operator-(const FieldInt& a);
FieldInt operator*(const FieldInt& a, const FieldInt& b);
FieldInt operator*(const FieldInt& a, const BigInt& k);

/// Exact product reduced with l^3 = (n-1)l^2 + (n+2)l + 1.
FieldInt reduce_mul(const FieldInt& a, const FieldInt& b);

/// Matrix of multiplication by `a` in the basis (1, l, l^2); column j holds
/// the coordinates of a * l^j.
Matrix3 regular_representation(const FieldInt& a);

BigInt trace(const FieldInt& a);
BigInt norm(const FieldInt& a);

/// Inverse of an element of norm +-1, from the adjugate of its regular
/// representation. Throws NotAUnit otherwise.
FieldInt invert_unit(const FieldInt& a);

/// a^e for e >= 0 by binary powering.
FieldInt power(const FieldInt& a, std::uint64_t e);

/// lambda_1 = -(lambda_0 + 1)^{-1} as an element of Z[lambda_0].
FieldInt lambda1_element(const BigInt& n);

/// lambda_2 = -(lambda_0 + 1) / lambda_0 as an element of Z[lambda_0].
FieldInt lambda2_element(const BigInt& n);

/// lambda_0^s * lambda_1^t for any signs of s and t. Negative exponents
/// invert the base once before powering.
FieldInt alpha_element(const BigInt& n, std::int64_t s, std::int64_t t);

}  // namespace thue
