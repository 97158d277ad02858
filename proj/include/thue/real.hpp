#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace thue {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Arbitrary-precision binary floating point value backed by MPFR.
///
/// Every value carries its own precision. Binary operations produce a
/// result at the larger of the two operand precisions; operations with
/// machine integers or BigInt keep the precision of the Real operand.
/// All rounding is to nearest.
class Real {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 192;

  explicit Real(mpfr_prec_t prec = kDefaultPrecision);
  Real(long value, mpfr_prec_t prec);
  Real(int value, mpfr_prec_t prec) : Real(static_cast<long>(value), prec) {}
  Real(double value, mpfr_prec_t prec);
  Real(const BigInt& value, mpfr_prec_t prec);
  Real(const Rational& value, mpfr_prec_t prec);
  Real(std::string_view decimal, mpfr_prec_t prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real& operator*=(int rhs) { return *this *= static_cast<long>(rhs); }
  Real& operator/=(int rhs) { return *this /= static_cast<long>(rhs); }
  Real operator-() const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Nearest integer, ties away from zero.
  BigInt round() const;
  BigInt floor() const;
  BigInt ceil() const;

  /// Scientific notation with `digits` significant decimal digits
  /// (0 = enough digits to round-trip the precision).
  std::string str(int digits = 0) const;

 private:
  mpfr_t value_;
};

/// Raises the MPFR exponent range of the calling thread to its maximum.
/// Called by every entry point that may form very large or tiny values.
void widen_exponent_range();

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);
inline Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
inline Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
inline Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
inline Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
inline Real operator+(int a, const Real& b) { return static_cast<long>(a) + b; }
inline Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
inline Real operator*(int a, const Real& b) { return static_cast<long>(a) * b; }
inline Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }
// Mixing with double would silently truncate through the long overloads.
Real operator+(const Real&, double) = delete;
Real operator-(const Real&, double) = delete;
Real operator*(const Real&, double) = delete;
Real operator/(const Real&, double) = delete;
Real operator+(double, const Real&) = delete;
Real operator-(double, const Real&) = delete;
Real operator*(double, const Real&) = delete;
Real operator/(double, const Real&) = delete;
Real operator*(const Real& a, const BigInt& b);
Real operator+(const Real& a, const BigInt& b);
Real operator-(const Real& a, const BigInt& b);

int compare(const Real& a, const Real& b);
int compare(const Real& a, long b);
int compare(const Real& a, double b);

inline bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const Real& a, const Real& b) { return compare(a, b) <=> 0; }
inline bool operator==(const Real& a, long b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const Real& a, long b) { return compare(a, b) <=> 0; }
inline bool operator==(const Real& a, int b) { return compare(a, static_cast<long>(b)) == 0; }
inline std::strong_ordering operator<=>(const Real& a, int b) {
  return compare(a, static_cast<long>(b)) <=> 0;
}
inline bool operator==(const Real& a, double b) { return compare(a, b) == 0; }
inline std::partial_ordering operator<=>(const Real& a, double b) { return compare(a, b) <=> 0; }

Real abs(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real expm1(const Real& x);
Real exp(const Real& x);
Real sqrt(const Real& x);
Real pow(const Real& x, long e);
Real pow(const Real& x, const Real& e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real log_of(const BigInt& n, mpfr_prec_t prec);
Real const_log2(mpfr_prec_t prec);

/// Copy of `x` rounded to `prec` bits.
Real with_precision(const Real& x, mpfr_prec_t prec);

/// Number of bits of |n| (0 for n == 0).
long bit_length(const BigInt& n);

}  // namespace thue
