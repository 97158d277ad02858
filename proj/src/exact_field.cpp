#include "thue/exact_field.hpp"

#include <utility>

#include "thue/error.hpp"

namespace thue {

namespace {

void require_same_n(const FieldInt& a, const FieldInt& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorKind::ParameterMismatch,
                "field elements over n=" + a.n().get_str() + " and n=" + b.n().get_str());
  }
}

BigInt det3(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::uint64_t magnitude(std::int64_t e) {
  return e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
}

}  // namespace

FieldInt::FieldInt(BigInt n, BigInt c0, BigInt c1, BigInt c2)
    : n_(std::move(n)), c_{std::move(c0), std::move(c1), std::move(c2)} {}

FieldInt FieldInt::integer(const BigInt& n, const BigInt& value) { return FieldInt(n, value, 0, 0); }

FieldInt FieldInt::generator(const BigInt& n) { return FieldInt(n, 0, 1, 0); }

std::string FieldInt::str() const {
  return "(" + c_[0].get_str() + ", " + c_[1].get_str() + ", " + c_[2].get_str() + ")";
}

bool operator==(const FieldInt& a, const FieldInt& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

FieldInt operator+(const FieldInt& a, const FieldInt& b) {
  require_same_n(a, b);
  return FieldInt(a.n(), a.c0() + b.c0(), a.c1() + b.c1(), a.c2() + b.c2());
}

FieldInt operator-(const FieldInt& a, const FieldInt& b) {
  require_same_n(a, b);
  return FieldInt(a.n(), a.c0() - b.c0(), a.c1() - b.c1(), a.c2() - b.c2());
}

FieldInt operator-(const FieldInt& a) { return FieldInt(a.n(), -a.c0(), -a.c1(), -a.c2()); }

FieldInt operator*(const FieldInt& a, const FieldInt& b) { return reduce_mul(a, b); }

FieldInt operator*(const FieldInt& a, const BigInt& k) {
  return FieldInt(a.n(), a.c0() * k, a.c1() * k, a.c2() * k);
}

FieldInt reduce_mul(const FieldInt& a, const FieldInt& b) {
  require_same_n(a, b);
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  // Schoolbook product of degree 4, then fold l^4 and l^3 back down.
  BigInt d0 = x[0] * y[0];
  BigInt d1 = x[0] * y[1] + x[1] * y[0];
  BigInt d2 = x[0] * y[2] + x[1] * y[1] + x[2] * y[0];
  BigInt d3 = x[1] * y[2] + x[2] * y[1];
  BigInt d4 = x[2] * y[2];

  const BigInt e1 = a.n() - 1;  // l^3 = e1 l^2 + e2 l + 1
  const BigInt e2 = a.n() + 2;
  // l^4 = e1 l^3 + e2 l^2 + l
  d3 += d4 * e1;
  d2 += d4 * e2;
  d1 += d4;
  d2 += d3 * e1;
  d1 += d3 * e2;
  d0 += d3;
  return FieldInt(a.n(), std::move(d0), std::move(d1), std::move(d2));
}

Matrix3 regular_representation(const FieldInt& a) {
  Matrix3 m;
  FieldInt column = a;
  const FieldInt l = FieldInt::generator(a.n());
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) m[i][j] = column.coefficients()[i];
    if (j < 2) column = reduce_mul(column, l);
  }
  return m;
}

BigInt trace(const FieldInt& a) {
  const Matrix3 m = regular_representation(a);
  return m[0][0] + m[1][1] + m[2][2];
}

BigInt norm(const FieldInt& a) { return det3(regular_representation(a)); }

FieldInt invert_unit(const FieldInt& a) {
  const Matrix3 m = regular_representation(a);
  const BigInt det = det3(m);
  if (det != 1 && det != -1) {
    throw Error(ErrorKind::NotAUnit, "element " + a.str() + " has norm " + det.get_str());
  }
  // The inverse solves M c = e_0, i.e. c is the first column of adj(M) / det.
  BigInt a0 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  BigInt a1 = -(m[1][0] * m[2][2] - m[1][2] * m[2][0]);
  BigInt a2 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  return FieldInt(a.n(), a0 * det, a1 * det, a2 * det);
}

FieldInt power(const FieldInt& a, std::uint64_t e) {
  FieldInt result = FieldInt::one(a.n());
  FieldInt base = a;
  while (e > 0) {
    if (e & 1) result = reduce_mul(result, base);
    e >>= 1;
    if (e > 0) base = reduce_mul(base, base);
  }
  return result;
}

FieldInt lambda1_element(const BigInt& n) {
  return -invert_unit(FieldInt(n, 1, 1, 0));
}

FieldInt lambda2_element(const BigInt& n) {
  return -reduce_mul(FieldInt(n, 1, 1, 0), invert_unit(FieldInt::generator(n)));
}

FieldInt alpha_element(const BigInt& n, std::int64_t s, std::int64_t t) {
  const FieldInt l0 = FieldInt::generator(n);
  const FieldInt l1 = lambda1_element(n);
  const FieldInt base0 = s < 0 ? invert_unit(l0) : l0;
  // lambda_1^{-1} = -(lambda_0 + 1)
  const FieldInt base1 = t < 0 ? FieldInt(n, -1, -1, 0) : l1;
  return reduce_mul(power(base0, magnitude(s)), power(base1, magnitude(t)));
}

}  // namespace thue
