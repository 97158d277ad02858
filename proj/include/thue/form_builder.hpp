#pragma once

#include <cstdint>
#include <utility>

#include "thue/real.hpp"

namespace thue {

/// f(x, y) = x^3 + A x^2 y + B x y^2 - y^3, the norm form of
/// x - lambda_0^s lambda_1^t y over the cubic field of parameter n.
struct BinaryCubicForm {
  BigInt n;
  std::int64_t s = 0;
  std::int64_t t = 0;
  BigInt A;
  BigInt B;

  /// (s, t) == (0, 0): the form collapses to (x - y)^3.
  bool degenerate() const { return s == 0 && t == 0; }
};

/// Coefficients from traces: A = -Tr(alpha), B = Tr(alpha^{-1}).
BinaryCubicForm build_form(const BigInt& n, std::int64_t s, std::int64_t t);

BigInt eval_form(const BinaryCubicForm& f, const BigInt& x, const BigInt& y);

/// max(|A|, |B|), floored at 3.
BigInt height(const BinaryCubicForm& f);

/// Discriminant of the dehomogenized polynomial x^3 + A x^2 + B x - 1.
BigInt discriminant(const BinaryCubicForm& f);

/// True when x^3 + A x^2 + B x - 1 has no rational root. Since the
/// polynomial is monic with constant term -1 the only candidates are +-1.
bool is_irreducible(const BinaryCubicForm& f);

/// (s, t) -> (-s + t, -s); cycles alpha^(1) -> alpha^(3) -> alpha^(2).
std::pair<std::int64_t, std::int64_t> phi_transform(std::int64_t s, std::int64_t t);

}  // namespace thue
