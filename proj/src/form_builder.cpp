#include "thue/form_builder.hpp"

#include "thue/error.hpp"
#include "thue/exact_field.hpp"

namespace thue {

BinaryCubicForm build_form(const BigInt& n, std::int64_t s, std::int64_t t) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be non-negative");
  const FieldInt alpha = alpha_element(n, s, t);
  BinaryCubicForm f;
  f.n = n;
  f.s = s;
  f.t = t;
  f.A = -trace(alpha);
  // e2 of the conjugates equals N(alpha) Tr(alpha^{-1}) and N(alpha) = 1.
  f.B = trace(invert_unit(alpha));
  return f;
}

BigInt eval_form(const BinaryCubicForm& f, const BigInt& x, const BigInt& y) {
  // Horner in x with y folded in: ((x + A y) x + B y^2) x - y^3
  const BigInt y2 = y * y;
  BigInt v = x + f.A * y;
  v *= x;
  v += f.B * y2;
  v *= x;
  v -= y2 * y;
  return v;
}

BigInt height(const BinaryCubicForm& f) {
  BigInt h = abs(f.A);
  if (abs(f.B) > h) h = abs(f.B);
  if (h < 3) h = 3;
  return h;
}

BigInt discriminant(const BinaryCubicForm& f) {
  // x^3 + b x^2 + c x + d
  const BigInt& b = f.A;
  const BigInt& c = f.B;
  const BigInt d = -1;
  return b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
}

bool is_irreducible(const BinaryCubicForm& f) {
  return eval_form(f, 1, 1) != 0 && eval_form(f, -1, 1) != 0;
}

std::pair<std::int64_t, std::int64_t> phi_transform(std::int64_t s, std::int64_t t) { return {-s + t, -s}; }

}  // namespace thue
