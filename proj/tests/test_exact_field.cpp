#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "thue/error.hpp"
#include "thue/exact_field.hpp"
#include "thue/numeric_roots.hpp"

using namespace thue;

namespace {

FieldInt elem(long n, long a, long b, long c) { return FieldInt(BigInt(n), BigInt(a), BigInt(b), BigInt(c)); }

FieldInt random_elem(std::mt19937_64& rng, long n) {
  std::uniform_int_distribution<long> d(-1000, 1000);
  return elem(n, d(rng), d(rng), d(rng));
}

const long kNs[] = {0, 1, 2, 5, 17, 1000};

}  // namespace

TEST_CASE("generator cubed reduces by the minimal polynomial") {
  for (long n : kNs) {
    const FieldInt l = FieldInt::generator(BigInt(n));
    const FieldInt l2 = reduce_mul(l, l);
    CHECK(l2 == elem(n, 0, 0, 1));
    CHECK(reduce_mul(l, l2) == elem(n, 1, n + 2, n - 1));
  }
}

TEST_CASE("traces and norms of small elements") {
  for (long n : kNs) {
    const BigInt N(n);
    CHECK(trace(FieldInt::one(N)) == 3);
    CHECK(trace(FieldInt::generator(N)) == n - 1);
    CHECK(trace(elem(n, 0, 0, 1)) == BigInt(n) * n + 5);  // (n-1)^2 + 2(n+2)
    CHECK(norm(FieldInt::generator(N)) == 1);
    CHECK(norm(FieldInt::generator(N) + FieldInt::one(N)) == -1);
    CHECK(norm(FieldInt::integer(N, 2)) == 8);
  }
}

TEST_CASE("trace and norm agree with sums and products over bisected roots") {
  std::mt19937_64 rng(7);
  for (long n : {0L, 3L, 40L, 999L}) {
    const auto roots = oracle::bisect_roots(BigInt(n), 300);
    for (int k = 0; k < 20; ++k) {
      const FieldInt a = random_elem(rng, n);
      Real sum(0L, 300), prod(1L, 300);
      for (const Real& l : roots) {
        const Real e = Real(a.c0(), 300) + Real(a.c1(), 300) * l + Real(a.c2(), 300) * l * l;
        sum += e;
        prod *= e;
      }
      CHECK(sum.round() == trace(a));
      CHECK(prod.round() == norm(a));
    }
  }
}

TEST_CASE("ring laws and multiplicativity of the norm") {
  std::mt19937_64 rng(11);
  for (long n : kNs) {
    for (int k = 0; k < 25; ++k) {
      const FieldInt a = random_elem(rng, n), b = random_elem(rng, n), c = random_elem(rng, n);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(norm(a * b) == norm(a) * norm(b));
      CHECK(trace(a + b) == trace(a) + trace(b));
      CHECK(a - a == FieldInt::integer(BigInt(n), 0));
    }
  }
}

TEST_CASE("inverse of the generator") {
  for (long n : kNs) {
    const FieldInt inv = invert_unit(FieldInt::generator(BigInt(n)));
    CHECK(inv == elem(n, -(n + 2), -(n - 1), 1));
    CHECK(invert_unit(FieldInt::one(BigInt(n))).is_one());
  }
}

TEST_CASE("lambda1 and lambda2 elements embed to the other roots") {
  for (long n : {0L, 4L, 100L}) {
    const RootSet r = compute_roots(BigInt(n), 200);
    const Real e1 = embed(lambda1_element(BigInt(n)), r.lambda[0]);
    const Real e2 = embed(lambda2_element(BigInt(n)), r.lambda[0]);
    CHECK(abs(e1 - r.lambda[1]) < Real("1e-50", 200));
    CHECK(abs(e2 - r.lambda[2]) < Real("1e-50", 200));
    CHECK(reduce_mul(reduce_mul(FieldInt::generator(BigInt(n)), lambda1_element(BigInt(n))),
                     lambda2_element(BigInt(n)))
              .is_one());
  }
}

TEST_CASE("unit powers invert exactly") {
  for (long n : {0L, 3L, 10L}) {
    for (std::int64_t s = -8; s <= 8; ++s) {
      for (std::int64_t t = -8; t <= 8; ++t) {
        const FieldInt a = alpha_element(BigInt(n), s, t);
        CHECK(reduce_mul(a, invert_unit(a)).is_one());
        CHECK(abs(norm(a)) == 1);
      }
    }
  }
}

TEST_CASE("alpha elements") {
  for (long n : kNs) {
    const BigInt N(n);
    CHECK(alpha_element(N, 1, 0) == FieldInt::generator(N));
    CHECK(alpha_element(N, 0, 1) == lambda1_element(N));
    CHECK(alpha_element(N, 0, 0).is_one());
    CHECK(trace(alpha_element(N, 1, 1)) == -(n + 2));
    CHECK(alpha_element(N, -2, 3) == reduce_mul(invert_unit(power(FieldInt::generator(N), 2)),
                                                power(lambda1_element(N), 3)));
  }
}

TEST_CASE("errors") {
  const FieldInt a = FieldInt::generator(BigInt(3));
  const FieldInt b = FieldInt::generator(BigInt(4));
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ExactMatch;
  };
  CHECK(kind_of([&] { (void)(a * b); }) == ErrorKind::ParameterMismatch);
  CHECK(kind_of([&] { (void)(a + b); }) == ErrorKind::ParameterMismatch);
  CHECK(kind_of([&] { (void)invert_unit(FieldInt::integer(BigInt(3), 2)); }) == ErrorKind::NotAUnit);
  CHECK(kind_of([&] { (void)invert_unit(a + FieldInt::integer(BigInt(3), 2)); }) == ErrorKind::NotAUnit);
}
