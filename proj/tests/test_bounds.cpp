#include <algorithm>

#include "doctest.h"
#include "thue/bounds.hpp"
#include "thue/error.hpp"
#include "thue/form_builder.hpp"
#include "thue/solver.hpp"

using namespace thue;

namespace {

BigInt slow_pow(long b, long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ExactMatch;
}

}  // namespace

TEST_CASE("c3") {
  CHECK(c3_constant(3, 2) == slow_pow(3, 94));
  // d^(2d+6r+14) = 3^26 at d = 3, r = 1
  CHECK(c3_constant(3, 1) == slow_pow(3, 28) * slow_pow(2, 26) * slow_pow(3, 26));
  CHECK(c3_constant(4, 2) > c3_constant(3, 2));
  CHECK(c3_constant(3, 3) > c3_constant(3, 2));
  for (long d = 3; d <= 6; ++d) {
    for (long r = 1; r <= 4; ++r) {
      CHECK(c3_constant(d, r) == slow_pow(3, r + 27) * slow_pow(r + 1, 7 * r + 19) * slow_pow(d, 2 * d + 6 * r + 14));
    }
  }
  CHECK(kind_of([] { (void)c3_constant(2, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("upper bound structure") {
  const UpperBound ub = bg_upper_bound(BigInt(100), 2, 1);
  const long p = ub.R.precision();
  const Real c3(ub.c3, p);
  CHECK(ub.c3 == slow_pow(3, 94));
  CHECK(ub.H_exact);
  CHECK(ub.H == height(build_form(BigInt(100), 2, 1)));
  CHECK(ub.exponent.is_finite());
  CHECK(ub.exponent >= c3 * ub.R * ub.R);
  CHECK(ub.log_B == Real(1L, p));
  const Real expect = c3 * ub.R * max(log(ub.R), Real(1L, p)) * (ub.R + ub.log_H + ub.log_B);
  CHECK(abs(ub.exponent - expect) <= Real("1e-40", p) * expect);
}

TEST_CASE("doubling H adds c3 R max(log R, 1) log 2") {
  const UpperBound ub = bg_upper_bound(BigInt(1000), 3, -1);
  const long p = ub.R.precision();
  const Real twice = bg_exponent(ub.c3, ub.R, ub.log_H + const_log2(p), ub.log_B);
  const Real step = Real(ub.c3, p) * ub.R * max(log(ub.R), Real(1L, p)) * const_log2(p);
  CHECK(abs(twice - ub.exponent - step) <= Real("1e-40", p) * step);
}

TEST_CASE("monotone in H, B and R") {
  const long p = 128;
  const BigInt c3 = c3_constant(3, 2);
  const Real base = bg_exponent(c3, Real(5L, p), Real(2L, p), Real(1L, p));
  CHECK(bg_exponent(c3, Real(5L, p), Real(3L, p), Real(1L, p)) > base);
  CHECK(bg_exponent(c3, Real(5L, p), Real(2L, p), Real(4L, p)) > base);
  CHECK(bg_exponent(c3, Real(6L, p), Real(2L, p), Real(1L, p)) > base);
  CHECK(bg_exponent(c3, Real("0.5", p), Real(2L, p), Real(1L, p)) < bg_exponent(c3, Real("0.7", p), Real(2L, p), Real(1L, p)));
  const UpperBound b1 = bg_upper_bound(BigInt(100), 2, 1, 1);
  const UpperBound b2 = bg_upper_bound(BigInt(100), 2, 1, 100);
  CHECK(b2.exponent > b1.exponent);
}

TEST_CASE("alpha-based height bound covers the exact height") {
  // Big enough to take the numeric path.
  const BigInt n(1000000);
  const UpperBound ub = bg_upper_bound(n, 2000, 1500);
  CHECK_FALSE(ub.H_exact);
  const BigInt H = height(build_form(n, 2000, 1500));
  CHECK(ub.log_H >= log_of(H, ub.log_H.precision()));
}

TEST_CASE("solutions lie under the upper bound") {
  for (long n : {0L, 1L, 3L, 20L}) {
    for (std::int64_t s = -2; s <= 2; ++s) {
      for (std::int64_t t = -2; t <= 2; ++t) {
        if (s == 0 && t == 0) continue;
        const UpperBound ub = bg_upper_bound(BigInt(n), s, t);
        for (const auto& r : solve_box(BigInt(n), s, t, 50)) {
          const BigInt m = std::max(abs(r.x), abs(r.y));
          CHECK(log_of(m, ub.exponent.precision()) < ub.exponent);
        }
      }
    }
  }
  CHECK(kind_of([] { (void)bg_upper_bound(BigInt(10), 0, 0); }) == ErrorKind::ReducibleForm);
}

TEST_CASE("lower chain at (10^6, 2, 1)") {
  const BigInt n(1000000);
  const ProofQuantities q = compute_proof_quantities(n, 2, 1);
  const Real lower = lower_bound_chain(q);
  const long p = lower.precision();
  const Real nr(n, p);
  CHECK(lower / (nr * log(nr)) > Real("0.5", p));
  // R - v_bar is most of R, about (log n)^2, so the chain grows like
  // n (log n)^2 / 3: its ratio to n log n keeps rising.
  const BigInt n2(100000000);
  const Real m2(n2, p);
  const Real lower2 = lower_bound_chain(compute_proof_quantities(n2, 2, 1));
  CHECK(lower2 / (m2 * log(m2)) > lower / (nr * log(nr)));
  const Real r1 = lower / (nr * log(nr) * log(nr) / 3L);
  const Real r2 = lower2 / (m2 * log(m2) * log(m2) / 3L);
  CHECK(r1 > Real("0.9", p));
  CHECK(r2 > r1);
  CHECK(r2 < Real(1L, p));
}

TEST_CASE("chain preconditions") {
  // On the line s = 2t the w_bar term is too large to absorb.
  const ProofQuantities q = compute_proof_quantities(BigInt(1000000), -2, -1);
  CHECK(kind_of([&] { (void)lower_bound_chain(q); }) == ErrorKind::ChainPreconditionFailed);

  ProofQuantities bad = compute_proof_quantities(BigInt(1000000), 2, 1);
  bad.v_bar = bad.R;
  bad.r_minus_v_bar = Real(0L, bad.R.precision());
  bad.v_bar_in_window = false;
  CHECK(kind_of([&] { (void)lower_bound_chain(bad); }) == ErrorKind::ChainPreconditionFailed);

  const BoundReport r = bound_report(BigInt(100), 1, 0);
  CHECK_FALSE(r.lower_chain);
  CHECK_FALSE(r.chain_failure.empty());
}

TEST_CASE("bound report") {
  const BoundReport r = bound_report(BigInt(100), 2, 1);
  CHECK(r.c3 == slow_pow(3, 94));
  CHECK(r.B_rhs.sign() > 0);
  if (r.lower_chain) {
    CHECK(r.lower_chain->sign() > 0);
    REQUIRE(r.log_margin);
    CHECK(abs(*r.log_margin - (log(*r.lower_chain) - log(r.B_rhs))) < Real("1e-30", r.B_rhs.precision()));
    CHECK(r.crossover == (r.log_margin->sign() > 0));
  }
}

TEST_CASE("twist policies") {
  const auto small = policy_pairs(StPolicy::small(2), BigInt(10));
  CHECK(small.size() == 16);
  CHECK(policy_pairs(StPolicy::small(5), BigInt(1)).size() == 4);
  const BigInt m(1000);
  const auto ext = policy_pairs(StPolicy::extremes(), m);
  for (const auto& [s, t] : ext) {
    CHECK(s != 0);
    CHECK(t != 0);
    CHECK(std::max(std::abs(s), std::abs(t)) <= 1000);
    CHECK(std::binary_search(ext.begin(), ext.end(), std::pair{-s, -t}));
  }
  CHECK(std::binary_search(ext.begin(), ext.end(), std::pair<std::int64_t, std::int64_t>{1000, -1000}));
  CHECK(std::binary_search(ext.begin(), ext.end(), std::pair<std::int64_t, std::int64_t>{500, 1000}));
  CHECK(std::binary_search(ext.begin(), ext.end(), std::pair<std::int64_t, std::int64_t>{1, 3}));
  CHECK(policy_pairs(StPolicy::extremes(), BigInt(0)).empty());
  CHECK(kind_of([] { (void)policy_pairs(StPolicy::extremes(), BigInt(1) << 63); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("n0 scan on tiny grids") {
  CHECK(kind_of([] { (void)n0_scan(Rational(1, 4), {}, StPolicy::extremes()); }) == ErrorKind::EmptyGrid);
  const N0Report rep = n0_scan(Rational(1, 4), {BigInt(10)}, StPolicy::small(3));
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].m == 1);
  CHECK(rep.rows[0].tested == 4);
  CHECK(rep.rows[0].crossed == 0);
  CHECK_FALSE(rep.threshold);
  for (const auto& p : rep.points) CHECK_FALSE(p.crossover);
  CHECK(rep.never_crossing.size() == 4);
}

TEST_CASE("n0 scan finds crossings once n is astronomically large") {
  // (1,1) crosses near n = 10^60; one pair at one n keeps the test cheap.
  BigInt n;
  mpz_ui_pow_ui(n.get_mpz_t(), 10, 70);
  const N0Report rep = n0_scan(Rational(1, 4), {n}, StPolicy::small(1));
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].tested == 4);
  bool any = false;
  for (const auto& p : rep.points) {
    if (p.s == 1 && p.t == 1) {
      CHECK(p.crossover);
      any = true;
    }
  }
  CHECK(any);
}
