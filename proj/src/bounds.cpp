#include "thue/bounds.hpp"

#include <algorithm>
#include <set>

#include "thue/asymptotics.hpp"
#include "thue/error.hpp"
#include "thue/form_builder.hpp"
#include "thue/grid.hpp"
#include "thue/numeric_roots.hpp"

namespace thue {

namespace {

BigInt ipow(long base, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

// Forms with (|s| + |t|) bitlen(n) above this are not built; their height
// is bounded through the alphas instead.
constexpr long kExactHeightBits = 65536;

[[noreturn]] void chain_fail(const ProofQuantities& q, const std::string& what) {
  throw Error(ErrorKind::ChainPreconditionFailed, what + " fails at n=" + q.n.get_str() + ", (s,t)=(" +
                                                      std::to_string(q.s) + "," + std::to_string(q.t) + ")");
}

}  // namespace

BigInt c3_constant(long degree, long rank) {
  if (degree < 3 || rank < 1) throw Error(ErrorKind::InvalidArgument, "c3 needs degree >= 3 and rank >= 1");
  return ipow(3, rank + 27) * ipow(rank + 1, 7 * rank + 19) * ipow(degree, 2 * degree + 6 * rank + 14);
}

Real bg_exponent(const BigInt& c3, const Real& R, const Real& log_H, const Real& log_B) {
  const long prec = R.precision();
  const Real one(1L, prec);
  return Real(c3, prec) * R * max(log(R), one) * (R + log_H + log_B);
}

UpperBound bg_upper_bound(const BigInt& n, std::int64_t s, std::int64_t t, const BigInt& b_abs, long precision_bits) {
  if (s == 0 && t == 0) throw Error(ErrorKind::ReducibleForm, "(s,t) = (0,0) gives (x-y)^3");
  if (b_abs < 1) throw Error(ErrorKind::InvalidArgument, "b must be at least 1");
  widen_exponent_range();
  UpperBound ub;
  ub.c3 = c3_constant(3, 2);
  const long guard = 2 * bit_length(n) + 2 * bit_length(BigInt(std::to_string(std::max(std::abs(s), std::abs(t))))) + 64;
  const RootSet roots = compute_roots(n, precision_bits + guard);
  const long prec = roots.working_bits;
  ub.R = roots.regulator;

  const BigInt st_sum(std::to_string(std::abs(s) + std::abs(t)));
  if (st_sum * bit_length(n) <= kExactHeightBits) {
    const BinaryCubicForm f = build_form(n, s, t);
    if (!is_irreducible(f)) throw Error(ErrorKind::ReducibleForm, "form has a rational linear factor");
    ub.H = height(f);
    ub.H_exact = true;
    ub.log_H = log_of(ub.H, prec);
  } else {
    // |A| = |Tr alpha| and |B| = |Tr alpha^{-1}| are at most 3 max |alpha^(i)|^{+-1}.
    const auto& L = roots.log_abs_lambda;
    const long sl = static_cast<long>(s);
    const long tl = static_cast<long>(t);
    const Real l1 = L[0] * sl + L[1] * tl;
    const Real l2 = L[1] * sl + L[2] * tl;
    const Real l3 = L[2] * sl + L[0] * tl;
    ub.log_H = log_of(BigInt(3), prec) + max(max(abs(l1), abs(l2)), abs(l3));
  }
  const Real one(1L, prec);
  ub.log_B = max(log_of(b_abs, prec), one);
  ub.exponent = bg_exponent(ub.c3, ub.R, ub.log_H, ub.log_B);
  return ub;
}

Real lower_bound_chain(const ProofQuantities& q) {
  const long prec = q.working_bits;
  const Real nr(q.n, prec);
  const Real slack = log(nr) / nr * 3 / 4L;
  if (q.u_bar.sign() <= 0) chain_fail(q, "u_bar > 0");
  if (q.w_bar.sign != 0 && !(q.log_wbar_ratio < log(slack))) {
    chain_fail(q, "|w_bar| / (2 |a1-a2| |a1-a3|) < (3/4) log n / n");
  }
  if (!q.v_bar_in_window || q.v_bar.sign() <= 0 || q.r_minus_v_bar.sign() <= 0) chain_fail(q, "0 < v_bar < R");
  // |y| >= 2 and b_bar <= 0 would contradict R b_bar > u_bar log|y| + v_bar - slack.
  if (!(q.v_bar + q.u_bar * const_log2(prec) > slack)) chain_fail(q, "v_bar + u_bar log 2 > (3/4) log n / n");
  Real value = (q.r_minus_v_bar - slack) * nr / 3L;
  if (value.sign() <= 0) chain_fail(q, "R - v_bar > (3/4) log n / n");
  return value;
}

BoundReport bound_report(const BigInt& n, std::int64_t s, std::int64_t t, long precision_bits) {
  BoundReport r;
  r.n = n;
  r.s = s;
  r.t = t;
  r.precision_bits = precision_bits;
  const UpperBound ub = bg_upper_bound(n, s, t, 1, precision_bits);
  r.c3 = ub.c3;
  r.log_H = ub.log_H;
  r.H_exact = ub.H_exact;
  r.B_rhs = ub.exponent;
  if (s == 0 || t == 0) {
    r.chain_failure = "chain needs st != 0";
    return r;
  }
  try {
    const ProofQuantities q = compute_proof_quantities(n, s, t, precision_bits);
    Real lower = lower_bound_chain(q);
    r.log_margin = log(lower) - log(r.B_rhs);
    r.crossover = r.log_margin->sign() > 0;
    r.lower_chain = std::move(lower);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ChainPreconditionFailed && e.kind() != ErrorKind::PrecisionExhausted &&
        e.kind() != ErrorKind::InvalidArgument) {
      throw;
    }
    r.chain_failure = e.what();
  }
  return r;
}

std::vector<std::pair<std::int64_t, std::int64_t>> policy_pairs(const StPolicy& policy, const BigInt& m) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  if (m < 1) return {};
  if (m > (BigInt(1) << 62)) {
    throw Error(ErrorKind::InvalidArgument, "twist bound " + m.get_str() + " exceeds 2^62; n is too large");
  }
  const std::int64_t mm = m.get_si();
  auto add = [&](__int128 s, __int128 t) {
    if (s == 0 || t == 0 || s > mm || s < -mm || t > mm || t < -mm) return;
    out.insert({static_cast<std::int64_t>(s), static_cast<std::int64_t>(t)});
    out.insert({static_cast<std::int64_t>(-s), static_cast<std::int64_t>(-t)});
  };
  if (policy.kind == StPolicy::Kind::Small) {
    const std::int64_t k = std::min(policy.k, mm);
    for (std::int64_t s = -k; s <= k; ++s) {
      for (std::int64_t t = -k; t <= k; ++t) add(s, t);
    }
  } else {
    std::vector<std::int64_t> mags = {1, 2, 3, mm / 2, mm};
    for (std::int64_t a : mags) {
      for (std::int64_t b : mags) {
        add(a, b);
        add(a, -b);
      }
      for (std::int64_t d = -1; d <= 1; ++d) {
        const __int128 a2 = static_cast<__int128>(a) * 2 + d;
        add(a, a2);
        add(a2, a);
        add(a / 2, static_cast<__int128>(a) + d);
        add(static_cast<__int128>(a) + d, a / 2);
      }
    }
  }
  return {out.begin(), out.end()};
}

N0Report n0_scan(const Rational& epsilon, const std::vector<BigInt>& n_grid, const StPolicy& policy,
                 long precision_bits, unsigned jobs) {
  if (n_grid.empty()) throw Error(ErrorKind::EmptyGrid, "n0 scan needs at least one n");
  N0Report rep;
  rep.epsilon = epsilon;
  rep.precision_bits = precision_bits;

  struct Cell {
    std::size_t row;
    std::int64_t s, t;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    N0Row row;
    row.n = n_grid[i];
    row.m = twist_limit(n_grid[i], epsilon);
    for (const auto& [s, t] : policy_pairs(policy, row.m)) cells.push_back({i, s, t});
    rep.rows.push_back(std::move(row));
  }
  rep.points = parallel_map(cells.size(), jobs, [&](std::size_t k) {
    return bound_report(n_grid[cells[k].row], cells[k].s, cells[k].t, precision_bits);
  });

  for (std::size_t k = 0; k < cells.size(); ++k) {
    N0Row& row = rep.rows[cells[k].row];
    const BoundReport& p = rep.points[k];
    ++row.tested;
    if (p.crossover) ++row.crossed;
    if (!p.lower_chain) {
      ++row.undefined;
      continue;
    }
    if (!row.min_log_margin || *p.log_margin < *row.min_log_margin) {
      row.min_log_margin = *p.log_margin;
      row.worst = {p.s, p.t};
    }
  }

  auto threshold_index = [&](bool strict) -> std::optional<std::size_t> {
    std::optional<std::size_t> idx;
    for (std::size_t i = rep.rows.size(); i-- > 0;) {
      const N0Row& r = rep.rows[i];
      const std::size_t need = strict ? r.tested : r.tested - r.undefined;
      if (need == 0 || r.crossed < need) break;
      idx = i;
    }
    return idx;
  };
  const auto strict = threshold_index(true);
  const auto loose = threshold_index(false);
  if (strict) rep.threshold = rep.rows[*strict].n;
  if (loose) rep.threshold_defined_only = rep.rows[*loose].n;
  if (const auto from = strict ? strict : loose) {
    rep.margins_monotone = true;
    for (std::size_t i = *from + 1; i < rep.rows.size(); ++i) {
      const auto& a = rep.rows[i - 1].min_log_margin;
      const auto& b = rep.rows[i].min_log_margin;
      if (!a || !b || *b < *a) rep.margins_monotone = false;
    }
  }
  const std::size_t last = rep.rows.size() - 1;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k].row == last && !rep.points[k].crossover) rep.never_crossing.push_back({cells[k].s, cells[k].t});
  }
  return rep;
}

}  // namespace thue
