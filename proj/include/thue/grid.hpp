#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <string_view>
#include <thread>
#include <vector>

#include "thue/real.hpp"

namespace thue {

/// Integer literal: decimal digits, "10^k" or "1e6".
BigInt parse_integer_literal(std::string_view text);

/// Grid of n values. Accepts comma-separated items, each either a literal
/// or a range "start:stop[:rule]" where rule is a linear step (default 1),
/// "log10" (one point per decade) or "log10/k" (k points per decade).
/// Log-spaced points are start * 10^(i/k) rounded to the nearest integer.
/// The result is sorted and free of duplicates.
std::vector<BigInt> parse_n_grid(std::string_view spec);

/// Worker count from THUE_JOBS, else the hardware concurrency (at least 1).
unsigned default_jobs();
/// Precision from THUE_PRECISION, else `fallback`.
long default_precision(long fallback = Real::kDefaultPrecision);

/// fn(i) for i in [0, count) on `jobs` threads. Workers pull indices from a
/// shared counter; results land in index order, so the output does not
/// depend on scheduling. The exception of the lowest failing index is
/// rethrown after all workers finish.
template <class F>
auto parallel_map(std::size_t count, unsigned jobs, F&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    widen_exponent_range();
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace thue
