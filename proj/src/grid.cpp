#include "thue/grid.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "thue/error.hpp"

namespace thue {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_unsigned(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) throw Error(ErrorKind::InvalidArgument, "not an integer: '" + std::string(whole) + "'");
  return BigInt(std::string(s));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

BigInt parse_integer_literal(std::string_view text) {
  std::string_view s = trim(text);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  BigInt v;
  if (auto caret = s.find('^'); caret != std::string_view::npos) {
    const BigInt base = parse_unsigned(s.substr(0, caret), text);
    const BigInt exp = parse_unsigned(s.substr(caret + 1), text);
    if (!exp.fits_ulong_p() || exp > 100000) throw Error(ErrorKind::InvalidArgument, "exponent too large");
    mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  } else if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt mant = parse_unsigned(s.substr(0, e), text);
    const BigInt exp = parse_unsigned(s.substr(e + 1), text);
    if (!exp.fits_ulong_p() || exp > 100000) throw Error(ErrorKind::InvalidArgument, "exponent too large");
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, exp.get_ui());
    v = mant * p;
  } else {
    v = parse_unsigned(s, text);
  }
  return neg ? BigInt(-v) : v;
}

std::vector<BigInt> parse_n_grid(std::string_view spec) {
  std::vector<BigInt> out;
  for (std::string_view item : split(spec, ',')) {
    item = trim(item);
    if (item.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid item in '" + std::string(spec) + "'");
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(parse_integer_literal(item));
      continue;
    }
    if (parts.size() > 3) throw Error(ErrorKind::InvalidArgument, "bad range '" + std::string(item) + "'");
    const BigInt start = parse_integer_literal(parts[0]);
    const BigInt stop = parse_integer_literal(parts[1]);
    if (stop < start) throw Error(ErrorKind::InvalidArgument, "range stop below start in '" + std::string(item) + "'");
    const std::string_view rule = parts.size() == 3 ? trim(parts[2]) : std::string_view("1");
    if (rule.substr(0, 5) == "log10") {
      long per_decade = 1;
      if (rule.size() > 5) {
        if (rule[5] != '/') throw Error(ErrorKind::InvalidArgument, "bad step rule '" + std::string(rule) + "'");
        const BigInt k = parse_unsigned(rule.substr(6), rule);
        if (k < 1 || k > 1000) throw Error(ErrorKind::InvalidArgument, "points per decade must be in 1..1000");
        per_decade = k.get_si();
      }
      if (start < 1) throw Error(ErrorKind::InvalidArgument, "log-spaced ranges need start >= 1");
      const long prec = 64 + 4 * bit_length(stop);
      const Real ten(10L, prec);
      for (long i = 0;; ++i) {
        Rational e(i, per_decade);
        e.canonicalize();
        const Real factor = pow(ten, Real(e, prec));
        const BigInt v = (Real(start, prec) * factor).round();
        if (v > stop) break;
        out.push_back(v);
      }
    } else {
      const BigInt step = parse_integer_literal(rule);
      if (step < 1) throw Error(ErrorKind::InvalidArgument, "step must be positive");
      for (BigInt v = start; v <= stop; v += step) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("THUE_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

long default_precision(long fallback) {
  if (const char* env = std::getenv("THUE_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 64) return v;
  }
  return fallback;
}

}  // namespace thue
