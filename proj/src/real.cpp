#include "thue/real.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "thue/error.hpp"

namespace thue {

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

template <typename Op>
Real unary(const Real& x, Op op) {
  Real r(x.precision());
  op(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(std::string_view decimal, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  std::string s(decimal);
  if (mpfr_set_str(value_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(value_)) {
    mpfr_clear(value_);
    throw Error(ErrorKind::InvalidArgument, "not a decimal number: " + s);
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

BigInt Real::round() const {
  if (!is_finite()) throw Error(ErrorKind::PrecisionExhausted, "rounding a non-finite value");
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDNA);
  return z;
}

BigInt Real::floor() const {
  if (!is_finite()) throw Error(ErrorKind::PrecisionExhausted, "rounding a non-finite value");
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDD);
  return z;
}

BigInt Real::ceil() const {
  if (!is_finite()) throw Error(ErrorKind::PrecisionExhausted, "rounding a non-finite value");
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDU);
  return z;
}

std::string Real::str(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(value_)) return "0";
  char* buf = nullptr;
  int n = digits > 0 ? digits : static_cast<int>(precision() * 0.30103) + 1;
  mpfr_asprintf(&buf, "%.*Rg", n, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

void widen_exponent_range() {
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    done = true;
  }
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.precision());
  mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.precision());
  mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

Real operator+(long a, const Real& b) { return b + a; }

Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const BigInt& b) {
  Real r(a.precision());
  mpfr_mul_z(r.get(), a.get(), b.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const BigInt& b) {
  Real r(a.precision());
  mpfr_add_z(r.get(), a.get(), b.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const BigInt& b) {
  Real r(a.precision());
  mpfr_sub_z(r.get(), a.get(), b.get_mpz_t(), MPFR_RNDN);
  return r;
}

int compare(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()); }
int compare(const Real& a, long b) { return mpfr_cmp_si(a.get(), b); }
int compare(const Real& a, double b) { return mpfr_cmp_d(a.get(), b); }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }

Real pow(const Real& x, long e) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& e) {
  Real r(wider(x, e));
  mpfr_pow(r.get(), x.get(), e.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return compare(a, b) >= 0 ? a : b; }
Real min(const Real& a, const Real& b) { return compare(a, b) <= 0 ? a : b; }

Real log_of(const BigInt& n, mpfr_prec_t prec) { return log(Real(n, prec)); }

Real const_log2(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real with_precision(const Real& x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

long bit_length(const BigInt& n) {
  if (n == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

}  // namespace thue
