#pragma once

// Exact rationals on top of GMP. Always canonical: gcd(|num|, den) = 1,
// den > 0, and zero is 0/1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "agering/errors.hpp"

namespace agering {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(runtime/explicit)
  Rational(int value) : value_(value) {}   // NOLINT(runtime/explicit)
  Rational(long num, unsigned long den) : value_(num, den) {
    if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
    value_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
    value_.canonicalize();
  }
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  /// Parses "a" or "a/b" in base 10.
  static Rational from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
      throw Error(ErrorKind::InvalidInput, "not a rational: '" + text + "'");
    }
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& raw() const { return value_; }
  /// Direct access for in-place GMP updates; the caller keeps it canonical.
  mpq_class& raw_mut() { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Value as a machine integer; throws NotAnInteger unless integral and in range.
  std::int64_t to_int64() const {
    if (!is_integer() || !value_.get_num().fits_slong_p()) {
      throw Error(ErrorKind::NotAnInteger, to_string() + " is not a machine integer");
    }
    return value_.get_num().get_si();
  }

  double to_double() const { return value_.get_d(); }

  std::string to_string() const { return value_.get_str(10); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

}  // namespace agering

template <>
struct std::hash<agering::Rational> {
  std::size_t operator()(const agering::Rational& r) const noexcept {
    const mpq_srcptr q = r.raw().get_mpq_t();
    const auto low = [](mpz_srcptr z) -> std::size_t {
      return mpz_size(z) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z, 0));
    };
    const std::size_t h1 = low(mpq_numref(q)) ^ static_cast<std::size_t>(mpz_sgn(mpq_numref(q)) + 1);
    const std::size_t h2 = low(mpq_denref(q));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};
