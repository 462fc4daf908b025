#pragma once

// Text form of cyclotomic numbers.
//
//   expr  := term (('+' | '-') term)*
//   term  := coeff ('*' root)? | root
//   root  := 'E(' uint ')' ('^' int)?
//   coeff := int | int '/' uint
//
// E(n) is exp(2 pi i / n). Whitespace is ignored and a leading sign is allowed.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "agering/cyclotomic.hpp"
#include "agering/errors.hpp"

namespace agering {

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Cyclotomic parse() {
    skip();
    if (at_end()) fail("empty expression");
    Cyclotomic sum = signed_term();
    skip();
    while (!at_end()) {
      const char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      Cyclotomic t = term();
      sum = op == '+' ? sum + t : sum - t;
      skip();
    }
    return sum;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Cyclotomic signed_term() {
    skip();
    if (accept('-')) return -term();
    accept('+');
    return term();
  }

  Cyclotomic term() {
    skip();
    if (!at_end() && text_[pos_] == 'E') return root();
    mpq_class c{mpz_class{digits()}};
    if (accept('/')) {
      const std::size_t at = pos_;
      mpz_class den{digits()};
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
      c /= den;
    }
    if (accept('*')) return root().scaled(Rational(c));
    return Cyclotomic(Rational(c));
  }

  Cyclotomic root() {
    skip();
    if (at_end() || text_[pos_] != 'E') fail("expected 'E('");
    ++pos_;
    expect('(');
    const std::size_t at = pos_;
    const mpz_class n{digits()};
    if (n == 0) {
      pos_ = at;
      throw Error(ErrorKind::ZeroConductor, "E(0) at position " + std::to_string(at));
    }
    if (!n.fits_uint_p() || n > 1000000) fail("conductor too large");
    expect(')');
    long k = 1;
    if (accept('^')) {
      bool negative = false;
      if (accept('-')) negative = true;
      else accept('+');
      const mpz_class e{digits()};
      if (!e.fits_slong_p()) fail("exponent too large");
      k = negative ? -e.get_si() : e.get_si();
    }
    return Cyclotomic::root_of_unity(static_cast<unsigned>(n.get_ui()), k);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Cyclotomic parse_cyclotomic_expr(std::string_view text) {
  return detail::ExprParser(text).parse();
}

}  // namespace agering
