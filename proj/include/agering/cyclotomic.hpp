#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element is stored as its remainder modulo the n-th cyclotomic
// polynomial Phi_n in the power basis 1, zeta, ..., zeta^(phi(n)-1), so two
// values of the same conductor are equal iff their coefficient vectors are.
// Values of different conductors are lifted to the lcm before comparing or
// combining. There is no conductor minimization and no inversion.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "agering/errors.hpp"
#include "agering/rational.hpp"

namespace agering {

namespace detail {

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Integer coefficients of Phi_n, lowest degree first, monic.
/// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  if (n == 0) throw Error(ErrorKind::ZeroConductor, "conductor must be positive");

  std::vector<std::int64_t> numerator(n + 1, 0);
  numerator[0] = -1;
  numerator[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<std::int64_t> quotient(numerator.size() - dd, 0);
    for (std::size_t i = numerator.size(); i-- > dd;) {
      const std::int64_t c = numerator[i];
      quotient[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) numerator[i - dd + j] -= c * divisor[j];
    }
    for (std::size_t j = 0; j < dd; ++j) {
      if (numerator[j] != 0) {
        throw Error(ErrorKind::InternalInconsistency, "inexact cyclotomic division");
      }
    }
    numerator = std::move(quotient);
  }

  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(numerator)).first->second;
}

/// Reduces a raw polynomial in zeta_n modulo Phi_n, in place, leaving phi(n) entries.
inline void reduce_mod_phi(std::vector<Rational>& raw, unsigned n) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1;
  if (raw.size() < deg) raw.resize(deg);
  mpq_class scratch;
  for (std::size_t i = raw.size(); i-- > deg;) {
    if (raw[i].is_zero()) continue;
    const mpq_class& c = raw[i].raw();
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi_poly[j] == 0) continue;
      scratch = c * phi_poly[j];
      raw[i - deg + j].raw_mut() -= scratch;
    }
  }
  raw.resize(deg);
}

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}  // NOLINT
  Cyclotomic(long r) : Cyclotomic(Rational(r)) {}               // NOLINT
  Cyclotomic(int r) : Cyclotomic(Rational(r)) {}                // NOLINT

  /// Canonical residue of sum_k raw[k] zeta_n^k modulo Phi_n.
  static Cyclotomic reduce(std::vector<Rational> raw, unsigned n) {
    if (n == 0) throw Error(ErrorKind::ZeroConductor, "conductor must be positive");
    if (raw.empty()) raw.emplace_back(0);
    detail::reduce_mod_phi(raw, n);
    return Cyclotomic(n, std::move(raw));
  }

  /// zeta_n^k for any integer k.
  static Cyclotomic root_of_unity(unsigned n, long k = 1) {
    if (n == 0) throw Error(ErrorKind::ZeroConductor, "conductor must be positive");
    const long e = ((k % static_cast<long>(n)) + n) % n;
    std::vector<Rational> raw(std::max<std::size_t>(e + 1, 1));
    raw[e] = Rational(1);
    return reduce(std::move(raw), n);
  }

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
  }
  bool is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
  }

  /// The rational value; throws NotRational when this lies outside Q.
  Rational as_rational() const {
    if (!is_rational()) {
      throw Error(ErrorKind::NotRational, to_string() + " is not rational");
    }
    return coeffs_[0];
  }

  /// Same value written over conductor `target`, which must be a multiple of ours.
  Cyclotomic lifted(unsigned target) const {
    if (target == conductor_) return *this;
    if (target == 0 || target % conductor_ != 0) {
      throw Error(ErrorKind::InternalInconsistency,
                  "cannot lift conductor " + std::to_string(conductor_) + " to " +
                      std::to_string(target));
    }
    const unsigned stride = target / conductor_;
    std::vector<Rational> raw((coeffs_.size() - 1) * stride + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k * stride] = coeffs_[k];
    return reduce(std::move(raw), target);
  }

  /// Galois conjugation zeta -> zeta^-1 (complex conjugation).
  Cyclotomic conjugate() const {
    if (conductor_ <= 2) return *this;
    std::vector<Rational> raw(conductor_);
    raw[0] = coeffs_[0];
    for (std::size_t k = 1; k < coeffs_.size(); ++k) raw[conductor_ - k] = coeffs_[k];
    return reduce(std::move(raw), conductor_);
  }

  /// this * zeta_n^k, done by index shifting rather than a full product.
  Cyclotomic times_root(unsigned n, long k) const {
    const unsigned L = std::lcm(conductor_, n);
    const Cyclotomic a = lifted(L);
    const long shift = ((k % static_cast<long>(n)) + n) % n * static_cast<long>(L / n);
    std::vector<Rational> raw(L);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      raw[(i + shift) % L] += a.coeffs_[i];
    }
    return reduce(std::move(raw), L);
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    return combine(a, b, +1);
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    return combine(a, b, -1);
  }
  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == 1 || b.conductor_ == 1) {
      const Cyclotomic& scalar = a.conductor_ == 1 ? a : b;
      const Cyclotomic& other = a.conductor_ == 1 ? b : a;
      return other.scaled(scalar.coeffs_[0]);
    }
    const unsigned L = std::lcm(a.conductor_, b.conductor_);
    const Cyclotomic x = a.lifted(L);
    const Cyclotomic y = b.lifted(L);
    std::vector<Rational> raw(x.coeffs_.size() + y.coeffs_.size() - 1);
    mpq_class scratch;
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
        if (y.coeffs_[j].is_zero()) continue;
        scratch = x.coeffs_[i].raw() * y.coeffs_[j].raw();
        raw[i + j].raw_mut() += scratch;
      }
    }
    return reduce(std::move(raw), L);
  }

  Cyclotomic scaled(const Rational& r) const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c *= r;
    return out;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    const unsigned L = std::lcm(a.conductor_, b.conductor_);
    return a.lifted(L).coeffs_ == b.lifted(L).coeffs_;
  }

  /// Lexicographic order of coefficient vectors over the common conductor.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned L = std::lcm(a.conductor_, b.conductor_);
    const Cyclotomic x = a.lifted(L);
    const Cyclotomic y = b.lifted(L);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (auto c = x.coeffs_[i] <=> y.coeffs_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  /// The same value over the smallest conductor whose field contains it.
  Cyclotomic minimal() const {
    if (is_rational()) return Cyclotomic(coeffs_[0]);
    for (unsigned d = 3; d < conductor_; ++d) {
      if (conductor_ % d != 0 || d % 4 == 2) continue;
      if (auto x = express_over(d)) return *x;
    }
    return *this;
  }

  /// Renders in the input grammar over the minimal conductor, e.g.
  /// "1/2 + 1/2*E(3)", "-E(4)^3", "0".
  std::string to_string() const {
    const Cyclotomic m = minimal();
    return m.render();
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
    return os << c.to_string();
  }

 private:
  Cyclotomic(unsigned n, std::vector<Rational> coeffs)
      : conductor_(n), coeffs_(std::move(coeffs)) {}

  /// Coordinates in the power basis of Q(zeta_d), if this lies in that field.
  std::optional<Cyclotomic> express_over(unsigned d) const {
    const std::size_t rows = coeffs_.size();
    const std::size_t cols = detail::euler_phi(d);
    // augmented system: columns are zeta_d^j written over our conductor
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
      const Cyclotomic basis = root_of_unity(d, static_cast<long>(j)).lifted(conductor_);
      for (std::size_t i = 0; i < rows; ++i) m[i][j] = basis.coeffs_[i];
    }
    for (std::size_t i = 0; i < rows; ++i) m[i][cols] = coeffs_[i];
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && m[p][c].is_zero()) ++p;
      if (p == rows) continue;
      std::swap(m[p], m[r]);
      const Rational inv = Rational(1) / m[r][c];
      for (auto& v : m[r]) v *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || m[i][c].is_zero()) continue;
        const Rational f = m[i][c];
        for (std::size_t k = c; k <= cols; ++k) m[i][k] -= f * m[r][k];
      }
      pivots.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][cols].is_zero()) return std::nullopt;
    std::vector<Rational> out(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) out[pivots[i]] = m[i][cols];
    return Cyclotomic(d, std::move(out));
  }

  std::string render() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c.is_zero()) continue;
      const bool negative = c.sign() < 0;
      const Rational mag = negative ? -c : c;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << mag;
        continue;
      }
      if (mag != Rational(1)) os << mag << "*";
      os << "E(" << conductor_ << ")";
      if (k > 1) os << "^" << k;
    }
    if (first) return "0";
    return os.str();
  }

  static Cyclotomic combine(const Cyclotomic& a, const Cyclotomic& b, int sign) {
    if (a.conductor_ == b.conductor_) {
      Cyclotomic r = a;
      for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        if (sign > 0) r.coeffs_[i] += b.coeffs_[i];
        else r.coeffs_[i] -= b.coeffs_[i];
      }
      return r;
    }
    const unsigned L = std::lcm(a.conductor_, b.conductor_);
    return combine(a.lifted(L), b.lifted(L), sign);
  }

  unsigned conductor_;
  std::vector<Rational> coeffs_;
};

/// Canonical residue of sum raw[k] zeta_n^k.
inline Cyclotomic cyc_reduce(std::vector<Rational> raw, unsigned n) {
  return Cyclotomic::reduce(std::move(raw), n);
}

inline Rational cyc_as_rational(const Cyclotomic& a) { return a.as_rational(); }

/// Eigenvalue multiplicities from traces of powers.
///
/// values[j] is the trace of T^j for an operator T with T^n = 1 (n =
/// values.size()). Returns m with m[k] the multiplicity of zeta_n^k, via
/// m[k] = (1/n) sum_j values[j] zeta_n^(-kj). Throws NotRational when some
/// m[k] is irrational, which means the input was not a trace sequence.
inline std::vector<Rational> dft_multiplicities(std::span<const Cyclotomic> values) {
  const unsigned n = static_cast<unsigned>(values.size());
  if (n == 0) return {};
  unsigned L = n;
  for (const auto& v : values) L = std::lcm(L, v.conductor());
  std::vector<Cyclotomic> lifted;
  lifted.reserve(n);
  for (const auto& v : values) lifted.push_back(v.lifted(L));

  const unsigned step = L / n;
  const Rational inv_n(1, n);
  std::vector<Rational> out(n);
  std::vector<Rational> raw(L);
  for (unsigned k = 0; k < n; ++k) {
    std::fill(raw.begin(), raw.end(), Rational(0));
    for (unsigned j = 0; j < n; ++j) {
      // zeta_n^(-kj) = zeta_L^(-kj*step)
      const std::size_t shift = (L - (static_cast<std::size_t>(k) * j % n) * step) % L;
      const auto& cs = lifted[j].coefficients();
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_zero()) raw[(i + shift) % L] += cs[i];
      }
    }
    out[k] = Cyclotomic::reduce(raw, L).as_rational() * inv_n;
  }
  return out;
}

}  // namespace agering

template <>
struct std::hash<agering::Cyclotomic> {
  std::size_t operator()(const agering::Cyclotomic& c) const noexcept {
    std::size_t h = c.conductor();
    for (const auto& q : c.coefficients()) {
      h = h * 1099511628211ULL ^ std::hash<agering::Rational>{}(q);
    }
    return h;
  }
};
