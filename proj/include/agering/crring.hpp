#pragma once

// The stringy (Chen-Ruan) ring of a linear quotient [V/G].
//
// Every sector of [V/G] is a point, so the product of e_g and e_h is e_{gh}
// when the obstruction bundle has rank zero and the pushforward between the
// two fixed loci is nonzero, and vanishes otherwise. Since
// rank = defect - excess with both terms non-negative, that happens exactly
// when iota(g) + iota(h) = iota(gh). The conjugation-invariant part is spanned
// by the class sums E_[g], whose structure constants are stored here.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "agering/age.hpp"
#include "agering/group.hpp"
#include "agering/representation.hpp"

namespace agering {

/// The point-base product rule. Kept in one place so another normalization
/// can be substituted.
inline bool point_base_product_survives(const Rational& age_g, const Rational& age_h,
                                        const Rational& age_gh) {
  return age_g + age_h == age_gh;
}

inline constexpr std::int64_t kZeroProduct = -1;

struct CRRing {
  GroupPtr group;
  std::string label;
  std::vector<Rational> ages;
  std::vector<Rational> degrees;  // 2 * age, per element
  /// product[g * |G| + h] = gh when e_g * e_h = e_{gh}, else kZeroProduct
  std::vector<std::int64_t> product;
  std::vector<Rational> class_degrees;
  /// constants[(a * r + b) * r + c] = coefficient of E_c in E_a * E_b
  std::vector<Rational> constants;

  std::size_t rank() const { return class_degrees.size(); }
  std::int64_t element_product(ElementId g, ElementId h) const {
    return product[g * group->order() + h];
  }
  const Rational& constant(std::size_t a, std::size_t b, std::size_t c) const {
    const std::size_t r = rank();
    return constants[(a * r + b) * r + c];
  }
  /// Number of basis classes in each degree, keyed by the degree.
  std::map<Rational, std::size_t> degree_counts() const {
    std::map<Rational, std::size_t> out;
    for (const auto& d : class_degrees) ++out[d];
    return out;
  }
};

inline CRRing build_cr_ring(const Representation& v) {
  const GroupPtr& gp = v.group();
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  CRRing ring;
  ring.group = gp;
  ring.label = v.label();
  for (ElementId x = 0; x < n; ++x) {
    ring.ages.push_back(age(v, x));
    ring.degrees.push_back(ring.ages.back() * Rational(2));
  }
  ring.product.assign(n * n, kZeroProduct);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const ElementId ab = g.mul(a, b);
      if (point_base_product_survives(ring.ages[a], ring.ages[b], ring.ages[ab])) {
        ring.product[a * n + b] = ab;
      }
    }
  }
  const auto& classes = g.classes();
  const std::size_t r = classes.size();
  for (const auto& c : classes) ring.class_degrees.push_back(ring.degrees[c.representative]);
  ring.constants.assign(r * r * r, Rational(0));
  std::vector<std::int64_t> counts(n);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      std::fill(counts.begin(), counts.end(), 0);
      for (auto x : classes[a].members)
        for (auto y : classes[b].members)
          if (const auto p = ring.product[x * n + y]; p != kZeroProduct) ++counts[p];
      for (std::size_t c = 0; c < r; ++c) {
        const std::int64_t k = counts[classes[c].representative];
        for (auto z : classes[c].members) {
          if (counts[z] != k) {
            throw Error(ErrorKind::InternalInconsistency,
                        "class-sum span is not closed under the product");
          }
        }
        ring.constants[(a * r + b) * r + c] = Rational(static_cast<long>(k));
      }
    }
  }
  return ring;
}

/// Bilinear product of two combinations of class sums.
inline std::vector<Rational> ring_product(const CRRing& ring, const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
  const std::size_t r = ring.rank();
  if (a.size() != r || b.size() != r) {
    throw Error(ErrorKind::BasisMismatch, "expected " + std::to_string(r) + " class-sum coordinates");
  }
  std::vector<Rational> out(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (b[j].is_zero()) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < r; ++k) {
        const Rational& c = ring.constant(i, j, k);
        if (!c.is_zero()) out[k] += ab * c;
      }
    }
  }
  return out;
}

/// Unit vector E_[c] in the class-sum basis.
inline std::vector<Rational> class_sum(const CRRing& ring, std::size_t c) {
  std::vector<Rational> e(ring.rank());
  e.at(c) = Rational(1);
  return e;
}

struct RingReport {
  bool associative = true;
  bool unital = true;
  bool graded = true;
  bool commutative = true;
  bool closed = true;
  std::uint64_t triples_checked = 0;
  bool sampled = false;
  std::vector<std::string> witnesses;

  bool passed() const { return associative && unital && graded && commutative && closed; }
};

/// Associativity on the element basis (exhaustive up to `triple_cap`, then
/// `samples` seeded random triples), unit, grading, and commutativity of the
/// class-sum subring.
inline RingReport check_ring(const CRRing& ring, std::uint64_t triple_cap = 1000000,
                             std::uint64_t samples = 10000, std::uint64_t seed = 1) {
  RingReport rep;
  const FiniteGroup& g = *ring.group;
  const std::size_t n = g.order();
  const auto note = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.witnesses.size() < 20) rep.witnesses.push_back(what);
  };
  const auto triple = [&](ElementId a, ElementId b, ElementId c) {
    const auto ab = ring.element_product(a, b);
    const auto left = ab == kZeroProduct ? kZeroProduct
                                         : ring.element_product(static_cast<ElementId>(ab), c);
    const auto bc = ring.element_product(b, c);
    const auto right = bc == kZeroProduct ? kZeroProduct
                                          : ring.element_product(a, static_cast<ElementId>(bc));
    if (left != right) {
      note(rep.associative, "(e_" + g.word(a) + " e_" + g.word(b) + ") e_" + g.word(c) +
                                " != e_" + g.word(a) + " (e_" + g.word(b) + " e_" + g.word(c) + ")");
    }
    ++rep.triples_checked;
  };
  const std::uint64_t total = static_cast<std::uint64_t>(n) * n * n;
  if (total <= triple_cap) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c) triple(a, b, c);
  } else {
    rep.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    for (std::uint64_t t = 0; t < samples; ++t) {
      const ElementId a = pick(rng), b = pick(rng), c = pick(rng);
      triple(a, b, c);
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    if (ring.element_product(0, x) != x || ring.element_product(x, 0) != x) {
      note(rep.unital, "e_1 is not a unit for e_" + g.word(x));
    }
    for (ElementId y = 0; y < n; ++y) {
      const auto p = ring.element_product(x, y);
      if (p != kZeroProduct && ring.degrees[p] != ring.degrees[x] + ring.degrees[y]) {
        note(rep.graded, "deg e_" + g.word(x) + " + deg e_" + g.word(y) + " != deg of product");
      }
    }
  }
  const std::size_t r = ring.rank();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        if (ring.constant(a, b, c) != ring.constant(b, a, c)) {
          note(rep.commutative, "E_" + std::to_string(a) + " E_" + std::to_string(b) +
                                    " != E_" + std::to_string(b) + " E_" + std::to_string(a));
        }
  // Class sums of one class share a degree.
  for (const auto& c : g.classes())
    for (auto x : c.members)
      if (ring.degrees[x] != ring.degrees[c.representative]) {
        note(rep.closed, "degree not constant on the class of " + g.word(c.representative));
      }
  return rep;
}

/// True when every element acts with determinant 1; det is multiplicative,
/// so generators suffice.
inline bool is_special_linear(const Representation& v) {
  for (auto s : v.group()->generators())
    if (!(v.matrix(s).determinant() == Cyclotomic(1))) return false;
  return true;
}

struct KunnethRingReport {
  bool passed = true;
  std::size_t product_classes = 0;
  std::vector<Rational> degrees;  // sorted multiset of product class degrees
  std::vector<std::string> witnesses;
};

/// Compares the ring of V (+) W over G x H with the tensor product of the
/// factor rings on the class-pair basis E_[g] (x) E_[h] -> E_[(g,h)].
inline KunnethRingReport kunneth_ring_compare(const Representation& v, const Representation& w) {
  if (!is_special_linear(v) || !is_special_linear(w)) {
    throw Error(ErrorKind::NotSL, "both factors must act with determinant 1");
  }
  const GroupPtr product = FiniteGroup::direct_product(v.group(), w.group());
  const CRRing left = build_cr_ring(v);
  const CRRing right = build_cr_ring(w);
  const CRRing both = build_cr_ring(external_sum(product, v, w));
  KunnethRingReport rep;
  rep.product_classes = both.rank();
  const auto fail = [&](const std::string& what) {
    rep.passed = false;
    if (rep.witnesses.size() < 20) rep.witnesses.push_back(what);
  };
  const auto& lc = v.group()->classes();
  const auto& rc = w.group()->classes();
  if (both.rank() != lc.size() * rc.size()) fail("class count is not the product of class counts");
  // class pair (a, b) -> product class
  std::vector<std::size_t> to_product(lc.size() * rc.size());
  std::vector<bool> hit(both.rank(), false);
  for (std::size_t a = 0; a < lc.size(); ++a) {
    for (std::size_t b = 0; b < rc.size(); ++b) {
      const std::size_t pc =
          product->class_of(product->product_element(lc[a].representative, rc[b].representative));
      to_product[a * rc.size() + b] = pc;
      if (pc < hit.size()) {
        if (hit[pc]) fail("two class pairs map to one product class");
        hit[pc] = true;
      }
      if (both.class_degrees[pc] != left.class_degrees[a] + right.class_degrees[b]) {
        fail("degree mismatch on class pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  const std::size_t rl = lc.size(), rr = rc.size();
  for (std::size_t a1 = 0; a1 < rl; ++a1)
    for (std::size_t b1 = 0; b1 < rr; ++b1)
      for (std::size_t a2 = 0; a2 < rl; ++a2)
        for (std::size_t b2 = 0; b2 < rr; ++b2)
          for (std::size_t a3 = 0; a3 < rl; ++a3)
            for (std::size_t b3 = 0; b3 < rr; ++b3) {
              const Rational expect = left.constant(a1, a2, a3) * right.constant(b1, b2, b3);
              const Rational got = both.constant(to_product[a1 * rr + b1],
                                                 to_product[a2 * rr + b2], to_product[a3 * rr + b3]);
              if (expect != got) fail("structure constant mismatch");
            }
  rep.degrees = both.class_degrees;
  std::sort(rep.degrees.begin(), rep.degrees.end());
  return rep;
}

}  // namespace agering
