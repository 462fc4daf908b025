#pragma once

// Finite groups as multiplication tables.
//
// Every group is closed from an ordered list of generators by breadth-first
// right multiplication, so element 0 is the identity and the remaining
// elements follow shortlex order of their first generator word. The same
// generators in the same order always give the same indices.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "agering/errors.hpp"
#include "agering/matrix.hpp"

namespace agering {

using ElementId = std::uint32_t;

/// 0-based images: p[i] is the image of point i. Composition is left to
/// right, (p*q)[i] = q[p[i]].
using Permutation = std::vector<std::uint32_t>;

enum class Provenance { Permutation, Table, Matrix, Product, Subgroup };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Permutation: return "permutation";
    case Provenance::Table: return "table";
    case Provenance::Matrix: return "matrix";
    case Provenance::Product: return "product";
    case Provenance::Subgroup: return "subgroup";
  }
  return "unknown";
}

inline constexpr std::size_t kDefaultClosureCap = 100000;

struct ConjClass {
  ElementId representative = 0;  // minimal member
  std::vector<ElementId> members;  // sorted
  std::size_t centralizer_order = 0;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

namespace detail {

template <class T>
struct Closure {
  std::vector<T> elements;
  std::vector<ElementId> right;   // right[x * ngens + s] = index of elements[x] * gen[s]
  std::vector<ElementId> parent;  // BFS tree
  std::vector<std::uint32_t> via;
};

/// Breadth-first closure under right multiplication by the generators.
template <class T, class Hash, class Eq, class Mul>
Closure<T> bfs_closure(const T& identity, const std::vector<T>& gens, Mul mul,
                       std::size_t cap) {
  Closure<T> out;
  std::unordered_map<T, ElementId, Hash, Eq> index;
  out.elements.push_back(identity);
  out.parent.push_back(0);
  out.via.push_back(0);
  index.emplace(identity, 0);
  const std::size_t ngens = gens.size();
  for (std::size_t x = 0; x < out.elements.size(); ++x) {
    for (std::size_t s = 0; s < ngens; ++s) {
      T y = mul(out.elements[x], gens[s]);
      auto [it, inserted] = index.emplace(y, static_cast<ElementId>(out.elements.size()));
      if (inserted) {
        if (out.elements.size() >= cap) {
          throw Error(ErrorKind::NotClosedWithinBound,
                      "closure exceeds " + std::to_string(cap) + " elements");
        }
        out.elements.push_back(std::move(y));
        out.parent.push_back(static_cast<ElementId>(x));
        out.via.push_back(static_cast<std::uint32_t>(s));
      }
      out.right.push_back(it->second);
    }
  }
  return out;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = p.size();
    for (auto v : p) h = h * 31 + v;
    return h;
  }
};

struct PairHash {
  std::size_t operator()(const std::pair<ElementId, ElementId>& p) const noexcept {
    return (static_cast<std::size_t>(p.first) << 32) ^ p.second;
  }
};

}  // namespace detail

class FiniteGroup {
 public:
  /// Group generated by permutations of {0, ..., degree-1}.
  static GroupPtr from_permutations(std::size_t degree, std::vector<Permutation> gens,
                                    std::vector<std::string> names = {},
                                    std::size_t cap = kDefaultClosureCap) {
    for (const auto& p : gens) {
      if (p.size() != degree) throw Error(ErrorKind::InvalidInput, "permutation degree mismatch");
      std::vector<bool> hit(degree, false);
      for (auto v : p) {
        if (v >= degree || hit[v]) throw Error(ErrorKind::InvalidInput, "not a permutation");
        hit[v] = true;
      }
    }
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    auto closure = detail::bfs_closure<Permutation, detail::PermutationHash,
                                       std::equal_to<Permutation>>(
        id, gens,
        [](const Permutation& a, const Permutation& b) {
          Permutation c(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
          return c;
        },
        cap);
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->provenance_ = Provenance::Permutation;
    g->degree_ = degree;
    g->init(closure, gens.size(), std::move(names));
    g->permutations_ = std::move(closure.elements);
    return g;
  }

  /// Group generated by invertible finite-order square matrices.
  static GroupPtr from_matrices(std::vector<CycMatrix> gens, std::vector<std::string> names = {},
                                std::size_t cap = kDefaultClosureCap) {
    std::size_t dim = gens.empty() ? 0 : gens.front().dim();
    unsigned conductor = 1;
    for (const auto& m : gens) {
      if (m.dim() != dim) throw Error(ErrorKind::InvalidInput, "matrix generator size mismatch");
      conductor = std::lcm(conductor, m.conductor());
    }
    for (auto& m : gens) m = m.lifted(conductor);
    const CycMatrix id = CycMatrix::identity(dim, conductor);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      CycMatrix power = gens[s];
      std::size_t k = 1;
      while (!(power == id)) {
        if (++k > cap) {
          throw Error(ErrorKind::InfiniteOrder,
                      "generator " + std::to_string(s) + " has no finite order within the cap");
        }
        power = power * gens[s];
      }
    }
    auto closure = detail::bfs_closure<CycMatrix, CycMatrixHash, std::equal_to<CycMatrix>>(
        id, gens, [](const CycMatrix& a, const CycMatrix& b) { return a * b; }, cap);
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->provenance_ = Provenance::Matrix;
    g->degree_ = dim;
    g->init(closure, gens.size(), std::move(names));
    g->matrices_ = std::move(closure.elements);
    return g;
  }

  /// Group from an explicit multiplication table table[a][b] = a*b over
  /// arbitrary labels 0..n-1. The table is validated. When `gens` is empty
  /// every non-identity element is a generator.
  static GroupPtr from_table(const std::vector<std::vector<std::uint32_t>>& table,
                             std::vector<std::uint32_t> gens = {},
                             std::vector<std::string> names = {},
                             std::size_t cap = kDefaultClosureCap) {
    const std::size_t n = table.size();
    if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
    if (n > cap) throw Error(ErrorKind::CapExceeded, "table larger than the cap");
    for (const auto& row : table) {
      if (row.size() != n) throw Error(ErrorKind::NotAGroup, "table is not square");
      for (auto v : row)
        if (v >= n) throw Error(ErrorKind::NotAGroup, "table entry out of range");
    }
    std::optional<std::uint32_t> identity;
    for (std::uint32_t e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (std::uint32_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
      if (ok) identity = e;
    }
    if (!identity) throw Error(ErrorKind::NotAGroup, "no identity element");
    for (std::uint32_t x = 0; x < n; ++x) {
      bool has_inverse = false;
      for (std::uint32_t y = 0; y < n && !has_inverse; ++y)
        has_inverse = table[x][y] == *identity && table[y][x] == *identity;
      if (!has_inverse) {
        throw Error(ErrorKind::NotAGroup, "element " + std::to_string(x) + " has no inverse");
      }
    }
    const auto assoc_fail = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
      return table[table[a][b]][c] != table[a][table[b][c]];
    };
    if (n <= 200) {
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          for (std::uint32_t c = 0; c < n; ++c)
            if (assoc_fail(a, b, c)) throw Error(ErrorKind::NotAGroup, "table is not associative");
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
      for (int t = 0; t < 10000; ++t)
        if (assoc_fail(pick(rng), pick(rng), pick(rng)))
          throw Error(ErrorKind::NotAGroup, "table is not associative");
    }
    if (gens.empty()) {
      for (std::uint32_t x = 0; x < n; ++x)
        if (x != *identity) gens.push_back(x);
    }
    for (auto s : gens)
      if (s >= n) throw Error(ErrorKind::InvalidInput, "generator index out of range");

    struct IdHash {
      std::size_t operator()(std::uint32_t v) const noexcept { return v; }
    };
    auto closure = detail::bfs_closure<std::uint32_t, IdHash, std::equal_to<std::uint32_t>>(
        *identity, gens, [&](std::uint32_t a, std::uint32_t b) { return table[a][b]; }, cap);
    if (closure.elements.size() != n) {
      throw Error(ErrorKind::NotAGroup, "generators do not generate the whole table");
    }
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->provenance_ = Provenance::Table;
    g->init(closure, gens.size(), std::move(names));
    return g;
  }

  /// G x H generated by (g_i, 1) followed by (1, h_j).
  static GroupPtr direct_product(const GroupPtr& left, const GroupPtr& right,
                                 std::size_t cap = kDefaultClosureCap) {
    if (left->order() * right->order() > cap) {
      throw Error(ErrorKind::CapExceeded, "direct product exceeds the cap");
    }
    using Pair = std::pair<ElementId, ElementId>;
    std::vector<Pair> gens;
    std::vector<std::string> names;
    for (std::size_t s = 0; s < left->generators().size(); ++s) {
      gens.emplace_back(left->generators()[s], 0);
      names.push_back(left->generator_names()[s]);
    }
    for (std::size_t s = 0; s < right->generators().size(); ++s) {
      gens.emplace_back(0, right->generators()[s]);
      std::string name = right->generator_names()[s];
      if (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
      names.push_back(std::move(name));
    }
    auto closure = detail::bfs_closure<Pair, detail::PairHash, std::equal_to<Pair>>(
        Pair{0, 0}, gens,
        [&](const Pair& a, const Pair& b) {
          return Pair{left->mul(a.first, b.first), right->mul(a.second, b.second)};
        },
        cap);
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->provenance_ = Provenance::Product;
    g->init(closure, gens.size(), std::move(names));
    g->components_ = std::move(closure.elements);
    g->factors_ = {left, right};
    g->component_index_.assign(left->order() * right->order(), 0);
    for (ElementId x = 0; x < g->order(); ++x) {
      const auto [a, b] = g->components_[x];
      g->component_index_[a * right->order() + b] = x;
    }
    return g;
  }

  /// The subgroup on a sorted element set, as a group in its own right.
  /// Local index i corresponds to parent element `elements[i]`.
  static GroupPtr from_subgroup(const GroupPtr& parent, const std::vector<ElementId>& elements) {
    if (elements.empty() || elements.front() != 0) {
      throw Error(ErrorKind::InvalidInput, "subgroup element set must contain the identity");
    }
    const std::size_t n = elements.size();
    std::unordered_map<ElementId, ElementId> local;
    for (std::size_t i = 0; i < n; ++i) local.emplace(elements[i], static_cast<ElementId>(i));
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->provenance_ = Provenance::Subgroup;
    g->order_ = n;
    g->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto it = local.find(parent->mul(elements[a], elements[b]));
        if (it == local.end()) throw Error(ErrorKind::InvalidInput, "element set is not closed");
        g->table_[a * n + b] = it->second;
      }
    }
    for (std::size_t x = 1; x < n; ++x) {
      g->generators_.push_back(static_cast<ElementId>(x));
      g->generator_names_.push_back("x" + std::to_string(elements[x]));
    }
    g->parent_.assign(n, 0);
    g->via_.resize(n);
    for (std::size_t x = 1; x < n; ++x) g->via_[x] = static_cast<std::uint32_t>(x - 1);
    g->finish();
    g->parent_elements_ = elements;
    g->parent_group_ = parent;
    return g;
  }

  std::size_t order() const { return order_; }
  static constexpr ElementId identity() { return 0; }
  ElementId mul(ElementId a, ElementId b) const { return table_[a * order_ + b]; }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId conjugate(ElementId a, ElementId by) const {  // by^-1 * a * by
    return mul(mul(inverse_[by], a), by);
  }
  ElementId power(ElementId a, long k) const {
    const long o = static_cast<long>(element_order_[a]);
    long e = ((k % o) + o) % o;
    ElementId r = 0;
    while (e-- > 0) r = mul(r, a);
    return r;
  }

  const std::vector<ElementId>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  std::uint32_t element_order(ElementId a) const { return element_order_[a]; }
  unsigned exponent() const { return exponent_; }
  Provenance provenance() const { return provenance_; }
  bool is_abelian() const { return abelian_; }
  const std::vector<ElementId>& table() const { return table_; }

  /// Shortlex generator word of an element, e.g. "g*h"; "1" for the identity.
  std::string word(ElementId a) const {
    if (a == 0) return "1";
    std::vector<std::string> parts;
    while (a != 0) {
      parts.push_back(generator_names_[via_[a]]);
      a = parent_[a];
    }
    std::string out;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      if (!out.empty()) out += "*";
      out += *it;
    }
    return out;
  }

  /// BFS tree: a = bfs_parent(a) * generators()[bfs_generator(a)] for a != 1.
  ElementId bfs_parent(ElementId a) const { return parent_[a]; }
  std::uint32_t bfs_generator(ElementId a) const { return via_[a]; }

  const std::vector<ConjClass>& classes() const { return classes_; }
  std::size_t class_of(ElementId a) const { return class_of_[a]; }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& permutations() const { return permutations_; }
  const std::vector<CycMatrix>& matrices() const { return matrices_; }

  const std::vector<std::pair<ElementId, ElementId>>& components() const { return components_; }
  const std::pair<GroupPtr, GroupPtr>& factors() const { return factors_; }
  ElementId product_element(ElementId left, ElementId right) const {
    return component_index_[left * factors_.second->order() + right];
  }

  const std::vector<ElementId>& parent_elements() const { return parent_elements_; }
  const GroupPtr& parent_group() const { return parent_group_; }

 private:
  FiniteGroup() = default;

  template <class T>
  void init(const detail::Closure<T>& closure, std::size_t ngens, std::vector<std::string> names) {
    order_ = closure.elements.size();
    if (names.empty()) {
      for (std::size_t s = 0; s < ngens; ++s) names.push_back("s" + std::to_string(s + 1));
    }
    if (names.size() != ngens) {
      throw Error(ErrorKind::InvalidInput, "generator name count does not match generators");
    }
    generator_names_ = std::move(names);
    parent_ = closure.parent;
    via_ = closure.via;
    // gens[s] as an element: the right multiple of the identity.
    for (std::size_t s = 0; s < ngens; ++s) generators_.push_back(closure.right[s]);
    table_.resize(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a) {
      table_[a * order_] = static_cast<ElementId>(a);
      for (std::size_t b = 1; b < order_; ++b) {
        const ElementId left = table_[a * order_ + parent_[b]];
        table_[a * order_ + b] = closure.right[left * ngens + via_[b]];
      }
    }
    finish();
  }

  void finish() {
    inverse_.assign(order_, 0);
    for (std::size_t a = 0; a < order_; ++a) {
      for (std::size_t b = 0; b < order_; ++b) {
        if (table_[a * order_ + b] == 0) {
          inverse_[a] = static_cast<ElementId>(b);
          break;
        }
      }
    }
    element_order_.assign(order_, 1);
    exponent_ = 1;
    for (std::size_t a = 0; a < order_; ++a) {
      ElementId x = static_cast<ElementId>(a);
      std::uint32_t k = 1;
      while (x != 0) {
        x = mul(x, static_cast<ElementId>(a));
        ++k;
      }
      element_order_[a] = k;
      exponent_ = std::lcm(exponent_, k);
    }
    abelian_ = true;
    for (auto s : generators_)
      for (auto t : generators_)
        if (mul(s, t) != mul(t, s)) abelian_ = false;

    class_of_.assign(order_, SIZE_MAX);
    for (std::size_t a = 0; a < order_; ++a) {
      if (class_of_[a] != SIZE_MAX) continue;
      ConjClass c;
      const std::size_t id = classes_.size();
      std::deque<ElementId> queue{static_cast<ElementId>(a)};
      class_of_[a] = id;
      while (!queue.empty()) {
        const ElementId x = queue.front();
        queue.pop_front();
        c.members.push_back(x);
        for (auto s : generators_) {
          const ElementId y = conjugate(x, s);
          if (class_of_[y] == SIZE_MAX) {
            class_of_[y] = id;
            queue.push_back(y);
          }
        }
      }
      std::sort(c.members.begin(), c.members.end());
      c.representative = c.members.front();
      c.centralizer_order = order_ / c.members.size();
      classes_.push_back(std::move(c));
    }
  }

  Provenance provenance_ = Provenance::Table;
  std::size_t order_ = 0;
  std::size_t degree_ = 0;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> generators_;
  std::vector<std::string> generator_names_;
  std::vector<ElementId> parent_;
  std::vector<std::uint32_t> via_;
  std::vector<std::uint32_t> element_order_;
  unsigned exponent_ = 1;
  bool abelian_ = true;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;

  std::vector<Permutation> permutations_;
  std::vector<CycMatrix> matrices_;
  std::vector<std::pair<ElementId, ElementId>> components_;
  std::pair<GroupPtr, GroupPtr> factors_;
  std::vector<ElementId> component_index_;
  std::vector<ElementId> parent_elements_;
  GroupPtr parent_group_;
};

/// The trivial group.
inline GroupPtr trivial_group() { return FiniteGroup::from_permutations(1, {}); }

/// Cyclic group of order n as the n-cycle on n points.
inline GroupPtr cyclic_group(std::uint32_t n, std::string name = "s") {
  Permutation p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return FiniteGroup::from_permutations(n, {p}, {std::move(name)});
}

/// Permutation on `degree` points from 1-based cycles, e.g. {{1,2},{3,4,5}}.
inline Permutation permutation_from_cycles(std::size_t degree,
                                           const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto from = cycle[i];
      const auto to = cycle[(i + 1) % cycle.size()];
      if (from == 0 || from > degree || to == 0 || to > degree) {
        throw Error(ErrorKind::InvalidInput, "cycle point out of range");
      }
      if (used[from - 1]) throw Error(ErrorKind::InvalidInput, "point repeated in cycles");
      used[from - 1] = true;
      p[from - 1] = to - 1;
    }
  }
  return p;
}

/// Exhaustive (or, above order 200, sampled) check of the group axioms on
/// the stored table. Returns false on the first violation.
inline bool check_group_axioms(const FiniteGroup& g, std::uint64_t seed = 1) {
  const std::size_t n = g.order();
  for (ElementId a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    if (g.mul(a, g.inverse(a)) != 0 || g.mul(g.inverse(a), a) != 0) return false;
  }
  if (n <= 200) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
  for (int t = 0; t < 10000; ++t) {
    const ElementId a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

inline const std::vector<ConjClass>& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

/// A subgroup of a parent group given by its (sorted) elements.
struct SubgroupRef {
  GroupPtr parent;
  std::vector<ElementId> elements;
  std::vector<ElementId> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(ElementId x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }
  bool is_abelian() const {
    for (auto a : generators)
      for (auto b : generators)
        if (parent->mul(a, b) != parent->mul(b, a)) return false;
    return true;
  }
};

/// The least subgroup containing `tuple`.
inline SubgroupRef subgroup_generated(const GroupPtr& g, std::vector<ElementId> tuple) {
  for (auto x : tuple)
    if (x >= g->order()) throw Error(ErrorKind::InvalidInput, "element index out of range");
  std::vector<char> seen(g->order(), 0);
  std::vector<ElementId> members{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : tuple) {
      const ElementId y = g->mul(members[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return SubgroupRef{g, std::move(members), std::move(tuple)};
}

/// A simultaneous-conjugation orbit of k-tuples.
struct TupleClass {
  std::size_t arity = 0;
  std::vector<ElementId> representative;  // lexicographically minimal member
  std::vector<std::vector<ElementId>> members;  // sorted
  std::vector<ElementId> centralizer;  // C_G(h_1, ..., h_k), sorted
};

inline constexpr std::uint64_t kTupleCap = 1000000;

/// Orbits of G on G^k under simultaneous conjugation.
inline std::vector<TupleClass> tuple_classes(const FiniteGroup& g, std::size_t k,
                                             std::uint64_t cap = kTupleCap) {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "tuple arity must be positive");
  const std::uint64_t n = g.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= n;
    if (total > cap) throw Error(ErrorKind::CapExceeded, "|G|^k exceeds the tuple cap");
  }
  const auto decode = [&](std::uint64_t code) {
    std::vector<ElementId> t(k);
    for (std::size_t i = k; i-- > 0;) {
      t[i] = static_cast<ElementId>(code % n);
      code /= n;
    }
    return t;
  };
  const auto encode = [&](const std::vector<ElementId>& t) {
    std::uint64_t code = 0;
    for (auto x : t) code = code * n + x;
    return code;
  };
  std::vector<char> seen(total, 0);
  std::vector<TupleClass> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    TupleClass tc;
    tc.arity = k;
    std::vector<std::uint64_t> orbit{code};
    seen[code] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const auto t = decode(orbit[i]);
      for (auto s : g.generators()) {
        std::vector<ElementId> u(k);
        for (std::size_t j = 0; j < k; ++j) u[j] = g.conjugate(t[j], s);
        const auto c = encode(u);
        if (!seen[c]) {
          seen[c] = 1;
          orbit.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    for (auto c : orbit) tc.members.push_back(decode(c));
    tc.representative = tc.members.front();
    for (ElementId x = 0; x < n; ++x) {
      bool fixes = true;
      for (auto h : tc.representative) fixes = fixes && g.mul(x, h) == g.mul(h, x);
      if (fixes) tc.centralizer.push_back(x);
    }
    out.push_back(std::move(tc));
  }
  return out;
}

/// Parses a generator word such as "g*h", "g^-1*h^2", "1" or "e".
inline ElementId element_from_word(const FiniteGroup& g, const std::string& text) {
  std::string word;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) word += c;
  if (word.empty()) throw Error(ErrorKind::InvalidInput, "empty element word");
  ElementId result = 0;
  std::size_t pos = 0;
  while (pos <= word.size()) {
    const std::size_t star = std::min(word.find('*', pos), word.size());
    std::string token = word.substr(pos, star - pos);
    long exponent = 1;
    if (const auto caret = token.find('^'); caret != std::string::npos) {
      try {
        std::size_t used = 0;
        exponent = std::stol(token.substr(caret + 1), &used);
        if (used != token.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidInput, "bad exponent in word '" + text + "'");
      }
      token = token.substr(0, caret);
    }
    ElementId factor = 0;
    if (token == "1" || token == "e") {
      factor = 0;
    } else {
      const auto& names = g.generator_names();
      const auto it = std::find(names.begin(), names.end(), token);
      if (it == names.end()) {
        throw Error(ErrorKind::InvalidInput, "unknown generator '" + token + "' in '" + text + "'");
      }
      factor = g.generators()[static_cast<std::size_t>(it - names.begin())];
    }
    result = g.mul(result, g.power(factor, exponent));
    pos = star + 1;
  }
  return result;
}

}  // namespace agering
