#pragma once

// Irreducible character tables.
//
// Non-abelian groups use Dixon-Schneider: the class-sum structure constants
// are simultaneously diagonalized over F_p, p = 1 (mod exponent), and each
// character value is lifted from the eigenvalue multiplicities of the class
// representative, which are recovered mod p by a discrete Fourier sum
// against a fixed element of order `exponent` in F_p. Abelian groups skip
// all of this and enumerate homomorphisms to the roots of unity.
//
// Every table is checked for exact row and column orthogonality before it is
// returned.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "agering/cyclotomic.hpp"
#include "agering/group.hpp"
#include "agering/representation.hpp"

namespace agering {

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> rows;
  std::vector<std::uint32_t> dims;

  std::size_t size() const { return rows.size(); }
};

namespace detail {

using u64 = std::uint64_t;

inline u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

inline u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Smallest prime p = 1 (mod exponent) with p > 2 sqrt(order).
inline u64 dixon_prime(u64 exponent, u64 order) {
  u64 p = exponent + 1;
  while (!(is_prime(p) && p * p > 4 * order)) p += exponent;
  return p;
}

inline u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) ok = ok && pow_mod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  return 1;
}

using ModMatrix = std::vector<std::vector<u64>>;  // rows

/// Basis (as rows) of the nullspace of the s x s matrix m over F_p.
inline std::vector<std::vector<u64>> nullspace_mod(ModMatrix m, u64 p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const u64 inv = inv_mod(m[r][c], p);
    for (auto& v : m[r]) v = mul_mod(v, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + p - mul_mod(f, m[r][j], p)) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<u64>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - m[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A subspace of F_p^r kept in reduced row echelon form (basis as rows).
struct ModSubspace {
  std::vector<std::vector<u64>> basis;
  std::vector<std::size_t> pivots;

  static ModSubspace from_rows(std::vector<std::vector<u64>> rows, u64 p) {
    ModSubspace s;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      std::size_t piv = r;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[r]);
      const u64 inv = inv_mod(rows[r][c], p);
      for (auto& v : rows[r]) v = mul_mod(v, inv, p);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][c] == 0) continue;
        const u64 f = rows[i][c];
        for (std::size_t j = 0; j < cols; ++j)
          rows[i][j] = (rows[i][j] + p - mul_mod(f, rows[r][j], p)) % p;
      }
      s.pivots.push_back(c);
      ++r;
    }
    rows.resize(r);
    s.basis = std::move(rows);
    return s;
  }
};

inline ClassFunction make_row(const GroupPtr& g, std::vector<Cyclotomic> values) {
  return ClassFunction{g, std::move(values)};
}

inline std::vector<std::vector<u64>> class_power_map(const FiniteGroup& g) {
  const auto& classes = g.classes();
  std::vector<std::vector<u64>> pm(classes.size(), std::vector<u64>(g.exponent()));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    ElementId x = 0;
    for (unsigned t = 0; t < g.exponent(); ++t) {
      pm[c][t] = g.class_of(x);
      x = g.mul(x, classes[c].representative);
    }
  }
  return pm;
}

inline CharacterTable dixon_schneider(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  const auto& classes = g.classes();
  const std::size_t r = classes.size();
  const u64 order = g.order();
  const u64 e = g.exponent();
  const u64 p = dixon_prime(e, order);

  // coeff[j][k][l] = #{x in C_j : x^-1 z in C_k} for a fixed z in C_l
  std::vector<u64> coeff(r * r * r, 0);
  for (std::size_t l = 0; l < r; ++l) {
    const ElementId z = classes[l].representative;
    for (ElementId x = 0; x < order; ++x) {
      const std::size_t j = g.class_of(x);
      const std::size_t k = g.class_of(g.mul(g.inverse(x), z));
      ++coeff[(j * r + k) * r + l];
    }
  }

  // Eigenvectors w (columns) satisfy sum_l coeff[j][k][l] w_l = w_j w_k. We
  // split F_p^r by the transposed action on row vectors, one class at a time.
  std::vector<ModSubspace> spaces;
  {
    std::vector<std::vector<u64>> id(r, std::vector<u64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(ModSubspace::from_rows(std::move(id), p));
  }
  for (std::size_t j = 1; j < r; ++j) {
    bool all_split = true;
    for (const auto& s : spaces) all_split = all_split && s.basis.size() == 1;
    if (all_split) break;
    std::vector<ModSubspace> next;
    for (auto& space : spaces) {
      const std::size_t dim = space.basis.size();
      if (dim == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Acting on column vectors w: (A_j w)_k = sum_l coeff[j][k][l] w_l.
      // Basis vectors b_t (rows of space.basis) span an invariant subspace;
      // coordinates of A_j b_t are read off at the pivot positions.
      ModMatrix action(dim, std::vector<u64>(dim, 0));  // action[t][u]: A b_t = sum_u action[t][u] b_u
      for (std::size_t t = 0; t < dim; ++t) {
        const auto& b = space.basis[t];
        for (std::size_t u = 0; u < dim; ++u) {
          const std::size_t k = space.pivots[u];
          u64 acc = 0;
          for (std::size_t l = 0; l < r; ++l) {
            if (b[l] == 0) continue;
            acc = (acc + mul_mod(coeff[(j * r + k) * r + l] % p, b[l], p)) % p;
          }
          action[t][u] = acc;
        }
      }
      // Eigenvectors: row vectors c with sum_t c_t (A b_t) = lambda sum_t c_t b_t,
      // i.e. c (action - lambda I) = 0, the nullspace of the transpose.
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < dim; ++lambda) {
        ModMatrix m(dim, std::vector<u64>(dim, 0));
        for (std::size_t t = 0; t < dim; ++t)
          for (std::size_t u = 0; u < dim; ++u)
            m[u][t] = (action[t][u] + (t == u ? p - lambda : 0)) % p;
        auto kernel = nullspace_mod(std::move(m), p);
        if (kernel.empty()) continue;
        std::vector<std::vector<u64>> vecs;
        for (const auto& c : kernel) {
          std::vector<u64> v(r, 0);
          for (std::size_t t = 0; t < dim; ++t) {
            if (c[t] == 0) continue;
            for (std::size_t l = 0; l < r; ++l)
              v[l] = (v[l] + mul_mod(c[t], space.basis[t][l], p)) % p;
          }
          vecs.push_back(std::move(v));
        }
        found += vecs.size();
        next.push_back(ModSubspace::from_rows(std::move(vecs), p));
      }
      if (found != dim) {
        throw Error(ErrorKind::InternalInconsistency, "class matrix is not diagonalizable mod p");
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) {
    throw Error(ErrorKind::InternalInconsistency, "common eigenspaces did not split completely");
  }

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t c = 0; c < r; ++c) inverse_class[c] = g.class_of(g.inverse(classes[c].representative));
  const auto power_map = class_power_map(g);
  const u64 z = pow_mod(primitive_root(p), (p - 1) / e, p);
  const u64 inv_e = inv_mod(e % p, p);

  CharacterTable table{gp, {}, {}};
  for (const auto& space : spaces) {
    std::vector<u64> w = space.basis[0];
    const u64 scale = inv_mod(w[0], p);  // class 0 is the identity
    for (auto& x : w) x = mul_mod(x, scale, p);

    u64 s = 0;
    for (std::size_t c = 0; c < r; ++c) {
      s = (s + mul_mod(mul_mod(w[c], w[inverse_class[c]], p),
                       inv_mod(classes[c].members.size() % p, p), p)) % p;
    }
    const u64 d2 = mul_mod(order % p, inv_mod(s, p), p);
    u64 degree = 0;
    for (u64 d = 1; d * d <= order; ++d) {
      if (d * d % p == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw Error(ErrorKind::InternalInconsistency, "no degree matches mod p");

    std::vector<u64> chi(r);
    for (std::size_t c = 0; c < r; ++c) {
      chi[c] = mul_mod(mul_mod(degree, w[c], p), inv_mod(classes[c].members.size() % p, p), p);
    }
    std::vector<Cyclotomic> values;
    for (std::size_t c = 0; c < r; ++c) {
      std::vector<Rational> raw(e);
      for (u64 k = 0; k < e; ++k) {
        u64 m = 0;
        for (u64 t = 0; t < e; ++t) {
          const u64 root = pow_mod(z, (e - (k * t) % e) % e, p);
          m = (m + mul_mod(chi[power_map[c][t]], root, p)) % p;
        }
        m = mul_mod(m, inv_e, p);
        if (m > degree) {
          throw Error(ErrorKind::InternalInconsistency, "eigenvalue multiplicity out of range");
        }
        raw[k] = Rational(static_cast<long>(m));
      }
      values.push_back(Cyclotomic::reduce(std::move(raw), static_cast<unsigned>(e)));
    }
    table.rows.push_back(make_row(gp, std::move(values)));
    table.dims.push_back(static_cast<std::uint32_t>(degree));
  }
  return table;
}

/// Greedy generating set: walk the elements in index order, keeping each one
/// not already in the span of those kept.
inline std::vector<ElementId> greedy_generators(const FiniteGroup& g) {
  std::vector<ElementId> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<ElementId> span{0};
  for (ElementId x = 1; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (auto s : gens) {
        const ElementId y = g.mul(span[i], s);
        if (!in[y]) {
          in[y] = 1;
          span.push_back(y);
        }
      }
    }
  }
  return gens;
}

inline CharacterTable abelian_table(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  const unsigned e = g.exponent();
  const std::size_t n = g.order();
  const auto gens = greedy_generators(g);

  // Try every assignment gen_s -> zeta_e^(a_s) with order dividing o(gen_s).
  std::vector<unsigned> digits(gens.size(), 0);
  CharacterTable table{gp, {}, {}};
  std::vector<long> exps(n);
  std::vector<char> seen(n);
  while (true) {
    std::fill(seen.begin(), seen.end(), 0);
    exps[0] = 0;
    seen[0] = 1;
    std::vector<ElementId> queue{0};
    bool consistent = true;
    for (std::size_t i = 0; i < queue.size() && consistent; ++i) {
      for (std::size_t s = 0; s < gens.size() && consistent; ++s) {
        const ElementId y = g.mul(queue[i], gens[s]);
        const long step = static_cast<long>(e / g.element_order(gens[s])) * digits[s];
        const long v = (exps[queue[i]] + step) % e;
        if (!seen[y]) {
          seen[y] = 1;
          exps[y] = v;
          queue.push_back(y);
        } else if (exps[y] != v) {
          consistent = false;
        }
      }
    }
    if (consistent) {
      std::vector<Cyclotomic> values;
      for (const auto& c : g.classes()) values.push_back(Cyclotomic::root_of_unity(e, exps[c.representative]));
      table.rows.push_back(make_row(gp, std::move(values)));
      table.dims.push_back(1);
    }
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == g.element_order(gens[pos])) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return table;
}

/// Fixed-conductor integer arithmetic, used for the orthogonality checks:
/// character values are algebraic integers, so their power-basis
/// coefficients are integers.
struct IntCyclo {
  unsigned n;
  std::vector<std::int64_t> phi;

  explicit IntCyclo(unsigned conductor) : n(conductor), phi(cyclotomic_polynomial(conductor)) {}

  std::size_t deg() const { return phi.size() - 1; }

  std::vector<std::int64_t> from(const Cyclotomic& c) const {
    const Cyclotomic lifted = c.lifted(n);
    std::vector<std::int64_t> out;
    for (const auto& q : lifted.coefficients()) {
      if (!q.is_integer()) {
        throw Error(ErrorKind::InternalInconsistency, "character value is not an algebraic integer");
      }
      out.push_back(q.to_int64());
    }
    return out;
  }

  std::vector<std::int64_t> reduce(std::vector<std::int64_t> raw) const {
    const std::size_t d = deg();
    for (std::size_t i = raw.size(); i-- > d;) {
      if (raw[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) raw[i - d + j] -= raw[i] * phi[j];
    }
    raw.resize(d);
    return raw;
  }

  std::vector<std::int64_t> mul(const std::vector<std::int64_t>& a,
                                const std::vector<std::int64_t>& b) const {
    std::vector<std::int64_t> raw(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) raw[i + j] += a[i] * b[j];
    }
    return reduce(std::move(raw));
  }

  std::vector<std::int64_t> conj(const std::vector<std::int64_t>& a) const {
    std::vector<std::int64_t> raw(n, 0);
    raw[0] = a[0];
    for (std::size_t k = 1; k < a.size(); ++k) raw[(n - k) % n] += a[k];
    return reduce(std::move(raw));
  }
};

inline void check_orthogonality(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  const auto& classes = g.classes();
  const std::size_t r = classes.size();
  if (t.rows.size() != r) {
    throw Error(ErrorKind::InternalInconsistency,
                "found " + std::to_string(t.rows.size()) + " irreducibles for " +
                    std::to_string(r) + " classes");
  }
  std::uint64_t sum_sq = 0;
  for (auto d : t.dims) sum_sq += static_cast<std::uint64_t>(d) * d;
  if (sum_sq != g.order()) throw Error(ErrorKind::InternalInconsistency, "sum of squared degrees");

  const IntCyclo ring(g.exponent());
  std::vector<std::vector<std::vector<std::int64_t>>> v(r), vc(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < r; ++c) {
      v[i].push_back(ring.from(t.rows[i].values[c]));
      vc[i].push_back(ring.conj(v[i].back()));
    }
  }
  const auto is_constant = [](const std::vector<std::int64_t>& a, std::int64_t value) {
    if (a[0] != value) return false;
    for (std::size_t k = 1; k < a.size(); ++k)
      if (a[k] != 0) return false;
    return true;
  };
  // rows: sum_c |C| chi_i(c) conj(chi_j(c)) = |G| delta_ij
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      std::vector<std::int64_t> acc(ring.deg(), 0);
      for (std::size_t c = 0; c < r; ++c) {
        const auto prod = ring.mul(v[i][c], vc[j][c]);
        const auto size = static_cast<std::int64_t>(classes[c].members.size());
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += size * prod[k];
      }
      if (!is_constant(acc, i == j ? static_cast<std::int64_t>(g.order()) : 0)) {
        throw Error(ErrorKind::InternalInconsistency,
                    "row orthogonality fails for rows " + std::to_string(i) + ", " + std::to_string(j));
      }
    }
  }
  // columns: sum_i chi_i(a) conj(chi_i(b)) = |C_G(a)| delta_ab
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      std::vector<std::int64_t> acc(ring.deg(), 0);
      for (std::size_t i = 0; i < r; ++i) {
        const auto prod = ring.mul(v[i][a], vc[i][b]);
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += prod[k];
      }
      const auto expect = a == b ? static_cast<std::int64_t>(classes[a].centralizer_order) : 0;
      if (!is_constant(acc, expect)) {
        throw Error(ErrorKind::InternalInconsistency,
                    "column orthogonality fails for classes " + std::to_string(a) + ", " +
                        std::to_string(b));
      }
    }
  }
}

inline bool is_trivial_row(const ClassFunction& row) {
  return std::all_of(row.values.begin(), row.values.end(),
                     [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

inline void sort_rows(CharacterTable& t) {
  std::vector<std::size_t> idx(t.rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (t.dims[a] != t.dims[b]) return t.dims[a] < t.dims[b];
    const bool ta = is_trivial_row(t.rows[a]);
    const bool tb = is_trivial_row(t.rows[b]);
    if (ta != tb) return ta;
    // descending lexicographic order of the value sequence
    return std::lexicographical_compare(
        t.rows[b].values.begin(), t.rows[b].values.end(), t.rows[a].values.begin(),
        t.rows[a].values.end(),
        [](const Cyclotomic& x, const Cyclotomic& y) { return (x <=> y) < 0; });
  });
  CharacterTable sorted{t.group, {}, {}};
  for (auto i : idx) {
    sorted.rows.push_back(std::move(t.rows[i]));
    sorted.dims.push_back(t.dims[i]);
  }
  t = std::move(sorted);
}

}  // namespace detail

/// Irreducible characters over the group's conjugacy classes, rows sorted by
/// degree, the trivial character first, then descending lexicographic value
/// order.
inline CharacterTable character_table(const GroupPtr& g) {
  CharacterTable t = g->is_abelian() ? detail::abelian_table(g) : detail::dixon_schneider(g);
  detail::check_orthogonality(t);
  detail::sort_rows(t);
  return t;
}

/// The same table computed by Dixon-Schneider even for abelian groups.
inline CharacterTable character_table_dixon(const GroupPtr& g) {
  CharacterTable t = detail::dixon_schneider(g);
  detail::check_orthogonality(t);
  detail::sort_rows(t);
  return t;
}

/// Restriction of a representation's character to a subgroup viewed as a group.
inline ClassFunction restrict_character(const Representation& v, const GroupPtr& subgroup) {
  ClassFunction chi{subgroup, {}};
  for (const auto& c : subgroup->classes()) {
    chi.values.push_back(v.trace(subgroup->parent_elements()[c.representative]));
  }
  return chi;
}

/// Multiplicities <chi_V|_H, chi_i> against an already computed table of H.
inline std::vector<std::int64_t> irrep_multiplicities(const ClassFunction& restricted,
                                                      const CharacterTable& table) {
  std::vector<std::int64_t> t;
  for (const auto& row : table.rows) {
    const Cyclotomic ip = inner_product(restricted, row);
    if (!ip.is_rational() || !ip.as_rational().is_integer() || ip.as_rational().sign() < 0) {
      throw Error(ErrorKind::NotAnInteger, "irreducible multiplicity " + ip.to_string());
    }
    t.push_back(ip.as_rational().to_int64());
  }
  return t;
}

/// t_i = <Res_H chi_V, chi_i> for the irreducibles of H.
inline std::vector<std::int64_t> irrep_multiplicities(const Representation& v, const SubgroupRef& h) {
  if (h.parent != v.group()) throw Error(ErrorKind::GroupMismatch, "subgroup of another group");
  const GroupPtr local = FiniteGroup::from_subgroup(h.parent, h.elements);
  return irrep_multiplicities(restrict_character(v, local), character_table(local));
}

}  // namespace agering
