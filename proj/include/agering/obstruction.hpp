#pragma once

// Obstruction-bundle multiplicities of the 2-sectors of [V/G].
//
// For a pair (g1, g2) with twisting group H = <g1, g2> and an irreducible
// V_i of H,
//
//   h_i = iota_{V_i}(g1) + iota_{V_i}(g2) - iota_{V_i}(g1 g2)
//         + dim V_i^{g1,g2} - dim V_i^{g1 g2},
//
// and the obstruction space decomposes as the sum of h_i copies of
// Hom_H(V_i, V), of dimension t_i = <Res_H V, V_i>. Everything here is exact.

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "agering/age.hpp"
#include "agering/character_table.hpp"
#include "agering/group.hpp"
#include "agering/representation.hpp"

namespace agering {

struct IrrepSector {
  std::string label;
  std::uint32_t degree = 0;
  std::int64_t h = 0;
  std::int64_t t = 0;
};

struct SectorData {
  std::pair<ElementId, ElementId> pair;
  SubgroupRef twisting_group;
  std::vector<IrrepSector> per_irrep;
  std::int64_t rank = 0;
  Rational age_defect;
  std::int64_t codim_excess = 0;
};

struct RankCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

/// Everything about one twisting subgroup that the pair formulas need.
struct SubgroupData {
  SubgroupRef ref;
  GroupPtr local;
  CharacterTable table;
  std::vector<std::string> labels;
  /// Ages times the exponent of the ambient group, per irreducible and
  /// local element, so pair evaluation is integer arithmetic.
  std::vector<std::vector<std::int64_t>> age_scaled;
  /// dim V_i^{x} per irreducible and local element.
  std::vector<std::vector<std::int64_t>> fixed_single;
  /// dim V_i^H.
  std::vector<std::int64_t> fixed_all;
  /// t_i for the ambient representation.
  std::vector<std::int64_t> multiplicities;
  /// dim V^H for the ambient representation.
  std::int64_t ambient_fixed = 0;
  std::vector<std::int32_t> local_index;  // parent element -> local index or -1

  bool abelian() const { return local->is_abelian(); }
};

namespace detail {

struct BitKey {
  std::vector<std::uint64_t> words;
  friend bool operator==(const BitKey&, const BitKey&) = default;
};

struct BitKeyHash {
  std::size_t operator()(const BitKey& k) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (auto w : k.words) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }
};

/// Closure of a generating tuple as a bitset over the parent's elements.
inline BitKey closure_key(const FiniteGroup& g, const ElementId* gens, std::size_t ngens,
                          std::vector<ElementId>& queue) {
  BitKey key;
  key.words.assign((g.order() + 63) / 64, 0);
  key.words[0] = 1;
  queue.clear();
  queue.push_back(0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t s = 0; s < ngens; ++s) {
      const ElementId y = g.mul(queue[i], gens[s]);
      std::uint64_t& w = key.words[y >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (y & 63);
      if (!(w & bit)) {
        w |= bit;
        queue.push_back(y);
      }
    }
  }
  return key;
}

inline std::vector<ElementId> key_elements(const BitKey& key, std::size_t n) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < n; ++x)
    if (key.words[x >> 6] >> (x & 63) & 1) out.push_back(x);
  return out;
}

}  // namespace detail

/// Labels for irreducibles: a named character of the ambient group labels an
/// irreducible of H when its restriction to H equals that row.
using NamedCharacters = std::vector<std::pair<std::string, ClassFunction>>;

/// Sector computations for one representation, with the per-subgroup data
/// memoized by element set. Lookups and inserts are safe from many threads.
class SectorCalculator {
 public:
  explicit SectorCalculator(Representation v, NamedCharacters names = {})
      : v_(std::move(v)), names_(std::move(names)), cache_(std::make_unique<Cache>()) {
    const FiniteGroup& g = *v_.group();
    scale_ = g.exponent();
    records_.reserve(g.order());
    for (ElementId x = 0; x < g.order(); ++x) {
      records_.push_back(eigen_multiplicities(v_, x));
      age_scaled_.push_back(scaled(records_.back().age));
    }
    powers_.resize(g.order());
    cyclic_id_.resize(g.order());
    for (ElementId x = 0; x < g.order(); ++x) {
      ElementId y = 0;
      ElementId smallest_generator = x;
      const std::uint32_t ord = g.element_order(x);
      for (std::uint32_t k = 0; k < ord; ++k) {
        powers_[x].push_back(y);
        if (std::gcd(k, ord) == 1) smallest_generator = std::min(smallest_generator, y);
        y = g.mul(y, x);
      }
      cyclic_id_[x] = smallest_generator;
    }
  }

  const Representation& representation() const { return v_; }
  const GroupPtr& group() const { return v_.group(); }
  std::int64_t scale() const { return scale_; }

  const AgeRecord& age_record(ElementId g) const { return records_[g]; }
  const Rational& age(ElementId g) const { return records_[g].age; }
  std::int64_t age_scaled(ElementId g) const { return age_scaled_[g]; }

  /// dim V^{S}, memoized on the generated subgroup.
  std::int64_t dim_fixed(const std::vector<ElementId>& elements) const {
    std::vector<ElementId> queue;
    const auto key = detail::closure_key(*group(), elements.data(), elements.size(), queue);
    {
      std::shared_lock lock(cache_->mutex);
      if (auto it = cache_->fixed.find(key); it != cache_->fixed.end()) return it->second;
    }
    Cyclotomic sum(0);
    for (auto x : queue) sum += v_.trace(x);
    const std::int64_t d = detail::integral_average(sum, queue.size(), "dim of fixed space");
    std::unique_lock lock(cache_->mutex);
    cache_->fixed.emplace(key, d);
    return d;
  }

  /// <g1, g2> depends only on <g1> and the coset g2 <g1>.
  const SubgroupData& subgroup(ElementId g1, ElementId g2) const {
    ElementId coset = g2;
    for (auto p : powers_[g1]) coset = std::min(coset, group()->mul(g2, p));
    const std::uint64_t key = static_cast<std::uint64_t>(cyclic_id_[g1]) << 32 | coset;
    {
      std::shared_lock lock(cache_->mutex);
      if (auto it = cache_->pairs.find(key); it != cache_->pairs.end()) return *it->second;
    }
    const ElementId gens[2] = {g1, g2};
    const SubgroupData& sd = subgroup_for(gens, 2);
    std::unique_lock lock(cache_->mutex);
    cache_->pairs.emplace(key, &sd);
    return sd;
  }

  const SubgroupData& subgroup_for(const ElementId* gens, std::size_t ngens) const {
    std::vector<ElementId> queue;
    auto key = detail::closure_key(*group(), gens, ngens, queue);
    {
      std::shared_lock lock(cache_->mutex);
      if (auto it = cache_->subgroups.find(key); it != cache_->subgroups.end()) return *it->second;
    }
    auto data = build_subgroup(key, std::vector<ElementId>(gens, gens + ngens));
    std::unique_lock lock(cache_->mutex);
    auto [it, inserted] = cache_->subgroups.emplace(std::move(key), std::move(data));
    return *it->second;
  }

  std::size_t cached_subgroups() const {
    std::shared_lock lock(cache_->mutex);
    return cache_->subgroups.size();
  }

  /// The five-term expression for V itself.
  Rational h_scalar(ElementId g1, ElementId g2) const {
    const ElementId g12 = group()->mul(g1, g2);
    return age(g1) + age(g2) - age(g12) +
           Rational(static_cast<long>(dim_fixed({g1, g2}) - records_[g12].fixed_dim()));
  }

  /// h_i scaled by the ambient exponent, for each irreducible of H.
  void scaled_h(const SubgroupData& sd, ElementId g1, ElementId g2,
                std::vector<std::int64_t>& out) const {
    const ElementId g12 = group()->mul(g1, g2);
    const auto l1 = static_cast<std::size_t>(sd.local_index[g1]);
    const auto l2 = static_cast<std::size_t>(sd.local_index[g2]);
    const auto l12 = static_cast<std::size_t>(sd.local_index[g12]);
    out.resize(sd.table.size());
    for (std::size_t i = 0; i < sd.table.size(); ++i) {
      out[i] = sd.age_scaled[i][l1] + sd.age_scaled[i][l2] - sd.age_scaled[i][l12] +
               (sd.fixed_all[i] - sd.fixed_single[i][l12]) * scale_;
    }
  }

  /// Full decomposition, aborting with a witness if some h_i is negative or
  /// not an integer.
  SectorData decompose(ElementId g1, ElementId g2) const {
    const SubgroupData& sd = subgroup(g1, g2);
    std::vector<std::int64_t> hs;
    scaled_h(sd, g1, g2, hs);
    SectorData out;
    out.pair = {g1, g2};
    out.twisting_group = sd.ref;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (hs[i] < 0 || hs[i] % scale_ != 0) {
        throw Error(hs[i] < 0 ? ErrorKind::NegativeH : ErrorKind::NotAnInteger,
                    witness(g1, g2, sd, i, hs[i]));
      }
      IrrepSector rec{sd.labels[i], sd.table.dims[i], hs[i] / scale_, sd.multiplicities[i]};
      out.rank += rec.h * rec.t;
      out.per_irrep.push_back(std::move(rec));
    }
    const ElementId g12 = group()->mul(g1, g2);
    out.age_defect = age(g1) + age(g2) - age(g12);
    out.codim_excess = records_[g12].fixed_dim() - sd.ambient_fixed;
    if (Rational(static_cast<long>(out.rank)) !=
        out.age_defect - Rational(static_cast<long>(out.codim_excess))) {
      throw Error(ErrorKind::InternalInconsistency,
                  "rank differs from age defect minus codimension excess at " + pair_name(g1, g2));
    }
    return out;
  }

  /// Obstruction rank sum_i h_i t_i, integer arithmetic only.
  std::int64_t rank(ElementId g1, ElementId g2) const {
    const SubgroupData& sd = subgroup(g1, g2);
    std::vector<std::int64_t> hs;
    scaled_h(sd, g1, g2, hs);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < hs.size(); ++i) total += hs[i] * sd.multiplicities[i];
    return total / scale_;
  }

  std::string pair_name(ElementId g1, ElementId g2) const {
    return "(" + group()->word(g1) + ", " + group()->word(g2) + ")";
  }

 private:
  struct Cache {
    mutable std::shared_mutex mutex;
    std::unordered_map<detail::BitKey, std::unique_ptr<SubgroupData>, detail::BitKeyHash> subgroups;
    std::unordered_map<detail::BitKey, std::int64_t, detail::BitKeyHash> fixed;
    std::unordered_map<std::uint64_t, const SubgroupData*> pairs;
  };

  std::int64_t scaled(const Rational& r) const {
    const Rational s = r * Rational(static_cast<long>(scale_));
    if (!s.is_integer()) {
      throw Error(ErrorKind::InternalInconsistency, "age denominator does not divide the exponent");
    }
    return s.to_int64();
  }

  std::string witness(ElementId g1, ElementId g2, const SubgroupData& sd, std::size_t i,
                      std::int64_t h_scaled) const {
    std::ostringstream os;
    os << "h = " << Rational(h_scaled, static_cast<unsigned long>(scale_)) << " for irreducible "
       << sd.labels[i] << " (degree " << sd.table.dims[i] << ") of the twisting group of order "
       << sd.ref.order() << " at pair " << pair_name(g1, g2) << "; character values:";
    for (const auto& v : sd.table.rows[i].values) os << " [" << v << "]";
    return os.str();
  }

  std::unique_ptr<SubgroupData> build_subgroup(const detail::BitKey& key,
                                               std::vector<ElementId> gens) const {
    const FiniteGroup& g = *group();
    auto sd = std::make_unique<SubgroupData>();
    sd->ref = SubgroupRef{group(), detail::key_elements(key, g.order()), std::move(gens)};
    sd->local = FiniteGroup::from_subgroup(group(), sd->ref.elements);
    sd->table = character_table(sd->local);
    sd->local_index.assign(g.order(), -1);
    for (std::size_t i = 0; i < sd->ref.elements.size(); ++i) {
      sd->local_index[sd->ref.elements[i]] = static_cast<std::int32_t>(i);
    }
    const FiniteGroup& h = *sd->local;
    const std::size_t r = sd->table.size();
    sd->age_scaled.assign(r, std::vector<std::int64_t>(h.order()));
    sd->fixed_single.assign(r, std::vector<std::int64_t>(h.order()));
    for (std::size_t i = 0; i < r; ++i) {
      const ClassFunction& row = sd->table.rows[i];
      for (const auto& c : h.classes()) {
        const AgeRecord rec = eigen_multiplicities(row, c.representative);
        const std::int64_t a = scaled(rec.age);
        for (auto x : c.members) {
          sd->age_scaled[i][x] = a;
          sd->fixed_single[i][x] = rec.fixed_dim();
        }
      }
      sd->fixed_all.push_back(detail::is_trivial_row(row) ? 1 : 0);
    }
    const ClassFunction restricted = restrict_character(v_, sd->local);
    sd->multiplicities = irrep_multiplicities(restricted, sd->table);
    sd->ambient_fixed = sd->multiplicities.empty() ? 0 : sd->multiplicities[0];

    for (std::size_t i = 0; i < r; ++i) {
      std::string label = "chi" + std::to_string(i + 1);
      for (const auto& [name, chi] : names_) {
        bool same = true;
        for (std::size_t c = 0; c < h.classes().size() && same; ++c) {
          same = chi.at(sd->ref.elements[h.classes()[c].representative]) ==
                 sd->table.rows[i].values[c];
        }
        if (same) {
          label = name;
          break;
        }
      }
      sd->labels.push_back(std::move(label));
    }
    return sd;
  }

  Representation v_;
  NamedCharacters names_;
  std::int64_t scale_ = 1;
  std::vector<AgeRecord> records_;
  std::vector<std::int64_t> age_scaled_;
  std::vector<std::vector<ElementId>> powers_;
  std::vector<ElementId> cyclic_id_;
  std::unique_ptr<Cache> cache_;
};

inline Rational h_scalar(const Representation& v, ElementId g1, ElementId g2) {
  return SectorCalculator(v).h_scalar(g1, g2);
}

inline SectorData obstruction_decomposition(const Representation& v, ElementId g1, ElementId g2,
                                            NamedCharacters names = {}) {
  return SectorCalculator(v, std::move(names)).decompose(g1, g2);
}

/// Both nine-term sums of the associativity identity for (g1, g2, g3).
inline std::pair<Rational, Rational> associativity_sides(const SectorCalculator& calc,
                                                         ElementId g1, ElementId g2,
                                                         ElementId g3) {
  const FiniteGroup& g = *calc.group();
  const ElementId g12 = g.mul(g1, g2);
  const ElementId g23 = g.mul(g2, g3);
  const ElementId g123 = g.mul(g12, g3);
  const auto iota = [&](ElementId x) { return calc.age(x); };
  const auto fix = [&](std::vector<ElementId> s) {
    return Rational(static_cast<long>(calc.dim_fixed(s)));
  };
  const Rational left = iota(g12) + iota(g3) - iota(g123) - fix({g123}) + fix({g12, g3}) +
                        iota(g1) + iota(g2) - iota(g12) - fix({g12}) + fix({g1, g2}) +
                        fix({g12}) - fix({g1, g2}) - fix({g12, g3}) + fix({g1, g2, g3});
  const Rational right = iota(g1) + iota(g23) - iota(g123) - fix({g123}) + fix({g1, g23}) +
                         iota(g2) + iota(g3) - iota(g23) - fix({g23}) + fix({g2, g3}) +
                         fix({g23}) - fix({g2, g3}) - fix({g1, g23}) + fix({g1, g2, g3});
  return {left, right};
}

inline std::pair<Rational, Rational> associativity_sides(const Representation& v, ElementId g1,
                                                         ElementId g2, ElementId g3) {
  return associativity_sides(SectorCalculator(v), g1, g2, g3);
}

/// Number of lines L in V (with multiplicity) with iota_L(g1) + iota_L(g2) > 1,
/// for an abelian twisting group.
inline std::int64_t chen_hu_rank(const SectorCalculator& calc, ElementId g1, ElementId g2) {
  const SubgroupData& sd = calc.subgroup(g1, g2);
  if (!sd.abelian()) {
    throw Error(ErrorKind::NotAbelian, "twisting group of " + calc.pair_name(g1, g2) +
                                           " is not abelian");
  }
  const auto l1 = static_cast<std::size_t>(sd.local_index[g1]);
  const auto l2 = static_cast<std::size_t>(sd.local_index[g2]);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < sd.table.size(); ++i) {
    if (sd.age_scaled[i][l1] + sd.age_scaled[i][l2] > calc.scale()) count += sd.multiplicities[i];
  }
  return count;
}

inline std::int64_t chen_hu_rank(const Representation& v, ElementId g1, ElementId g2) {
  return chen_hu_rank(SectorCalculator(v), g1, g2);
}

/// Obstruction rank over V + V* plus the excess dim V^{g1g2} - dim V^{g1,g2},
/// against dim V / (V^{g1} + V^{g2}).
inline RankCheck cotangent_check(const SectorCalculator& v, const SectorCalculator& v_plus_dual,
                                 ElementId g1, ElementId g2) {
  const ElementId g12 = v.group()->mul(g1, g2);
  const std::int64_t joint = v.dim_fixed({g1, g2});
  RankCheck out;
  out.lhs = v_plus_dual.rank(g1, g2) + v.age_record(g12).fixed_dim() - joint;
  out.rhs = static_cast<std::int64_t>(v.representation().dim()) - v.age_record(g1).fixed_dim() -
            v.age_record(g2).fixed_dim() + joint;
  return out;
}

inline RankCheck cotangent_check(const Representation& v, ElementId g1, ElementId g2) {
  return cotangent_check(SectorCalculator(v), SectorCalculator(direct_sum(v, dual(v))), g1, g2);
}

/// Rank additivity across a direct product: the obstruction rank of V (+) W
/// at ((g1,h1),(g2,h2)) equals rank_V(g1,g2) + rank_W(h1,h2).
class KunnethChecker {
 public:
  KunnethChecker(const Representation& v, const Representation& w)
      : product_(FiniteGroup::direct_product(v.group(), w.group())),
        left_(v),
        right_(w),
        sum_(external_sum(product_, v, w)) {}

  const GroupPtr& product() const { return product_; }
  const SectorCalculator& sum() const { return sum_; }
  const SectorCalculator& left() const { return left_; }
  const SectorCalculator& right() const { return right_; }

  RankCheck check(ElementId g1, ElementId h1, ElementId g2, ElementId h2) const {
    return RankCheck{sum_.rank(product_->product_element(g1, h1), product_->product_element(g2, h2)),
                     left_.rank(g1, g2) + right_.rank(h1, h2)};
  }

 private:
  GroupPtr product_;
  SectorCalculator left_;
  SectorCalculator right_;
  SectorCalculator sum_;
};

inline RankCheck kunneth_rank_check(const Representation& v, const Representation& w,
                                    std::pair<ElementId, ElementId> first,
                                    std::pair<ElementId, ElementId> second) {
  return KunnethChecker(v, w).check(first.first, first.second, second.first, second.second);
}

}  // namespace agering
