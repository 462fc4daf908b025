#pragma once

// Matrix representations, characters and fixed-subspace dimensions.

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "agering/cyclotomic.hpp"
#include "agering/group.hpp"
#include "agering/matrix.hpp"

namespace agering {

inline constexpr std::size_t kRepresentationEntryCap = 10000000;

class Representation {
 public:
  Representation() = default;

  /// Extends generator images along the BFS words of `group` and checks
  /// rho(x) rho(s) = rho(xs) for every element x and generator s.
  static Representation from_generators(GroupPtr group, std::vector<CycMatrix> images,
                                        std::size_t dim, std::string label) {
    if (images.size() != group->generators().size()) {
      throw Error(ErrorKind::InvalidInput,
                  "expected " + std::to_string(group->generators().size()) +
                      " generator matrices, got " + std::to_string(images.size()));
    }
    unsigned conductor = group->exponent();
    for (const auto& m : images) {
      if (m.dim() != dim) throw Error(ErrorKind::InvalidInput, "generator matrix has wrong size");
      conductor = std::lcm(conductor, m.conductor());
    }
    check_cap(*group, dim, conductor);
    for (auto& m : images) m = m.lifted(conductor);

    const std::size_t n = group->order();
    std::vector<CycMatrix> mats(n);
    mats[0] = CycMatrix::identity(dim, conductor);
    for (ElementId x = 1; x < n; ++x) {
      mats[x] = mats[group->bfs_parent(x)] * images[group->bfs_generator(x)];
    }
    for (ElementId x = 0; x < n; ++x) {
      for (std::size_t s = 0; s < images.size(); ++s) {
        const ElementId y = group->mul(x, group->generators()[s]);
        if (!(mats[x] * images[s] == mats[y])) {
          throw Error(ErrorKind::NotAHomomorphism,
                      "rho(" + group->word(x) + ") rho(" + group->generator_names()[s] +
                          ") != rho(" + group->word(y) + ")");
        }
      }
    }
    return Representation(std::move(group), dim, std::move(mats), std::move(label));
  }

  /// Per-element matrices that are already known to form a homomorphism.
  static Representation from_elements(GroupPtr group, std::vector<CycMatrix> mats,
                                      std::size_t dim, std::string label) {
    unsigned conductor = group->exponent();
    for (const auto& m : mats) conductor = std::lcm(conductor, m.conductor());
    check_cap(*group, dim, conductor);
    for (auto& m : mats) m = m.lifted(conductor);
    return Representation(std::move(group), dim, std::move(mats), std::move(label));
  }

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const CycMatrix& matrix(ElementId x) const { return matrices_[x]; }
  const Cyclotomic& trace(ElementId x) const { return traces_[x]; }
  const std::vector<Cyclotomic>& traces() const { return traces_; }

  Representation relabeled(std::string label) const {
    Representation r = *this;
    r.label_ = std::move(label);
    return r;
  }

 private:
  Representation(GroupPtr group, std::size_t dim, std::vector<CycMatrix> mats, std::string label)
      : group_(std::move(group)), dim_(dim), label_(std::move(label)), matrices_(std::move(mats)) {
    traces_.reserve(matrices_.size());
    for (const auto& m : matrices_) traces_.push_back(m.trace());
  }

  static void check_cap(const FiniteGroup& g, std::size_t dim, unsigned conductor) {
    const std::size_t entries = g.order() * dim * dim * detail::euler_phi(conductor);
    if (entries > kRepresentationEntryCap) {
      throw Error(ErrorKind::CapExceeded, "representation needs " + std::to_string(entries) +
                                              " rational entries");
    }
  }

  GroupPtr group_;
  std::size_t dim_ = 0;
  std::string label_;
  std::vector<CycMatrix> matrices_;
  std::vector<Cyclotomic> traces_;
};

inline Representation build_representation(GroupPtr group, std::vector<CycMatrix> images,
                                           std::size_t dim, std::string label = "V") {
  return Representation::from_generators(std::move(group), std::move(images), dim,
                                         std::move(label));
}

inline Representation trivial_representation(const GroupPtr& group, std::size_t dim = 1,
                                             std::string label = "1") {
  std::vector<CycMatrix> mats(group->order(), CycMatrix::identity(dim));
  return Representation::from_elements(group, std::move(mats), dim, std::move(label));
}

/// One-dimensional representation with the given generator values.
inline Representation linear_representation(const GroupPtr& group,
                                            const std::vector<Cyclotomic>& generator_values,
                                            std::string label) {
  std::vector<CycMatrix> images;
  for (const auto& v : generator_values) images.push_back(CycMatrix::from_rows({{v}}));
  return build_representation(group, std::move(images), 1, std::move(label));
}

/// Left regular representation: e_y -> e_{xy}.
inline Representation regular_representation(const GroupPtr& group, std::string label = "reg") {
  const std::size_t n = group->order();
  std::vector<CycMatrix> mats;
  mats.reserve(n);
  for (ElementId x = 0; x < n; ++x) {
    CycMatrix m(n);
    for (ElementId y = 0; y < n; ++y) m.at(group->mul(x, y), y) = Cyclotomic(1);
    mats.push_back(std::move(m));
  }
  return Representation::from_elements(group, std::move(mats), n, std::move(label));
}

/// Natural permutation representation, P(x)[i][x(i)] = 1.
inline Representation permutation_representation(const GroupPtr& group,
                                                 std::string label = "perm") {
  if (group->provenance() != Provenance::Permutation) {
    throw Error(ErrorKind::InvalidInput, "group was not built from permutations");
  }
  const std::size_t d = group->degree();
  std::vector<CycMatrix> mats;
  for (const auto& p : group->permutations()) {
    CycMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, p[i]) = Cyclotomic(1);
    mats.push_back(std::move(m));
  }
  return Representation::from_elements(group, std::move(mats), d, std::move(label));
}

/// The defining representation of a matrix group.
inline Representation tautological_representation(const GroupPtr& group,
                                                  std::string label = "V") {
  if (group->provenance() != Provenance::Matrix) {
    throw Error(ErrorKind::InvalidInput, "group was not built from matrices");
  }
  return Representation::from_elements(group, group->matrices(), group->degree(),
                                       std::move(label));
}

/// A function on a group that is constant on conjugacy classes, one value per class.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  const Cyclotomic& at(ElementId x) const { return values[group->class_of(x)]; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.values == b.values;
  }
};

inline ClassFunction character(const Representation& v) {
  ClassFunction chi{v.group(), {}};
  for (const auto& c : v.group()->classes()) chi.values.push_back(v.trace(c.representative));
  return chi;
}

/// (1/|G|) sum_g a(g) conj(b(g)).
inline Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  const auto& classes = a.group->classes();
  Cyclotomic sum(0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    sum += (a.values[c] * b.values[c].conjugate())
               .scaled(Rational(static_cast<long>(classes[c].members.size())));
  }
  return sum.scaled(Rational(1, a.group->order()));
}

namespace detail {

inline std::int64_t integral_average(const Cyclotomic& sum, std::size_t count,
                                     const std::string& what) {
  const Cyclotomic avg = sum.scaled(Rational(1, count));
  if (!avg.is_rational() || !avg.as_rational().is_integer() || avg.as_rational().sign() < 0) {
    throw Error(ErrorKind::NotAnInteger, what + " = " + avg.to_string());
  }
  return avg.as_rational().to_int64();
}

}  // namespace detail

/// dim V^{S}, the joint fixed space of the listed elements, as the average
/// of the character over the subgroup they generate.
inline std::int64_t dim_fixed(const Representation& v, std::vector<ElementId> elements) {
  const SubgroupRef h = subgroup_generated(v.group(), std::move(elements));
  Cyclotomic sum(0);
  for (auto x : h.elements) sum += v.trace(x);
  return detail::integral_average(sum, h.order(), "dim of fixed space");
}

enum class CombineMode { DirectSum, Dual, ExternalSum };

inline Representation direct_sum(const Representation& v, const Representation& w) {
  if (v.group() != w.group()) {
    throw Error(ErrorKind::GroupMismatch, "direct sum needs representations of one group");
  }
  std::vector<CycMatrix> mats;
  for (ElementId x = 0; x < v.group()->order(); ++x) {
    mats.push_back(CycMatrix::block_diagonal(v.matrix(x), w.matrix(x)));
  }
  return Representation::from_elements(v.group(), std::move(mats), v.dim() + w.dim(),
                                       v.label() + "+" + w.label());
}

/// rho*(g) = transpose(rho(g^-1)).
inline Representation dual(const Representation& v) {
  std::vector<CycMatrix> mats;
  for (ElementId x = 0; x < v.group()->order(); ++x) {
    mats.push_back(v.matrix(v.group()->inverse(x)).transpose());
  }
  return Representation::from_elements(v.group(), std::move(mats), v.dim(), v.label() + "*");
}

/// V of G and W of H as the representation V (+) W of G x H.
inline Representation external_sum(const GroupPtr& product, const Representation& v,
                                   const Representation& w) {
  if (product->provenance() != Provenance::Product || product->factors().first != v.group() ||
      product->factors().second != w.group()) {
    throw Error(ErrorKind::GroupMismatch, "product group does not match the factors");
  }
  std::vector<CycMatrix> mats;
  for (const auto& [a, b] : product->components()) {
    mats.push_back(CycMatrix::block_diagonal(v.matrix(a), w.matrix(b)));
  }
  return Representation::from_elements(product, std::move(mats), v.dim() + w.dim(),
                                       v.label() + "#" + w.label());
}

/// External sum over a product group built from both factors; `w` is
/// ignored for Dual.
inline Representation combine(const Representation& v, const Representation& w,
                              CombineMode mode, const GroupPtr& product = nullptr) {
  switch (mode) {
    case CombineMode::DirectSum: return direct_sum(v, w);
    case CombineMode::Dual: return dual(v);
    case CombineMode::ExternalSum:
      if (!product) throw Error(ErrorKind::GroupMismatch, "external sum needs the product group");
      return external_sum(product, v, w);
  }
  throw Error(ErrorKind::InvalidInput, "unknown combine mode");
}

}  // namespace agering
