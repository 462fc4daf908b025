#pragma once

// The age grading: iota_V(g) = sum of the phases lambda in [0, 1) of the
// eigenvalues exp(2 pi i lambda) of g on V. Eigenvalue multiplicities come
// from the character alone, by a discrete Fourier transform of the traces of
// the powers of g; no matrix is ever diagonalized.

#include <cstdint>
#include <vector>

#include "agering/cyclotomic.hpp"
#include "agering/group.hpp"
#include "agering/representation.hpp"

namespace agering {

struct AgeRecord {
  ElementId element = 0;
  std::uint32_t order = 1;
  /// multiplicities[k] = multiplicity of the eigenvalue zeta_order^k
  std::vector<std::int64_t> multiplicities;
  Rational age;

  std::int64_t dim() const {
    std::int64_t d = 0;
    for (auto m : multiplicities) d += m;
    return d;
  }
  /// Multiplicity of the eigenvalue 1, i.e. dim V^g.
  std::int64_t fixed_dim() const { return multiplicities.empty() ? 0 : multiplicities[0]; }
  /// sum_k k m_k = order * age.
  std::int64_t weighted_sum() const {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < multiplicities.size(); ++k)
      s += static_cast<std::int64_t>(k) * multiplicities[k];
    return s;
  }
};

/// `traces[j]` is the trace of g^j for j = 0 .. o(g)-1.
inline AgeRecord age_record_from_traces(ElementId g, const std::vector<Cyclotomic>& traces) {
  AgeRecord rec;
  rec.element = g;
  rec.order = static_cast<std::uint32_t>(traces.size());
  std::vector<Rational> m;
  try {
    m = dft_multiplicities(traces);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotRational) throw;
    throw Error(ErrorKind::NotAnInteger, std::string("eigenvalue multiplicity: ") + e.what());
  }
  Rational weighted(0);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!m[k].is_integer()) {
      throw Error(ErrorKind::NotAnInteger, "eigenvalue multiplicity " + m[k].to_string());
    }
    if (m[k].sign() < 0) {
      throw Error(ErrorKind::NegativeMultiplicity, "eigenvalue multiplicity " + m[k].to_string());
    }
    rec.multiplicities.push_back(m[k].to_int64());
    weighted += m[k] * Rational(static_cast<long>(k));
  }
  rec.age = weighted / Rational(static_cast<long>(rec.order));
  return rec;
}

inline AgeRecord eigen_multiplicities(const Representation& v, ElementId g) {
  const FiniteGroup& group = *v.group();
  std::vector<Cyclotomic> traces;
  ElementId x = 0;
  for (std::uint32_t j = 0; j < group.element_order(g); ++j) {
    traces.push_back(v.trace(x));
    x = group.mul(x, g);
  }
  return age_record_from_traces(g, traces);
}

/// Same, for a character given as a class function (e.g. a row of a table).
inline AgeRecord eigen_multiplicities(const ClassFunction& chi, ElementId g) {
  const FiniteGroup& group = *chi.group;
  std::vector<Cyclotomic> traces;
  ElementId x = 0;
  for (std::uint32_t j = 0; j < group.element_order(g); ++j) {
    traces.push_back(chi.at(x));
    x = group.mul(x, g);
  }
  return age_record_from_traces(g, traces);
}

inline Rational age(const Representation& v, ElementId g) { return eigen_multiplicities(v, g).age; }
inline Rational age(const ClassFunction& chi, ElementId g) {
  return eigen_multiplicities(chi, g).age;
}

/// exp(2 pi i iota_V(g)) = det(g : V -> V), with the determinant expanded exactly.
inline bool determinant_matches_age(const Representation& v, ElementId g) {
  const AgeRecord rec = eigen_multiplicities(v, g);
  const Cyclotomic det = v.matrix(g).determinant();
  return det == Cyclotomic::root_of_unity(rec.order, static_cast<long>(rec.weighted_sum()));
}

}  // namespace agering
