#pragma once

// Built-in groups and representations used as fixtures and by the command line.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "agering/expr.hpp"
#include "agering/group.hpp"
#include "agering/obstruction.hpp"
#include "agering/representation.hpp"

namespace agering {

struct CatalogEntry {
  std::string name;
  std::string description;
  GroupPtr group;
  std::vector<Representation> representations;  // first one is the default
  NamedCharacters irreps;

  const Representation& representation(const std::string& label = {}) const {
    if (label.empty()) return representations.front();
    for (const auto& v : representations)
      if (v.label() == label) return v;
    std::string known;
    for (const auto& v : representations) known += (known.empty() ? "" : ", ") + v.label();
    throw Error(ErrorKind::InvalidInput,
                "entry " + name + " has no representation '" + label + "' (known: " + known + ")");
  }
};

namespace detail {

inline CycMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Cyclotomic>> values;
  for (const auto& row : rows) {
    values.emplace_back();
    for (const auto& s : row) values.back().push_back(parse_cyclotomic_expr(s));
  }
  return CycMatrix::from_rows(values);
}

inline CatalogEntry cyclic_entry(std::uint32_t n) {
  CatalogEntry e;
  e.name = "C" + std::to_string(n);
  e.description = "cyclic group of order " + std::to_string(n) + " acting on C by a primitive root";
  e.group = cyclic_group(n);
  e.representations.push_back(linear_representation(e.group, {Cyclotomic::root_of_unity(n, 1)}, "V"));
  e.representations.push_back(regular_representation(e.group));
  return e;
}

inline CatalogEntry permutation_entry(std::string name, std::string description, std::size_t degree,
                                      const std::vector<std::vector<std::vector<std::uint32_t>>>& cycles,
                                      std::vector<std::string> names, bool with_regular) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(permutation_from_cycles(degree, c));
  e.group = FiniteGroup::from_permutations(degree, std::move(gens), std::move(names));
  e.representations.push_back(permutation_representation(e.group));
  if (with_regular) e.representations.push_back(regular_representation(e.group));
  return e;
}

inline GroupPtr quaternion_group() {
  return FiniteGroup::from_matrices(
      {parse_matrix({{"E(4)", "0"}, {"0", "-E(4)"}}), parse_matrix({{"0", "1"}, {"-1", "0"}})},
      {"g", "h"});
}

inline CatalogEntry quaternion_entry() {
  CatalogEntry e;
  e.name = "Q8";
  e.description = "quaternion group with its four characters and the 2-dimensional Q";
  e.group = quaternion_group();
  const Cyclotomic one(1), minus(-1);
  e.representations.push_back(tautological_representation(e.group, "Q"));
  e.representations.push_back(trivial_representation(e.group, 1, "1"));
  e.representations.push_back(linear_representation(e.group, {minus, one}, "G"));
  e.representations.push_back(linear_representation(e.group, {one, minus}, "H"));
  e.representations.push_back(linear_representation(e.group, {minus, minus}, "GH"));
  e.representations.push_back(regular_representation(e.group));
  for (const char* label : {"1", "G", "H", "GH", "Q"}) {
    e.irreps.emplace_back(label, character(e.representation(label)));
  }
  return e;
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  {
    CatalogEntry e;
    e.name = "trivial";
    e.description = "trivial group acting on C";
    e.group = trivial_group();
    e.representations.push_back(trivial_representation(e.group, 1, "V"));
    out.push_back(std::move(e));
  }
  for (std::uint32_t n : {2u, 3u, 4u, 6u}) out.push_back(cyclic_entry(n));
  {
    CatalogEntry e = permutation_entry("C2xC2", "Klein four-group acting on C^2 by two signs", 4,
                                       {{{1, 2}}, {{3, 4}}}, {"a", "b"}, true);
    e.representations.insert(
        e.representations.begin(),
        build_representation(e.group,
                             {parse_matrix({{"-1", "0"}, {"0", "1"}}),
                              parse_matrix({{"1", "0"}, {"0", "-1"}})},
                             2, "V"));
    out.push_back(std::move(e));
  }
  out.push_back(permutation_entry("S3", "symmetric group on three points", 3,
                                  {{{1, 2, 3}}, {{1, 2}}}, {"a", "b"}, true));
  out.push_back(permutation_entry("D4", "symmetries of a square acting on its vertices", 4,
                                  {{{1, 2, 3, 4}}, {{1, 3}}}, {"r", "f"}, true));
  out.push_back(quaternion_entry());
  out.push_back(permutation_entry("A4", "alternating group on four points", 4,
                                  {{{1, 2, 3}}, {{1, 2}, {3, 4}}}, {"a", "b"}, false));
  {
    CatalogEntry e;
    e.name = "C2-SL";
    e.description = "C2 acting on C^2 by -1";
    e.group = cyclic_group(2);
    e.representations.push_back(
        build_representation(e.group, {parse_matrix({{"-1", "0"}, {"0", "-1"}})}, 2, "V"));
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "C3-SL";
    e.description = "C3 acting on C^2 by diag(E(3), E(3)^2)";
    e.group = cyclic_group(3);
    e.representations.push_back(
        build_representation(e.group, {parse_matrix({{"E(3)", "0"}, {"0", "E(3)^2"}})}, 2, "V"));
    out.push_back(std::move(e));
  }
  {
    const CatalogEntry q8 = quaternion_entry();
    const GroupPtr c3 = cyclic_group(3);
    CatalogEntry e;
    e.name = "Q8xC3";
    e.description = "Q8 x C3 acting on Q plus the line where C3 acts by E(3)";
    e.group = FiniteGroup::direct_product(q8.group, c3);
    e.representations.push_back(
        external_sum(e.group, q8.representation("Q"),
                     linear_representation(c3, {Cyclotomic::root_of_unity(3, 1)}, "L"))
            .relabeled("V"));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  std::string known;
  for (const auto& e : catalog()) known += (known.empty() ? "" : ", ") + e.name;
  throw Error(ErrorKind::InvalidInput, "no catalog entry '" + name + "' (known: " + known + ")");
}

}  // namespace agering
