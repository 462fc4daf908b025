#pragma once

// JSON input documents: a group (permutation, table or matrix generators) and
// an optional representation given by one matrix per generator.
//
//   {"group": {"type": "permutation", "degree": 3,
//              "generators": [[[1, 2, 3]], [[1, 2]]], "names": ["a", "b"]},
//    "representation": {"matrices": [[["E(3)", "0"], ["0", "E(3)^2"]], ...]},
//    "labels": {"group": "S3", "representation": "V"}}
//
// Table groups use "table" (rows of element labels 0..n-1) and optional
// "generators" (element labels); matrix groups use "generators" as a list of
// matrices of expression strings.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "agering/expr.hpp"
#include "agering/group.hpp"
#include "agering/representation.hpp"

namespace agering {

using Json = nlohmann::ordered_json;

struct InputDocument {
  std::string name = "input";
  GroupPtr group;
  std::optional<Representation> representation;
};

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::InvalidInput, std::string("field '") + what + "' has the wrong type");
  }
}

inline CycMatrix matrix_from_json(const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::InvalidInput, "matrix must be a non-empty array");
  std::vector<std::vector<Cyclotomic>> values;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) {
      throw Error(ErrorKind::InvalidInput, "matrix must be square");
    }
    values.emplace_back();
    for (const auto& entry : row) {
      if (entry.is_number_integer()) {
        values.back().emplace_back(Rational(entry.get<long>()));
      } else if (entry.is_string()) {
        values.back().push_back(parse_cyclotomic_expr(entry.get<std::string>()));
      } else {
        throw Error(ErrorKind::InvalidInput, "matrix entries must be strings or integers");
      }
    }
  }
  return CycMatrix::from_rows(values);
}

inline Json matrix_to_json(const CycMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<std::vector<std::uint32_t>> cycles_of(const Permutation& p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    std::vector<std::uint32_t> cycle;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<std::uint32_t>(j + 1));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace detail

inline GroupPtr group_from_json(const Json& g, std::size_t cap = kDefaultClosureCap) {
  const std::string type = detail::as<std::string>(detail::field(g, "type"), "type");
  std::vector<std::string> names;
  if (g.contains("names")) names = detail::as<std::vector<std::string>>(g.at("names"), "names");
  if (type == "permutation") {
    const auto degree = detail::as<std::size_t>(detail::field(g, "degree"), "degree");
    if (degree == 0) throw Error(ErrorKind::InvalidInput, "degree must be positive");
    const auto gens = detail::as<std::vector<std::vector<std::vector<std::uint32_t>>>>(
        detail::field(g, "generators"), "generators");
    std::vector<Permutation> perms;
    for (const auto& cycles : gens) perms.push_back(permutation_from_cycles(degree, cycles));
    return FiniteGroup::from_permutations(degree, std::move(perms), std::move(names), cap);
  }
  if (type == "table") {
    const auto table =
        detail::as<std::vector<std::vector<std::uint32_t>>>(detail::field(g, "table"), "table");
    std::vector<std::uint32_t> gens;
    if (g.contains("generators")) gens = detail::as<std::vector<std::uint32_t>>(g.at("generators"), "generators");
    return FiniteGroup::from_table(table, std::move(gens), std::move(names), cap);
  }
  if (type == "matrix") {
    const Json& gens = detail::field(g, "generators");
    if (!gens.is_array()) throw Error(ErrorKind::InvalidInput, "generators must be an array");
    std::vector<CycMatrix> mats;
    for (const auto& m : gens) mats.push_back(detail::matrix_from_json(m));
    return FiniteGroup::from_matrices(std::move(mats), std::move(names), cap);
  }
  throw Error(ErrorKind::InvalidInput, "unknown group type '" + type + "'");
}

inline InputDocument input_from_json(const Json& doc, std::size_t cap = kDefaultClosureCap) {
  InputDocument in;
  in.group = group_from_json(detail::field(doc, "group"), cap);
  std::string rep_label = "V";
  if (doc.contains("labels")) {
    const Json& labels = doc.at("labels");
    if (labels.contains("group")) in.name = detail::as<std::string>(labels.at("group"), "labels.group");
    if (labels.contains("representation")) {
      rep_label = detail::as<std::string>(labels.at("representation"), "labels.representation");
    }
  }
  if (doc.contains("representation")) {
    const Json& mats = detail::field(doc.at("representation"), "matrices");
    if (!mats.is_array()) throw Error(ErrorKind::InvalidInput, "matrices must be an array");
    std::vector<CycMatrix> images;
    for (const auto& m : mats) images.push_back(detail::matrix_from_json(m));
    std::size_t dim = images.empty() ? 1 : images.front().dim();
    if (doc.at("representation").contains("dim")) {
      dim = detail::as<std::size_t>(doc.at("representation").at("dim"), "representation.dim");
    }
    in.representation = build_representation(in.group, std::move(images), dim, rep_label);
  } else if (in.group->provenance() == Provenance::Matrix) {
    in.representation = tautological_representation(in.group, rep_label);
  } else if (in.group->provenance() == Provenance::Permutation) {
    in.representation = permutation_representation(in.group, rep_label);
  }
  return in;
}

inline InputDocument parse_input(const std::string& text, std::size_t cap = kDefaultClosureCap) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
  }
  return input_from_json(doc, cap);
}

inline InputDocument read_input(const std::string& path, std::size_t cap = kDefaultClosureCap) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str(), cap);
}

inline Json group_to_json(const FiniteGroup& g) {
  Json out;
  switch (g.provenance()) {
    case Provenance::Permutation: {
      out["type"] = "permutation";
      out["degree"] = g.degree();
      Json gens = Json::array();
      for (auto s : g.generators()) gens.push_back(detail::cycles_of(g.permutations()[s]));
      out["generators"] = std::move(gens);
      break;
    }
    case Provenance::Matrix: {
      out["type"] = "matrix";
      Json gens = Json::array();
      for (auto s : g.generators()) gens.push_back(detail::matrix_to_json(g.matrices()[s]));
      out["generators"] = std::move(gens);
      break;
    }
    default: {
      out["type"] = "table";
      const std::size_t n = g.order();
      Json rows = Json::array();
      for (ElementId a = 0; a < n; ++a) {
        Json row = Json::array();
        for (ElementId b = 0; b < n; ++b) row.push_back(g.mul(a, b));
        rows.push_back(std::move(row));
      }
      out["table"] = std::move(rows);
      out["generators"] = g.generators();
      break;
    }
  }
  out["names"] = g.generator_names();
  return out;
}

/// Input document reproducing `v` and its group.
inline Json input_to_json(const Representation& v, const std::string& name = "input") {
  Json doc;
  doc["group"] = group_to_json(*v.group());
  Json mats = Json::array();
  for (auto s : v.group()->generators()) mats.push_back(detail::matrix_to_json(v.matrix(s)));
  doc["representation"] = Json{{"dim", v.dim()}, {"matrices", std::move(mats)}};
  doc["labels"] = Json{{"group", name}, {"representation", v.label()}};
  return doc;
}

}  // namespace agering
