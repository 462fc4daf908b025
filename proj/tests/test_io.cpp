#include <gtest/gtest.h>

#include "agering/catalog.hpp"
#include "agering/io.hpp"

using namespace agering;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(Input, CatalogRoundTrip) {
  for (const auto& e : catalog()) {
    for (const auto& v : e.representations) {
      const std::string text = input_to_json(v, e.name).dump();
      const InputDocument doc = parse_input(text);
      ASSERT_TRUE(doc.representation.has_value());
      EXPECT_EQ(doc.name, e.name);
      EXPECT_EQ(doc.group->table(), e.group->table()) << e.name;
      EXPECT_EQ(doc.group->generator_names(), e.group->generator_names());
      EXPECT_EQ(doc.representation->label(), v.label());
      for (ElementId x = 0; x < e.group->order(); ++x) {
        EXPECT_EQ(doc.representation->matrix(x), v.matrix(x)) << e.name << " " << v.label();
      }
    }
  }
}

TEST(Input, PermutationDefaultsToNaturalRepresentation) {
  const InputDocument doc = parse_input(R"json({"group": {"type": "permutation", "degree": 3,
      "generators": [[[1, 2, 3]], [[1, 2]]]}})json");
  EXPECT_EQ(doc.group->order(), 6u);
  EXPECT_EQ(doc.representation->dim(), 3u);
  EXPECT_EQ(doc.group->generator_names(), (std::vector<std::string>{"s1", "s2"}));
}

TEST(Input, MatrixGroup) {
  const InputDocument doc = parse_input(R"json({"group": {"type": "matrix", "names": ["g", "h"],
      "generators": [[["E(4)", "0"], ["0", "-E(4)"]], [["0", 1], [-1, "0"]]]},
      "labels": {"representation": "Q"}})json");
  EXPECT_EQ(doc.group->order(), 8u);
  EXPECT_EQ(doc.representation->label(), "Q");
}

TEST(Input, TableGroupWithRepresentation) {
  const InputDocument doc = parse_input(R"json({"group": {"type": "table",
      "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "generators": [1], "names": ["t"]},
      "representation": {"matrices": [[["E(3)", "0"], ["0", "E(3)^2"]]]}})json");
  EXPECT_EQ(doc.group->order(), 3u);
  EXPECT_EQ(doc.representation->dim(), 2u);
}

TEST(Input, Errors) {
  EXPECT_EQ(kind_of("{"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"json({"group": {"type": "lattice"}})json"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"json({"group": {"type": "matrix", "generators": [[["E(4"]]]}})json"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"json({"group": {"type": "matrix", "generators": [[["E(0)"]]]}})json"), ErrorKind::ZeroConductor);
  EXPECT_EQ(kind_of(R"json({"group": {"type": "matrix", "generators": [[["1", "0"]]]}})json"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"json({"group": {"type": "table", "table": [[0, 1], [1, 1]]}})json"), ErrorKind::NotAGroup);
  EXPECT_EQ(kind_of(R"json({"group": {"type": "permutation", "degree": 2, "generators": [[[1, 2]]]},
      "representation": {"matrices": [[["1"]], [["1"]]]}})json"),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"json({"group": {"type": "permutation", "degree": 2, "generators": [[[1, 2]]]},
      "representation": {"matrices": [[["E(4)"]]]}})json"),
            ErrorKind::NotAHomomorphism);
  EXPECT_EQ(kind_of(R"json({"group": {"type": "permutation", "degree": 2, "generators": [[[1, 3]]]}})json"),
            ErrorKind::InvalidInput);
}

TEST(Catalog, EntriesAndLookup) {
  EXPECT_EQ(catalog().size(), 13u);
  EXPECT_EQ(catalog_entry("Q8").representation().label(), "Q");
  EXPECT_THROW(catalog_entry("nope"), Error);
  EXPECT_THROW(catalog_entry("Q8").representation("nope"), Error);
  EXPECT_EQ(catalog_entry("Q8xC3").representation().dim(), 3u);
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code(ErrorKind::ParseError), 2);
  EXPECT_EQ(exit_code(ErrorKind::ZeroConductor), 2);
  EXPECT_EQ(exit_code(ErrorKind::NotAGroup), 2);
  EXPECT_EQ(exit_code(ErrorKind::NotAHomomorphism), 2);
  EXPECT_EQ(exit_code(ErrorKind::CapExceeded), 3);
  EXPECT_EQ(exit_code(ErrorKind::NotClosedWithinBound), 3);
  EXPECT_EQ(exit_code(ErrorKind::NegativeH), 1);
  EXPECT_EQ(exit_code(ErrorKind::NotAnInteger), 1);
}
