#include <gtest/gtest.h>

#include "agering/age.hpp"
#include "agering/catalog.hpp"
#include "agering/character_table.hpp"
#include "agering/representation.hpp"
#include "oracles.hpp"

using namespace agering;

namespace {

// <a, b> computed directly from the class data, separately from the library.
Cyclotomic pairing(const FiniteGroup& g, const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  Cyclotomic sum(0);
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    sum = sum + (a[c] * b[c].conjugate()).scaled(Rational(static_cast<long>(g.classes()[c].members.size())));
  }
  return sum.scaled(Rational(1, static_cast<unsigned long>(g.order())));
}

}  // namespace

TEST(CharacterTable, RowAndColumnOrthogonalityOnCatalog) {
  for (const auto& e : catalog()) {
    const FiniteGroup& g = *e.group;
    const CharacterTable t = character_table(e.group);
    ASSERT_EQ(t.size(), g.classes().size()) << e.name;
    std::size_t sum_sq = 0;
    for (auto d : t.dims) sum_sq += d * d;
    EXPECT_EQ(sum_sq, g.order()) << e.name;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        EXPECT_EQ(pairing(g, t.rows[i].values, t.rows[j].values), Cyclotomic(i == j ? 1 : 0)) << e.name;
    for (std::size_t c = 0; c < t.size(); ++c)
      for (std::size_t d = 0; d < t.size(); ++d) {
        Cyclotomic sum(0);
        for (std::size_t i = 0; i < t.size(); ++i) sum = sum + t.rows[i].values[c] * t.rows[i].values[d].conjugate();
        const Cyclotomic expect =
            c == d ? Cyclotomic(Rational(static_cast<long>(g.classes()[c].centralizer_order))) : Cyclotomic(0);
        EXPECT_EQ(sum, expect) << e.name;
      }
  }
}

TEST(CharacterTable, DixonAgreesWithAbelianShortcut) {
  for (const auto& name : {"C2", "C3", "C4", "C6", "C2xC2"}) {
    const GroupPtr g = catalog_entry(name).group;
    const CharacterTable a = character_table(g);
    const CharacterTable b = character_table_dixon(g);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.rows[i].values, b.rows[i].values) << name;
  }
}

TEST(CharacterTable, Degrees) {
  EXPECT_EQ(character_table(catalog_entry("Q8").group).dims, (std::vector<std::uint32_t>{1, 1, 1, 1, 2}));
  EXPECT_EQ(character_table(catalog_entry("S3").group).dims, (std::vector<std::uint32_t>{1, 1, 2}));
  EXPECT_EQ(character_table(catalog_entry("A4").group).dims, (std::vector<std::uint32_t>{1, 1, 1, 3}));
  EXPECT_EQ(character_table(catalog_entry("D4").group).dims, (std::vector<std::uint32_t>{1, 1, 1, 1, 2}));
}

TEST(CharacterTable, TrivialRowFirstAndA4Values) {
  const CharacterTable t = character_table(catalog_entry("A4").group);
  for (const auto& v : t.rows[0].values) EXPECT_EQ(v, Cyclotomic(1));
  // The three linear characters of A4 take the values 1, w, w^2 on 3-cycles.
  std::set<std::string> seen;
  for (std::size_t i = 0; i < 3; ++i)
    for (const auto& v : t.rows[i].values) seen.insert(v.to_string());
  EXPECT_TRUE(seen.count("E(3)") || seen.count("E(3)^2"));
}

TEST(CharacterTable, QuaternionCharactersAreNamedRows) {
  const CatalogEntry& q8 = catalog_entry("Q8");
  const CharacterTable t = character_table(q8.group);
  for (const auto& [name, chi] : q8.irreps) {
    bool found = false;
    for (const auto& row : t.rows) found = found || row == chi;
    EXPECT_TRUE(found) << name;
  }
}

TEST(Representation, RegularDecomposesByDegree) {
  for (const auto& name : {"S3", "D4", "Q8", "C6"}) {
    const CatalogEntry& e = catalog_entry(name);
    const CharacterTable t = character_table(e.group);
    const auto m = irrep_multiplicities(character(e.representation("reg")), t);
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(m[i], static_cast<std::int64_t>(t.dims[i])) << name;
  }
}

TEST(Representation, PermutationCharacterCountsFixedPoints) {
  const CatalogEntry& e = catalog_entry("A4");
  const Representation& v = e.representation("perm");
  const FiniteGroup& g = *e.group;
  for (ElementId x = 0; x < g.order(); ++x) {
    long fixed = 0;
    for (std::size_t i = 0; i < 4; ++i) fixed += g.permutations()[x][i] == i;
    EXPECT_EQ(v.trace(x), Cyclotomic(fixed));
  }
  EXPECT_EQ(dim_fixed(v, {0}), 4);
  EXPECT_EQ(dim_fixed(v, g.generators()), 1);
}

TEST(Representation, HomomorphismCheck) {
  const GroupPtr q8 = catalog_entry("Q8").group;
  const Cyclotomic i = Cyclotomic::root_of_unity(4);
  try {
    linear_representation(q8, {i, i}, "bad");  // gh = -hg forces i*i = -(i*i)
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAHomomorphism);
  }
  EXPECT_THROW(linear_representation(q8, {i}, "short"), Error);
}

TEST(Representation, DualAndSum) {
  const CatalogEntry& e = catalog_entry("C3-SL");
  const Representation& v = e.representation();
  const Representation vd = dual(v);
  for (ElementId x = 0; x < e.group->order(); ++x) {
    EXPECT_EQ(vd.trace(x), v.trace(x).conjugate());
    EXPECT_EQ(direct_sum(v, vd).trace(x), v.trace(x) + vd.trace(x));
  }
  EXPECT_EQ(direct_sum(v, vd).dim(), 4u);
  EXPECT_THROW(direct_sum(v, catalog_entry("C3").representation()), Error);
}

TEST(Representation, ExternalSumRejectsWrongProduct) {
  const Representation& a = catalog_entry("C2-SL").representation();
  const Representation& b = catalog_entry("C3-SL").representation();
  const GroupPtr wrong = FiniteGroup::direct_product(b.group(), a.group());
  try {
    external_sum(wrong, a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupMismatch);
  }
}

TEST(Age, QuaternionDisplay) {
  const CatalogEntry& q8 = catalog_entry("Q8");
  const FiniteGroup& g = *q8.group;
  const ElementId eg = element_from_word(g, "g"), eh = element_from_word(g, "h"), egh = g.mul(eg, eh);
  const auto& G = q8.representation("G");
  const auto& H = q8.representation("H");
  const auto& GH = q8.representation("GH");
  const auto& Q = q8.representation("Q");
  EXPECT_EQ(age(G, eg), Rational(1, 2));
  EXPECT_EQ(age(G, eh), Rational(0));
  EXPECT_EQ(age(G, egh), Rational(1, 2));
  EXPECT_EQ(age(H, eg), Rational(0));
  EXPECT_EQ(age(H, eh), Rational(1, 2));
  EXPECT_EQ(age(GH, eg), Rational(1, 2));
  EXPECT_EQ(age(GH, eh), Rational(1, 2));
  EXPECT_EQ(age(GH, egh), Rational(0));
  EXPECT_EQ(eigen_multiplicities(GH, egh).fixed_dim(), 1);
  for (ElementId x : {eg, eh, egh}) {
    EXPECT_EQ(age(Q, x), Rational(1));
    EXPECT_EQ(eigen_multiplicities(Q, x).fixed_dim(), 0);
  }
  EXPECT_EQ(dim_fixed(Q, {eg, eh}), 0);
}

TEST(Age, CyclicLinesAgainstPhases) {
  for (std::uint32_t n = 2; n <= 12; ++n) {
    const GroupPtr g = cyclic_group(n);
    const Representation v = linear_representation(g, {Cyclotomic::root_of_unity(n)}, "V");
    for (ElementId x = 0; x < n; ++x) {
      EXPECT_EQ(g->power(g->generators()[0], x), x);
      EXPECT_EQ(age(v, x), Rational(static_cast<long>(x), n));
    }
  }
}

TEST(Age, DiagonalMatricesAgainstNumericPhases) {
  for (const auto& name : {"C2-SL", "C3-SL", "Q8xC3"}) {
    const CatalogEntry& e = catalog_entry(name);
    const Representation& v = e.representation();
    for (ElementId x = 0; x < e.group->order(); ++x) {
      const CycMatrix& m = v.matrix(x);
      bool diagonal = true;
      for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) diagonal = diagonal && (i == j || m.at(i, j).is_zero());
      if (!diagonal) continue;
      EXPECT_NEAR(age(v, x).to_double(), oracle::diagonal_age(m), 1e-9) << name;
    }
  }
}

TEST(Age, DeterminantAndDualIdentity) {
  for (const auto& e : catalog()) {
    for (const auto& v : e.representations) {
      const Representation vd = dual(v);
      for (ElementId x = 0; x < e.group->order(); ++x) {
        EXPECT_TRUE(determinant_matches_age(v, x)) << e.name << " " << v.label();
        const auto rec = eigen_multiplicities(v, x);
        EXPECT_EQ(age(v, x) + age(vd, x), Rational(static_cast<long>(v.dim()) - rec.fixed_dim()));
        EXPECT_EQ(rec.dim(), static_cast<std::int64_t>(v.dim()));
      }
    }
  }
}

TEST(Age, NonCharacterRejected) {
  const GroupPtr g = cyclic_group(2);
  ClassFunction half{g, {Cyclotomic(1), Cyclotomic(0)}};
  try {
    eigen_multiplicities(half, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAnInteger);
  }
  ClassFunction negative{g, {Cyclotomic(0), Cyclotomic(2)}};
  try {
    eigen_multiplicities(negative, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeMultiplicity);
  }
}
