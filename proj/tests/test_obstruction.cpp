#include <gtest/gtest.h>

#include "agering/catalog.hpp"
#include "agering/obstruction.hpp"

using namespace agering;

namespace {

Representation cyclic_line(std::uint32_t n) {
  return linear_representation(cyclic_group(n), {Cyclotomic::root_of_unity(n)}, "V");
}

}  // namespace

TEST(Obstruction, QuaternionSectorGH) {
  const CatalogEntry& q8 = catalog_entry("Q8");
  const FiniteGroup& g = *q8.group;
  const SectorCalculator calc(q8.representation("Q"), q8.irreps);
  const ElementId eg = element_from_word(g, "g"), eh = element_from_word(g, "h");
  const SectorData sd = calc.decompose(eg, eh);
  EXPECT_EQ(sd.twisting_group.order(), 8u);
  EXPECT_EQ(sd.rank, 1);
  EXPECT_EQ(sd.age_defect, Rational(1));
  EXPECT_EQ(sd.codim_excess, 0);
  std::map<std::string, std::int64_t> h;
  for (const auto& ir : sd.per_irrep) h[ir.label] = ir.h;
  EXPECT_EQ(h, (std::map<std::string, std::int64_t>{{"1", 0}, {"G", 0}, {"H", 0}, {"GH", 0}, {"Q", 1}}));
  EXPECT_EQ(calc.h_scalar(eg, eh), Rational(1));
}

TEST(Obstruction, IdentityPairIsTight) {
  for (const auto& e : catalog()) {
    const SectorData sd = obstruction_decomposition(e.representation(), 0, 0);
    EXPECT_EQ(sd.rank, 0);
    ASSERT_EQ(sd.per_irrep.size(), 1u);
    EXPECT_EQ(sd.per_irrep[0].h, 0);
    EXPECT_EQ(sd.per_irrep[0].t, static_cast<std::int64_t>(e.representation().dim()));
  }
}

TEST(Obstruction, CyclicLineRankFromAges) {
  // For a faithful line over Z/n: rank = k1/n + k2/n - ((k1+k2) mod n)/n - excess,
  // where the excess is 1 exactly when k1 + k2 = 0 mod n but not both are 0.
  for (std::uint32_t n = 2; n <= 8; ++n) {
    const Representation v = cyclic_line(n);
    const SectorCalculator calc(v);
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        const long sum = static_cast<long>(a + b);
        const Rational defect = Rational(sum, n) - Rational(sum % n, n);
        const long excess = (sum % n == 0 && !(a == 0 && b == 0)) ? 1 : 0;
        EXPECT_EQ(Rational(calc.rank(a, b)), defect - Rational(excess)) << n << " " << a << " " << b;
        // line criterion
        EXPECT_EQ(chen_hu_rank(calc, a, b), sum > static_cast<long>(n) ? 1 : 0);
      }
  }
}

TEST(Obstruction, TightPatternOnZ3) {
  const Representation v = cyclic_line(3);
  const SectorCalculator calc(v);
  for (ElementId a = 0; a < 3; ++a)
    for (ElementId b = 0; b < 3; ++b) {
      const SectorData sd = calc.decompose(a, b);
      bool tight = false;
      for (const auto& ir : sd.per_irrep) tight = tight || (ir.h == 0 && ir.t > 0);
      EXPECT_EQ(tight, a + b <= 3) << a << "," << b;
    }
  EXPECT_EQ(calc.rank(2, 2), 1);
}

TEST(Obstruction, RankIsDefectMinusExcessAndHScalar) {
  for (const auto& e : catalog()) {
    for (const auto& v : e.representations) {
      if (e.group->order() > 12) continue;
      const SectorCalculator calc(v);
      for (ElementId a = 0; a < e.group->order(); ++a)
        for (ElementId b = 0; b < e.group->order(); ++b) {
          const SectorData sd = calc.decompose(a, b);
          EXPECT_EQ(Rational(sd.rank), sd.age_defect - Rational(sd.codim_excess));
          EXPECT_EQ(calc.h_scalar(a, b), Rational(sd.rank));
          EXPECT_GE(sd.age_defect, Rational(0));
          EXPECT_GE(sd.codim_excess, 0);
          std::int64_t weighted = 0;
          for (const auto& ir : sd.per_irrep) weighted += ir.t * ir.h;
          EXPECT_EQ(weighted, sd.rank);
        }
    }
  }
}

TEST(Obstruction, ChenHuNeedsAbelianGroup) {
  const CatalogEntry& q8 = catalog_entry("Q8");
  const FiniteGroup& g = *q8.group;
  try {
    chen_hu_rank(q8.representation("Q"), element_from_word(g, "g"), element_from_word(g, "h"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAbelian);
  }
  EXPECT_EQ(chen_hu_rank(q8.representation("Q"), element_from_word(g, "g"), element_from_word(g, "g")), 1);
}

TEST(Obstruction, Cotangent) {
  for (const auto& name : {"Q8", "S3", "C3-SL", "C4"}) {
    const CatalogEntry& e = catalog_entry(name);
    for (const auto& v : e.representations)
      for (ElementId a = 0; a < e.group->order(); ++a)
        for (ElementId b = 0; b < e.group->order(); ++b) {
          const RankCheck rc = cotangent_check(v, a, b);
          EXPECT_TRUE(rc.holds()) << name << " " << rc.lhs << " " << rc.rhs;
        }
  }
}

TEST(Obstruction, AssociativitySides) {
  const CatalogEntry& e = catalog_entry("Q8");
  const SectorCalculator calc(e.representation("Q"));
  for (ElementId a = 0; a < 8; ++a)
    for (ElementId b = 0; b < 8; ++b)
      for (ElementId c = 0; c < 8; ++c) {
        const auto [lhs, rhs] = associativity_sides(calc, a, b, c);
        EXPECT_EQ(lhs, rhs);
      }
}

TEST(Obstruction, KunnethRankAdditivity) {
  const Representation& q = catalog_entry("Q8").representation("Q");
  const Representation& l = catalog_entry("C3").representation();
  const KunnethChecker k(q, l);
  for (ElementId g1 = 0; g1 < 8; ++g1)
    for (ElementId h1 = 0; h1 < 3; ++h1)
      for (ElementId g2 = 0; g2 < 8; ++g2)
        for (ElementId h2 = 0; h2 < 3; ++h2) EXPECT_TRUE(k.check(g1, h1, g2, h2).holds());
  EXPECT_TRUE(kunneth_rank_check(q, l, {1, 1}, {2, 2}).holds());
}

TEST(Obstruction, NegativeHCarriesWitness) {
  // A class function that is not a character would make some h_i fail; the
  // integrality and sign checks must fire before anything is reported.
  const CatalogEntry& e = catalog_entry("Q8");
  const SectorCalculator calc(e.representation("Q"));
  std::vector<std::int64_t> hs;
  const SubgroupData& sd = calc.subgroup(1, 2);
  calc.scaled_h(sd, 1, 2, hs);
  for (auto h : hs) {
    EXPECT_GE(h, 0);
    EXPECT_EQ(h % calc.scale(), 0);
  }
}
