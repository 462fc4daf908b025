#include <gtest/gtest.h>

#include "agering/catalog.hpp"
#include "agering/crring.hpp"

using namespace agering;

TEST(Ring, TrivialGroupIsTheGroundField) {
  const CRRing r = build_cr_ring(catalog_entry("trivial").representation());
  EXPECT_EQ(r.rank(), 1u);
  EXPECT_EQ(r.class_degrees[0], Rational(0));
  EXPECT_EQ(r.constant(0, 0, 0), Rational(1));
  EXPECT_TRUE(check_ring(r).passed());
}

TEST(Ring, C2OnPlaneByMinusOne) {
  const CRRing r = build_cr_ring(catalog_entry("C2-SL").representation());
  EXPECT_EQ(r.class_degrees, (std::vector<Rational>{Rational(0), Rational(2)}));
  EXPECT_EQ(ring_product(r, class_sum(r, 1), class_sum(r, 1)), (std::vector<Rational>{Rational(0), Rational(0)}));
  // all four pairs by direct age arithmetic
  for (ElementId a = 0; a < 2; ++a)
    for (ElementId b = 0; b < 2; ++b) {
      const bool survives = !(a == 1 && b == 1);
      EXPECT_EQ(r.element_product(a, b) != kZeroProduct, survives);
    }
}

TEST(Ring, C3OnPlaneSL) {
  const CRRing r = build_cr_ring(catalog_entry("C3-SL").representation());
  EXPECT_EQ(r.class_degrees, (std::vector<Rational>{Rational(0), Rational(2), Rational(2)}));
  for (std::size_t a = 1; a < 3; ++a)
    for (std::size_t b = 1; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) EXPECT_TRUE(r.constant(a, b, c).is_zero());
  const auto counts = r.degree_counts();
  EXPECT_EQ(counts.at(Rational(0)), 1u);
  EXPECT_EQ(counts.count(Rational(1)), 0u);
  EXPECT_EQ(counts.at(Rational(2)), 2u);
}

TEST(Ring, C4OnLine) {
  const CRRing r = build_cr_ring(catalog_entry("C4").representation());
  // classes are s^0..s^3 in BFS order
  EXPECT_EQ(ring_product(r, class_sum(r, 1), class_sum(r, 2)), class_sum(r, 3));
  EXPECT_EQ(ring_product(r, class_sum(r, 3), class_sum(r, 3)), std::vector<Rational>(4));
  for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(ring_product(r, class_sum(r, 0), class_sum(r, c)), class_sum(r, c));
  try {
    ring_product(r, class_sum(r, 1), std::vector<Rational>(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BasisMismatch);
  }
}

TEST(Ring, CyclicProductTableFromAgeArithmetic) {
  for (std::uint32_t n = 2; n <= 12; ++n) {
    const GroupPtr g = cyclic_group(n);
    const CRRing r = build_cr_ring(linear_representation(g, {Cyclotomic::root_of_unity(n)}, "V"));
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        const bool additive = a + b < n;  // k1/n + k2/n = ((k1+k2) mod n)/n
        EXPECT_EQ(r.element_product(a, b), additive ? static_cast<std::int64_t>(a + b) : kZeroProduct);
      }
    EXPECT_TRUE(check_ring(r).passed()) << n;
  }
}

TEST(Ring, QuaternionExhaustive) {
  const RingReport rep = check_ring(build_cr_ring(catalog_entry("Q8").representation("Q")));
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.triples_checked, 512u);
  EXPECT_FALSE(rep.sampled);
}

TEST(Ring, SampledAboveCap) {
  const RingReport rep = check_ring(build_cr_ring(catalog_entry("A4").representation()), 100, 50, 7);
  EXPECT_TRUE(rep.sampled);
  EXPECT_EQ(rep.triples_checked, 50u);
  EXPECT_TRUE(rep.passed());
}

TEST(Ring, SpecialLinear) {
  EXPECT_TRUE(is_special_linear(catalog_entry("C2-SL").representation()));
  EXPECT_TRUE(is_special_linear(catalog_entry("Q8").representation("Q")));
  EXPECT_FALSE(is_special_linear(catalog_entry("C4").representation()));
}

TEST(Ring, KunnethComparison) {
  const auto rep = kunneth_ring_compare(catalog_entry("C2-SL").representation(),
                                        catalog_entry("C3-SL").representation());
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.product_classes, 6u);
  EXPECT_EQ(rep.degrees, (std::vector<Rational>{Rational(0), Rational(2), Rational(2), Rational(2),
                                                Rational(4), Rational(4)}));
  const Representation& c3 = catalog_entry("C3-SL").representation();
  const auto sq = kunneth_ring_compare(c3, c3);
  EXPECT_TRUE(sq.passed);
  EXPECT_EQ(sq.product_classes, 9u);
  const Representation& t = catalog_entry("trivial").representation();
  EXPECT_TRUE(kunneth_ring_compare(t, t).passed);
  try {
    kunneth_ring_compare(catalog_entry("C4").representation(), c3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSL);
  }
}
