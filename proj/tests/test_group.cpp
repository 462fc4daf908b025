#include <gtest/gtest.h>

#include "agering/catalog.hpp"
#include "agering/group.hpp"
#include "oracles.hpp"

using namespace agering;

namespace {

GroupPtr s3() {
  return FiniteGroup::from_permutations(
      3, {permutation_from_cycles(3, {{1, 2, 3}}), permutation_from_cycles(3, {{1, 2}})}, {"a", "b"});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Group, OrdersAndClassCounts) {
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> expected = {
      {"trivial", 1, 1}, {"C2", 2, 2}, {"C3", 3, 3},  {"C4", 4, 4},   {"C6", 6, 6},
      {"C2xC2", 4, 4},   {"S3", 6, 3}, {"D4", 8, 5},  {"Q8", 8, 5},   {"A4", 12, 4},
      {"C2-SL", 2, 2},   {"C3-SL", 3, 3}, {"Q8xC3", 24, 15}};
  for (const auto& [name, order, classes] : expected) {
    const FiniteGroup& g = *catalog_entry(name).group;
    EXPECT_EQ(g.order(), order) << name;
    EXPECT_EQ(g.classes().size(), classes) << name;
    EXPECT_EQ(oracle::brute_class_count(g), classes) << name;
    EXPECT_TRUE(check_group_axioms(g)) << name;
  }
}

TEST(Group, IdentityFirstAndBfsWords) {
  const GroupPtr g = s3();
  EXPECT_EQ(g->word(0), "1");
  EXPECT_EQ(g->word(1), "a");
  EXPECT_EQ(g->word(2), "b");
  for (ElementId x = 0; x < g->order(); ++x) EXPECT_EQ(element_from_word(*g, g->word(x)), x);
  EXPECT_EQ(element_from_word(*g, "a^-1"), g->inverse(1));
  EXPECT_EQ(element_from_word(*g, "a^3"), 0u);
}

TEST(Group, CompositionConvention) {
  const GroupPtr g = s3();
  const auto& perms = g->permutations();
  for (ElementId x = 0; x < g->order(); ++x)
    for (ElementId y = 0; y < g->order(); ++y) {
      const Permutation& p = perms[x];
      const Permutation& q = perms[y];
      Permutation pq(3);
      for (int i = 0; i < 3; ++i) pq[i] = q[p[i]];
      EXPECT_EQ(perms[g->mul(x, y)], pq);
    }
}

TEST(Group, ElementOrdersAndExponent) {
  const FiniteGroup& q8 = *catalog_entry("Q8").group;
  std::map<std::uint32_t, int> counts;
  for (ElementId x = 0; x < q8.order(); ++x) ++counts[q8.element_order(x)];
  EXPECT_EQ(counts[1], 1);
  EXPECT_EQ(counts[2], 1);
  EXPECT_EQ(counts[4], 6);
  EXPECT_EQ(q8.exponent(), 4u);
  EXPECT_FALSE(q8.is_abelian());
  EXPECT_EQ(catalog_entry("Q8xC3").group->exponent(), 12u);
}

TEST(Group, TupleClassesMatchBurnside) {
  const GroupPtr g = s3();
  EXPECT_EQ(tuple_classes(*g, 2).size(), 11u);
  for (const auto& name : {"C4", "C2xC2", "S3", "D4", "Q8", "A4"}) {
    const FiniteGroup& h = *catalog_entry(name).group;
    for (std::size_t k : {1u, 2u, 3u}) {
      const auto tcs = tuple_classes(h, k);
      EXPECT_EQ(tcs.size(), oracle::burnside_tuple_orbits(h, k)) << name << " k=" << k;
      std::size_t covered = 0;
      for (const auto& tc : tcs) {
        covered += tc.members.size();
        EXPECT_EQ(tc.members.size() * tc.centralizer.size(), h.order());
      }
      std::size_t total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= h.order();
      EXPECT_EQ(covered, total);
    }
  }
}

TEST(Group, TupleCap) {
  const FiniteGroup& g = *catalog_entry("Q8xC3").group;
  EXPECT_EQ(kind_of([&] { tuple_classes(g, 5); }), ErrorKind::CapExceeded);
  EXPECT_EQ(kind_of([&] { tuple_classes(g, 0); }), ErrorKind::InvalidInput);
}

TEST(Group, SubgroupGenerated) {
  const GroupPtr q8 = catalog_entry("Q8").group;
  const ElementId g = q8->generators()[0], h = q8->generators()[1];
  EXPECT_EQ(subgroup_generated(q8, {g}).order(), 4u);
  EXPECT_EQ(subgroup_generated(q8, {g, h}).order(), 8u);
  EXPECT_EQ(subgroup_generated(q8, {0, 0}).order(), 1u);
  EXPECT_TRUE(subgroup_generated(q8, {g}).is_abelian());
  const GroupPtr local = FiniteGroup::from_subgroup(q8, subgroup_generated(q8, {g}).elements);
  EXPECT_EQ(local->order(), 4u);
  EXPECT_TRUE(local->is_abelian());
}

TEST(Group, TableConstruction) {
  // Z/3 with labels permuted: 2 is the identity.
  const std::vector<std::vector<std::uint32_t>> table = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  const GroupPtr g = FiniteGroup::from_table(table, {0}, {"t"});
  EXPECT_EQ(g->order(), 3u);
  EXPECT_EQ(g->element_order(g->generators()[0]), 3u);

  EXPECT_EQ(kind_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); }), ErrorKind::NotAGroup);
  EXPECT_EQ(kind_of([] { FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {}, {}, 2); }),
            ErrorKind::CapExceeded);
  // Non-associative Latin square with identity 0.
  const std::vector<std::vector<std::uint32_t>> latin = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_EQ(kind_of([&] { FiniteGroup::from_table(latin); }), ErrorKind::NotAGroup);
}

TEST(Group, MatrixOfInfiniteOrder) {
  const CycMatrix shear = CycMatrix::from_rows({{Cyclotomic(1), Cyclotomic(1)}, {Cyclotomic(0), Cyclotomic(1)}});
  EXPECT_EQ(kind_of([&] { FiniteGroup::from_matrices({shear}, {}, 50); }), ErrorKind::InfiniteOrder);
}

TEST(Group, DirectProduct) {
  const GroupPtr a = catalog_entry("C2-SL").group;
  const GroupPtr b = catalog_entry("C3-SL").group;
  const GroupPtr p = FiniteGroup::direct_product(a, b);
  EXPECT_EQ(p->order(), 6u);
  EXPECT_TRUE(p->is_abelian());
  EXPECT_EQ(p->generator_names(), (std::vector<std::string>{"s", "s'"}));
  for (ElementId x = 0; x < 2; ++x)
    for (ElementId y = 0; y < 3; ++y) {
      const ElementId xy = p->product_element(x, y);
      EXPECT_EQ(p->components()[xy], std::make_pair(x, y));
    }
}

TEST(Group, ConjugacyClassesOrderedByMinimalMember) {
  for (const auto& e : catalog()) {
    const auto& cls = e.group->classes();
    for (std::size_t c = 0; c < cls.size(); ++c) {
      EXPECT_EQ(cls[c].representative, cls[c].members.front());
      if (c > 0) EXPECT_LT(cls[c - 1].representative, cls[c].representative);
    }
  }
}
