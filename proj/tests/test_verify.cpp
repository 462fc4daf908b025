#include <gtest/gtest.h>

#include "agering/catalog.hpp"
#include "agering/verify.hpp"

using namespace agering;

TEST(Verify, TrivialGroupOneInstanceEach) {
  const VerificationReport rep = run_suite(catalog_entry("trivial").representation());
  EXPECT_TRUE(rep.passed());
  for (const auto& c : rep.checks) EXPECT_EQ(c.instances, 1u) << c.name;
  EXPECT_EQ(rep.checks.size(), all_check_names().size());
}

TEST(Verify, QuaternionAllChecks) {
  const CatalogEntry& q8 = catalog_entry("Q8");
  SuiteOptions o;
  o.names = q8.irreps;
  const VerificationReport rep = run_suite(q8.representation("Q"), o);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.find("inequality")->instances, 64u);
  EXPECT_EQ(rep.find("associativity_identity")->instances, 512u);
  EXPECT_EQ(rep.find("determinant")->instances, 8u);
}

TEST(Verify, C4ChenHuAndTightCatalog) {
  SuiteOptions o;
  o.checks = {"chen_hu", "inequality"};
  const VerificationReport rep = run_suite(catalog_entry("C4").representation(), o);
  ASSERT_EQ(rep.checks.size(), 2u);
  EXPECT_EQ(rep.find("chen_hu")->instances, 16u);
  EXPECT_TRUE(rep.find("chen_hu")->failures.empty());
  const auto has = [&](ElementId a, ElementId b) {
    for (const auto& w : rep.tight)
      if (w.g1 == a && w.g2 == b) return true;
    return false;
  };
  EXPECT_TRUE(has(1, 1));
  EXPECT_TRUE(has(1, 3));
  EXPECT_FALSE(has(3, 3));
}

TEST(Verify, WholeCatalogHasNoFailures) {
  for (const auto& e : catalog()) {
    for (const auto& v : e.representations) {
      SuiteOptions o;
      o.names = e.irreps;
      o.triple_cap = 20000;
      const VerificationReport rep = run_suite(v, o);
      for (const auto& c : rep.checks) EXPECT_TRUE(c.failures.empty()) << e.name << " " << v.label() << " " << c.name;
    }
  }
}

TEST(Verify, SamplingIsSeededAndReported) {
  SuiteOptions o;
  o.pair_cap = 10;
  o.triple_cap = 10;
  o.samples = 40;
  o.seed = 11;
  o.checks = {"inequality", "associativity_identity"};
  const Representation& v = catalog_entry("S3").representation("reg");
  const VerificationReport a = run_suite(v, o);
  const VerificationReport b = run_suite(v, o);
  EXPECT_TRUE(a.find("inequality")->sampled);
  EXPECT_EQ(a.find("inequality")->instances, 40u);
  EXPECT_EQ(a.find("associativity_identity")->instances, 40u);
  ASSERT_EQ(a.tight.size(), b.tight.size());
  for (std::size_t i = 0; i < a.tight.size(); ++i) {
    EXPECT_EQ(a.tight[i].g1, b.tight[i].g1);
    EXPECT_EQ(a.tight[i].g2, b.tight[i].g2);
    EXPECT_EQ(a.tight[i].irrep, b.tight[i].irrep);
  }
}

TEST(Verify, ThreadedScanMatchesSerial) {
  const Representation& v = catalog_entry("Q8xC3").representation();
  SectorCalculator calc(v);
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId a = 0; a < 24; ++a)
    for (ElementId b = 0; b < 24; ++b) pairs.emplace_back(a, b);
  const auto serial = scan_inequality(calc, pairs, 1);
  const auto parallel = scan_inequality(calc, pairs, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].g1, parallel[i].g1);
    EXPECT_EQ(serial[i].g2, parallel[i].g2);
    EXPECT_EQ(serial[i].irrep, parallel[i].irrep);
  }
}

TEST(Verify, IdentityPairAlwaysTight) {
  for (const auto& e : catalog()) {
    const auto tight = scan_inequality(e.representation());
    bool found = false;
    for (const auto& w : tight) found = found || (w.g1 == 0 && w.g2 == 0);
    EXPECT_TRUE(found) << e.name;
  }
}
