#include <gtest/gtest.h>

#include <sstream>

#include "kgw/f1/axioms.hpp"
#include "kgw/f1/census.hpp"

using namespace kgw;
using namespace kgw::f1;

namespace {

void expect_all_pass(const SuiteReport& r) {
  std::ostringstream os;
  os << r;
  EXPECT_TRUE(r.passed()) << os.str();
  for (const auto& c : r.checks) EXPECT_GT(c.cases, 0u) << c.name;
}

}  // namespace

TEST(Axioms, PassAtSizeTwo) { expect_all_pass(axiom_suite({.max_size = 2})); }

TEST(Axioms, PassAtSizeThreeWithLargerProbes) {
  expect_all_pass(axiom_suite({.max_size = 3, .probe_bound = 3}));
}

TEST(Axioms, WorkerCountDoesNotChangeReport) {
  const auto a = axiom_suite({.max_size = 3, .jobs = 1});
  const auto b = axiom_suite({.max_size = 3, .jobs = 3});
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Axioms, CorruptedDeflationsAreCaught) {
  ExactStructure bad{"all-deflations", [](const Morphism& f) { return is_inflation(f); },
                     [](const Morphism&) { return true; }};
  const auto r = axiom_suite({.max_size = 2, .structure = bad});
  EXPECT_FALSE(r.passed());
  const auto* iii = r.find("(iii) cartesian iff cocartesian");
  const auto* iv = r.find("(iv) W >-> X <<- V completes to a bicartesian square");
  ASSERT_NE(iii, nullptr);
  ASSERT_NE(iv, nullptr);
  EXPECT_TRUE(!iii->passed || !iv->passed);
  const auto& failing = !iii->passed ? *iii : *iv;
  EXPECT_FALSE(failing.witness.empty());
}

TEST(Axioms, CorruptedInflationsAreCaught) {
  ExactStructure bad{"all-inflations", [](const Morphism&) { return true; },
                     [](const Morphism& f) { return is_deflation(f); }};
  EXPECT_FALSE(axiom_suite({.max_size = 2, .structure = bad}).passed());
}

TEST(Census, SplittingCensusPasses) { expect_all_pass(splitting_census(4)); }
