#include <gtest/gtest.h>

#include "suites.hpp"

namespace {

constexpr std::size_t kInstances = 200;

void expect_clean(const suites::Outcome& o, std::size_t count) {
  EXPECT_EQ(o.instances, count) << o.name;
  EXPECT_EQ(o.failures, 0u) << o.name << ": " << o.first_failure;
}

TEST(Property, LowestOrderInequality) { expect_clean(suites::lowest_order_inequality(101, kInstances), kInstances); }

TEST(Property, TranslationInvariantEquality) {
  const auto o = suites::translation_invariant_equality(102, kInstances);
  expect_clean(o, kInstances);
  EXPECT_LT(o.vacuous, kInstances / 2);
}

TEST(Property, Concavity) { expect_clean(suites::concavity(103, kInstances), kInstances); }

TEST(Property, Evenness) { expect_clean(suites::evenness(104, kInstances), kInstances); }

TEST(Property, PatternProductRule) { expect_clean(suites::pattern_product_rule(105, kInstances), kInstances); }

TEST(Property, DerivedProductRule) { expect_clean(suites::derived_product_rule(106, kInstances), kInstances); }

TEST(Property, ThreeVariableMomentum) { expect_clean(suites::three_variable_momentum(107, 100), 100); }

} // namespace
