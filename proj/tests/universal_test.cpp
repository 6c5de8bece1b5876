#include "compos/random.hpp"
#include "fixtures.hpp"
#include "gtest/gtest.h"

using namespace compos;
using namespace compos::test;

TEST(Universal, HuntingColimit) {
  Diagram d = hunting_diagram();
  EXPECT_TRUE(verify_universal_property(colimit_system(d), d));
}

TEST(Universal, SingleNode) {
  Diagram d;
  d.nodes.emplace("P", load("pilgrim.compos"));
  EXPECT_TRUE(verify_universal_property(colimit_system(d), d));
}

TEST(Universal, EnvironmentIsNotColimit) {
  // World is a cocone but has the extra variable w, so factorization is not
  // unique.
  auto doc = hunting_document();
  ColimitResult fake = colimit_system(doc.diagram);
  fake.cocone = doc.environments.at("World");
  EXPECT_FALSE(verify_universal_property(fake, doc.diagram));
}

TEST(Universal, UnderMergedRejected) {
  Diagram d = hunting_diagram();
  auto r = colimit_system(d);
  for (Sort s : kSorts) {
    auto bad = under_merged(r, d, s);
    ASSERT_TRUE(bad);
    EXPECT_FALSE(check_cocone(d, bad->cocone).ok());
    EXPECT_FALSE(verify_universal_property(*bad, d));
  }
}

TEST(Universal, OverMergedRejected) {
  Diagram d = hunting_diagram();
  auto r = colimit_system(d);
  for (Sort s : kSorts) {
    auto bad = over_merged(r, d, s);
    ASSERT_TRUE(bad);
    EXPECT_FALSE(verify_universal_property(*bad, d)) << sort_keyword(s);
  }
}

TEST(Universal, BoundExceeded) {
  Diagram d;
  d.nodes.emplace("H", load("hunting.compos"));
  try {
    verify_universal_property(colimit_system(d), d, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
  }
}

TEST(UniversalProperties, RandomDiagrams) {
  RandomModels gen(41);
  for (int i = 0; i < 40; ++i) {
    Diagram d = gen.diagram(3);
    auto r = colimit_system(d);
    EXPECT_TRUE(verify_universal_property(r, d)) << describe(d);
    for (Sort s : kSorts) {
      if (auto bad = under_merged(r, d, s)) {
        EXPECT_FALSE(verify_universal_property(*bad, d)) << describe(d);
      }
      if (auto bad = over_merged(r, d, s)) {
        EXPECT_FALSE(verify_universal_property(*bad, d)) << describe(d);
      }
    }
  }
}
