#include <random>

#include "compos/random.hpp"
#include "fixtures.hpp"
#include "gtest/gtest.h"

using namespace compos;
using namespace compos::test;

TEST(Symbols, ConstantHasNone) { EXPECT_TRUE(symbols_of(Formula::truth()).empty()); }

TEST(Symbols, CollectsEveryOccurrence) {
  EXPECT_EQ(symbols_of(conj(sym("h"), neg(sym("l")))), (NameSet{"h", "l"}));
  auto f = Formula::implication(neg(conj(sym("l"), sym("a"))), sym("h"));
  EXPECT_EQ(symbols_of(f), (NameSet{"l", "a", "h"}));
}

TEST(Translate, IdentityLeavesFormula) {
  auto f = conj(sym("h"), neg(sym("l")));
  EXPECT_EQ(translate_formula({{"h", "h"}, {"l", "l"}}, f), f);
}

TEST(Translate, RenamesSingleSymbol) {
  EXPECT_EQ(translate_formula({{"l", "loaded"}}, neg(sym("l"))),
            neg(sym("loaded")));
}

TEST(Translate, NonInjectiveMapCollapsesSymbols) {
  auto f = Formula::disjunction(sym("p"), sym("q"));
  EXPECT_EQ(translate_formula({{"p", "q"}, {"q", "q"}}, f),
            Formula::disjunction(sym("q"), sym("q")));
}

TEST(Translate, UnmappedSymbolThrows) {
  try {
    translate_formula({{"p", "q"}}, conj(sym("p"), sym("r")));
    FAIL() << "expected UnmappedSymbol";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnmappedSymbol);
  }
}

TEST(TranslateSet, Identity) {
  SentenceSet s{sym("h"), neg(sym("l"))};
  EXPECT_EQ(translate_set({{"h", "h"}, {"l", "l"}}, s), s);
}

TEST(TranslateSet, DeduplicatesAfterCollapse) {
  SentenceSet s{sym("p"), sym("q")};
  auto t = translate_set({{"p", "r"}, {"q", "r"}}, s);
  EXPECT_EQ(t, SentenceSet{sym("r")});
  EXPECT_EQ(t.size(), 1u);
}

TEST(TranslateSet, ConjunctionsAreSplit) {
  SentenceSet s{conj(sym("h"), neg(sym("l")))};
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(translate_set({{"h", "h"}, {"l", "l"}}, s),
            (SentenceSet{sym("h"), neg(sym("l"))}));
}

TEST(SentenceSetCanon, TrueIsDropped) {
  SentenceSet s{Formula::truth(), conj(Formula::truth(), sym("x"))};
  EXPECT_EQ(s, SentenceSet{sym("x")});
  EXPECT_EQ(to_string(SentenceSet{}), "True");
}

TEST(SentenceSetCanon, NestedConjunctionUnderNegationStays) {
  SentenceSet s{neg(conj(sym("a"), sym("b")))};
  EXPECT_EQ(s.size(), 1u);
}

TEST(Eval, Examples) {
  EXPECT_TRUE(eval(Formula::truth(), State{}));
  EXPECT_TRUE(eval(conj(sym("h"), neg(sym("l"))), State{{"h", true}, {"l", false}}));
  EXPECT_FALSE(eval(conj(sym("l"), sym("a")),
                    State{{"l", true}, {"a", false}, {"h", true}}));
}

TEST(Eval, ImplicationAndDisjunction) {
  State s{{"p", false}, {"q", true}};
  EXPECT_TRUE(eval(Formula::implication(sym("p"), sym("q")), s));
  EXPECT_TRUE(eval(Formula::implication(sym("p"), Formula::falsity()), s));
  EXPECT_FALSE(eval(Formula::implication(sym("q"), sym("p")), s));
  EXPECT_TRUE(eval(Formula::disjunction(sym("p"), sym("q")), s));
}

TEST(Eval, UnassignedSymbolThrows) {
  try {
    eval(sym("z"), State{{"a", true}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnassignedSymbol);
  }
}

TEST(Render, MinimalParentheses) {
  auto a = sym("a"), b = sym("b"), c = sym("c");
  EXPECT_EQ(to_string(conj(a, neg(b))), "a \\and \\not b");
  EXPECT_EQ(to_string(neg(conj(a, b))), "\\not (a \\and b)");
  EXPECT_EQ(to_string(Formula::disjunction(conj(a, b), c)), "a \\and b \\or c");
  EXPECT_EQ(to_string(conj(Formula::disjunction(a, b), c)), "(a \\or b) \\and c");
  EXPECT_EQ(to_string(Formula::implication(a, Formula::implication(b, c))),
            "a \\implies b \\implies c");
  EXPECT_EQ(to_string(Formula::implication(Formula::implication(a, b), c)),
            "(a \\implies b) \\implies c");
  EXPECT_EQ(to_string(conj(a, conj(b, c))), "a \\and (b \\and c)");
}

// ---------------------------------------------------------------------------
// Properties over random formulas and maps.

namespace {

const std::vector<Name> kVars{"p", "q", "r", "s"};

NameMap random_map(RandomModels& gen, const std::vector<Name>& to) {
  NameMap m;
  for (const auto& v : kVars) m[v] = gen.pick(to);
  return m;
}

State random_state(RandomModels& gen, const std::vector<Name>& vars) {
  State s;
  for (const auto& v : vars) s[v] = gen.chance(0.5);
  return s;
}

}  // namespace

TEST(LogicProperties, Functoriality) {
  RandomModels gen(7);
  for (int i = 0; i < 300; ++i) {
    auto f = gen.formula(kVars, 3);
    EXPECT_EQ(translate_formula(identity_map({kVars.begin(), kVars.end()}), f), f);
    auto m1 = random_map(gen, kVars);
    auto m2 = random_map(gen, kVars);
    EXPECT_EQ(translate_formula(m2, translate_formula(m1, f)),
              translate_formula(compose_maps(m1, m2), f));
  }
}

TEST(LogicProperties, TranslateSetIsMonotone) {
  RandomModels gen(8);
  for (int i = 0; i < 200; ++i) {
    auto small = gen.sentences(kVars, 3);
    auto large = small;
    large.insert_all(gen.sentences(kVars, 3));
    auto m = random_map(gen, {"x", "y", "z"});
    EXPECT_TRUE(translate_set(m, small).subset_of(translate_set(m, large)));
    EXPECT_LE(translate_set(m, large).size(), large.size());
  }
}

TEST(LogicProperties, CanonicalizationIsIdempotent) {
  RandomModels gen(9);
  for (int i = 0; i < 200; ++i) {
    SentenceSet s;
    for (int k = 0; k < 3; ++k) s.insert(gen.formula(kVars, 3));
    EXPECT_EQ(canonicalize(canonicalize(s)), canonicalize(s));
    EXPECT_EQ(canonicalize(s), s);
    for (const auto& f : s) {
      EXPECT_NE(f.kind(), Formula::Kind::And);
      EXPECT_NE(f.kind(), Formula::Kind::True);
    }
  }
}

TEST(LogicProperties, EvalRespectsTranslation) {
  RandomModels gen(10);
  const std::vector<Name> target{"x", "y", "z"};
  for (int i = 0; i < 300; ++i) {
    auto f = gen.formula(kVars, 3);
    auto m = random_map(gen, target);
    State st = random_state(gen, target);
    State pulled;
    for (const auto& v : kVars) pulled[v] = st.at(m.at(v));
    EXPECT_EQ(eval(translate_formula(m, f), st), eval(f, pulled));
  }
}

TEST(LogicProperties, SetEvaluationIsConjunctionOfMembers) {
  RandomModels gen(11);
  for (int i = 0; i < 200; ++i) {
    auto a = gen.formula(kVars, 2);
    auto b = gen.formula(kVars, 2);
    State st = random_state(gen, kVars);
    EXPECT_EQ(eval(SentenceSet{conj(a, b)}, st), eval(a, st) && eval(b, st));
  }
}
