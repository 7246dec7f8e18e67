#include <gtest/gtest.h>

#include "generators.hpp"
#include "s5/oracle.hpp"
#include "s5/parser.hpp"

using namespace s5;

TEST(OracleTest, KnownVerdicts) {
  EXPECT_TRUE(brute_force(parse("p & box(p | q) & (dia(p & q) | dia(~p & ~q))")).sat);
  EXPECT_FALSE(brute_force(parse("box(~p | ~q) & dia(p & q & s)")).sat);
  EXPECT_FALSE(brute_force(parse("box(p) & dia(~p)")).sat);
  EXPECT_TRUE(brute_force(parse("box(p | q) & dia(p) & dia(~p)")).sat);
  EXPECT_FALSE(brute_force(parse("p & ~p")).sat);
  // S5 validities: their negations are unsatisfiable.
  EXPECT_FALSE(brute_force(parse("~(box(p) -> p)")).sat);
  EXPECT_FALSE(brute_force(parse("~(dia(p) -> box(dia(p)))")).sat);
  EXPECT_FALSE(brute_force(parse("~(box(p -> q) -> (box(p) -> box(q)))")).sat);
}

TEST(OracleTest, ModelsAreWitnesses) {
  Formula f = parse("dia(p & ~q) & dia(~p & q) & dia(p & q) & ~p & ~q");
  OracleVerdict v = brute_force(f);
  ASSERT_TRUE(v.sat);
  ASSERT_TRUE(v.model.has_value());
  EXPECT_EQ(v.model->size(), 4u);
  EXPECT_TRUE(verify(f, *v.model));
  OracleVerdict w = valuation_search(f);
  ASSERT_TRUE(w.sat);
  EXPECT_TRUE(verify(f, *w.model));
}

TEST(OracleTest, WorldBoundCountsDiamondsByPolarity) {
  EXPECT_EQ(world_bound(parse("p")), 1u);
  EXPECT_EQ(world_bound(parse("dia(p) & ~box(q)")), 3u);
  EXPECT_EQ(world_bound(parse("~dia(p) | box(q)")), 1u);
  EXPECT_EQ(world_bound(parse("box(p) -> q")), 2u);
  EXPECT_EQ(world_bound(parse("box(p) <-> dia(q)")), 3u);
}

TEST(OracleTest, WorldLimitIsRespected) {
  Formula f = parse("dia(p) & dia(~p)");
  EXPECT_FALSE(brute_force(f, 1).sat);
  OracleVerdict v = brute_force(f, 2);
  EXPECT_TRUE(v.sat);
  EXPECT_EQ(v.explored_bound, 2u);
}

TEST(OracleTest, Limits) {
  EXPECT_THROW(brute_force(parse("a & b & c & d & e & f & g")), OracleLimitError);
  EXPECT_THROW(brute_force(parse("box(box(box(box(box(box(box(p)))))))")), OracleLimitError);
  OracleLimits wide{7, 7};
  EXPECT_NO_THROW(brute_force(parse("a & b & c & d & e & f & g"), std::nullopt, wide));
  EXPECT_THROW(valuation_search(parse("a & b & c & d & e & f & g"), {3, 3}), OracleLimitError);
}

TEST(OracleTest, SearchAgreesWithEnumeration) {
  s5::testing::FormulaShape shape;
  shape.atoms = 4;
  shape.max_depth = 4;
  shape.max_boxes = 3;
  shape.max_diamonds = 3;
  shape.max_nodes = 0;
  s5::testing::FormulaGenerator gen(31, shape);
  int sat = 0;
  int tested = 0;
  for (int i = 0; i < 400; ++i) {
    Formula f = gen.next();
    if (modal_count(f) > 6) continue;
    ++tested;
    OracleVerdict a = brute_force(f);
    OracleVerdict b = valuation_search(f);
    ASSERT_EQ(a.sat, b.sat) << render(f);
    sat += a.sat ? 1 : 0;
  }
  EXPECT_GT(tested, 200);
  EXPECT_GT(sat, 0);
  EXPECT_LT(sat, tested);
}

TEST(OracleTest, DecideHandlesLargerInputs) {
  Formula f = parse(
      "box(a | b | c) & box(~a | d) & box(~b | e) & dia(~c & ~d) & dia(~c & ~e) & "
      "dia(a & b) & dia(f & g) & box(~f | h) & dia(~h) & (i | j | k)");
  OracleVerdict v = decide(f);
  EXPECT_TRUE(v.sat);
  EXPECT_TRUE(verify(f, *v.model));
  EXPECT_FALSE(decide(parse("box(~a | ~b) & box(a | c) & box(b | c) & dia(~c) & dia(d) & dia(e)")).sat);
}
