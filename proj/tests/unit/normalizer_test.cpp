#include <gtest/gtest.h>

#include "generators.hpp"
#include "s5/normalizer.hpp"
#include "s5/oracle.hpp"
#include "s5/parser.hpp"

using namespace s5;

namespace {

Formula a(const char* name) { return Formula::atom(name); }
Formula P(const char* text) { return parse(text); }

Formula fresh(const char* name) {
  ParseOptions relaxed;
  relaxed.allow_reserved = true;
  return parse(name, relaxed);
}

}  // namespace

TEST(NnfTest, DoubleNegation) { EXPECT_EQ(to_nnf(P("~~p")), a("p")); }

TEST(NnfTest, NegatedConjunctionWithDiamond) {
  EXPECT_EQ(to_nnf(P("~(p & dia(q))")), P("~p | box(~q)"));
}

TEST(NnfTest, NegatedBox) {
  Formula f = P("~box(p | q)");
  Formula g = to_nnf(f);
  EXPECT_EQ(g, P("dia(~p & ~q)"));
  EXPECT_EQ(brute_force(f).sat, brute_force(g).sat);
}

TEST(NnfTest, DesugarsFirst) { EXPECT_EQ(to_nnf(P("~(p -> q)")), P("p & ~q")); }

TEST(PushTest, ChainCollapse) {
  EXPECT_EQ(push_modalities(P("box(dia(p))")), P("dia(p)"));
  EXPECT_EQ(push_modalities(P("dia(dia(box(q)))")), P("box(q)"));
}

TEST(PushTest, Distribution) {
  EXPECT_EQ(push_modalities(P("box(p & q)")), P("box(p) & box(q)"));
  EXPECT_EQ(push_modalities(P("dia(p | q)")), P("dia(p) | dia(q)"));
}

TEST(PushTest, Lifting) {
  EXPECT_EQ(push_modalities(P("box(p | dia(q))")), P("box(p) | dia(q)"));
  EXPECT_EQ(push_modalities(P("dia(p & box(q))")), P("dia(p) & box(q)"));
}

TEST(NameTest, ConjunctionUnderDisjunction) {
  FreshGen gen;
  Formula out = name_nested(P("(a & b) | c"), gen);
  Formula n1 = fresh("__n1");
  EXPECT_EQ(out, conj({disj({n1, a("c")}), box(disj({neg(n1), a("a")})), box(disj({neg(n1), a("b")}))}));
  EXPECT_EQ(gen.count(), 1u);
}

TEST(NameTest, AlreadyNormalIsUnchanged) {
  FreshGen gen;
  Formula f = P("a & (b | c)");
  EXPECT_EQ(name_nested(f, gen), f);
  EXPECT_EQ(gen.count(), 0u);
}

TEST(NameTest, IdenticalSubformulasShareOneAtom) {
  FreshGen gen;
  Formula out = name_nested(P("((a & b) | c) & ((a & b) | d)"), gen);
  EXPECT_EQ(gen.count(), 1u);
  EXPECT_TRUE(is_s5nf(out));
}

TEST(NameTest, DiamondOverDisjunctionIsEquisatisfiable) {
  Formula f = P("dia((a | b) & c)");
  FreshGen gen;
  Formula g = normal_form_formula(f, gen);
  EXPECT_TRUE(is_s5nf(g));
  EXPECT_EQ(brute_force(f).sat, brute_force(g).sat);
  EXPECT_EQ(brute_force(P("dia((a | b) & c) & box(~a) & box(~b)")).sat, false);
  EXPECT_EQ(decide(normalize(P("dia((a | b) & c) & box(~a) & box(~b)")).to_formula()).sat, false);
}

TEST(FreshGenTest, NamesAreReservedAndDistinct) {
  FreshGen gen;
  Atom x = gen.next();
  Atom y = gen.next();
  EXPECT_NE(x.name, y.name);
  EXPECT_TRUE(x.is_fresh());
  EXPECT_TRUE(is_reserved_name(x.name));
  EXPECT_EQ(y.generation, 2u);
}

TEST(S5nfTest, Predicate) {
  EXPECT_TRUE(is_s5nf(P("p & box(p | q) & (dia(p & q) | dia(~p & ~q))")));
  EXPECT_FALSE(is_s5nf(P("box(dia(p))")));
  EXPECT_FALSE(is_s5nf(P("~(p & q)")));
  EXPECT_TRUE(is_s5nf(P("box(p)")));
  EXPECT_TRUE(is_s5nf(P("dia(~p)")));
  EXPECT_FALSE(is_s5nf(P("box(p & q)")));
}

TEST(S5nfTest, ExampleOneStructure) {
  S5NF nf = normalize(P("p & box(p | q) & (dia(p & q) | dia(~p & ~q))"));
  ASSERT_EQ(nf.clauses().size(), 3u);
  ASSERT_EQ(nf.box_count(), 1u);
  ASSERT_EQ(nf.diamond_count(), 2u);
  const AtomId p = *nf.find_atom("p");
  const AtomId q = *nf.find_atom("q");
  EXPECT_EQ(nf.box(1), make_lit_set({Lit(p, true), Lit(q, true)}));
  EXPECT_EQ(nf.diamond(2), make_lit_set({Lit(p, false), Lit(q, false)}));
  EXPECT_EQ(lits(nf, S5Literal::box(1)), make_lit_set({Lit(p, true), Lit(q, true)}));
  EXPECT_EQ(lits(nf, S5Literal::prop(Lit(p, false))), LitSet{Lit(p, false)});
  EXPECT_EQ(lits(nf, nf.clauses()[2]), make_lit_set({Lit(p, true), Lit(q, true), Lit(p, false), Lit(q, false)}));
  EXPECT_TRUE(is_s5nf(nf.to_formula()));
}

TEST(S5nfTest, LitsIsMonotoneUnderUnion) {
  S5NF nf = normalize(P("(p | box(q | ~r)) & (dia(s) | ~p)"));
  LitSet all;
  for (const auto& c : nf.clauses()) all = set_union(all, lits(nf, c));
  EXPECT_EQ(all, lits(nf));
}

TEST(S5nfTest, DegenerateBodies) {
  // A box over complementary literals is valid: its clause disappears.
  S5NF taut = S5NF::from_formula(P("box(p | ~p) | q"));
  EXPECT_TRUE(taut.trivially_true());
  // A diamond over complementary literals is removed from its clause.
  S5NF pruned = S5NF::from_formula(P("dia(p & ~p) | q"));
  ASSERT_EQ(pruned.clauses().size(), 1u);
  EXPECT_EQ(pruned.diamond_count(), 0u);
  S5NF empty = S5NF::from_formula(P("dia(p & ~p)"));
  EXPECT_TRUE(empty.trivially_false());
  EXPECT_THROW(S5NF::from_formula(P("box(dia(p))")), std::invalid_argument);
}

TEST(S5nfTest, IdenticalModalLiteralsShareIds) {
  S5NF nf = S5NF::from_formula(P("(box(p | q) | r) & (box(q | p) | s)"));
  EXPECT_EQ(nf.box_count(), 1u);
}

TEST(NormalizerTest, RenderedNormalFormIsEquisatisfiable) {
  s5::testing::FormulaShape shape;
  shape.atoms = 3;
  shape.max_depth = 4;
  s5::testing::FormulaGenerator gen(3, shape);
  ParseOptions relaxed;
  relaxed.allow_reserved = true;
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.next();
    S5NF nf = normalize(f);
    Formula g = parse(render(nf.to_formula()), relaxed);
    ASSERT_TRUE(is_s5nf(g)) << render(f);
    EXPECT_EQ(decide(f).sat, decide(g).sat) << render(f);
  }
}
