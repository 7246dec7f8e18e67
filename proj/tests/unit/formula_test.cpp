#include <gtest/gtest.h>

#include <algorithm>

#include "s5/formula.hpp"
#include "s5/s5nf.hpp"

using namespace s5;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }
Formula r() { return Formula::atom("r"); }

}  // namespace

TEST(FormulaTest, ConjunctionFlattensAndCollapses) {
  Formula f = conj({p(), conj({q(), r()})});
  ASSERT_EQ(f.op(), Op::conjunction);
  EXPECT_EQ(f.children().size(), 3u);
  EXPECT_EQ(conj({p()}), p());
  EXPECT_EQ(disj({disj({p(), q()}), r()}).children().size(), 3u);
}

TEST(FormulaTest, EmptyListIsRejected) {
  EXPECT_THROW(conj(std::vector<Formula>{}), std::invalid_argument);
  EXPECT_THROW(disj(std::vector<Formula>{}), std::invalid_argument);
}

TEST(FormulaTest, MixedConnectivesDoNotFlatten) {
  Formula f = conj({p(), disj({q(), r()})});
  EXPECT_EQ(f.children().size(), 2u);
  EXPECT_EQ(f.child(1).op(), Op::disjunction);
}

TEST(FormulaTest, StructuralEqualityAndOrdering) {
  EXPECT_EQ(box(p()), box(p()));
  EXPECT_NE(box(p()), dia(p()));
  EXPECT_NE(conj({p(), q()}), conj({q(), p()}));
  EXPECT_TRUE(p() < q() || q() < p());
}

TEST(FormulaTest, Literals) {
  EXPECT_TRUE(p().is_literal());
  EXPECT_TRUE(neg(p()).is_literal());
  EXPECT_FALSE(neg(neg(p())).is_literal());
  EXPECT_FALSE(box(p()).is_literal());
  EXPECT_TRUE(dia(p()).is_modal());
}

TEST(FormulaTest, CountsAndAtoms) {
  Formula f = implies(box(p()), dia(conj({q(), box(r())})));
  EXPECT_EQ(modal_count(f), 3u);
  EXPECT_EQ(f.depth(), 5u);  // atoms have depth 1
  auto atoms = atoms_of(f);
  ASSERT_EQ(atoms.size(), 3u);
  EXPECT_EQ(atoms.begin()->name, "p");
  EXPECT_EQ(p().node_count(), 1u);
  EXPECT_EQ(iff(p(), q()).node_count(), 3u);
}

TEST(FormulaTest, Identifiers) {
  EXPECT_TRUE(is_identifier("p1"));
  EXPECT_TRUE(is_identifier("x_y"));
  EXPECT_FALSE(is_identifier(""));
  EXPECT_FALSE(is_identifier("1p"));
  EXPECT_TRUE(is_reserved_name("__n1"));
  EXPECT_FALSE(is_reserved_name("n1"));
}

TEST(FormulaTest, TruthConstantsUseReservedAtom) {
  Atom t = truth_atom();
  EXPECT_TRUE(is_reserved_name(t.name));
  EXPECT_TRUE(t.is_fresh());
  EXPECT_EQ(atoms_of(verum()).size(), 1u);
  EXPECT_EQ(verum().op(), Op::disjunction);
  EXPECT_EQ(falsum().op(), Op::conjunction);
}

TEST(LitTest, ComplementIsInvolution) {
  Lit l(3, true);
  EXPECT_EQ(~~l, l);
  EXPECT_EQ((~l).atom(), 3u);
  EXPECT_FALSE((~l).positive());
  EXPECT_EQ(complement(complement(Lit(0, false))), Lit(0, false));
}

TEST(LitTest, SetOperations) {
  LitSet a = make_lit_set({Lit(1, true), Lit(0, false), Lit(1, true)});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  LitSet b = make_lit_set({Lit(0, false), Lit(1, true), Lit(2, true)});
  EXPECT_TRUE(is_subset(a, b));
  EXPECT_FALSE(is_subset(b, a));
  EXPECT_TRUE(intersects(a, b));
  EXPECT_TRUE(contains(b, Lit(2, true)));
  EXPECT_FALSE(contains(b, Lit(2, false)));
  EXPECT_FALSE(has_complementary_pair(b));
  EXPECT_TRUE(has_complementary_pair(set_union(b, {Lit(2, false)})));
  LitSet c = complement(a);
  EXPECT_TRUE(contains(c, Lit(0, true)));
  EXPECT_TRUE(contains(c, Lit(1, false)));
  EXPECT_FALSE(intersects(a, c));
}
