#include <gtest/gtest.h>

#include "generators.hpp"
#include "s5/oracle.hpp"
#include "s5/parser.hpp"

using namespace s5;

namespace {

Formula a(const char* name) { return Formula::atom(name); }

}  // namespace

TEST(ParserTest, ExampleOneFormula) {
  Formula f = parse("p & box(p | q) & (dia(p & q) | dia(~p & ~q))");
  Formula expected = conj({a("p"), box(disj({a("p"), a("q")})),
                           disj({dia(conj({a("p"), a("q")})), dia(conj({neg(a("p")), neg(a("q"))}))})});
  EXPECT_EQ(f, expected);
}

TEST(ParserTest, NoRewritingAtParseTime) {
  EXPECT_EQ(parse("~~p"), neg(neg(a("p"))));
  EXPECT_EQ(parse("p -> q"), implies(a("p"), a("q")));
  EXPECT_EQ(desugar(parse("p -> q")), disj({neg(a("p")), a("q")}));
}

TEST(ParserTest, EquivalenceDesugarsToTwoImplications) {
  Formula d = desugar(parse("p <-> q"));
  EXPECT_EQ(d, conj({disj({neg(a("p")), a("q")}), disj({neg(a("q")), a("p")})}));
}

TEST(ParserTest, Precedence) {
  EXPECT_EQ(parse("p | q & r"), disj({a("p"), conj({a("q"), a("r")})}));
  EXPECT_EQ(parse("~p & q"), conj({neg(a("p")), a("q")}));
  EXPECT_EQ(parse("box p & q"), conj({box(a("p")), a("q")}));
  EXPECT_EQ(parse("p -> q -> r"), implies(a("p"), implies(a("q"), a("r"))));
  EXPECT_EQ(parse("p -> q <-> r"), iff(implies(a("p"), a("q")), a("r")));
  EXPECT_EQ(parse("[]p & <>q"), conj({box(a("p")), dia(a("q"))}));
}

TEST(ParserTest, ChainsFlatten) {
  Formula f = parse("p & q & (r & s)");
  ASSERT_EQ(f.op(), Op::conjunction);
  EXPECT_EQ(f.children().size(), 4u);
}

TEST(ParserTest, ErrorsCarryPosition) {
  try {
    parse("p &\n  (q | )");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 8u);
  }
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("p q"), ParseError);
  EXPECT_THROW(parse("p $ q"), ParseError);
  EXPECT_THROW(parse("true"), ParseError);
}

TEST(ParserTest, ReservedPrefixRejected) {
  EXPECT_THROW(parse("__n1 | p"), ParseError);
  ParseOptions relaxed;
  relaxed.allow_reserved = true;
  EXPECT_EQ(render(parse("__n1 | p", relaxed)), "__n1 | p");
  EXPECT_THROW(a("__n1"), std::invalid_argument);
}

TEST(ParserTest, Intohylo) {
  const char* text =
      "% comment\n"
      "begin\n"
      "[r1](p1 | p2) & <r1>(p1 & ~p2);\n"
      "<r1>(~p1) --> false\n"
      "end\n";
  Formula f = parse(text, SourceFormat::intohylo);
  ASSERT_EQ(f.op(), Op::conjunction);
  EXPECT_EQ(f.children().size(), 3u);
  EXPECT_EQ(f.child(0), box(disj({a("p1"), a("p2")})));
  EXPECT_EQ(f.child(2), implies(dia(neg(a("p1"))), falsum()));
}

TEST(ParserTest, IntohyloRejectsOtherModalities) {
  EXPECT_THROW(parse("begin [r2]p1 end", SourceFormat::intohylo), ParseError);
  EXPECT_THROW(parse("begin <3>p1 end", SourceFormat::intohylo), ParseError);
  EXPECT_NO_THROW(parse("begin [1]p1 <-> true end", SourceFormat::intohylo));
}

TEST(ParserTest, FormatFromExtension) {
  EXPECT_EQ(format_for_path("a/b.intohylo"), SourceFormat::intohylo);
  EXPECT_EQ(format_for_path("b.s5"), SourceFormat::native);
}

TEST(RenderTest, DirectPrinting) {
  EXPECT_EQ(render(box(disj({a("p"), a("q")}))), "box(p | q)");
  EXPECT_EQ(render(neg(dia(a("p")))), "~dia(p)");
  EXPECT_EQ(render(neg(conj({a("p"), a("q")}))), "~(p & q)");
  EXPECT_EQ(render(conj({disj({a("p"), a("q")}), a("r")})), "(p | q) & r");
}

TEST(RenderTest, RoundTripOnRandomFormulas) {
  s5::testing::FormulaShape shape;
  shape.max_depth = 5;
  shape.max_boxes = 6;
  shape.max_diamonds = 6;
  s5::testing::FormulaGenerator gen(7, shape);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.next();
    ASSERT_EQ(parse(render(f)), f) << render(f);
  }
}

TEST(RenderTest, DesugaringPreservesSatisfiability) {
  s5::testing::FormulaShape shape;
  shape.atoms = 3;
  shape.max_depth = 3;
  shape.max_boxes = 3;  // keeps the desugared formula inside the brute-force limits
  shape.max_diamonds = 3;
  s5::testing::FormulaGenerator gen(11, shape);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.next();
    EXPECT_EQ(brute_force(f).sat, brute_force(desugar(f)).sat) << render(f);
  }
}
