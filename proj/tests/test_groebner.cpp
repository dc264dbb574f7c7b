#include <gtest/gtest.h>

#include "discval/groebner.hpp"
#include "discval/parse.hpp"

using namespace discval;

namespace {
FqRing f7(7, 1);
FqRing f5(5, 1);

std::vector<MPoly<FqRing>> polys(const FqRing& k, int nvars, std::initializer_list<const char*> texts) {
  std::vector<MPoly<FqRing>> out;
  for (const char* t : texts) out.push_back(parse_poly(k, nvars, t));
  return out;
}
}  // namespace

TEST(Groebner, AlreadyReduced) {
  auto gb = groebner_basis(polys(f7, 2, {"x0", "x1"}));
  ASSERT_EQ(gb.gens.size(), 2u);
  EXPECT_TRUE(gb.reduced);
}

TEST(Groebner, SpecExample) {
  // {x0^2, x0 x1 - x1} has reduced basis {x1, x0^2}
  auto gb = groebner_basis(polys(f7, 2, {"x0^2", "x0*x1 - x1"}));
  ASSERT_EQ(gb.gens.size(), 2u);
  EXPECT_TRUE(gb.gens[0].eq(parse_poly(f7, 2, "x1")));
  EXPECT_TRUE(gb.gens[1].eq(parse_poly(f7, 2, "x0^2")));
}

TEST(Groebner, UnitIdeal) {
  auto gb = groebner_basis(polys(f7, 2, {"3"}));
  ASSERT_EQ(gb.gens.size(), 1u);
  EXPECT_EQ(gb.gens[0].degree(), 0);
}

TEST(Groebner, ReducedBasisProperties) {
  // defining properties, re-verified independently: every S-polynomial
  // reduces to zero, leading coefficients are 1, and no leading monomial
  // divides another
  Rng rng(101);
  for (int t = 0; t < 40; ++t) {
    int nvars = 2 + static_cast<int>(rng.below(2));
    std::vector<MPoly<FqRing>> gens;
    for (int i = 0; i < 3; ++i) {
      MPoly<FqRing> g(f5, nvars);
      for (const auto& m : monomials_of_degree(nvars, 1 + static_cast<int>(rng.below(3))))
        if (rng.below(3) == 0) g.add_term(m, f5.from_int(rng.range(0, 4)));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    for (MonomialOrder ord : {MonomialOrder::GrevLex, MonomialOrder::Lex}) {
      auto gb = groebner_basis(gens, ord);
      for (std::size_t i = 0; i < gb.gens.size(); ++i) {
        auto [lmi, lci] = gb.gens[i].leading_term(ord);
        EXPECT_TRUE(f5.eq(lci, f5.one()));
        for (std::size_t j = 0; j < gb.gens.size(); ++j) {
          if (i == j) continue;
          auto [lmj, lcj] = gb.gens[j].leading_term(ord);
          EXPECT_FALSE(monomial_divides(lmj, lmi));
          // S-polynomial reduces to zero
          Monomial l = monomial_lcm(lmi, lmj);
          auto s = gb.gens[i].mul_monomial(monomial_quot(l, lmi), f5.one())
                       .sub(gb.gens[j].mul_monomial(monomial_quot(l, lmj), f5.one()));
          EXPECT_TRUE(normal_form(s, gb.gens, ord).is_zero());
        }
      }
      // membership: every input generator reduces to zero
      for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb.gens, ord).is_zero());
    }
  }
}

TEST(Groebner, Deterministic) {
  auto gens = polys(f5, 3, {"x0^2 + x1*x2", "x1^2 - x0*x2", "x0*x1 + x2^2"});
  auto a = groebner_basis(gens);
  auto b = groebner_basis(gens);
  ASSERT_EQ(a.gens.size(), b.gens.size());
  for (std::size_t i = 0; i < a.gens.size(); ++i) EXPECT_TRUE(a.gens[i].eq(b.gens[i]));
}

TEST(Dimension, UnitIdealIsEmpty) {
  auto gb = groebner_basis(polys(f7, 3, {"1"}));
  EXPECT_EQ(ideal_dimension(gb, 3, true), -1);
  EXPECT_EQ(ideal_dimension(gb, 3, false), -1);
}

TEST(Dimension, DoubleHyperplane) {
  // singular subscheme of x0^2 (d=2, n=2) is the line x0 = 0
  auto gb = groebner_basis(polys(f7, 3, {"x0^2", "x0"}));
  EXPECT_EQ(ideal_dimension(gb, 3, true), 1);
}

TEST(Dimension, PointAndCurve) {
  // V(x0, x1) in P^2 is the point (0:0:1)
  auto point = groebner_basis(polys(f7, 3, {"x0", "x1"}));
  EXPECT_EQ(ideal_dimension(point, 3, true), 0);
  // a plane curve has dimension 1
  auto curve = groebner_basis(polys(f7, 3, {"x0^2 + x1*x2"}));
  EXPECT_EQ(ideal_dimension(curve, 3, true), 1);
  // the zero ideal is all of P^2
  std::vector<MPoly<FqRing>> zero{MPoly<FqRing>(f7, 3)};
  auto all = groebner_basis(zero);
  EXPECT_EQ(ideal_dimension(all, 3, true), 2);
}

TEST(StandardMonomials, Counts) {
  // (x0, x1^2): standard monomials {1, x1}
  auto gb = groebner_basis(polys(f7, 2, {"x0", "x1^2"}));
  EXPECT_EQ(standard_monomial_count(gb, 2).value(), 2);
  // unit ideal: none
  auto unit = groebner_basis(polys(f7, 2, {"2"}));
  EXPECT_EQ(standard_monomial_count(unit, 2).value(), 0);
  // positive-dimensional: no finite count
  auto line = groebner_basis(polys(f7, 2, {"x0"}));
  EXPECT_FALSE(standard_monomial_count(line, 2).has_value());
  // Bezout-style: two generic conics in A^2 meet in 4 points with multiplicity
  auto conics = groebner_basis(polys(f7, 2, {"x0^2 + x1^2 - 1", "x0*x1 - 1"}));
  EXPECT_EQ(standard_monomial_count(conics, 2).value(), 4);
}
