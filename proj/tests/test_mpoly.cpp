#include <gtest/gtest.h>

#include "discval/matrix.hpp"
#include "discval/mpoly.hpp"
#include "discval/parse.hpp"

using namespace discval;

namespace {
ZZRing zz;

MPoly<ZZRing> zpoly(int nvars, const std::string& s) { return parse_poly(zz, nvars, s); }

template <typename R>
typename R::Elem rand_small(const R& ring, Rng& rng) {
  return ring.from_int(rng.range(-5, 5));
}
}  // namespace

TEST(MPoly, Derivative) {
  auto f = zpoly(2, "x0^2*x1");
  EXPECT_TRUE(f.derivative(0).eq(zpoly(2, "2*x0*x1")));
  FqRing f2(2, 1);
  auto g = parse_poly(f2, 1, "x0^2");
  EXPECT_TRUE(g.derivative(0).is_zero());
  EXPECT_THROW(f.derivative(5), InvalidInputError);
}

TEST(MPoly, EulerRelation) {
  // d * f = sum x_i df/dx_i for homogeneous f, over several rings
  Rng rng(23);
  auto check = [&](auto ring, int nvars, int d) {
    auto f = random_homogeneous(ring, nvars, d, rng, [&](Rng& r) { return rand_small(ring, r); });
    auto lhs = f.scale(ring.from_int(d));
    MPoly<decltype(ring)> rhs(ring, nvars);
    for (int i = 0; i < nvars; ++i) {
      rhs = rhs.add(f.derivative(i).mul(MPoly<decltype(ring)>::variable(ring, nvars, i)));
    }
    EXPECT_TRUE(lhs.eq(rhs));
  };
  for (int t = 0; t < 30; ++t) {
    check(zz, 3, 3);
    check(FqRing(2, 1), 3, 2);   // char | d: both sides vanish
    check(FqRing(3, 1), 4, 3);   // char | d
    check(PLocalRing(5), 3, 4);
    check(TLocalRing(3), 2, 5);
  }
}

TEST(MPoly, Evaluate) {
  auto f = zpoly(2, "x0 + x1");
  EXPECT_EQ(f.evaluate({Int(1), Int(2)}), Int(3));
  // b^2 - 4ac at (a,b,c) = (1,0,1)
  auto disc = zpoly(3, "x1^2 - 4*x0*x2");
  EXPECT_EQ(disc.evaluate({Int(1), Int(0), Int(1)}), Int(-4));
  auto g = zpoly(2, "x0*x1 + 7");
  EXPECT_EQ(g.evaluate({Int(0), Int(0)}), Int(7));
}

TEST(MPoly, SubstituteLinear) {
  auto f = zpoly(2, "x0*x1 + x0^3");
  auto id = Matrix<ZZRing>::identity(zz, 2);
  EXPECT_TRUE(f.substitute_linear(id).eq(f));

  Matrix<ZZRing> swap(zz, 2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  EXPECT_TRUE(zpoly(2, "x0*x1").substitute_linear(swap).eq(zpoly(2, "x0*x1")));

  Matrix<ZZRing> shear(zz, 2, 2);  // x0 -> x0 + x1, x1 -> x1
  shear.at(0, 0) = 1;
  shear.at(0, 1) = 1;
  shear.at(1, 1) = 1;
  EXPECT_TRUE(zpoly(2, "x0^2").substitute_linear(shear).eq(zpoly(2, "x0^2 + 2*x0*x1 + x1^2")));
}

TEST(MPoly, SubstituteLinearInverseRoundTrip) {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    auto f = random_homogeneous(zz, 3, 3, rng, [&](Rng& r) { return rand_small(zz, r); });
    Matrix<ZZRing> T = random_unimodular(3, rng);
    // invert the unimodular matrix by the adjugate (det = +-1)
    Int det = bareiss_det(T);
    ASSERT_TRUE(det == 1 || det == -1);
    Matrix<ZZRing> inv(zz, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Matrix<ZZRing> minor(zz, 2, 2);
        for (std::size_t a = 0, ai = 0; a < 3; ++a) {
          if (a == j) continue;
          for (std::size_t b = 0, bi = 0; b < 3; ++b) {
            if (b == i) continue;
            minor.at(ai, bi) = T.at(a, b);
            ++bi;
          }
          ++ai;
        }
        Int cof = bareiss_det(minor);
        if ((i + j) % 2 == 1) cof = -cof;
        inv.at(i, j) = cof * det;  // det in {1,-1} so this is the true inverse
      }
    auto g = f.substitute_linear(T).substitute_linear(inv);
    EXPECT_TRUE(g.eq(f));
    // homogeneity and degree preserved
    EXPECT_TRUE(f.substitute_linear(T).is_homogeneous(3));
  }
}

TEST(MPoly, TaylorShift) {
  auto f = zpoly(1, "x0^2");
  EXPECT_TRUE(f.taylor_shift({Int(1)}).eq(zpoly(1, "x0^2 + 2*x0 + 1")));
  auto c = zpoly(2, "42");
  EXPECT_TRUE(c.taylor_shift({Int(3), Int(-1)}).eq(c));

  // cross-check against evaluation: shift(f, b)(0) = f(b), and the shift is
  // inverted by shifting back
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    int nvars = 2 + static_cast<int>(rng.below(2));
    auto g = random_homogeneous(zz, nvars, 3, rng, [&](Rng& r) { return rand_small(zz, r); });
    std::vector<Int> b, nb, zero;
    for (int i = 0; i < nvars; ++i) {
      b.push_back(Int(rng.range(-4, 4)));
      nb.push_back(-b.back());
      zero.push_back(Int(0));
    }
    auto shifted = g.taylor_shift(b);
    EXPECT_EQ(shifted.evaluate(zero), g.evaluate(b));
    EXPECT_TRUE(shifted.taylor_shift(nb).eq(g));
  }
}

TEST(MPoly, Dehomogenize) {
  // x0*x1 on the chart x0 = 1 at (1:0): the affine coordinate y = x1/x0
  auto f = zpoly(2, "x0*x1");
  auto f0 = f.dehomogenize(0, {Int(0)});
  EXPECT_TRUE(f0.eq(zpoly(1, "x0")));

  // y^2 z - x^3 - x^2 z at (0:0:1), chart z: vanishes to order exactly 2
  auto g = zpoly(3, "x1^2*x2 - x0^3 - x0^2*x2");
  auto g0 = g.dehomogenize(2, {Int(0), Int(0)});
  EXPECT_TRUE(g0.eq(zpoly(2, "x1^2 - x0^3 - x0^2")));
  EXPECT_EQ(min_total_degree(g0), 2);
}

TEST(MPoly, DehomogenizeSmoothPointHasLinearPart) {
  // on a smooth quadric over F_7, the recentred dehomogenization at any
  // rational point has a nonzero linear part (gradient oracle)
  FqRing f7(7, 1);
  auto f = parse_poly(f7, 3, "x0^2 + x1^2 + x2^2");
  int found = 0;
  for (i64 a = 0; a < 7 && found < 5; ++a) {
    for (i64 b = 0; b < 7 && found < 5; ++b) {
      // points with x2 = 1
      FqElem va = f7.from_int(a), vb = f7.from_int(b);
      if (!f7.is_zero(f.evaluate({va, vb, f7.one()}))) continue;
      ++found;
      auto f0 = f.dehomogenize(2, {va, vb});
      EXPECT_TRUE(f7.is_zero(f0.evaluate({f7.zero(), f7.zero()})));
      EXPECT_FALSE(homogeneous_component(f0, 1).is_zero());
      // gradient oracle: some partial of f is nonzero at the point
      bool grad = false;
      for (int i = 0; i < 3; ++i)
        if (!f7.is_zero(f.derivative(i).evaluate({va, vb, f7.one()}))) grad = true;
      EXPECT_TRUE(grad);
    }
  }
  EXPECT_GT(found, 0);
}

TEST(MPoly, ParseExamples) {
  auto f = zpoly(3, "x0^2 + 3*x0*x1 - 5*x2^2");
  EXPECT_EQ(f.term_count(), 3u);
  auto zero = zpoly(2, "0");
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.term_count(), 0u);
}

TEST(MPoly, ParseErrors) {
  EXPECT_THROW(zpoly(2, "x0 + bogus"), ParseError);
  EXPECT_THROW(zpoly(2, "x5"), ParseError);      // out of range
  EXPECT_THROW(zpoly(2, "x0 x1"), ParseError);   // missing operator
  EXPECT_THROW(zpoly(2, "(x0"), ParseError);     // unbalanced
  EXPECT_THROW(zpoly(2, "x0 / x1"), ParseError); // nonconstant divisor
  EXPECT_THROW(zpoly(2, "1/2"), ParseError);     // not exact over ZZ
  EXPECT_THROW(parse_poly(PLocalRing(5), 1, "t"), ParseError);
  try {
    zpoly(2, "x0 + @");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 5u);
  }
}

template <typename R>
void roundtrip(const R& ring, Rng& rng, int count) {
  for (int t = 0; t < count; ++t) {
    int nvars = 1 + static_cast<int>(rng.below(4));
    int d = 1 + static_cast<int>(rng.below(4));
    MPoly<R> f(ring, nvars);
    for (const auto& m : monomials_of_degree(nvars, d))
      if (rng.below(2) == 0) f.add_term(m, ring.from_int(rng.range(-9, 9)));
    MPoly<R> g = parse_poly(ring, nvars, f.str());
    EXPECT_TRUE(f.eq(g)) << f.str();
  }
}

TEST(MPoly, FormatParseRoundTrip) {
  Rng rng(99);
  roundtrip(zz, rng, 200);
  roundtrip(QQRing{}, rng, 100);
  roundtrip(FqRing(5, 1), rng, 100);
  roundtrip(PLocalRing(3), rng, 50);
  roundtrip(TLocalRing(3), rng, 50);
  // t-coefficients round-trip too
  TLocalRing f3(3);
  auto f = parse_poly(f3, 2, "(1+t)*x0^2 + t^2*x0*x1 + (2/(1+t))*x1^2");
  EXPECT_TRUE(parse_poly(f3, 2, f.str()).eq(f));
}

TEST(MPoly, ParserNeverCrashesOnGarbage) {
  // random byte soup must either parse or raise a positioned ParseError
  Rng rng(515);
  const std::string alphabet = "x0123456789+-*/^() t";
  for (int t = 0; t < 2000; ++t) {
    std::string s;
    int len = static_cast<int>(rng.below(24));
    for (int i = 0; i < len; ++i) s += alphabet[rng.below(alphabet.size())];
    try {
      auto f = parse_poly(zz, 3, s);
      // whatever parsed must format and re-parse to itself
      EXPECT_TRUE(parse_poly(zz, 3, f.str()).eq(f)) << s;
    } catch (const ParseError&) {
      // fine
    }
  }
}

TEST(MPoly, MixedRingIsHardError) {
  auto f = zpoly(2, "x0");
  MPoly<ZZRing> g(zz, 3);
  EXPECT_THROW(f.add(g), InvalidInputError);  // variable count
  FqRing f5(5, 1), f7(7, 1);
  auto a = parse_poly(f5, 2, "x0");
  auto b = parse_poly(f7, 2, "x1");
  EXPECT_THROW(a.add(b), MixedRingError);
}

TEST(MPoly, CoefficientVectorOrder) {
  // canonical descending-lex basis for quadrics in 3 variables:
  // x0^2, x0x1, x0x2, x1^2, x1x2, x2^2
  auto basis = monomials_of_degree(3, 2);
  ASSERT_EQ(basis.size(), 6u);
  EXPECT_EQ(basis[0], (Monomial{2, 0, 0}));
  EXPECT_EQ(basis[1], (Monomial{1, 1, 0}));
  EXPECT_EQ(basis[2], (Monomial{1, 0, 1}));
  EXPECT_EQ(basis[3], (Monomial{0, 2, 0}));
  EXPECT_EQ(basis[4], (Monomial{0, 1, 1}));
  EXPECT_EQ(basis[5], (Monomial{0, 0, 2}));
  auto f = zpoly(3, "x0^2 + 2*x0*x2 + 3*x2^2");
  auto v = coefficient_vector(f, 2);
  EXPECT_EQ(v, (std::vector<Int>{1, 0, 2, 0, 0, 3}));
  EXPECT_TRUE(poly_from_coefficients(zz, 3, 2, v).eq(f));
}
