#include <gtest/gtest.h>

#include "discval/constructions.hpp"
#include "discval/localanalysis.hpp"
#include "discval/verify.hpp"
#include "discval/parse.hpp"

using namespace discval;

namespace {
FqRing f7(7, 1);
FqRing f5(5, 1);
FqRing f2(2, 1);
ZZRing zz;

PointProj mkpt(const FqRing& k, std::vector<i64> v) {
  std::vector<FqElem> c;
  for (auto x : v) c.push_back(k.from_int(x));
  return normalize_point(k, c);
}
}  // namespace

TEST(Classify, NondegenerateNode) {
  auto rep = classify_double_point(parse_poly(f7, 3, "x0^2 + x1^2"), mkpt(f7, {0, 0, 1}));
  EXPECT_EQ(rep.cls, DoublePointClass::Nondegenerate);
  EXPECT_EQ(rep.local_multiplicity, 1);
  EXPECT_EQ(rep.hessian_rank, 2);
}

TEST(Classify, OrdinaryChar2Odd) {
  // x1 x2 + x3^2 at (1:0:0:0): affine model in 3 variables, char 2
  auto rep = classify_double_point(parse_poly(f2, 4, "x1*x2 + x3^2"), mkpt(f2, {1, 0, 0, 0}));
  EXPECT_EQ(rep.cls, DoublePointClass::OrdinaryChar2Odd);
  EXPECT_EQ(rep.local_multiplicity, 2);
  EXPECT_EQ(rep.hessian_rank, 2);
}

TEST(Classify, Char2EvenNondegenerate) {
  // x1 x2 split node in the plane over F_2: n = 2 even, multiplicity 1
  auto rep = classify_double_point(parse_poly(f2, 3, "x1*x2"), mkpt(f2, {1, 0, 0}));
  EXPECT_EQ(rep.cls, DoublePointClass::Nondegenerate);
  EXPECT_EQ(rep.local_multiplicity, 1);
}

TEST(Classify, NotDouble) {
  auto rep = classify_double_point(parse_poly(f7, 3, "x0^3 + x1^3"), mkpt(f7, {0, 0, 1}));
  EXPECT_EQ(rep.cls, DoublePointClass::NotDouble);
}

TEST(Classify, DegenerateCusp) {
  auto rep = classify_double_point(parse_poly(f7, 3, "x1^2*x2 - x0^3"), mkpt(f7, {0, 0, 1}));
  EXPECT_EQ(rep.cls, DoublePointClass::Degenerate);
  EXPECT_EQ(rep.local_multiplicity, 2);  // the cusp's singular subscheme is fat
}

TEST(Classify, NotSingularThrows) {
  EXPECT_THROW(classify_double_point(parse_poly(f7, 3, "x0^2 + x1^2"), mkpt(f7, {1, 1, 1})),
               NotSingularError);
}

TEST(Regularity, FirstOrderTest) {
  PLocalRing z5(5);
  EXPECT_EQ(is_regular_at(parse_poly(z5, 3, "x0^2 + x1^2 + 5*x2^2"), mkpt(f5, {0, 0, 1})),
            Regularity::Regular);
  EXPECT_EQ(is_regular_at(parse_poly(z5, 3, "x0^2 + x1^2 + 25*x2^2"), mkpt(f5, {0, 0, 1})),
            Regularity::NotRegular);
  EXPECT_EQ(is_regular_at(parse_poly(z5, 3, "x0^2 + x1^2"), mkpt(f5, {0, 0, 1})),
            Regularity::NotRegular);
  EXPECT_THROW(is_regular_at(parse_poly(z5, 3, "x0^2 + x1^2 + 5*x2^2"), mkpt(f5, {1, 2, 1})),
               NotSingularError);
}

TEST(Regularity, LiftIndependence) {
  // moving the singular point away from a coordinate point must not change
  // the answer: translate x2 -> x2, x0 -> x0 + 2 x2 over Z_(5)
  PLocalRing z5(5);
  auto f = parse_poly(z5, 3, "x0^2 + x1^2 + 5*x2^2");
  Matrix<PLocalRing> t = Matrix<PLocalRing>::identity(z5, 3);
  t.at(0, 2) = Rat(2);  // x0 -> x0 + 2 x2
  auto g = f.substitute_linear(t);
  // the singular point of the reduction moves to (-2 : 0 : 1) = (1 : 0 : -1/2)
  auto rep = analyze_singular_locus(gen::residue_poly(g));
  ASSERT_EQ(rep.r, 1);
  EXPECT_EQ(is_regular_at(g, rep.closed_points[0].rep), Regularity::Regular);
}

TEST(Theorem11, WeierstrassNode) {
  PLocalRing z5(5);
  auto rep = check_theorem_1_1(parse_poly(z5, 3, "x1^2*x2 - x0^3 - x0^2*x2 - 5*x2^3"));
  EXPECT_EQ(rep.valuation, Valuation::finite(1));
  EXPECT_TRUE(rep.nondeg_single_point);
  EXPECT_EQ(rep.regular, Regularity::Regular);
  ASSERT_TRUE(rep.equivalence_holds.has_value());
  EXPECT_TRUE(*rep.equivalence_holds);
}

TEST(Theorem11, NonRegularCone) {
  PLocalRing z5(5);
  auto rep = check_theorem_1_1(parse_poly(z5, 3, "x0^2 + x1^2 + 25*x2^2"));
  EXPECT_EQ(rep.valuation, Valuation::finite(2));
  EXPECT_TRUE(rep.nondeg_single_point);
  EXPECT_EQ(rep.regular, Regularity::NotRegular);
  ASSERT_TRUE(rep.equivalence_holds.has_value());
  EXPECT_TRUE(*rep.equivalence_holds);  // both sides false
}

TEST(Theorem11, SmoothFiber) {
  PLocalRing z5(5);
  auto rep = check_theorem_1_1(parse_poly(z5, 3, "x0^3 + x1^3 + x2^3"));
  EXPECT_EQ(rep.valuation, Valuation::finite(0));
  EXPECT_FALSE(rep.nondeg_single_point);
  EXPECT_EQ(rep.regular, Regularity::Regular);
  ASSERT_TRUE(rep.equivalence_holds.has_value());
  EXPECT_TRUE(*rep.equivalence_holds);
}

TEST(Theorem11, Char2OddAssertion) {
  PLocalRing z2(2);
  auto rep = check_theorem_1_1(parse_poly(z2, 4, "x0^2 + x1*x2 + 2*x3^2"));
  EXPECT_TRUE(rep.char2_odd_case);
  ASSERT_TRUE(rep.char2_v_not_1.has_value());
  EXPECT_TRUE(*rep.char2_v_not_1);
}

TEST(Theorem11, RandomInstancesNeverFalsify) {
  Rng rng(303);
  PLocalRing z5(5);
  FqRing k = z5.residue_field();
  int confirmed_v1 = 0;
  for (int t = 0; t < 60; ++t) {
    MPoly<FqRing> fbar(k, 3);
    for (const auto& m : monomials_of_degree(3, 3)) fbar.add_term(m, k.from_int(rng.range(0, 4)));
    if (fbar.is_zero()) continue;
    MPoly<PLocalRing> f = gen::lift_with_noise(fbar, z5, rng);
    auto rep = check_theorem_1_1(f);
    if (rep.equivalence_holds) EXPECT_TRUE(*rep.equivalence_holds) << f.str();
    if (rep.valuation == 1 && rep.nondeg_single_point) ++confirmed_v1;
  }
  EXPECT_GT(confirmed_v1, 0);
}

TEST(Decompose, SpecExamples) {
  PLocalRing z2(2);
  auto dec = decompose_quadratic_form(parse_poly(z2, 2, "x0^2 + x0*x1 + x1^2"));
  ASSERT_EQ(dec.rank2.size(), 1u);
  EXPECT_TRUE(dec.rank1.empty());
  EXPECT_EQ(dec.rank2[0][0], Rat(1));
  EXPECT_EQ(dec.rank2[0][1], Rat(1));
  EXPECT_EQ(dec.rank2[0][2], Rat(1));

  PLocalRing z3(3);
  auto diag = decompose_quadratic_form(parse_poly(z3, 4, "x0^2 + 2*x1^2 + 3*x2^2 + 9*x3^2"));
  EXPECT_TRUE(diag.rank2.empty());
  EXPECT_EQ(diag.rank1.size(), 4u);
}

TEST(Decompose, ZeroForm) {
  PLocalRing z3(3);
  auto dec = decompose_quadratic_form(MPoly<PLocalRing>(z3, 3));
  EXPECT_EQ(dec.rank1.size(), 3u);
  for (const auto& d : dec.rank1) EXPECT_EQ(d, Rat(0));
}

TEST(Decompose, RandomReconstruction) {
  // the defining property, on 200 random forms; reconstruction and
  // unimodularity are re-verified here, not just inside the routine
  Rng rng(307);
  for (i64 p : {2LL, 3LL}) {
    PLocalRing zp(p);
    for (int t = 0; t < 100; ++t) {
      int nv = 2 + static_cast<int>(rng.below(4));
      MPoly<PLocalRing> q(zp, nv);
      for (const auto& m : monomials_of_degree(nv, 2))
        q.add_term(m, Rat(rng.range(-p * p * p, p * p * p)));
      if (q.is_zero()) continue;
      auto dec = decompose_quadratic_form(q);
      EXPECT_EQ(2 * dec.rank2.size() + dec.rank1.size(), static_cast<std::size_t>(nv));
      EXPECT_TRUE(zp.is_unit(bareiss_det(dec.transform)));
      EXPECT_TRUE(q.substitute_linear(dec.transform).eq(dec.block_form));
    }
  }
}

TEST(QuadricBound, Examples) {
  PLocalRing z5(5);
  auto a = quadric_valuation_bound_check(parse_poly(z5, 3, "x0^2 + x1^2 + 5*x2^2"));
  EXPECT_EQ(a.valuation, Valuation::finite(1));
  EXPECT_EQ(a.sing_dimension, 0);
  EXPECT_TRUE(a.bound_ok);
  auto b = quadric_valuation_bound_check(parse_poly(z5, 3, "x0^2 + 5*x1^2 + 5*x2^2"));
  EXPECT_EQ(b.valuation, Valuation::finite(2));
  EXPECT_EQ(b.sing_dimension, 1);
  EXPECT_TRUE(b.bound_ok);
  auto c = quadric_valuation_bound_check(parse_poly(z5, 3, "x0^2 + x1^2 + x2^2"));
  EXPECT_EQ(c.valuation, Valuation::finite(0));
  EXPECT_EQ(c.sing_dimension, -1);
  EXPECT_TRUE(c.bound_ok);
}

TEST(Gauss, Examples) {
  PLocalRing z5(5);
  EXPECT_EQ(gauss_valuation(parse_poly(z5, 1, "5 + x0")), Valuation::finite(0));
  EXPECT_EQ(gauss_valuation(parse_poly(z5, 1, "25 + 5*x0")), Valuation::finite(1));
  EXPECT_THROW(gauss_valuation(MPoly<PLocalRing>(z5, 1)), ZeroPolynomialError);
  // scaling by pi^m shifts by m
  Rng rng(311);
  for (int t = 0; t < 50; ++t) {
    auto f = random_homogeneous(z5, 2, 2, rng, [](Rng& r) { return Rat(r.range(-20, 20)); });
    if (f.is_zero()) continue;
    int m = 1 + static_cast<int>(rng.below(3));
    auto scaled = f.scale(Rat(int_pow(Int(5), m)));
    EXPECT_EQ(gauss_valuation(scaled).v, gauss_valuation(f).v + m);
  }
}

TEST(SymbolicQuadric, MatchesMacaulayDiscriminant) {
  Rng rng(313);
  for (int nvars = 2; nvars <= 4; ++nvars) {
    MPoly<ZZRing> delta = symbolic_quadric_discriminant(nvars);
    for (int t = 0; t < 20; ++t) {
      MPoly<ZZRing> f(zz, nvars);
      for (const auto& m : monomials_of_degree(nvars, 2)) f.add_term(m, Int(rng.range(-6, 6)));
      if (f.is_zero()) continue;
      Int direct = discriminant(f).value;
      Int symbolic = delta.evaluate(coefficient_vector(f, 2));
      EXPECT_TRUE(direct == symbolic || direct == -symbolic);
    }
  }
}

TEST(Vmin, ExactQuadricExamples) {
  PLocalRing z7(7);
  EXPECT_EQ(vmin_exact_quadric(parse_poly(f7, 3, "x0^2 + x1^2 + x2^2"), z7), Valuation::finite(0));
  // one vanishing diagonal entry: a single nondegenerate double point
  EXPECT_EQ(vmin_exact_quadric(parse_poly(f7, 3, "x0^2 + x1^2"), z7), Valuation::finite(1));
  // two vanishing entries: the singular locus is a line
  EXPECT_GE(vmin_exact_quadric(parse_poly(f7, 4, "x0^2 + x1^2"), z7).v, 2);
  // the same numbers over the t-adic ring
  TLocalRing t7(7);
  EXPECT_EQ(vmin_exact_quadric(parse_poly(f7, 3, "x0^2 + x1^2"), t7), Valuation::finite(1));
}

TEST(Vmin, SampledBounds) {
  PLocalRing z5(5);
  FqRing k = z5.residue_field();
  auto smooth = vmin_sample(parse_poly(k, 3, "x0^3 + x1^3 + x2^3"), 8, z5, 42);
  EXPECT_EQ(smooth.bound, Valuation::finite(0));
  EXPECT_EQ(smooth.trials, 1);  // early exit at 0
  // nodal cubic: a single nondegenerate double point, so vmin = 1 and the
  // sample must find it
  auto nodal = vmin_sample(parse_poly(k, 3, "x1^2*x2 - x0^3 - x0^2*x2"), 32, z5, 42);
  EXPECT_EQ(nodal.bound, Valuation::finite(1));
}

TEST(Vmin, SampledBoundRespectsIsolatedPointCount) {
  // every sampled lift of a witness with r prescribed singular points has
  // v(Delta) >= r, so the sampled minimum does too
  FqRing f101(101, 1);
  PLocalRing z101(101);
  Rng rng(401);
  auto pts = gen::random_distinct_points(f101, 3, 2, rng);
  auto w = isolated_singularities_example(3, 5, pts, f101, 5150);
  ASSERT_TRUE(w.has_value());
  auto res = vmin_sample(w->form, 5, z101, 17);
  EXPECT_GE(res.bound, 2);
}

TEST(Multiplicity, Examples) {
  auto f = parse_poly(f7, 2, "x0^2 + x1^3");
  EXPECT_EQ(multiplicity_at(f, {f7.zero(), f7.zero()}), 2);
  EXPECT_EQ(multiplicity_at(f, {f7.one(), f7.one()}), 0);  // f(1,1) = 2 != 0
  EXPECT_THROW(multiplicity_at(MPoly<FqRing>(f7, 2), {f7.zero(), f7.zero()}), ZeroPolynomialError);
}

TEST(Vmin, BoundedByDiscriminantMultiplicity) {
  // vmin(a) <= mult_a(V(Delta)) on 50 singular quadrics
  Rng rng(317);
  PLocalRing z5(5);
  MPoly<ZZRing> delta = symbolic_quadric_discriminant(3);
  MPoly<FqRing> delta5 = delta.convert(f5, [](const Int& c) { return f5.from_Int(c); });
  int checked = 0;
  while (checked < 50) {
    // random singular quadric: conjugate of a rank-deficient diagonal form
    int rank = 1 + static_cast<int>(rng.below(2));
    MPoly<FqRing> diag(f5, 3);
    for (int i = 0; i < rank; ++i) {
      Monomial m(3, 0);
      m[i] = 2;
      diag.add_term(m, f5.from_int(rng.range(1, 4)));
    }
    Matrix<FqRing> t(f5, 3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.at(i, j) = f5.from_int(rng.range(0, 4));
    } while (f5.is_zero(bareiss_det(t)));
    MPoly<FqRing> fbar = diag.substitute_linear(t);
    if (fbar.is_zero()) continue;
    ++checked;
    Valuation vm = vmin_exact_quadric(fbar, z5);
    int mult = multiplicity_at(delta5, coefficient_vector(fbar, 2));
    ASSERT_TRUE(vm.is_finite());
    EXPECT_LE(vm.v, mult) << fbar.str();
  }
}

TEST(Vmin, ValuationTwoCriterion) {
  // vmin >= 2 iff a is a singular point of V(Delta) and the canonical lift
  // kills Delta mod pi^2
  Rng rng(331);
  PLocalRing z5(5);
  MPoly<ZZRing> delta = symbolic_quadric_discriminant(3);
  MPoly<FqRing> deltabar = delta.convert(f5, [](const Int& c) { return f5.from_Int(c); });
  MPoly<PLocalRing> deltaz = delta.convert(z5, [](const Int& c) { return Rat(c); });
  for (int t = 0; t < 80; ++t) {
    MPoly<FqRing> fbar(f5, 3);
    for (const auto& m : monomials_of_degree(3, 2)) fbar.add_term(m, f5.from_int(rng.range(0, 4)));
    if (fbar.is_zero()) continue;
    auto a = coefficient_vector(fbar, 2);
    Valuation vm = vmin_exact_quadric(fbar, z5);
    bool sing = f5.is_zero(deltabar.evaluate(a));
    for (int i = 0; i < deltabar.nvars() && sing; ++i)
      sing = f5.is_zero(deltabar.derivative(i).evaluate(a));
    std::vector<Rat> lift;
    for (const auto& c : a) lift.push_back(z5.lift(c.c[0]));
    bool mod_pi2 = z5.valuation(deltaz.evaluate(lift)) >= 2;
    EXPECT_EQ(vm >= 2, sing && mod_pi2) << fbar.str();
  }
}

TEST(Vmin, CoordinateSpanBound) {
  // quadrics singular at r coordinate points spanning a P^{r-1}
  Rng rng(337);
  PLocalRing z7(7);
  MPoly<ZZRing> delta = symbolic_quadric_discriminant(4);
  MPoly<FqRing> deltabar = delta.convert(f7, [](const Int& c) { return f7.from_Int(c); });
  for (int t = 0; t < 30; ++t) {
    int r = 1 + static_cast<int>(rng.below(3));
    MPoly<FqRing> fbar(f7, 4);
    for (const auto& m : monomials_of_degree(4, 2)) {
      bool touches = false;
      for (int i = 0; i < r; ++i)
        if (m[i] > 0) touches = true;
      if (!touches) fbar.add_term(m, f7.from_int(rng.range(0, 6)));
    }
    if (fbar.is_zero()) continue;
    Valuation vm = vmin_exact_quadric(fbar, z7);
    EXPECT_GE(vm, r);
    int mult = multiplicity_at(deltabar, coefficient_vector(fbar, 2));
    EXPECT_GE(mult, r);
  }
}

TEST(Vmin, UpperSemicontinuityAlongLines) {
  // along a line a(s) in coefficient space, the minimum value is attained
  // off a proper subset and all other values jump up
  Rng rng(347);
  PLocalRing z5(5);
  for (int line = 0; line < 10; ++line) {
    std::vector<i64> a0(6), a1(6);
    for (auto& x : a0) x = rng.range(0, 4);
    for (auto& x : a1) x = rng.range(0, 4);
    std::vector<Valuation> values;
    for (i64 s = 0; s < 5; ++s) {
      std::vector<i64> a(6);
      for (int i = 0; i < 6; ++i) a[i] = mod_norm(a0[i] + s * a1[i], 5);
      values.push_back(vmin_exact_quadric(a, z5, 3));
    }
    Valuation v0 = values[0];
    for (const auto& v : values) v0 = vmin(v0, v);
    int exceptional = 0;
    for (const auto& v : values)
      if (v > v0) ++exceptional;
    EXPECT_LT(exceptional, 5);  // the generic value is attained
  }
}

TEST(Vmin, SampledBoundDominatesExact) {
  // any specific lift has v(Delta) at least the coefficient-minimum value,
  // so the sampled upper bound can never undercut the exact quadric path
  Rng rng(353);
  PLocalRing z5(5);
  FqRing k = z5.residue_field();
  for (int t = 0; t < 25; ++t) {
    MPoly<FqRing> fbar(k, 3);
    for (const auto& m : monomials_of_degree(3, 2)) fbar.add_term(m, k.from_int(rng.range(0, 4)));
    if (fbar.is_zero()) continue;
    Valuation exact = vmin_exact_quadric(fbar, z5);
    auto sampled = vmin_sample(fbar, 6, z5, 1000 + t);
    EXPECT_GE(sampled.bound, exact) << fbar.str();
  }
}

TEST(Vmin, MatchesSingleNdp) {
  // vmin = 1 exactly at a single nondegenerate double point
  PLocalRing z7(7);
  // single ndp: diag(1,1,0)
  EXPECT_EQ(vmin_exact_quadric(parse_poly(f7, 3, "x0^2 + x1^2"), z7), Valuation::finite(1));
  auto rep = analyze_singular_locus(parse_poly(f7, 3, "x0^2 + x1^2"));
  EXPECT_EQ(rep.r, 1);
  EXPECT_EQ(classify_double_point(parse_poly(f7, 3, "x0^2 + x1^2"), rep.closed_points[0].rep).cls,
            DoublePointClass::Nondegenerate);
}
