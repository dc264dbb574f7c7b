#pragma once

// Generators for the example families used by the verification harness:
// prescribed-singularity constraint spaces and their kernels, randomized
// witnesses with a prescribed finite singular set, the line-singular family
// x_2 * prod (x_1 - c_i x_0) + g, quadric normal forms, and Weierstrass
// cubics with the classical b-invariant discriminant as an independent
// oracle.

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "discval/matrix.hpp"
#include "discval/mpoly.hpp"
#include "discval/rings.hpp"
#include "discval/specialfiber.hpp"
#include "discval/util.hpp"

namespace discval {

// ---------------------------------------------------------------------------
// constraint space: forms singular at all prescribed points
// ---------------------------------------------------------------------------

struct ConstraintSpace {
  std::vector<PointProj> points;
  int degree = 0;
  Matrix<FqRing> matrix;  // rows: f(P_i) and all partials at P_i; cols: coefficients
  long long kernel_dim = 0;
  std::vector<std::vector<FqElem>> kernel;  // basis of coefficient vectors
};

inline ConstraintSpace singularity_constraint_space(const std::vector<PointProj>& points, int d,
                                                    const FqRing& field, int nvars) {
  if (nvars < 3) throw InvalidInputError("constraint spaces need n >= 2");
  if (points.empty()) throw InvalidInputError("need at least one point");
  std::set<PointProj> dedup(points.begin(), points.end());
  if (dedup.size() != points.size()) throw InvalidInputError("duplicate points");

  auto basis = monomials_of_degree(nvars, d);
  std::size_t N = basis.size();
  std::size_t r = points.size();
  Matrix<FqRing> m(field, r * (nvars + 1), N);

  std::size_t row = 0;
  for (const auto& p : points) {
    // f(P) = 0
    for (std::size_t k = 0; k < N; ++k) {
      MPoly<FqRing> mono(field, nvars);
      mono.add_term(basis[k], field.one());
      m.at(row, k) = mono.evaluate(p.coords);
    }
    ++row;
    // all partials vanish at P
    for (int j = 0; j < nvars; ++j) {
      for (std::size_t k = 0; k < N; ++k) {
        MPoly<FqRing> mono(field, nvars);
        mono.add_term(basis[k], field.one());
        m.at(row, k) = mono.derivative(j).evaluate(p.coords);
      }
      ++row;
    }
  }

  ConstraintSpace cs;
  cs.points = points;
  cs.degree = d;
  cs.matrix = m;
  cs.kernel = null_space(m);
  cs.kernel_dim = static_cast<long long>(cs.kernel.size());

  if (d >= 2 * static_cast<int>(r) - 1) {
    long long expected = static_cast<long long>(N) - static_cast<long long>(r) * nvars;
    if (cs.kernel_dim != expected)
      throw Error("constraint space nullity " + std::to_string(cs.kernel_dim) + " != expected " +
                  std::to_string(expected) + " despite d >= 2r-1");
  }
  return cs;
}

// ---------------------------------------------------------------------------
// randomized witness with prescribed finite singular set
// ---------------------------------------------------------------------------

struct IsolatedWitness {
  MPoly<FqRing> form;
  int attempts = 0;
};

// Searches the constraint-space kernel for a form whose singular locus is
// exactly the prescribed point set. Existence is only guaranteed over an
// algebraically closed field, so the search can fail over small F_q; callers
// retry with a larger field or another seed.
inline std::optional<IsolatedWitness> isolated_singularities_example(
    int nvars, int d, const std::vector<PointProj>& points, const FqRing& field, std::uint64_t seed,
    int max_attempts = 200, const AnalyzeOptions& aopts = {}) {
  int r = static_cast<int>(points.size());
  if (r > (d - 1) / 2)
    throw InvalidInputError("need r <= (d-1)/2, got r = " + std::to_string(r) + ", d = " + std::to_string(d));
  ConstraintSpace cs = singularity_constraint_space(points, d, field, nvars);
  std::uint64_t q = 1;
  for (int i = 0; i < field.m; ++i) q *= static_cast<std::uint64_t>(field.p);

  std::set<PointProj> want(points.begin(), points.end());
  Rng rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<FqElem> coeffs(cs.kernel.empty() ? 0 : cs.kernel[0].size(), field.zero());
    for (const auto& basis_vec : cs.kernel) {
      FqElem lambda = field.elem_at(rng.below(q));
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        coeffs[k] = field.add(coeffs[k], field.mul(lambda, basis_vec[k]));
    }
    MPoly<FqRing> f = poly_from_coefficients(field, nvars, d, coeffs);
    if (f.is_zero()) continue;
    SingularLocusReport rep;
    try {
      rep = analyze_singular_locus(f, aopts);
    } catch (const BudgetExceededError&) {
      continue;
    }
    if (rep.dimension != 0 || rep.points_possibly_incomplete) continue;
    if (rep.r != r) continue;
    bool match = true;
    for (const auto& cp : rep.closed_points) {
      if (cp.field_degree != 1 || !want.count(cp.rep)) {
        match = false;
        break;
      }
    }
    if (match) return IsolatedWitness{f, attempt};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// the line-singular family x_2 * prod_i (x_1 - c_i x_0) + g(x_3..x_n)
// ---------------------------------------------------------------------------

inline MPoly<FqRing> line_singular_family(int nvars, int d, const std::vector<i64>& c_list,
                                          const FqRing& field,
                                          const std::optional<MPoly<FqRing>>& g = std::nullopt) {
  if (nvars < 3) throw InvalidInputError("need n >= 2");
  if (static_cast<int>(c_list.size()) != d - 1) throw InvalidInputError("need exactly d-1 residues");
  std::set<i64> dedup;
  for (i64 c : c_list) dedup.insert(mod_norm(c, field.p));
  if (dedup.size() != c_list.size()) throw InvalidInputError("the c_i must be distinct");

  MPoly<FqRing> h = MPoly<FqRing>::variable(field, nvars, 2);
  for (i64 c : c_list) {
    MPoly<FqRing> lin = MPoly<FqRing>::variable(field, nvars, 1);
    lin = lin.sub(MPoly<FqRing>::variable(field, nvars, 0).scale(field.from_int(c)));
    h = h.mul(lin);
  }
  if (nvars == 3) {
    if (g && !g->is_zero()) throw InvalidInputError("g must be zero when n = 2");
    return h;
  }
  if (!g) throw InvalidInputError("need g in x3..xn for n >= 3");
  if (!g->is_homogeneous(d)) throw InvalidInputError("g must be homogeneous of degree d");
  for (const auto& [m, c] : g->terms()) {
    for (int i = 0; i < 3; ++i)
      if (m[i] != 0) throw InvalidInputError("g may only involve x3..xn");
  }
  return h.add(*g);
}

// ---------------------------------------------------------------------------
// quadric normal forms
// ---------------------------------------------------------------------------

enum class QuadricKind {
  SmoothSplit,        // x0 x1 + x2 x3 + ... (+ x_n^2 when n is even)
  SumSquares,         // x0^2 + ... + x_n^2 (characteristic != 2)
  Char2OddOdpAffine,  // x0 x1 + ... + x_{n-3} x_{n-2} + x_{n-1}^2, n odd, char 2
};

template <typename R>
MPoly<R> quadric_normal_form(QuadricKind kind, int n, const R& ring) {
  auto var2 = [&](MPoly<R>& f, int i, int j) {
    Monomial m(f.nvars(), 0);
    ++m[i];
    ++m[j];
    f.add_term(m, ring.one());
  };
  bool char2 = ring.is_zero(ring.from_int(2));
  switch (kind) {
    case QuadricKind::SmoothSplit: {
      if (char2 && n % 2 == 0)
        throw InvalidInputError("no smooth quadric of this parity in characteristic 2");
      MPoly<R> f(ring, n + 1);
      int i = 0;
      for (; i + 1 <= n; i += 2) var2(f, i, i + 1);
      if (i == n) var2(f, n, n);
      return f;
    }
    case QuadricKind::SumSquares: {
      if (char2) throw InvalidInputError("sum of squares degenerates in characteristic 2");
      MPoly<R> f(ring, n + 1);
      for (int i = 0; i <= n; ++i) var2(f, i, i);
      return f;
    }
    case QuadricKind::Char2OddOdpAffine: {
      if (!char2 || n % 2 == 0)
        throw InvalidInputError("this normal form needs characteristic 2 and odd n");
      MPoly<R> f(ring, n);  // affine model in n variables
      int i = 0;
      for (; i + 1 < n - 1; i += 2) var2(f, i, i + 1);
      var2(f, n - 1, n - 1);
      return f;
    }
  }
  throw InvalidInputError("unknown quadric kind");
}

// ---------------------------------------------------------------------------
// Weierstrass cubics with the classical discriminant oracle
// ---------------------------------------------------------------------------

template <typename R>
struct WeierstrassCubic {
  MPoly<R> form;  // y^2 z + a1 xyz + a3 y z^2 - x^3 - a2 x^2 z - a4 x z^2 - a6 z^3
  typename R::Elem classical_discriminant;
};

template <typename R>
WeierstrassCubic<R> weierstrass_cubic(const R& ring, const typename R::Elem& a1,
                                      const typename R::Elem& a2, const typename R::Elem& a3,
                                      const typename R::Elem& a4, const typename R::Elem& a6) {
  using E = typename R::Elem;
  auto mul = [&](const E& x, const E& y) { return ring.mul(x, y); };
  auto numm = [&](long long k) { return ring.from_int(k); };

  E b2 = ring.add(mul(a1, a1), mul(numm(4), a2));
  E b4 = ring.add(mul(numm(2), a4), mul(a1, a3));
  E b6 = ring.add(mul(a3, a3), mul(numm(4), a6));
  E b8 = ring.add(ring.add(mul(mul(a1, a1), a6), mul(numm(4), mul(a2, a6))),
                  ring.add(ring.neg(mul(a1, mul(a3, a4))),
                           ring.sub(mul(a2, mul(a3, a3)), mul(a4, a4))));
  E disc = ring.add(ring.add(ring.neg(mul(mul(b2, b2), b8)), ring.neg(mul(numm(8), mul(b4, mul(b4, b4))))),
                    ring.add(ring.neg(mul(numm(27), mul(b6, b6))), mul(numm(9), mul(b2, mul(b4, b6)))));

  MPoly<R> f(ring, 3);
  auto term = [&](int ex, int ey, int ez, const E& c) {
    if (ring.is_zero(c)) return;
    f.add_term(Monomial{ex, ey, ez}, c);
  };
  term(0, 2, 1, ring.one());
  term(1, 1, 1, a1);
  term(0, 1, 2, a3);
  term(3, 0, 0, ring.neg(ring.one()));
  term(2, 0, 1, ring.neg(a2));
  term(1, 0, 2, ring.neg(a4));
  term(0, 0, 3, ring.neg(a6));
  return WeierstrassCubic<R>{std::move(f), disc};
}

}  // namespace discval
