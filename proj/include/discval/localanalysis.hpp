#pragma once

// Point-local and coefficient-local analysis:
//  - double-point classification (Hessian test away from characteristic 2,
//    the isolated-reduced-point criterion in characteristic 2, and the
//    odd-dimensional char-2 ordinary double point normal form),
//  - the first-order regularity test for the total space at a special-fiber
//    singularity,
//  - the full valuation-1 equivalence checker,
//  - block decomposition of quadratic forms over a DVR,
//  - Gauss valuations, the exact quadric vmin via the symbolic determinant,
//    the sampled vmin bound, and vanishing-order multiplicities.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "discval/discriminant.hpp"
#include "discval/groebner.hpp"
#include "discval/matrix.hpp"
#include "discval/mpoly.hpp"
#include "discval/rings.hpp"
#include "discval/specialfiber.hpp"
#include "discval/util.hpp"

namespace discval {

// ---------------------------------------------------------------------------
// double points
// ---------------------------------------------------------------------------

enum class DoublePointClass { Nondegenerate, OrdinaryChar2Odd, NotDouble, Degenerate };

inline std::string double_point_class_str(DoublePointClass c) {
  switch (c) {
    case DoublePointClass::Nondegenerate: return "nondegenerate";
    case DoublePointClass::OrdinaryChar2Odd: return "ordinary_char2_odd";
    case DoublePointClass::NotDouble: return "not_double";
    default: return "degenerate";
  }
}

struct DoublePointReport {
  DoublePointClass cls = DoublePointClass::Degenerate;
  int hessian_rank = 0;
  long long local_multiplicity = -1;  // -1: did not stabilize within the cap
};

inline bool is_singular_at(const MPoly<FqRing>& f, const PointProj& q) {
  for (const auto& g : singular_subscheme(f)) {
    if (!g.ring().is_zero(g.evaluate(q.coords))) return false;
  }
  return true;
}

// Q must be a singular point of H_f; f and Q over the same finite field.
inline DoublePointReport classify_double_point(const MPoly<FqRing>& f, const PointProj& q,
                                               int mult_cap = 12) {
  const FqRing& field = f.ring();
  int n = f.nvars() - 1;  // affine dimension of the local model
  if (static_cast<int>(q.coords.size()) != f.nvars()) throw InvalidInputError("point dimension mismatch");
  if (!is_singular_at(f, q)) throw NotSingularError("point is not singular on the hypersurface");

  DoublePointReport report;
  auto gens = singular_subscheme(f);
  auto local = localized_ideal_at(field, gens, q);
  auto mult = local_multiplicity_at_origin(local, mult_cap);
  report.local_multiplicity = mult ? *mult : -1;

  int chart = point_chart(field, q);
  std::vector<FqElem> shift;
  for (std::size_t i = 0; i < q.coords.size(); ++i)
    if (static_cast<int>(i) != chart) shift.push_back(q.coords[i]);
  MPoly<FqRing> h = f.dehomogenize(chart, shift);
  int ord = h.is_zero() ? -1 : min_total_degree(h);
  MPoly<FqRing> q2 = homogeneous_component(h, 2);

  Matrix<FqRing> hess = hessian_matrix(q2);
  report.hessian_rank = static_cast<int>(matrix_rank(hess));

  if (h.is_zero() || ord >= 3) {
    report.cls = DoublePointClass::NotDouble;
    return report;
  }

  if (field.p != 2) {
    if (report.hessian_rank == n) {
      report.cls = DoublePointClass::Nondegenerate;
      if (report.local_multiplicity != 1)
        throw Error("nonsingular Hessian with local multiplicity != 1");
    } else {
      report.cls = DoublePointClass::Degenerate;
    }
    return report;
  }

  // characteristic 2: the Hessian is alternating and the authoritative
  // nondegeneracy test is "isolated reduced point of the singular subscheme"
  if (report.local_multiplicity == 1) {
    report.cls = DoublePointClass::Nondegenerate;
    return report;
  }
  if (n % 2 == 1 && report.local_multiplicity == 2 && report.hessian_rank == n - 1) {
    // radical of the symplectic part is a line; the residual square term on
    // it must not vanish (over F_{2^m} every element is a square)
    auto kernel = null_space(hess);
    if (kernel.size() == 1) {
      FqElem residual = q2.evaluate(kernel[0]);
      if (!field.is_zero(residual)) {
        report.cls = DoublePointClass::OrdinaryChar2Odd;
        return report;
      }
    }
  }
  report.cls = DoublePointClass::Degenerate;
  return report;
}

// ---------------------------------------------------------------------------
// regularity of the total space at a special-fiber singularity
// ---------------------------------------------------------------------------

enum class Regularity { Regular, NotRegular, Undetermined };

inline std::string regularity_str(Regularity r) {
  switch (r) {
    case Regularity::Regular: return "regular";
    case Regularity::NotRegular: return "not_regular";
    default: return "undetermined";
  }
}

// First-order test: after recentring the canonical lift of Q at the origin,
// f0 = c0 + (terms of valuation >= 1) * x + (quadratic and higher); H is
// regular at Q iff f0 is not in the square of the maximal ideal (pi, x),
// i.e. iff v(c0) = 1. Changing the lift moves c0 by valuation >= 2, so the
// test is lift-independent. A failure (v(c0) >= 2) is only reported as
// NotRegular at a nondegenerate point; at a degenerate point the report is
// Undetermined.
template <typename R>
Regularity is_regular_at(const MPoly<R>& f, const PointProj& q) {
  static_assert(is_dvr_v<R>);
  const R& ring = f.ring();
  FqRing k = ring.residue_field();
  MPoly<FqRing> fbar = f.convert(k, [&](const typename R::Elem& c) { return k.from_int(ring.residue(c)); });
  if (!is_singular_at(fbar, q)) throw NotSingularError("point is not singular on the special fiber");

  int chart = point_chart(k, q);
  std::vector<typename R::Elem> shift;
  for (std::size_t i = 0; i < q.coords.size(); ++i)
    if (static_cast<int>(i) != chart) shift.push_back(ring.lift(q.coords[i].c[0]));
  MPoly<R> f0 = f.dehomogenize(chart, shift);
  Valuation v0 = ring.valuation(f0.coeff(Monomial(f.nvars() - 1, 0)));
  if (v0 == 1) return Regularity::Regular;
  DoublePointReport cls = classify_double_point(fbar, q);
  if (cls.cls == DoublePointClass::Nondegenerate) return Regularity::NotRegular;
  return Regularity::Undetermined;
}

// ---------------------------------------------------------------------------
// Theorem "v(Delta) = 1  <=>  regular + single nondegenerate double point"
// ---------------------------------------------------------------------------

struct PointAssessment {
  std::string point;
  int field_degree = 1;
  long long local_multiplicity = 1;
  std::string classification;
  std::string regularity = "not_checked";  // only rational points are testable
};

struct Theorem11Report {
  Valuation valuation = Valuation::finite(0);
  SingularLocusReport sing;
  Regularity regular = Regularity::Undetermined;
  bool nondeg_single_point = false;
  std::optional<bool> equivalence_holds;
  bool char2_odd_case = false;
  std::optional<bool> char2_v_not_1;
  std::vector<PointAssessment> points;
};

template <typename R>
Theorem11Report check_theorem_1_1(const MPoly<R>& f, const AnalyzeOptions& aopts = {},
                                  const DiscOptions& dopts = {}) {
  static_assert(is_dvr_v<R>);
  const R& ring = f.ring();
  FqRing k = ring.residue_field();
  int n = f.nvars() - 1;

  Theorem11Report report;
  report.valuation = discriminant(f, dopts).valuation;

  MPoly<FqRing> fbar = f.convert(k, [&](const typename R::Elem& c) { return k.from_int(ring.residue(c)); });
  report.sing = analyze_singular_locus(fbar, aopts);

  bool regular_false = false;
  bool regular_gap = false;  // something we could not check

  if (!report.valuation.is_finite()) regular_gap = true;  // generic fiber not smooth

  if (report.sing.dimension == -1) {
    report.nondeg_single_point = false;
    report.regular = regular_gap ? Regularity::Undetermined : Regularity::Regular;
  } else if (report.sing.dimension >= 1) {
    report.nondeg_single_point = false;
    for (const auto& pt : report.sing.rational_points) {
      PointAssessment pa;
      pa.point = point_str(k, pt);
      auto cls = classify_double_point(fbar, pt);
      pa.classification = double_point_class_str(cls.cls);
      pa.local_multiplicity = cls.local_multiplicity;
      Regularity r = is_regular_at(f, pt);
      pa.regularity = regularity_str(r);
      if (r == Regularity::NotRegular) regular_false = true;
      if (r == Regularity::Undetermined) regular_gap = true;
      report.points.push_back(std::move(pa));
    }
    regular_gap = true;  // positive-dimensional locus: cannot test every point
    report.regular = regular_false ? Regularity::NotRegular : Regularity::Undetermined;
  } else {
    // dimension 0: assess every closed point found. The degree accounting in
    // the locus report is exact, so points_possibly_incomplete means extra
    // closed points certainly exist (all of residue degree beyond the scan),
    // which settles "single rational point" negatively on its own.
    bool all_rational = true;
    bool single_ndp = false;
    for (const auto& cp : report.sing.closed_points) {
      PointAssessment pa;
      pa.point = point_str(cp.field, cp.rep);
      pa.field_degree = cp.field_degree;
      pa.local_multiplicity = cp.local_multiplicity;
      if (cp.field_degree == 1) {
        auto cls = classify_double_point(fbar, cp.rep);
        pa.classification = double_point_class_str(cls.cls);
        if (report.sing.r == 1 && cls.cls == DoublePointClass::Nondegenerate) single_ndp = true;
        Regularity r = is_regular_at(f, cp.rep);
        pa.regularity = regularity_str(r);
        if (r == Regularity::NotRegular) regular_false = true;
        if (r == Regularity::Undetermined) regular_gap = true;
      } else {
        all_rational = false;
        MPoly<FqRing> fext = embed_poly(fbar, cp.field);
        auto cls = classify_double_point(fext, cp.rep);
        pa.classification = double_point_class_str(cls.cls);
        regular_gap = true;  // no extension DVR: regularity not testable here
      }
      report.points.push_back(std::move(pa));
    }
    report.nondeg_single_point = single_ndp && all_rational && !report.sing.points_possibly_incomplete;
    if (report.sing.points_possibly_incomplete) regular_gap = true;
    report.regular = regular_false ? Regularity::NotRegular
                                   : (regular_gap ? Regularity::Undetermined : Regularity::Regular);
  }

  // (ii) as a tri-state: false as soon as either conjunct is settled false
  std::optional<bool> rhs;
  if (report.regular == Regularity::NotRegular || !report.nondeg_single_point) {
    rhs = false;
  } else if (report.regular == Regularity::Regular) {
    rhs = true;
  }
  if (rhs) report.equivalence_holds = ((report.valuation == 1) == *rhs);

  if (ring.residue_prime() == 2 && n % 2 == 1) {
    report.char2_odd_case = true;
    report.char2_v_not_1 = (report.valuation != 1);
  }
  return report;
}

// ---------------------------------------------------------------------------
// quadratic forms over a DVR
// ---------------------------------------------------------------------------

template <typename R>
struct QuadBlockDecomposition {
  std::vector<std::array<typename R::Elem, 3>> rank2;  // a x^2 + b xy + c y^2
  std::vector<typename R::Elem> rank1;                 // d z^2
  Matrix<R> transform;                                 // unimodular over R
  MPoly<R> block_form;                                 // q o transform, for inspection
};

// Block decomposition of a quadratic form following the orthogonal-splitting
// argument: scale the associated bilinear form beta(x,y) = q(x+y)-q(x)-q(y)
// to have a unit value, split off a rank-1 space if a scaled diagonal value
// is a unit, else a rank-2 space on an off-diagonal unit pair, and recurse on
// the beta-orthogonal complement. If beta vanishes identically the remaining
// basis is already orthogonal and splits into rank-1 blocks.
template <typename R>
QuadBlockDecomposition<R> decompose_quadratic_form(const MPoly<R>& q) {
  static_assert(is_dvr_v<R>);
  const R& ring = q.ring();
  int nv = q.nvars();
  if (!q.is_homogeneous(2) && !q.is_zero()) throw InvalidInputError("expected a quadratic form");

  using E = typename R::Elem;
  auto eval_q = [&](const std::vector<E>& v) { return q.evaluate(v); };
  auto eval_beta = [&](const std::vector<E>& a, const std::vector<E>& b) {
    std::vector<E> s(nv);
    for (int i = 0; i < nv; ++i) s[i] = ring.add(a[i], b[i]);
    return ring.sub(eval_q(s), ring.add(eval_q(a), eval_q(b)));
  };

  std::vector<std::vector<E>> basis;
  for (int i = 0; i < nv; ++i) {
    std::vector<E> e(nv, ring.zero());
    e[i] = ring.one();
    basis.push_back(std::move(e));
  }

  QuadBlockDecomposition<R> out{{}, {}, Matrix<R>(ring, nv, nv), MPoly<R>(ring, nv)};
  std::vector<std::vector<E>> rank2_vecs;  // u_1, v_1, u_2, v_2, ...
  std::vector<std::vector<E>> rank1_vecs;

  while (!basis.empty()) {
    if (basis.size() == 1) {
      out.rank1.push_back(eval_q(basis[0]));
      rank1_vecs.push_back(basis[0]);
      break;
    }
    std::size_t nb = basis.size();
    Valuation minval = Valuation::infinity();
    std::vector<std::vector<E>> beta(nb, std::vector<E>(nb));
    for (std::size_t i = 0; i < nb; ++i) {
      for (std::size_t j = i; j < nb; ++j) {
        beta[i][j] = beta[j][i] = eval_beta(basis[i], basis[j]);
        minval = vmin(minval, ring.valuation(beta[i][j]));
      }
    }
    if (!minval.is_finite()) {
      // beta == 0 on the remaining space: the basis is already orthogonal
      for (const auto& b : basis) {
        out.rank1.push_back(eval_q(b));
        rank1_vecs.push_back(b);
      }
      break;
    }
    std::size_t diag_i = nb;
    for (std::size_t i = 0; i < nb && diag_i == nb; ++i)
      if (ring.valuation(beta[i][i]) == minval) diag_i = i;

    std::vector<std::vector<E>> next;
    if (diag_i != nb) {
      const auto& v = basis[diag_i];
      out.rank1.push_back(eval_q(v));
      rank1_vecs.push_back(v);
      for (std::size_t i = 0; i < nb; ++i) {
        if (i == diag_i) continue;
        E coef = ring.exact_div(beta[i][diag_i], beta[diag_i][diag_i]);
        std::vector<E> w(nv);
        for (int t = 0; t < nv; ++t) w[t] = ring.sub(basis[i][t], ring.mul(coef, v[t]));
        next.push_back(std::move(w));
      }
    } else {
      std::pair<std::size_t, std::size_t> off{nb, nb};
      for (std::size_t i = 0; i < nb && off.first == nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j)
          if (ring.valuation(beta[i][j]) == minval) {
            off = {i, j};
            break;
          }
      auto [iu, iv] = off;
      const auto& u = basis[iu];
      const auto& v = basis[iv];
      out.rank2.push_back({eval_q(u), beta[iu][iv], eval_q(v)});
      rank2_vecs.push_back(u);
      rank2_vecs.push_back(v);
      // the scaled 2x2 Gram matrix is invertible over R: the off-diagonal
      // entry attains the minimum valuation, the diagonal ones do not
      E det = ring.sub(ring.mul(beta[iu][iu], beta[iv][iv]), ring.mul(beta[iu][iv], beta[iu][iv]));
      for (std::size_t i = 0; i < nb; ++i) {
        if (i == iu || i == iv) continue;
        E bu = beta[i][iu], bv = beta[i][iv];
        E alpha = ring.exact_div(ring.sub(ring.mul(bu, beta[iv][iv]), ring.mul(bv, beta[iu][iv])), det);
        E gamma = ring.exact_div(ring.sub(ring.mul(bv, beta[iu][iu]), ring.mul(bu, beta[iu][iv])), det);
        std::vector<E> w(nv);
        for (int t = 0; t < nv; ++t)
          w[t] = ring.sub(basis[i][t], ring.add(ring.mul(alpha, u[t]), ring.mul(gamma, v[t])));
        next.push_back(std::move(w));
      }
    }
    basis = std::move(next);
  }

  // columns in block order: the rank-2 pairs, then the rank-1 vectors
  for (std::size_t j = 0; j < rank2_vecs.size(); ++j)
    for (int i = 0; i < nv; ++i) out.transform.at(i, j) = rank2_vecs[j][i];
  for (std::size_t j = 0; j < rank1_vecs.size(); ++j)
    for (int i = 0; i < nv; ++i) out.transform.at(i, rank2_vecs.size() + j) = rank1_vecs[j][i];

  int pairs = static_cast<int>(out.rank2.size());
  for (int i = 0; i < pairs; ++i) {
    Monomial mx(nv, 0), mxy(nv, 0), my(nv, 0);
    mx[2 * i] = 2;
    mxy[2 * i] = 1;
    mxy[2 * i + 1] = 1;
    my[2 * i + 1] = 2;
    out.block_form.add_term(mx, out.rank2[i][0]);
    out.block_form.add_term(mxy, out.rank2[i][1]);
    out.block_form.add_term(my, out.rank2[i][2]);
  }
  for (std::size_t j = 0; j < out.rank1.size(); ++j) {
    Monomial mz(nv, 0);
    mz[2 * pairs + static_cast<int>(j)] = 2;
    out.block_form.add_term(mz, out.rank1[j]);
  }

  if (!ring.is_unit(bareiss_det(out.transform)))
    throw Error("block decomposition produced a non-unimodular transform");
  if (!q.substitute_linear(out.transform).eq(out.block_form))
    throw Error("block decomposition failed to reconstruct the form");
  return out;
}

// ---------------------------------------------------------------------------
// quadric valuation bound: v(Delta) >= dim (H_k)_sing + 1, with Delta read
// off the Hessian determinant (Det for n odd, Det/2 for n even)
// ---------------------------------------------------------------------------

struct QuadricBoundReport {
  Valuation valuation = Valuation::finite(0);
  int sing_dimension = -1;
  bool bound_ok = false;
};

template <typename R>
QuadricBoundReport quadric_valuation_bound_check(const MPoly<R>& q, const AnalyzeOptions& aopts = {}) {
  static_assert(is_dvr_v<R>);
  const R& ring = q.ring();
  int n = q.nvars() - 1;
  if (!q.is_homogeneous(2)) throw InvalidInputError("expected a quadratic form");
  if (n % 2 == 0 && ring.is_zero(ring.from_int(2)))
    throw InvalidInputError("Det/2 normalization is not available in residue characteristic 2 over this ring");

  QuadricBoundReport report;
  Valuation vdet = ring.valuation(quadric_det(q));
  report.valuation = (n % 2 == 0) ? Valuation{vdet.v - ring.valuation(ring.from_int(2)).v, vdet.inf} : vdet;

  FqRing k = ring.residue_field();
  MPoly<FqRing> qbar = q.convert(k, [&](const typename R::Elem& c) { return k.from_int(ring.residue(c)); });
  report.sing_dimension = analyze_singular_locus(qbar, aopts).dimension;
  report.bound_ok = (report.sing_dimension == -1) ? (report.valuation == 0)
                                                  : (report.valuation >= report.sing_dimension + 1);
  return report;
}

// ---------------------------------------------------------------------------
// Gauss valuation and vmin
// ---------------------------------------------------------------------------

// minimum valuation of the coefficients
template <typename R>
Valuation gauss_valuation(const MPoly<R>& f) {
  static_assert(is_dvr_v<R>);
  if (f.is_zero()) throw ZeroPolynomialError("Gauss valuation of the zero polynomial");
  Valuation v = Valuation::infinity();
  for (const auto& [m, c] : f.terms()) v = vmin(v, f.ring().valuation(c));
  return v;
}

// The discriminant of the generic quadric in n+1 variables as an integer
// polynomial in its N = C(n+3, 2) coefficients (canonical descending-lex
// coefficient order): det of the generic Hessian, halved when n is even.
inline MPoly<ZZRing> symbolic_quadric_discriminant(int nvars) {
  if (nvars < 2 || nvars > 5) throw SizeLimitError("symbolic quadric path supports 2..5 variables");
  ZZRing zz;
  auto basis = monomials_of_degree(nvars, 2);
  int N = static_cast<int>(basis.size());
  auto var_index = [&](int i, int j) {
    Monomial m(nvars, 0);
    ++m[i];
    ++m[j];
    for (int k = 0; k < N; ++k)
      if (basis[k] == m) return k;
    throw Error("quadric monomial not found");
  };

  // entries of the generic Hessian as 1-term polynomials in the N coefficients
  std::vector<std::vector<MPoly<ZZRing>>> H(nvars, std::vector<MPoly<ZZRing>>(nvars, MPoly<ZZRing>(zz, N)));
  for (int i = 0; i < nvars; ++i) {
    for (int j = 0; j < nvars; ++j) {
      Monomial m(N, 0);
      m[var_index(i, j)] = 1;
      MPoly<ZZRing> entry(zz, N);
      entry.add_term(m, Int(i == j ? 2 : 1));
      H[i][j] = std::move(entry);
    }
  }

  // Leibniz expansion; at most 5! terms
  MPoly<ZZRing> det(zz, N);
  std::vector<int> perm(nvars);
  std::vector<bool> used(nvars, false);
  auto rec = [&](auto&& self, int row, int sign) -> void {
    if (row == nvars) {
      MPoly<ZZRing> t = MPoly<ZZRing>::constant(zz, N, Int(sign));
      for (int i = 0; i < nvars; ++i) t = t.mul(H[i][perm[i]]);
      det = det.add(t);
      return;
    }
    for (int c = 0; c < nvars; ++c) {
      if (used[c]) continue;
      used[c] = true;
      perm[row] = c;
      // each transposition flips the sign; count inversions incrementally
      int inversions = 0;
      for (int r = 0; r < row; ++r)
        if (perm[r] > c) ++inversions;
      self(self, row + 1, (inversions % 2 == 0) ? sign : -sign);
      used[c] = false;
    }
  };
  rec(rec, 0, 1);

  if (nvars % 2 == 1) {  // n = nvars - 1 even: Delta = Det / 2
    MPoly<ZZRing> halved(zz, N);
    for (const auto& [m, c] : det.terms()) {
      if (c % 2 != 0) throw Error("generic quadric determinant with odd coefficient");
      halved.add_term(m, c / 2);
    }
    return halved;
  }
  return det;
}

// Exact vmin for quadrics via the coefficient-minimum criterion: expand the
// symbolic discriminant at (canonical lift of a) + pi * x and take the Gauss
// valuation. a is a coefficient vector over the residue field, in the
// canonical quadric monomial order.
template <typename R>
Valuation vmin_exact_quadric(const std::vector<i64>& a, const R& ring, int nvars) {
  static_assert(is_dvr_v<R>);
  MPoly<ZZRing> delta = symbolic_quadric_discriminant(nvars);
  if (a.size() != static_cast<std::size_t>(delta.nvars()))
    throw InvalidInputError("quadric coefficient vector has the wrong length");
  MPoly<R> delta_r = delta.convert(ring, [&](const Int& c) { return ring.from_Int(c); });
  std::vector<typename R::Elem> lift;
  for (i64 v : a) lift.push_back(ring.lift(v));
  MPoly<R> shifted = delta_r.taylor_shift(lift);
  // scale every variable by pi: multiply each term by pi^degree
  typename R::Elem pi = ring.uniformizer();
  MPoly<R> scaled(ring, shifted.nvars());
  for (const auto& [m, c] : shifted.terms()) {
    typename R::Elem factor = c;
    for (int i = 0; i < total_degree(m); ++i) factor = ring.mul(factor, pi);
    scaled.add_term(m, factor);
  }
  return gauss_valuation(scaled);
}

// convenience: vmin of the quadric with the given residue form
template <typename R>
Valuation vmin_exact_quadric(const MPoly<FqRing>& qbar, const R& ring) {
  if (qbar.ring().m != 1 || qbar.ring().p != ring.residue_prime())
    throw InvalidInputError("vmin_exact_quadric needs the residue field of the DVR");
  std::vector<i64> a;
  for (const auto& c : coefficient_vector(qbar, 2)) a.push_back(c.c[0]);
  return vmin_exact_quadric(a, ring, qbar.nvars());
}

struct VminSampleResult {
  Valuation bound = Valuation::infinity();  // certified upper bound for vmin
  int trials = 0;
};

// Monte-Carlo upper bound for vmin at a general form: the minimum of
// v(Delta) over random lifts (canonical lift plus pi times uniform residues).
template <typename R>
VminSampleResult vmin_sample(const MPoly<FqRing>& fbar, int trials, const R& ring, std::uint64_t seed,
                             const DiscOptions& dopts = {}) {
  static_assert(is_dvr_v<R>);
  if (fbar.ring().m != 1 || fbar.ring().p != ring.residue_prime())
    throw InvalidInputError("vmin_sample needs the residue field of the DVR");
  int d = fbar.degree();
  auto basis = monomials_of_degree(fbar.nvars(), d);
  Rng rng(seed);
  i64 p = ring.residue_prime();
  VminSampleResult out;
  for (int t = 0; t < trials; ++t) {
    MPoly<R> lift(ring, fbar.nvars());
    for (const auto& m : basis) {
      typename R::Elem c = ring.lift(fbar.coeff(m).c[0]);
      if (t > 0) {
        typename R::Elem noise = ring.mul(ring.uniformizer(), ring.from_int(rng.range(0, p - 1)));
        c = ring.add(c, noise);
      }
      lift.add_term(m, c);
    }
    out.bound = vmin(out.bound, discriminant_valuation(lift, dopts));
    ++out.trials;
    if (out.bound == 0) break;  // cannot improve
  }
  return out;
}

// order of vanishing of f at the affine point a
template <typename R>
int multiplicity_at(const MPoly<R>& f, const std::vector<typename R::Elem>& a) {
  if (f.is_zero()) throw ZeroPolynomialError("multiplicity of the zero polynomial");
  return min_total_degree(f.taylor_shift(a));
}

}  // namespace discval
