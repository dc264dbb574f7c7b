#pragma once

// Discriminant of a homogeneous form f of degree d in n+1 variables:
//
//   Delta(f) := Res(df/dx_0, ..., df/dx_n) / d^a,
//   a = ((d-1)^{n+1} - (-1)^{n+1}) / d,
//
// an integer polynomial in the coefficients of f, homogeneous of degree
// (n+1)(d-1)^n, vanishing exactly when the hypersurface f = 0 is not smooth.
// For d = 2 this normalization gives +-det of the Hessian matrix (n odd)
// resp. +-det/2 (n even). The overall sign is not normalized.
//
// When the chosen Macaulay minor degenerates, the computation retries under
// random unimodular integer changes of variables (which fix Delta up to
// sign); the retry sequence is seeded from the input so results are
// deterministic.

#include <string>
#include <vector>

#include "discval/macaulay.hpp"
#include "discval/matrix.hpp"
#include "discval/mpoly.hpp"
#include "discval/rings.hpp"
#include "discval/util.hpp"

namespace discval {

struct DiscOptions {
  std::size_t max_matrix = kDefaultMaxMacaulaySize;
  int retries = 8;
};

template <typename R>
struct DiscriminantResult {
  typename R::Elem value;
  Valuation valuation;  // meaningful for DVR coefficients only
  bool has_valuation = false;
  int n = 0;
  int d = 0;
  int retries_used = 0;
};

inline Int discriminant_degree(int n, int d) {
  return Int(n + 1) * int_pow(Int(d - 1), static_cast<unsigned long long>(n));
}

inline Int macaulay_normalization_exponent(int n, int d) {
  Int num = int_pow(Int(d - 1), static_cast<unsigned long long>(n + 1));
  num -= (n % 2 == 1) ? Int(1) : Int(-1);  // (-1)^{n+1}
  return num / d;
}

namespace detail {

template <typename R>
typename R::Elem divide_by_positive_int(const R& ring, const typename R::Elem& value, const Int& k) {
  typename R::Elem ke = ring.from_Int(k);
  if (ring.is_zero(ke))
    throw InvalidInputError("normalization constant " + k.str() + " vanishes in " + ring.tag() +
                            "; discriminants with char | d are not supported over this ring");
  try {
    return ring.exact_div(value, ke);
  } catch (const Error& e) {
    throw NonIntegralNormalizationError(std::string("Res / d^a is not in the coefficient ring: ") + e.what());
  }
}

template <typename R>
Matrix<R> to_ring_matrix(const R& ring, const Matrix<ZZRing>& m) {
  Matrix<R> r(ring, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = ring.from_Int(m.at(i, j));
  return r;
}

}  // namespace detail

template <typename R>
DiscriminantResult<R> discriminant(const MPoly<R>& f, const DiscOptions& opts = {});

namespace detail {

// Rational coefficients route through the integers: clearing denominators
// multiplies Delta by a known power, and Bareiss over plain integers avoids
// the per-step gcd that rational arithmetic pays in exact division.
template <typename R>
DiscriminantResult<R> discriminant_via_integers(const MPoly<R>& f, const DiscOptions& opts) {
  static_assert(std::is_same_v<typename R::Elem, Rat>);
  const R& ring = f.ring();
  Int L = 1;
  for (const auto& [m, c] : f.terms()) L = boost::multiprecision::lcm(L, den(c));
  ZZRing zz;
  MPoly<ZZRing> g = f.convert(zz, [&](const Rat& c) { return num(c) * (L / den(c)); });
  DiscriminantResult<ZZRing> inner = discriminant(g, opts);

  DiscriminantResult<R> result;
  result.n = inner.n;
  result.d = inner.d;
  result.retries_used = inner.retries_used;
  Int scale = int_pow(L, discriminant_degree(inner.n, inner.d).template convert_to<unsigned long long>());
  result.value = Rat(inner.value) / Rat(scale);
  if constexpr (is_dvr_v<R>) {
    result.valuation = ring.valuation(result.value);
    result.has_valuation = true;
  }
  return result;
}

}  // namespace detail

template <typename R>
DiscriminantResult<R> discriminant(const MPoly<R>& f, const DiscOptions& opts) {
  const R& ring = f.ring();
  int nvars = f.nvars();
  int n = nvars - 1;
  int d = f.degree();
  if (n < 1) throw InvalidInputError("need at least two variables");
  if (d < 2 || !f.is_homogeneous(d)) throw InvalidInputError("input must be homogeneous of degree >= 2");

  if constexpr (std::is_same_v<R, PLocalRing> || std::is_same_v<R, QQRing>) {
    return detail::discriminant_via_integers(f, opts);
  }

  DiscriminantResult<R> result;
  result.n = n;
  result.d = d;

  std::vector<MPoly<R>> partials;
  bool zero_partial = false;
  for (int i = 0; i < nvars; ++i) {
    partials.push_back(f.derivative(i));
    if (partials.back().is_zero()) zero_partial = true;
  }

  typename R::Elem res = ring.zero();
  if (zero_partial) {
    // n+1 forms with one identically zero always share a projective zero
    res = ring.zero();
  } else {
    Rng seeds(fnv1a(ring.tag() + "|" + f.str()));
    int attempt = 0;
    for (;;) {
      try {
        if (attempt == 0) {
          res = macaulay_resultant(partials, opts.max_matrix);
        } else {
          Matrix<R> T = detail::to_ring_matrix(ring, random_unimodular(nvars, seeds));
          MPoly<R> g = f.substitute_linear(T);
          std::vector<MPoly<R>> gpart;
          for (int i = 0; i < nvars; ++i) gpart.push_back(g.derivative(i));
          res = macaulay_resultant(gpart, opts.max_matrix);
        }
        break;
      } catch (const DegenerateMinorError&) {
        if (++attempt > opts.retries) throw;
      }
    }
    result.retries_used = attempt;
  }

  Int a = macaulay_normalization_exponent(n, d);
  result.value = (a == 0) ? res : detail::divide_by_positive_int(ring, res, int_pow(Int(d), a.convert_to<unsigned long long>()));
  if constexpr (is_dvr_v<R>) {
    result.valuation = ring.valuation(result.value);
    result.has_valuation = true;
  }
  return result;
}

template <typename R>
Valuation discriminant_valuation(const MPoly<R>& f, const DiscOptions& opts = {}) {
  static_assert(is_dvr_v<R>, "valuations need a DVR");
  return discriminant(f, opts).valuation;
}

// Hessian matrix of second partials; over a quadratic form this is the
// constant matrix 2A whose determinant governs the quadric discriminant.
template <typename R>
Matrix<R> hessian_matrix(const MPoly<R>& q) {
  const R& ring = q.ring();
  int nvars = q.nvars();
  Matrix<R> h(ring, nvars, nvars);
  for (int i = 0; i < nvars; ++i) {
    MPoly<R> di = q.derivative(i);
    for (int j = 0; j < nvars; ++j) {
      MPoly<R> dij = di.derivative(j);
      if (dij.degree() > 0) throw InvalidInputError("hessian_matrix expects a quadratic form");
      h.at(i, j) = dij.coeff(Monomial(nvars, 0));
    }
  }
  return h;
}

// det of the Hessian of a quadratic form: the "Det" whose relation to Delta
// is Det (n odd) resp. Det/2 (n even), up to sign.
template <typename R>
typename R::Elem quadric_det(const MPoly<R>& q) {
  return bareiss_det(hessian_matrix(q));
}

}  // namespace discval
