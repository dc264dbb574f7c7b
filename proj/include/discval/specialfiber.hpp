#pragma once

// Analysis of the singular subscheme of a hypersurface over a finite field:
// its defining ideal {f, df/dx_0, ..., df/dx_n}, projective dimension, degree
// (as a zero-dimensional scheme), closed points grouped by Galois orbit, the
// span of the rational singular points, and an exact containment test for
// lines inside the singular locus.
//
// Closed points are located by scanning P^n(F_{p^m}) for m = 1, 2, ... and
// keeping the orbits of exact degree m. Each orbit's local multiplicity is
// computed over its own field, and the running total is played off against
// the scheme degree so the scan can stop as soon as everything is accounted
// for. If the extension bound or the enumeration budget cuts the scan short,
// the report says so and the point list is a lower bound.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "discval/groebner.hpp"
#include "discval/matrix.hpp"
#include "discval/mpoly.hpp"
#include "discval/rings.hpp"
#include "discval/util.hpp"

namespace discval {

// projective point, normalized so the first nonzero coordinate is 1
struct PointProj {
  std::vector<FqElem> coords;

  friend bool operator==(const PointProj& a, const PointProj& b) { return a.coords == b.coords; }
  friend bool operator<(const PointProj& a, const PointProj& b) { return a.coords < b.coords; }
};

inline PointProj normalize_point(const FqRing& field, std::vector<FqElem> coords) {
  std::size_t lead = coords.size();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!field.is_zero(coords[i])) {
      lead = i;
      break;
    }
  }
  if (lead == coords.size()) throw InvalidInputError("projective point needs a nonzero coordinate");
  FqElem inv = field.inv(coords[lead]);
  for (auto& c : coords) c = field.mul(c, inv);
  return PointProj{std::move(coords)};
}

inline int point_chart(const FqRing& field, const PointProj& p) {
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    if (!field.is_zero(p.coords[i])) return static_cast<int>(i);
  throw InvalidInputError("zero point");
}

inline PointProj frobenius_point(const FqRing& field, const PointProj& p) {
  PointProj q = p;
  for (auto& c : q.coords) c = field.frobenius(c);
  return q;
}

inline std::string point_str(const FqRing& field, const PointProj& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) s += ":";
    s += field.str(p.coords[i]);
  }
  return s + ")";
}

// coefficient embedding F_p -> F_{p^m}
inline MPoly<FqRing> embed_poly(const MPoly<FqRing>& f, const FqRing& target) {
  if (f.ring().m != 1 || f.ring().p != target.p)
    throw InvalidInputError("embed_poly expects a prime base field with matching characteristic");
  return f.convert(target, [&](const FqElem& c) { return target.from_int(c.c[0]); });
}

// {f, df/dx_0, ..., df/dx_n}; f is redundant when char does not divide deg f
// (Euler relation) but is always included
template <typename R>
std::vector<MPoly<R>> singular_subscheme(const MPoly<R>& f) {
  if (!f.is_homogeneous()) throw InvalidInputError("singular_subscheme expects a homogeneous form");
  std::vector<MPoly<R>> gens{f};
  for (int i = 0; i < f.nvars(); ++i) gens.push_back(f.derivative(i));
  return gens;
}

enum class LineFlag { False, True, Unknown };

inline std::string line_flag_str(LineFlag f) {
  switch (f) {
    case LineFlag::False: return "false";
    case LineFlag::True: return "true";
    default: return "unknown";
  }
}

struct ClosedPoint {
  int field_degree = 1;             // residue degree m of the closed point
  FqRing field;                     // F_{p^m} where the representative lives
  PointProj rep;                    // lexicographically smallest orbit member
  long long local_multiplicity = 1; // length of the local ring at the point
};

struct SingularLocusReport {
  int dimension = -1;   // -1: special fiber is smooth
  long long degree = 0; // total multiplicity; meaningful when dimension == 0
  std::vector<ClosedPoint> closed_points;
  long long r = 0;  // number of closed points found (dimension == 0)
  bool points_possibly_incomplete = false;
  std::vector<PointProj> rational_points;  // k-rational singular points
  int span_dim = -1;  // projective span of the rational singular points
  LineFlag contains_line = LineFlag::False;
};

struct AnalyzeOptions {
  int m_max = 4;
  long long max_enum_points = 1LL << 24;
};

namespace detail {

template <typename F>
bool vanishes_at(const std::vector<MPoly<F>>& gens, const std::vector<FqElem>& coords) {
  for (const auto& g : gens)
    if (!g.ring().is_zero(g.evaluate(coords))) return false;
  return true;
}

// Scan one extension field for solution points whose Galois orbit has size
// exactly m; calls sink(representative).
template <typename Sink>
void scan_projective_points(const FqRing& field, const std::vector<MPoly<FqRing>>& gens, int nvars,
                            int exact_degree, Sink&& sink) {
  std::uint64_t q = 1;
  for (int i = 0; i < field.m; ++i) q *= static_cast<std::uint64_t>(field.p);
  std::set<PointProj> visited;
  std::vector<FqElem> coords(nvars);
  for (int chart = 0; chart < nvars; ++chart) {
    int free_vars = nvars - chart - 1;
    std::uint64_t count = 1;
    for (int i = 0; i < free_vars; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      for (int i = 0; i < chart; ++i) coords[i] = field.zero();
      coords[chart] = field.one();
      std::uint64_t rest = idx;
      for (int i = 0; i < free_vars; ++i) {
        coords[chart + 1 + i] = field.elem_at(rest % q);
        rest /= q;
      }
      if (!vanishes_at(gens, coords)) continue;
      PointProj p{coords};
      if (visited.count(p)) continue;
      // orbit under Frobenius
      std::vector<PointProj> orbit{p};
      PointProj cur = frobenius_point(field, p);
      while (!(cur == p)) {
        orbit.push_back(cur);
        cur = frobenius_point(field, cur);
      }
      for (const auto& o : orbit) visited.insert(o);
      if (static_cast<int>(orbit.size()) != exact_degree) continue;
      sink(*std::min_element(orbit.begin(), orbit.end()));
    }
  }
}

}  // namespace detail

// ideal of the singular subscheme restricted to the chart of p and recentred
// at p; over the field of p
inline std::vector<MPoly<FqRing>> localized_ideal_at(const FqRing& field,
                                                     const std::vector<MPoly<FqRing>>& gens,
                                                     const PointProj& p) {
  int chart = point_chart(field, p);
  std::vector<FqElem> shift;
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    if (static_cast<int>(i) != chart) shift.push_back(p.coords[i]);
  std::vector<MPoly<FqRing>> out;
  for (const auto& g : gens) out.push_back(g.dehomogenize(chart, shift));
  return out;
}

// dim_k of the local ring at the origin: stabilized colength of I + m^s.
// nullopt if it fails to stabilize within the cap (the origin is then not an
// isolated point, or is heavier than the cap allows).
template <typename F>
std::optional<long long> local_multiplicity_at_origin(const std::vector<MPoly<F>>& gens, int cap) {
  if (gens.empty()) throw InvalidInputError("empty ideal");
  const F& ring = gens[0].ring();
  int nvars = gens[0].nvars();
  long long prev = -1;
  for (int s = 1; s <= cap; ++s) {
    std::vector<MPoly<F>> padded = gens;
    for (const auto& m : monomials_of_degree(nvars, s)) {
      MPoly<F> t(ring, nvars);
      t.add_term(m, ring.one());
      padded.push_back(std::move(t));
    }
    auto gb = groebner_basis(padded, MonomialOrder::GrevLex);
    auto cnt = standard_monomial_count(gb, nvars);
    if (!cnt) throw Error("truncated ideal must be zero-dimensional");
    if (*cnt == prev) return prev;
    prev = *cnt;
  }
  return std::nullopt;
}

namespace detail {

// Is V(gens + (x_chart)) projectively empty? If so every point of V(gens)
// lies in the chart, and the affine colength there is the full degree.
inline std::optional<long long> degree_via_chart(const std::vector<MPoly<FqRing>>& gens, int nvars,
                                                 int chart) {
  const FqRing& ring = gens.at(0).ring();
  std::vector<MPoly<FqRing>> at_infinity = gens;
  at_infinity.push_back(MPoly<FqRing>::variable(ring, nvars, chart));
  auto gb_inf = groebner_basis(at_infinity, MonomialOrder::GrevLex);
  if (ideal_dimension(gb_inf, nvars, /*projective=*/true) != -1) return std::nullopt;
  std::vector<MPoly<FqRing>> affine;
  std::vector<FqElem> origin(nvars - 1, ring.zero());
  for (const auto& g : gens) affine.push_back(g.dehomogenize(chart, origin));
  auto gb = groebner_basis(affine, MonomialOrder::GrevLex);
  auto cnt = standard_monomial_count(gb, nvars - 1);
  if (!cnt) throw Error("chart containing a finite locus must have finite colength");
  return cnt;
}

}  // namespace detail

// Degree (total multiplicity) of a zero-dimensional projective subscheme:
// find a hyperplane certified to miss the locus, move it to infinity, and
// count standard monomials in the complementary chart. Coordinate charts are
// tried first, then seeded random changes of variables; if the base field is
// too small to provide an avoiding hyperplane, scalars are extended (the
// degree is invariant under base change).
inline long long zero_dim_degree(const std::vector<MPoly<FqRing>>& gens, int nvars) {
  const FqRing& base = gens.at(0).ring();
  Rng rng(fnv1a("zero_dim_degree") ^ static_cast<std::uint64_t>(base.p));
  for (int ext_deg = 1; ext_deg <= 3; ++ext_deg) {
    FqRing field = (ext_deg == 1) ? base : build_extension_field(base.p, ext_deg * base.m);
    std::vector<MPoly<FqRing>> egens;
    for (const auto& g : gens) egens.push_back(ext_deg == 1 ? g : embed_poly(g, field));
    for (int chart = 0; chart < nvars; ++chart) {
      if (auto d = detail::degree_via_chart(egens, nvars, chart)) return *d;
    }
    std::uint64_t q = 1;
    for (int i = 0; i < field.m; ++i) q *= static_cast<std::uint64_t>(field.p);
    for (int attempt = 0; attempt < 16; ++attempt) {
      Matrix<FqRing> t(field, nvars, nvars);
      for (int i = 0; i < nvars; ++i)
        for (int j = 0; j < nvars; ++j) t.at(i, j) = field.elem_at(rng.below(q));
      if (field.is_zero(bareiss_det(t))) continue;
      std::vector<MPoly<FqRing>> moved;
      for (const auto& g : egens) moved.push_back(g.substitute_linear(t));
      if (auto d = detail::degree_via_chart(moved, nvars, nvars - 1)) return *d;
    }
  }
  throw Error("could not certify a hyperplane avoiding the singular locus");
}

// exact containment test: the line through p and q lies in V(gens)?
inline bool line_in_ideal(const FqRing& field, const std::vector<MPoly<FqRing>>& gens,
                          const PointProj& p, const PointProj& q) {
  int nvars = static_cast<int>(p.coords.size());
  std::vector<MPoly<FqRing>> images;
  for (int i = 0; i < nvars; ++i) {
    MPoly<FqRing> li(field, 2);
    li.add_term(Monomial{1, 0}, p.coords[i]);
    li.add_term(Monomial{0, 1}, q.coords[i]);
    images.push_back(std::move(li));
  }
  for (const auto& g : gens) {
    if (!compose(g, images).is_zero()) return false;
  }
  return true;
}

inline SingularLocusReport analyze_singular_locus(const MPoly<FqRing>& f, const AnalyzeOptions& opts = {}) {
  const FqRing& base = f.ring();
  if (base.m != 1) throw InvalidInputError("analyze_singular_locus needs a prime base field");
  int nvars = f.nvars();
  i64 p = base.p;

  SingularLocusReport report;
  std::vector<MPoly<FqRing>> gens = singular_subscheme(f);
  auto gb = groebner_basis(gens, MonomialOrder::GrevLex);
  report.dimension = ideal_dimension(gb, nvars, /*projective=*/true);
  if (report.dimension == -1) return report;

  // rational points (always wanted: span, line candidates, degree-1 orbits)
  Int rational_count = (int_pow(Int(p), static_cast<unsigned long long>(nvars)) - 1) / (Int(p) - 1);
  if (rational_count > Int(opts.max_enum_points))
    throw BudgetExceededError("P^n(F_p) scan of " + rational_count.str() + " points exceeds the budget");
  detail::scan_projective_points(base, gens, nvars, 1,
                                 [&](const PointProj& pt) { report.rational_points.push_back(pt); });

  if (report.dimension == 0) {
    report.degree = zero_dim_degree(gens, nvars);
    long long remaining = report.degree;
    int mult_cap = static_cast<int>(report.degree) + 2;
    for (int m = 1; m <= opts.m_max && remaining > 0; ++m) {
      if (m > remaining) break;  // a degree-m point would contribute at least m
      FqRing ext = (m == 1) ? base : build_extension_field(p, m);
      Int points = (int_pow(Int(p), static_cast<unsigned long long>(m * nvars)) - 1) /
                   (int_pow(Int(p), static_cast<unsigned long long>(m)) - 1);
      if (points > Int(opts.max_enum_points)) {
        report.points_possibly_incomplete = true;
        break;
      }
      std::vector<MPoly<FqRing>> ext_gens;
      for (const auto& g : gens) ext_gens.push_back(m == 1 ? g : embed_poly(g, ext));
      std::vector<PointProj> reps;
      if (m == 1) {
        reps = report.rational_points;
      } else {
        detail::scan_projective_points(ext, ext_gens, nvars, m,
                                       [&](const PointProj& pt) { reps.push_back(pt); });
      }
      for (const auto& rep : reps) {
        auto local = localized_ideal_at(ext, ext_gens, rep);
        auto mult = local_multiplicity_at_origin(local, mult_cap);
        if (!mult) throw Error("local multiplicity failed to stabilize on a finite locus");
        ClosedPoint cp;
        cp.field_degree = m;
        cp.field = ext;
        cp.rep = rep;
        cp.local_multiplicity = *mult;
        report.closed_points.push_back(cp);
        remaining -= static_cast<long long>(m) * cp.local_multiplicity;
      }
    }
    if (remaining > 0) report.points_possibly_incomplete = true;
    report.r = static_cast<long long>(report.closed_points.size());
  } else {
    report.degree = -1;
    report.r = -1;
  }

  // span of the rational singular points
  if (!report.rational_points.empty()) {
    Matrix<FqRing> coords(base, report.rational_points.size(), nvars);
    for (std::size_t i = 0; i < report.rational_points.size(); ++i)
      for (int j = 0; j < nvars; ++j) coords.at(i, j) = report.rational_points[i].coords[j];
    report.span_dim = static_cast<int>(matrix_rank(coords)) - 1;
  }

  // line containment: finite locus cannot contain a line; otherwise prove or
  // report unknown
  if (report.dimension <= 0) {
    report.contains_line = LineFlag::False;
  } else {
    report.contains_line = LineFlag::Unknown;
    std::vector<std::pair<PointProj, PointProj>> candidates;
    for (std::size_t i = 0; i < report.rational_points.size() && i < 24; ++i)
      for (std::size_t j = i + 1; j < report.rational_points.size() && j < 24; ++j)
        candidates.emplace_back(report.rational_points[i], report.rational_points[j]);
    for (int i = 0; i < nvars; ++i) {
      for (int j = i + 1; j < nvars; ++j) {
        std::vector<FqElem> a(nvars, base.zero()), b(nvars, base.zero());
        a[i] = base.one();
        b[j] = base.one();
        candidates.emplace_back(PointProj{a}, PointProj{b});
      }
    }
    for (const auto& [a, b] : candidates) {
      if (a == b) continue;
      if (line_in_ideal(base, gens, a, b)) {
        report.contains_line = LineFlag::True;
        break;
      }
    }
  }
  return report;
}

}  // namespace discval
