#pragma once

// The theorem-verification harness: reproducible suites that generate
// instances, run them through the discriminant / special-fiber / local
// analysis machinery, and record pass / fail / skip per instance. Failures
// carry enough context (ring tag + polynomial) to replay through the
// single-instance CLI commands. Instance problems are recorded, never
// thrown; only configuration errors escape.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "discval/constructions.hpp"
#include "discval/discriminant.hpp"
#include "discval/localanalysis.hpp"
#include "discval/mpoly.hpp"
#include "discval/parse.hpp"
#include "discval/rings.hpp"
#include "discval/specialfiber.hpp"
#include "discval/util.hpp"

namespace discval {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 0;  // 0: suite default
  int mmax = 4;
  std::size_t max_matrix = kDefaultMaxMacaulaySize;
  long long max_enum = 1LL << 24;
  i64 prime = 0;              // 0: suite default
  std::string ring_kind = "Zp";  // Zp or Fpt, for the DVR-parametrized suites
};

struct VerifyInstance {
  int index = 0;
  std::string description;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  int instances = 0;
  int passed = 0;
  std::vector<VerifyInstance> failures;
  std::vector<VerifyInstance> skipped;
  std::string summary;

  bool ok() const { return failures.empty(); }
  bool all_skipped() const { return instances > 0 && static_cast<int>(skipped.size()) == instances; }

  void record_pass() {
    ++instances;
    ++passed;
  }
  void record_fail(const std::string& description, const std::string& detail) {
    failures.push_back({instances, description, detail});
    ++instances;
  }
  void record_skip(const std::string& description, const std::string& reason) {
    skipped.push_back({instances, description, reason});
    ++instances;
  }
};

namespace gen {

inline Int rand_int(Rng& rng, long long lo, long long hi) { return Int(rng.range(lo, hi)); }

inline MPoly<ZZRing> random_int_form(int nvars, int d, Rng& rng, long long bound) {
  ZZRing zz;
  MPoly<ZZRing> f(zz, nvars);
  do {
    f = random_homogeneous(zz, nvars, d, rng, [&](Rng& r) { return rand_int(r, -bound, bound); });
  } while (f.is_zero());
  return f;
}

inline MPoly<FqRing> random_field_form(const FqRing& k, int nvars, int d, Rng& rng) {
  MPoly<FqRing> f(k, nvars);
  do {
    f = random_homogeneous(k, nvars, d, rng, [&](Rng& r) { return k.from_int(r.range(0, k.p - 1)); });
  } while (f.is_zero());
  return f;
}

template <typename R>
MPoly<R> lift_with_noise(const MPoly<FqRing>& fbar, const R& ring, Rng& rng, bool noisy = true) {
  i64 p = ring.residue_prime();
  MPoly<R> f(ring, fbar.nvars());
  for (const auto& m : monomials_of_degree(fbar.nvars(), fbar.degree())) {
    typename R::Elem c = ring.lift(fbar.coeff(m).c[0]);
    if (noisy) c = ring.add(c, ring.mul(ring.uniformizer(), ring.from_int(rng.range(0, p - 1))));
    f.add_term(m, c);
  }
  return f;
}

template <typename R>
MPoly<FqRing> residue_poly(const MPoly<R>& f) {
  FqRing k = f.ring().residue_field();
  const R& ring = f.ring();
  return f.convert(k, [&](const typename R::Elem& c) { return k.from_int(ring.residue(c)); });
}

inline PointProj random_point(const FqRing& k, int nvars, Rng& rng) {
  std::uint64_t q = 1;
  for (int i = 0; i < k.m; ++i) q *= static_cast<std::uint64_t>(k.p);
  for (;;) {
    std::vector<FqElem> c(nvars);
    bool nonzero = false;
    for (auto& x : c) {
      x = k.elem_at(rng.below(q));
      nonzero = nonzero || !k.is_zero(x);
    }
    if (nonzero) return normalize_point(k, c);
  }
}

inline std::vector<PointProj> random_distinct_points(const FqRing& k, int nvars, int r, Rng& rng) {
  std::set<PointProj> pts;
  while (static_cast<int>(pts.size()) < r) pts.insert(random_point(k, nvars, rng));
  return {pts.begin(), pts.end()};
}

// linear form vanishing at P (coefficients of a hyperplane through P)
inline MPoly<FqRing> linear_form_through(const FqRing& k, const PointProj& p, Rng& rng) {
  int nvars = static_cast<int>(p.coords.size());
  std::uint64_t q = 1;
  for (int i = 0; i < k.m; ++i) q *= static_cast<std::uint64_t>(k.p);
  for (;;) {
    // random coefficients orthogonal to P: pick all but the pivot freely
    int pivot = point_chart(k, p);
    std::vector<FqElem> a(nvars);
    FqElem dot = k.zero();
    bool nonzero = false;
    for (int i = 0; i < nvars; ++i) {
      if (i == pivot) continue;
      a[i] = k.elem_at(rng.below(q));
      nonzero = nonzero || !k.is_zero(a[i]);
      dot = k.add(dot, k.mul(a[i], p.coords[i]));
    }
    if (!nonzero) continue;
    a[pivot] = k.neg(dot);  // p.coords[pivot] == 1
    MPoly<FqRing> l(k, nvars);
    for (int i = 0; i < nvars; ++i) {
      Monomial m(nvars, 0);
      m[i] = 1;
      l.add_term(m, a[i]);
    }
    return l;
  }
}

}  // namespace gen

// ---------------------------------------------------------------------------
// prop3_1: Macaulay discriminant of quadrics vs the Hessian determinant
// ---------------------------------------------------------------------------

inline VerifyReport suite_prop3_1(const SuiteOptions& opts) {
  VerifyReport report;
  report.suite = "prop3_1";
  int trials = opts.trials > 0 ? opts.trials : 100;
  Rng rng(opts.seed);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < trials; ++t) {
      MPoly<ZZRing> f = gen::random_int_form(n + 1, 2, rng, 9);
      std::string desc = "ZZ quadric n=" + std::to_string(n) + " f=" + f.str();
      try {
        Int delta = discriminant(f, {opts.max_matrix}).value;
        Int det = quadric_det(f);
        bool ok = (n % 2 == 1) ? (delta == det || delta == -det)
                               : (2 * delta == det || 2 * delta == -det);
        ok ? report.record_pass() : report.record_fail(desc, "delta=" + delta.str() + " det=" + det.str());
      } catch (const Error& e) {
        report.record_skip(desc, e.what());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// degree_scaling: Delta(lambda f) = lambda^{(n+1)(d-1)^n} Delta(f)
// ---------------------------------------------------------------------------

inline VerifyReport suite_degree_scaling(const SuiteOptions& opts) {
  VerifyReport report;
  report.suite = "degree_scaling";
  int trials = opts.trials > 0 ? opts.trials : 20;
  Rng rng(opts.seed);
  const std::vector<std::pair<int, int>> shapes{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  for (auto [n, d] : shapes) {
    for (int t = 0; t < trials; ++t) {
      MPoly<ZZRing> f = gen::random_int_form(n + 1, d, rng, 3);
      std::string desc = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " f=" + f.str();
      try {
        Int base = discriminant(f, {opts.max_matrix}).value;
        Int expo = discriminant_degree(n, d);
        bool ok = true;
        std::string detail;
        for (long long lambda : {2LL, 3LL, 5LL}) {
          Int scaled = discriminant(f.scale(Int(lambda)), {opts.max_matrix}).value;
          Int expected = int_pow(Int(lambda), expo.convert_to<unsigned long long>()) * base;
          if (scaled != expected) {
            ok = false;
            detail = "lambda=" + std::to_string(lambda);
            break;
          }
        }
        ok ? report.record_pass() : report.record_fail(desc, detail);
      } catch (const Error& e) {
        report.record_skip(desc, e.what());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// smooth_criterion: Delta mod p = 0 iff the special fiber has a singular
// point (GB-certified; the point search must agree whenever it completes)
// ---------------------------------------------------------------------------

inline VerifyReport suite_smooth_criterion(const SuiteOptions& opts) {
  VerifyReport report;
  report.suite = "smooth_criterion";
  int trials = opts.trials > 0 ? opts.trials : 50;
  Rng rng(opts.seed);
  ZZRing zz;
  AnalyzeOptions aopts{opts.mmax, opts.max_enum};
  for (i64 p : {5LL, 7LL}) {
    FqRing k(p, 1);
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
      for (int t = 0; t < trials; ++t) {
        MPoly<FqRing> fbar = gen::random_field_form(k, n + 1, d, rng);
        std::string desc = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                            " d=" + std::to_string(d) + " f=" + fbar.str();
        try {
          MPoly<ZZRing> lift = fbar.convert(zz, [&](const FqElem& c) { return Int(c.c[0]); });
          Int delta = discriminant(lift, {opts.max_matrix}).value;
          bool delta_zero_mod_p = (delta % p == 0);
          SingularLocusReport rep = analyze_singular_locus(fbar, aopts);
          bool found = rep.dimension >= 1 || (rep.dimension == 0 && rep.r >= 1);
          if (rep.dimension == 0 && rep.r == 0 && rep.points_possibly_incomplete) {
            report.record_skip(desc, "enumeration incomplete");
            continue;
          }
          (delta_zero_mod_p == found)
              ? report.record_pass()
              : report.record_fail(desc, std::string("delta ") + (delta_zero_mod_p ? "0" : "nonzero") +
                                              " mod p but locus " + (found ? "nonempty" : "empty"));
        } catch (const Error& e) {
          report.record_skip(desc, e.what());
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// thm1_1: the valuation-1 equivalence, three instance families
// ---------------------------------------------------------------------------

template <typename R>
void thm11_random_direction(VerifyReport& report, const R& ring, int n, int d, int trials,
                            Rng& rng, const SuiteOptions& opts) {
  FqRing k = ring.residue_field();
  AnalyzeOptions aopts{opts.mmax, opts.max_enum};
  DiscOptions dopts{opts.max_matrix};
  for (int t = 0; t < trials; ++t) {
    MPoly<FqRing> fbar = gen::random_field_form(k, n + 1, d, rng);
    MPoly<R> f = gen::lift_with_noise(fbar, ring, rng);
    std::string desc = ring.tag() + " f=" + f.str();
    try {
      Theorem11Report rep = check_theorem_1_1(f, aopts, dopts);
      if (rep.valuation == 1) {
        bool confirmed = rep.regular == Regularity::Regular && rep.nondeg_single_point &&
                         rep.equivalence_holds && *rep.equivalence_holds;
        confirmed ? report.record_pass()
                  : report.record_fail(desc, "v=1 but checker did not confirm (regular=" +
                                                 regularity_str(rep.regular) + " ndp=" +
                                                 std::to_string(rep.nondeg_single_point) + ")");
      } else if (!rep.equivalence_holds) {
        report.record_skip(desc, "equivalence undetermined (v=" + rep.valuation.str() + ")");
      } else {
        *rep.equivalence_holds ? report.record_pass()
                               : report.record_fail(desc, "equivalence failed at v=" + rep.valuation.str());
      }
    } catch (const Error& e) {
      report.record_skip(desc, e.what());
    }
  }
}

template <typename R>
void thm11_constructed_direction(VerifyReport& report, const R& ring, int count, Rng& rng,
                                 const SuiteOptions& opts) {
  i64 p = ring.residue_prime();
  DiscOptions dopts{opts.max_matrix};
  AnalyzeOptions aopts{opts.mmax, opts.max_enum};
  if (p == 2) {
    // the classical-oracle equality of valuations needs the 2-power unit,
    // and odd-dimensional cones cannot reach valuation 1 here
    for (int t = 0; t < count; ++t)
      report.record_skip("constructed instance", "constructed families need odd residue characteristic");
    return;
  }
  for (int t = 0; t < count; ++t) {
    bool use_weierstrass = (t % 2 == 0);
    std::optional<MPoly<R>> f;
    std::string kind;
    if (use_weierstrass) {
      kind = "weierstrass";
      for (int tries = 0; tries < 200 && !f; ++tries) {
        auto a1 = ring.from_int(rng.range(0, p - 1));
        auto a2 = ring.from_int(rng.range(0, p - 1));
        auto a3 = ring.from_int(rng.range(0, p - 1));
        auto a4 = ring.from_int(rng.range(0, p - 1));
        auto a6 = ring.mul(ring.uniformizer(), ring.from_int(rng.range(0, p - 1)));
        auto wc = weierstrass_cubic(ring, a1, a2, a3, a4, a6);
        if (ring.valuation(wc.classical_discriminant) == 1) f = wc.form;
      }
    } else {
      kind = "perturbed cone";
      int n = 2 + static_cast<int>(rng.below(2));  // n in {2, 3}
      MPoly<R> q(ring, n + 1);
      for (int i = 0; i < n; ++i) {
        Monomial m(n + 1, 0);
        m[i] = 2;
        q.add_term(m, ring.one());
      }
      Monomial mn(n + 1, 0);
      mn[n] = 2;
      q.add_term(mn, ring.mul(ring.uniformizer(), ring.from_int(rng.range(1, p - 1))));
      for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          Monomial m(n + 1, 0);
          ++m[i];
          ++m[j];
          q.add_term(m, ring.mul(ring.uniformizer(), ring.from_int(rng.range(0, p - 1))));
        }
      }
      f = q;
    }
    if (!f) {
      report.record_skip(kind, "no valuation-1 instance found in the search budget");
      continue;
    }
    std::string desc = ring.tag() + " " + kind + " f=" + f->str();
    try {
      Theorem11Report rep = check_theorem_1_1(*f, aopts, dopts);
      bool ok = rep.valuation == 1 && rep.equivalence_holds && *rep.equivalence_holds;
      ok ? report.record_pass()
         : report.record_fail(desc, "v=" + rep.valuation.str() + " equivalence=" +
                                        (rep.equivalence_holds ? (*rep.equivalence_holds ? "true" : "false")
                                                               : "undetermined"));
    } catch (const Error& e) {
      report.record_skip(desc, e.what());
    }
  }
}

inline void thm11_char2_obstruction(VerifyReport& report, int trials, Rng& rng, const SuiteOptions& opts) {
  PLocalRing z2(2);
  FqRing k2(2, 1);
  DiscOptions dopts{opts.max_matrix};
  for (int t = 0; t < trials; ++t) {
    int n = (rng.below(2) == 0) ? 1 : 3;
    int d = 2 + static_cast<int>(rng.below(2));
    // singular reduction: square of a linear form times a random form
    PointProj pt = gen::random_point(k2, n + 1, rng);
    MPoly<FqRing> l = gen::linear_form_through(k2, pt, rng);
    MPoly<FqRing> fbar(k2, n + 1);
    if (d == 2) {
      fbar = l.mul(l);
    } else {
      MPoly<FqRing> h = gen::random_field_form(k2, n + 1, d - 2, rng);
      fbar = l.mul(l).mul(h);
    }
    if (fbar.is_zero()) {
      report.record_skip("char2 instance", "degenerate sample");
      continue;
    }
    MPoly<PLocalRing> f = gen::lift_with_noise(fbar, z2, rng);
    std::string desc = "Zp:2 n=" + std::to_string(n) + " f=" + f.str();
    try {
      Valuation v = discriminant_valuation(f, dopts);
      (v >= 2) ? report.record_pass() : report.record_fail(desc, "v=" + v.str() + " < 2");
    } catch (const Error& e) {
      report.record_skip(desc, e.what());
    }
  }
}

template <typename R>
VerifyReport suite_thm1_1_impl(const R& ring, const SuiteOptions& opts) {
  VerifyReport report;
  report.suite = "thm1_1";
  int trials = opts.trials > 0 ? opts.trials : 200;
  Rng rng(opts.seed);
  thm11_random_direction(report, ring, 2, 3, trials, rng, opts);
  thm11_constructed_direction(report, ring, std::max(10, trials / 10), rng, opts);
  Rng rng2(opts.seed ^ 0xc2c2c2c2ULL);
  thm11_char2_obstruction(report, std::max(20, trials / 5), rng2, opts);
  return report;
}

// ---------------------------------------------------------------------------
// thm6_1: r isolated singular points force v(Delta) >= r
// ---------------------------------------------------------------------------

inline VerifyReport suite_thm6_1(const SuiteOptions& opts) {
  VerifyReport report;
  report.suite = "thm6_1";
  i64 p = opts.prime > 0 ? opts.prime : 101;
  int lifts = opts.trials > 0 ? opts.trials : 20;
  FqRing k(p, 1);
  PLocalRing zp(p);
  Rng rng(opts.seed);
  AnalyzeOptions aopts{opts.mmax, opts.max_enum};
  DiscOptions dopts{opts.max_matrix};
  for (int r : {2, 3}) {
    int d = 2 * r + 1;
    auto points = gen::random_distinct_points(k, 3, r, rng);
    auto witness = isolated_singularities_example(3, d, points, k, rng.next(), 200, aopts);
    if (!witness) {
      report.record_skip("r=" + std::to_string(r) + " d=" + std::to_string(d),
                         "no witness found over F_" + std::to_string(p));
      continue;
    }
    for (int t = 0; t < lifts; ++t) {
      MPoly<PLocalRing> f = gen::lift_with_noise(witness->form, zp, rng);
      std::string desc = "r=" + std::to_string(r) + " lift#" + std::to_string(t) + " f=" + f.str();
      try {
        Valuation v = discriminant_valuation(f, dopts);
        (v >= r) ? report.record_pass()
                 : report.record_fail(desc, "v=" + v.str() + " < r=" + std::to_string(r));
      } catch (const Error& e) {
        report.record_skip(desc, e.what());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// thm9_4: lower bounds for positive-dimensional singular loci.
// Instances: plane curves with a squared linear factor (singular along a
// line) and partially pi-divisible quadrics.
// ---------------------------------------------------------------------------

enum class Bound94 { A, B, C, D };

template <typename R>
void thm94_line_instances(VerifyReport& report, const R& ring, Bound94 which, int lifts, Rng& rng,
                          const SuiteOptions& opts) {
  FqRing k = ring.residue_field();
  AnalyzeOptions aopts{opts.mmax, opts.max_enum};
  DiscOptions dopts{opts.max_matrix};
  for (int d : {3, 4, 5}) {
    // fbar = l^2 h with l a random linear form
    PointProj pt = gen::random_point(k, 3, rng);
    MPoly<FqRing> l = gen::linear_form_through(k, pt, rng);
    MPoly<FqRing> h = gen::random_field_form(k, 3, d - 2, rng);
    MPoly<FqRing> fbar = l.mul(l).mul(h);
    if (fbar.is_zero() || !fbar.is_homogeneous(d)) {
      report.record_skip("d=" + std::to_string(d), "degenerate sample");
      continue;
    }
    SingularLocusReport sing = analyze_singular_locus(fbar, aopts);
    if (sing.dimension < 1) {
      report.record_skip("d=" + std::to_string(d) + " f=" + fbar.str(), "singular locus not positive-dimensional");
      continue;
    }
    if (which == Bound94::D && sing.contains_line != LineFlag::True) {
      report.record_skip("d=" + std::to_string(d) + " f=" + fbar.str(), "line containment not proven");
      continue;
    }
    long long bound = 0;
    switch (which) {
      case Bound94::A: bound = sing.dimension + 1; break;
      case Bound94::B: bound = (d - 1) / 2; break;
      case Bound94::C: bound = (d != 4) ? 2 * d - 3 : 4; break;
      case Bound94::D: bound = d - 1; break;
    }
    for (int t = 0; t < lifts; ++t) {
      MPoly<R> f = gen::lift_with_noise(fbar, ring, rng);
      std::string desc = ring.tag() + " d=" + std::to_string(d) + " lift#" + std::to_string(t) +
                          " f=" + f.str();
      try {
        Valuation v = discriminant_valuation(f, dopts);
        (v >= bound) ? report.record_pass()
                     : report.record_fail(desc, "v=" + v.str() + " < " + std::to_string(bound));
      } catch (const Error& e) {
        report.record_skip(desc, e.what());
      }
    }
  }
}

template <typename R>
void thm94a_quadric_instances(VerifyReport& report, const R& ring, int count, Rng& rng,
                              const SuiteOptions& opts) {
  i64 p = ring.residue_prime();
  AnalyzeOptions aopts{opts.mmax, opts.max_enum};
  DiscOptions dopts{opts.max_matrix};
  for (int t = 0; t < count; ++t) {
    int n = 2 + static_cast<int>(rng.below(2));
    MPoly<R> q(ring, n + 1);
    for (int i = 0; i <= n; ++i) {
      Monomial m(n + 1, 0);
      m[i] = 2;
      typename R::Elem c = ring.from_int(rng.range(1, p - 1));
      if (rng.below(2) == 0) c = ring.mul(c, ring.uniformizer());
      q.add_term(m, c);
    }
    std::string desc = ring.tag() + " diag quadric f=" + q.str();
    try {
      SingularLocusReport sing = analyze_singular_locus(gen::residue_poly(q), aopts);
      if (sing.dimension < 0) {
        report.record_pass();  // smooth reduction: nothing to bound
        continue;
      }
      Valuation v = discriminant_valuation(q, dopts);
      (v >= sing.dimension + 1)
          ? report.record_pass()
          : report.record_fail(desc, "v=" + v.str() + " < dim+1=" + std::to_string(sing.dimension + 1));
    } catch (const Error& e) {
      report.record_skip(desc, e.what());
    }
  }
}

template <typename R>
VerifyReport suite_thm9_4_impl(const R& ring, Bound94 which, const SuiteOptions& opts) {
  VerifyReport report;
  switch (which) {
    case Bound94::A: report.suite = "thm9_4a"; break;
    case Bound94::B: report.suite = "thm9_4b"; break;
    case Bound94::C: report.suite = "thm9_4c"; break;
    case Bound94::D: report.suite = "thm9_4d"; break;
  }
  int lifts = opts.trials > 0 ? opts.trials : 10;
  Rng rng(opts.seed);
  thm94_line_instances(report, ring, which, lifts, rng, opts);
  if (which == Bound94::A) thm94a_quadric_instances(report, ring, lifts, rng, opts);
  return report;
}

// ---------------------------------------------------------------------------
// prop3_3: block decomposition + quadric valuation bound
// ---------------------------------------------------------------------------

inline VerifyReport suite_prop3_3(const SuiteOptions& opts) {
  VerifyReport report;
  report.suite = "prop3_3";
  int trials = opts.trials > 0 ? opts.trials : 150;
  Rng rng(opts.seed);
  AnalyzeOptions aopts{opts.mmax, opts.max_enum};
  std::vector<i64> primes = opts.prime > 0 ? std::vector<i64>{opts.prime} : std::vector<i64>{2, 3};
  for (i64 p : primes) {
    PLocalRing zp(p);
    for (int t = 0; t < trials; ++t) {
      int nv = 2 + static_cast<int>(rng.below(4));  // 2..5 variables, n <= 4
      long long box = p * p * p;
      MPoly<PLocalRing> q = random_homogeneous(zp, nv, 2, rng, [&](Rng& r) {
        return Rat(r.range(-box, box));
      });
      if (q.is_zero()) {
        report.record_skip("zero form", "degenerate sample");
        continue;
      }
      std::string desc = zp.tag() + " q=" + q.str();
      try {
        auto dec = decompose_quadratic_form(q);  // verifies reconstruction internally
        if (2 * dec.rank2.size() + dec.rank1.size() != static_cast<std::size_t>(nv)) {
          report.record_fail(desc, "block count mismatch");
          continue;
        }
        auto qb = quadric_valuation_bound_check(q, aopts);
        qb.bound_ok ? report.record_pass()
                    : report.record_fail(desc, "v=" + qb.valuation.str() + " dim=" +
                                                   std::to_string(qb.sing_dimension));
      } catch (const Error& e) {
        report.record_skip(desc, e.what());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// prop5_1: a random hypersurface constrained to be singular at one point
// generically has exactly one singular point, a nondegenerate double point
// ---------------------------------------------------------------------------

inline VerifyReport suite_prop5_1(const SuiteOptions& opts) {
  VerifyReport report;
  report.suite = "prop5_1";
  i64 p = opts.prime > 0 ? opts.prime : 101;
  int trials = opts.trials > 0 ? opts.trials : 500;
  FqRing k(p, 1);
  Rng rng(opts.seed);
  AnalyzeOptions aopts{opts.mmax, opts.max_enum};
  std::uint64_t q = static_cast<std::uint64_t>(p);
  int generic = 0, run = 0;
  for (int t = 0; t < trials; ++t) {
    int d = (t % 2 == 0) ? 3 : 4;
    PointProj pt = gen::random_point(k, 3, rng);
    ConstraintSpace cs = singularity_constraint_space({pt}, d, k, 3);
    std::vector<FqElem> coeffs(cs.kernel.empty() ? 0 : cs.kernel[0].size(), k.zero());
    for (const auto& basis_vec : cs.kernel) {
      FqElem lambda = k.elem_at(rng.below(q));
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = k.add(coeffs[i], k.mul(lambda, basis_vec[i]));
    }
    MPoly<FqRing> f = poly_from_coefficients(k, 3, d, coeffs);
    if (f.is_zero()) continue;
    ++run;
    try {
      SingularLocusReport rep = analyze_singular_locus(f, aopts);
      if (rep.dimension == 0 && !rep.points_possibly_incomplete && rep.r == 1 &&
          rep.closed_points[0].field_degree == 1) {
        auto cls = classify_double_point(f, rep.closed_points[0].rep);
        if (cls.cls == DoublePointClass::Nondegenerate) ++generic;
      }
    } catch (const Error&) {
      // counts against genericity
    }
  }
  report.instances = run;
  report.passed = generic;
  double ratio = run > 0 ? static_cast<double>(generic) / run : 0.0;
  report.summary = std::to_string(generic) + "/" + std::to_string(run) + " single nondegenerate";
  if (ratio < 0.95)
    report.failures.push_back({0, "genericity ratio", report.summary + " < 95%"});
  return report;
}

// ---------------------------------------------------------------------------
// lemma9_1 / cor9_2: constraint-space nullity
// ---------------------------------------------------------------------------

inline VerifyReport suite_lemma9_1(const SuiteOptions& opts) {
  VerifyReport report;
  report.suite = "lemma9_1";
  i64 p = opts.prime > 0 ? opts.prime : 101;
  int trials = opts.trials > 0 ? opts.trials : 100;
  FqRing k(p, 1);
  Rng rng(opts.seed);
  for (int t = 0; t < trials; ++t) {
    int n = 2 + static_cast<int>(rng.below(2));
    int r = 1 + static_cast<int>(rng.below(3));
    int d = (2 * r - 1) + static_cast<int>(rng.below(3));
    if (d < 2) d = 2;
    auto points = gen::random_distinct_points(k, n + 1, r, rng);
    std::string desc = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " d=" + std::to_string(d);
    try {
      ConstraintSpace cs = singularity_constraint_space(points, d, k, n + 1);
      long long N = static_cast<long long>(binomial(n + d, n).convert_to<long long>());
      long long expected = N - static_cast<long long>(r) * (n + 1);
      bool rank_full = matrix_rank(cs.matrix) == static_cast<std::size_t>(r) * (n + 1);
      (cs.kernel_dim == expected && rank_full)
          ? report.record_pass()
          : report.record_fail(desc, "nullity=" + std::to_string(cs.kernel_dim) +
                                         " expected=" + std::to_string(expected));
    } catch (const Error& e) {
      report.record_fail(desc, e.what());
    }
  }
  // collinear counterexample family: r points on a line, d = 2r - 2
  for (int r : {2, 3}) {
    int d = 2 * r - 2;
    int n = 2;
    std::vector<PointProj> pts;
    for (int i = 0; i < r; ++i) {
      std::vector<FqElem> c{k.from_int(1), k.from_int(i), k.zero()};
      if (i == 0) c = {k.zero(), k.one(), k.zero()};
      pts.push_back(normalize_point(k, c));
    }
    std::string desc = "collinear r=" + std::to_string(r) + " d=" + std::to_string(d);
    try {
      ConstraintSpace cs = singularity_constraint_space(pts, d, k, n + 1);
      long long N = static_cast<long long>(binomial(n + d, n).convert_to<long long>());
      long long generic_dim = N - static_cast<long long>(r) * (n + 1);
      (cs.kernel_dim > generic_dim)
          ? report.record_pass()
          : report.record_fail(desc, "nullity=" + std::to_string(cs.kernel_dim) +
                                         " not above generic " + std::to_string(generic_dim));
    } catch (const Error& e) {
      report.record_fail(desc, e.what());
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// cor8_6 and the rest of the exact quadric vmin suite
// ---------------------------------------------------------------------------

template <typename R>
VerifyReport suite_cor8_6_impl(const R& ring, const SuiteOptions& opts) {
  VerifyReport report;
  report.suite = "cor8_6";
  int trials = opts.trials > 0 ? opts.trials : 200;
  i64 p = ring.residue_prime();
  FqRing k = ring.residue_field();
  Rng rng(opts.seed);
  AnalyzeOptions aopts{opts.mmax, opts.max_enum};

  for (int t = 0; t < trials; ++t) {
    int n = 1 + static_cast<int>(rng.below(3));  // n in {1,2,3}
    // half the samples are conjugated degenerate diagonal forms, so singular
    // instances are well represented
    MPoly<FqRing> fbar(k, n + 1);
    if (rng.below(2) == 0) {
      fbar = gen::random_field_form(k, n + 1, 2, rng);
    } else {
      int rank = 1 + static_cast<int>(rng.below(n + 1));  // 1..n+1
      MPoly<FqRing> diag(k, n + 1);
      for (int i = 0; i < rank; ++i) {
        Monomial m(n + 1, 0);
        m[i] = 2;
        diag.add_term(m, k.from_int(rng.range(1, p - 1)));
      }
      Matrix<FqRing> tmat(k, n + 1, n + 1);
      do {
        for (int i = 0; i <= n; ++i)
          for (int j = 0; j <= n; ++j) tmat.at(i, j) = k.from_int(rng.range(0, p - 1));
      } while (k.is_zero(bareiss_det(tmat)));
      fbar = diag.substitute_linear(tmat);
      if (fbar.is_zero()) {
        report.record_skip("conjugated quadric", "degenerate sample");
        continue;
      }
    }
    std::string desc = ring.tag() + " n=" + std::to_string(n) + " f=" + fbar.str();
    try {
      Valuation vm = vmin_exact_quadric(fbar, ring);
      SingularLocusReport rep = analyze_singular_locus(fbar, aopts);

      // vmin = 1 iff the singular locus is a single nondegenerate double point
      bool single_ndp = rep.dimension == 0 && !rep.points_possibly_incomplete && rep.r == 1 &&
                        rep.degree == 1 && rep.closed_points[0].field_degree == 1;
      if (single_ndp) {
        auto cls = classify_double_point(fbar, rep.closed_points[0].rep);
        single_ndp = (cls.cls == DoublePointClass::Nondegenerate);
      }
      if ((vm == 1) != single_ndp) {
        report.record_fail(desc, "vmin=" + vm.str() + " but single-ndp=" + std::to_string(single_ndp));
        continue;
      }

      // vmin <= multiplicity of the coefficient point on the discriminant
      // hypersurface
      MPoly<ZZRing> delta_sym = symbolic_quadric_discriminant(n + 1);
      MPoly<FqRing> delta_p = delta_sym.convert(k, [&](const Int& c) { return k.from_Int(c); });
      std::vector<FqElem> a = coefficient_vector(fbar, 2);
      int mult = delta_p.is_zero() ? -1 : multiplicity_at(delta_p, a);
      if (mult >= 0 && vm.is_finite() && !(vm.v <= mult)) {
        report.record_fail(desc, "vmin=" + vm.str() + " > mult=" + std::to_string(mult));
        continue;
      }

      // vmin >= 2 iff a is singular on V(Delta) and lifts to a zero mod pi^2
      bool delta_zero = k.is_zero(delta_p.evaluate(a));
      bool grad_zero = true;
      for (int i = 0; i < delta_p.nvars(); ++i) {
        if (!k.is_zero(delta_p.derivative(i).evaluate(a))) {
          grad_zero = false;
          break;
        }
      }
      MPoly<R> delta_r = delta_sym.convert(ring, [&](const Int& c) { return ring.from_Int(c); });
      std::vector<typename R::Elem> lift;
      for (const auto& c : a) lift.push_back(ring.lift(c.c[0]));
      Valuation vlift = ring.valuation(delta_r.evaluate(lift));
      bool rhs = delta_zero && grad_zero && (vlift >= 2);
      if ((vm >= 2) != rhs) {
        report.record_fail(desc, "vmin=" + vm.str() + " but Vk2 criterion=" + std::to_string(rhs));
        continue;
      }
      report.record_pass();
    } catch (const Error& e) {
      report.record_skip(desc, e.what());
    }
  }

  // coordinate-point span bound: quadrics singular at r coordinate points
  for (int t = 0; t < std::max(10, trials / 10); ++t) {
    int n = 2 + static_cast<int>(rng.below(2));
    int r = 1 + static_cast<int>(rng.below(n));  // 1..n
    MPoly<FqRing> fbar(k, n + 1);
    for (const auto& m : monomials_of_degree(n + 1, 2)) {
      bool touches = false;
      for (int i = 0; i < r; ++i) {
        if (m[i] > 0) touches = true;
      }
      if (touches) continue;  // rows/columns of the first r coordinate points vanish
      fbar.add_term(m, k.from_int(rng.range(0, p - 1)));
    }
    if (fbar.is_zero()) {
      report.record_skip("span-bound sample", "degenerate sample");
      continue;
    }
    std::string desc = ring.tag() + " coordinate-singular r=" + std::to_string(r) + " f=" + fbar.str();
    try {
      Valuation vm = vmin_exact_quadric(fbar, ring);
      MPoly<ZZRing> delta_sym = symbolic_quadric_discriminant(n + 1);
      MPoly<FqRing> delta_p = delta_sym.convert(k, [&](const Int& c) { return k.from_Int(c); });
      std::vector<FqElem> a = coefficient_vector(fbar, 2);
      int mult = delta_p.is_zero() ? r : multiplicity_at(delta_p, a);
      bool ok = (vm >= r) && (mult >= r);
      ok ? report.record_pass()
         : report.record_fail(desc, "vmin=" + vm.str() + " mult=" + std::to_string(mult) +
                                        " r=" + std::to_string(r));
    } catch (const Error& e) {
      report.record_skip(desc, e.what());
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

inline VerifyReport run_suite(const std::string& suite, const SuiteOptions& opts) {
  auto with_dvr = [&](auto&& fn) -> VerifyReport {
    i64 p = opts.prime > 0 ? opts.prime : 5;
    if (opts.ring_kind == "Fpt") return fn(TLocalRing(p));
    return fn(PLocalRing(p));
  };
  if (suite == "prop3_1") return suite_prop3_1(opts);
  if (suite == "degree_scaling") return suite_degree_scaling(opts);
  if (suite == "smooth_criterion") return suite_smooth_criterion(opts);
  if (suite == "thm1_1") return with_dvr([&](auto ring) { return suite_thm1_1_impl(ring, opts); });
  if (suite == "thm6_1") return suite_thm6_1(opts);
  if (suite == "thm9_4a") return with_dvr([&](auto ring) { return suite_thm9_4_impl(ring, Bound94::A, opts); });
  if (suite == "thm9_4b") return with_dvr([&](auto ring) { return suite_thm9_4_impl(ring, Bound94::B, opts); });
  if (suite == "thm9_4c") return with_dvr([&](auto ring) { return suite_thm9_4_impl(ring, Bound94::C, opts); });
  if (suite == "thm9_4d") return with_dvr([&](auto ring) { return suite_thm9_4_impl(ring, Bound94::D, opts); });
  if (suite == "prop3_3") return suite_prop3_3(opts);
  if (suite == "prop5_1") return suite_prop5_1(opts);
  if (suite == "lemma9_1") return suite_lemma9_1(opts);
  if (suite == "cor8_6") return with_dvr([&](auto ring) { return suite_cor8_6_impl(ring, opts); });
  throw InvalidInputError("unknown suite: " + suite);
}

inline std::vector<std::string> suite_names() {
  return {"prop3_1", "degree_scaling", "smooth_criterion", "thm1_1", "thm6_1",
          "thm9_4a", "thm9_4b",        "thm9_4c",          "thm9_4d", "prop3_3",
          "prop5_1", "lemma9_1",       "cor8_6"};
}

}  // namespace discval
