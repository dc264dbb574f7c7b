#pragma once

// Buchberger's algorithm over a finite field with the normal selection
// strategy and the product/chain criteria, plus the combinatorics read off a
// reduced basis: Krull dimension via maximal independent variable sets and
// standard-monomial counts for zero-dimensional ideals.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "discval/mpoly.hpp"
#include "discval/rings.hpp"
#include "discval/util.hpp"

namespace discval {

template <typename F>
struct GroebnerBasis {
  std::vector<MPoly<F>> gens;  // monic, interreduced, sorted by leading monomial
  MonomialOrder order = MonomialOrder::GrevLex;
  bool reduced = false;
};

template <typename F>
MPoly<F> make_monic(const MPoly<F>& f, MonomialOrder ord) {
  if (f.is_zero()) return f;
  auto [lm, lc] = f.leading_term(ord);
  return f.scale(f.ring().inv(lc));
}

// Full multivariate division: every term of the remainder is reducible by no
// leading monomial of the divisors.
template <typename F>
MPoly<F> normal_form(MPoly<F> h, const std::vector<MPoly<F>>& divisors, MonomialOrder ord) {
  const F& ring = h.ring();
  MPoly<F> r(ring, h.nvars());
  while (!h.is_zero()) {
    auto [lm, lc] = h.leading_term(ord);
    bool reduced_step = false;
    for (const auto& g : divisors) {
      auto [glm, glc] = g.leading_term(ord);
      if (monomial_divides(glm, lm)) {
        auto factor = ring.exact_div(lc, glc);
        h = h.sub(g.mul_monomial(monomial_quot(lm, glm), factor));
        reduced_step = true;
        break;
      }
    }
    if (!reduced_step) {
      r.add_term(lm, lc);
      MPoly<F> t(ring, h.nvars());
      t.add_term(lm, ring.neg(lc));
      h = h.add(t);
    }
  }
  return r;
}

template <typename F>
GroebnerBasis<F> groebner_basis(const std::vector<MPoly<F>>& generators,
                                MonomialOrder ord = MonomialOrder::GrevLex) {
  static_assert(F::kIsField);
  if (generators.empty()) throw InvalidInputError("empty generator list");
  const F& ring = generators[0].ring();
  int nvars = generators[0].nvars();

  std::vector<MPoly<F>> G;
  for (const auto& g : generators) {
    generators[0].check_compatible(g);
    if (!g.is_zero()) G.push_back(make_monic(g, ord));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  auto push_pairs = [&](std::size_t k) {
    auto [lmk, lck] = G[k].leading_term(ord);
    for (std::size_t i = 0; i < k; ++i) {
      auto [lmi, lci] = G[i].leading_term(ord);
      pending.push_back({i, k, monomial_lcm(lmi, lmk)});
    }
  };
  for (std::size_t k = 0; k < G.size(); ++k) push_pairs(k);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    for (const auto& pr : pending)
      if ((pr.i == a && pr.j == b) || (pr.i == b && pr.j == a)) return true;
    return false;
  };

  while (!pending.empty()) {
    // normal selection: smallest lcm in the order
    std::size_t best = 0;
    for (std::size_t i = 1; i < pending.size(); ++i)
      if (monomial_cmp(pending[i].lcm, pending[best].lcm, ord) < 0) best = i;
    Pair pr = pending[best];
    pending.erase(pending.begin() + best);

    auto [lmi, lci] = G[pr.i].leading_term(ord);
    auto [lmj, lcj] = G[pr.j].leading_term(ord);
    // product criterion
    if (pr.lcm == monomial_mul(lmi, lmj)) continue;
    // chain criterion
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      auto [lmk, lck] = G[k].leading_term(ord);
      if (monomial_divides(lmk, pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) skip = true;
    }
    if (skip) continue;

    MPoly<F> spoly = G[pr.i].mul_monomial(monomial_quot(pr.lcm, lmi), ring.one())
                         .sub(G[pr.j].mul_monomial(monomial_quot(pr.lcm, lmj), ring.one()));
    MPoly<F> nf = normal_form(spoly, G, ord);
    if (!nf.is_zero()) {
      G.push_back(make_monic(nf, ord));
      push_pairs(G.size() - 1);
    }
  }

  // minimalize: drop generators whose leading monomial is divisible by
  // another's
  std::vector<MPoly<F>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    auto [lmi, lci] = G[i].leading_term(ord);
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      auto [lmj, lcj] = G[j].leading_term(ord);
      if (monomial_divides(lmj, lmi) && (lmj != lmi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // interreduce to the unique reduced basis
  std::vector<MPoly<F>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MPoly<F> nf = normal_form(minimal[i], others, ord);
    if (!nf.is_zero()) out.push_back(make_monic(nf, ord));
  }
  std::sort(out.begin(), out.end(), [&](const MPoly<F>& a, const MPoly<F>& b) {
    return monomial_cmp(a.leading_term(ord).first, b.leading_term(ord).first, ord) < 0;
  });

  GroebnerBasis<F> gb;
  gb.gens = std::move(out);
  gb.order = ord;
  gb.reduced = true;
  (void)nvars;
  return gb;
}

// Krull dimension of the affine scheme cut out by the ideal, from the leading
// term ideal: the largest subset S of the variables such that no leading
// monomial is supported inside S. Returns -1 for the unit ideal (empty
// scheme).
template <typename F>
int affine_dimension(const GroebnerBasis<F>& gb, int nvars) {
  std::vector<Monomial> lms;
  for (const auto& g : gb.gens) {
    auto [lm, lc] = g.leading_term(gb.order);
    if (total_degree(lm) == 0) return -1;  // unit ideal
    lms.push_back(lm);
  }
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& lm : lms) {
      bool inside = true;
      for (int i = 0; i < nvars; ++i) {
        if (lm[i] > 0 && !(mask & (1u << i))) {
          inside = false;
          break;
        }
      }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;  // zero ideal: every S works, best = nvars
}

// Dimension of the projective scheme cut out by a homogeneous ideal: the
// affine cone loses one, and a cone supported at the origin alone is the
// empty projective scheme.
template <typename F>
int ideal_dimension(const GroebnerBasis<F>& gb, int nvars, bool projective) {
  int cone = affine_dimension(gb, nvars);
  if (!projective) return cone;
  return cone <= 0 ? -1 : cone - 1;
}

// Number of standard monomials (a k-basis of the quotient) for a
// zero-dimensional ideal; nullopt if the ideal is not zero-dimensional.
template <typename F>
std::optional<long long> standard_monomial_count(const GroebnerBasis<F>& gb, int nvars) {
  std::vector<Monomial> lms;
  for (const auto& g : gb.gens) {
    auto [lm, lc] = g.leading_term(gb.order);
    if (total_degree(lm) == 0) return 0;  // unit ideal: empty scheme
    lms.push_back(lm);
  }
  // box bounds from pure powers
  std::vector<int> bound(nvars, -1);
  for (const auto& lm : lms) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < nvars; ++i) {
      if (lm[i] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = i;
      }
    }
    if (pure && support >= 0) {
      if (bound[support] < 0 || lm[support] < bound[support]) bound[support] = lm[support];
    }
  }
  for (int i = 0; i < nvars; ++i)
    if (bound[i] < 0) return std::nullopt;  // no pure power in x_i: positive dimension

  long long box = 1;
  for (int i = 0; i < nvars; ++i) {
    box *= bound[i];
    if (box > 2'000'000) throw SizeLimitError("standard monomial box too large");
  }
  long long count = 0;
  Monomial cur(nvars, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == nvars) {
      for (const auto& lm : lms)
        if (monomial_divides(lm, cur)) return;
      ++count;
      return;
    }
    for (int e = 0; e < bound[pos]; ++e) {
      cur[pos] = e;
      self(self, pos + 1);
    }
    cur[pos] = 0;
  };
  rec(rec, 0);
  return count;
}

}  // namespace discval
