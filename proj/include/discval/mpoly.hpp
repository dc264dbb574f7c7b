#pragma once

// Sparse exact multivariate polynomials over any ring in the tower. Terms are
// kept in a map ordered by graded-lex so iteration order (and hence printing)
// is canonical. Coefficient rings are tagged on the polynomial; arithmetic
// between polynomials over different rings is a hard error.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "discval/matrix.hpp"
#include "discval/rings.hpp"
#include "discval/util.hpp"

namespace discval {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

enum class MonomialOrder { GrLex, GrevLex, Lex };

// Returns +1 if a > b in the order, -1 if a < b, 0 if equal.
inline int monomial_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order != MonomialOrder::Lex) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
  }
  if (order == MonomialOrder::GrevLex) {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

struct GrLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_cmp(a, b, MonomialOrder::GrLex) < 0;
  }
};

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Monomial monomial_quot(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// All monomials of total degree exactly d in `nvars` variables, in descending
// lex order, i.e. starting at x0^d. This is the canonical basis used for
// coefficient vectors throughout.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nvars - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  if (nvars <= 0) throw InvalidInputError("nvars must be positive");
  rec(rec, 0, d);
  return out;
}

template <typename R>
class MPoly {
 public:
  using Elem = typename R::Elem;
  using TermMap = std::map<Monomial, Elem, GrLexLess>;

  MPoly(R ring, int nvars) : ring_(std::move(ring)), nvars_(nvars) {
    if (nvars < 1) throw InvalidInputError("polynomial needs at least one variable");
  }

  static MPoly zero(R ring, int nvars) { return MPoly(std::move(ring), nvars); }

  static MPoly constant(R ring, int nvars, Elem c) {
    MPoly f(std::move(ring), nvars);
    f.add_term(Monomial(nvars, 0), std::move(c));
    return f;
  }

  static MPoly variable(R ring, int nvars, int i) {
    MPoly f(std::move(ring), nvars);
    Monomial m(nvars, 0);
    m.at(i) = 1;
    f.add_term(m, f.ring_.one());
    return f;
  }

  const R& ring() const { return ring_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // max total degree; -1 for the zero polynomial
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
      if (total_degree(m) != d) return false;
    return true;
  }

  bool is_homogeneous() const { return is_zero() || is_homogeneous(degree()); }

  Elem coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  void add_term(const Monomial& m, const Elem& c) {
    if (static_cast<int>(m.size()) != nvars_) throw InvalidInputError("exponent vector length mismatch");
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  void check_compatible(const MPoly& o) const {
    if (!ring_.same(o.ring_)) throw MixedRingError(ring_.tag() + " vs " + o.ring_.tag());
    if (nvars_ != o.nvars_) throw InvalidInputError("variable count mismatch");
  }

  MPoly add(const MPoly& o) const {
    check_compatible(o);
    MPoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  MPoly sub(const MPoly& o) const {
    check_compatible(o);
    MPoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, ring_.neg(c));
    return r;
  }

  MPoly neg() const {
    MPoly r(ring_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, ring_.neg(c));
    return r;
  }

  MPoly mul(const MPoly& o) const {
    check_compatible(o);
    MPoly r(ring_, nvars_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) r.add_term(monomial_mul(m1, m2), ring_.mul(c1, c2));
    return r;
  }

  MPoly scale(const Elem& c) const {
    MPoly r(ring_, nvars_);
    if (ring_.is_zero(c)) return r;
    for (const auto& [m, cf] : terms_) r.add_term(m, ring_.mul(cf, c));
    return r;
  }

  MPoly mul_monomial(const Monomial& m, const Elem& c) const {
    MPoly r(ring_, nvars_);
    if (ring_.is_zero(c)) return r;
    for (const auto& [mm, cf] : terms_) r.terms_.emplace(monomial_mul(mm, m), ring_.mul(cf, c));
    return r;
  }

  MPoly pow(int e) const {
    if (e < 0) throw InvalidInputError("negative polynomial power");
    MPoly r = constant(ring_, nvars_, ring_.one());
    MPoly base(*this);
    while (e) {
      if (e & 1) r = r.mul(base);
      if (e >>= 1) base = base.mul(base);
    }
    return r;
  }

  bool eq(const MPoly& o) const {
    check_compatible(o);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
      if (it->first != jt->first || !ring_.eq(it->second, jt->second)) return false;
    }
    return true;
  }

  // formal partial derivative; coefficient arithmetic in the base ring, so
  // e.g. x^2 over F_2 differentiates to 0
  MPoly derivative(int i) const {
    if (i < 0 || i >= nvars_) throw InvalidInputError("derivative index out of range");
    MPoly r(ring_, nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial mm(m);
      --mm[i];
      r.add_term(mm, ring_.mul(c, ring_.from_int(m[i])));
    }
    return r;
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw InvalidInputError("evaluation point length mismatch");
    // power tables per variable
    std::vector<int> maxe(nvars_, 0);
    for (const auto& [m, c] : terms_)
      for (int i = 0; i < nvars_; ++i) maxe[i] = std::max(maxe[i], m[i]);
    std::vector<std::vector<Elem>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      pows[i].reserve(maxe[i] + 1);
      pows[i].push_back(ring_.one());
      for (int e = 1; e <= maxe[i]; ++e) pows[i].push_back(ring_.mul(pows[i].back(), point[i]));
    }
    Elem acc = ring_.zero();
    for (const auto& [m, c] : terms_) {
      Elem t = c;
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) t = ring_.mul(t, pows[i][m[i]]);
      acc = ring_.add(acc, t);
    }
    return acc;
  }

  // f o T: x_i -> sum_j T[i][j] x_j. Preserves homogeneity and degree.
  MPoly substitute_linear(const Matrix<R>& T) const {
    if (T.rows() != static_cast<std::size_t>(nvars_) || T.cols() != static_cast<std::size_t>(nvars_))
      throw InvalidInputError("substitution matrix must be nvars x nvars");
    if (!ring_.same(T.ring())) throw MixedRingError("substitution matrix over a different ring");
    std::vector<MPoly> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      MPoly li(ring_, nvars_);
      for (int j = 0; j < nvars_; ++j) {
        Monomial m(nvars_, 0);
        m[j] = 1;
        li.add_term(m, T.at(i, j));
      }
      images.push_back(std::move(li));
    }
    // cache powers of each image
    std::vector<int> maxe(nvars_, 0);
    for (const auto& [m, c] : terms_)
      for (int i = 0; i < nvars_; ++i) maxe[i] = std::max(maxe[i], m[i]);
    std::vector<std::vector<MPoly>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      pows[i].push_back(constant(ring_, nvars_, ring_.one()));
      for (int e = 1; e <= maxe[i]; ++e) pows[i].push_back(pows[i].back().mul(images[i]));
    }
    MPoly r(ring_, nvars_);
    for (const auto& [m, c] : terms_) {
      MPoly t = constant(ring_, nvars_, c);
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) t = t.mul(pows[i][m[i]]);
      r = r.add(t);
    }
    return r;
  }

  // g with g(x) = f(b + x), exact, variable by variable via binomial
  // convolution.
  MPoly taylor_shift(const std::vector<Elem>& b) const {
    if (static_cast<int>(b.size()) != nvars_) throw InvalidInputError("shift point length mismatch");
    MPoly cur(*this);
    for (int var = 0; var < nvars_; ++var) {
      if (ring_.is_zero(b[var])) continue;
      MPoly next(ring_, nvars_);
      // powers of b[var]
      int maxe = 0;
      for (const auto& [m, c] : cur.terms_) maxe = std::max(maxe, m[var]);
      std::vector<Elem> bp{ring_.one()};
      for (int e = 1; e <= maxe; ++e) bp.push_back(ring_.mul(bp.back(), b[var]));
      for (const auto& [m, c] : cur.terms_) {
        int e = m[var];
        for (int k = 0; k <= e; ++k) {
          Monomial mm(m);
          mm[var] = k;
          next.add_term(mm, ring_.mul(c, ring_.mul(ring_.from_Int(binomial(e, k)), bp[e - k])));
        }
      }
      cur = std::move(next);
    }
    return cur;
  }

  // Restrict to the affine chart x_chart = 1 recentred at the point with
  // chart-affine coordinates q (one entry per non-chart variable, in order):
  // the result f0 satisfies f0(y) = f(..., q_j + y_j, ..., 1, ...).
  MPoly dehomogenize(int chart, const std::vector<Elem>& q) const {
    if (chart < 0 || chart >= nvars_) throw InvalidInputError("chart index out of range");
    if (nvars_ < 2) throw InvalidInputError("dehomogenize needs >= 2 variables");
    if (static_cast<int>(q.size()) != nvars_ - 1) throw InvalidInputError("chart point length mismatch");
    MPoly g(ring_, nvars_ - 1);
    for (const auto& [m, c] : terms_) {
      Monomial mm;
      mm.reserve(nvars_ - 1);
      for (int i = 0; i < nvars_; ++i)
        if (i != chart) mm.push_back(m[i]);
      g.add_term(mm, c);
    }
    return g.taylor_shift(q);
  }

  // Map coefficients into another ring.
  template <typename R2, typename Fn>
  MPoly<R2> convert(R2 target, Fn&& fn) const {
    MPoly<R2> r(target, nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
  }

  std::pair<Monomial, Elem> leading_term(MonomialOrder order) const {
    if (is_zero()) throw ZeroPolynomialError("leading term of 0");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
      if (monomial_cmp(it->first, best->first, order) > 0) best = it;
    }
    return {best->first, best->second};
  }

  std::string str(const std::string& varprefix = "x") const;

 private:
  R ring_;
  int nvars_;
  TermMap terms_;
};

// f(images[0], ..., images[nvars-1]); the images live in a polynomial ring
// over the same coefficient ring but with any variable count
template <typename R>
MPoly<R> compose(const MPoly<R>& f, const std::vector<MPoly<R>>& images) {
  const R& ring = f.ring();
  if (static_cast<int>(images.size()) != f.nvars()) throw InvalidInputError("compose: image count mismatch");
  int target_vars = images.empty() ? 1 : images[0].nvars();
  for (const auto& g : images) {
    if (!ring.same(g.ring())) throw MixedRingError("compose over a different ring");
    if (g.nvars() != target_vars) throw InvalidInputError("compose: inconsistent image variable counts");
  }
  std::vector<int> maxe(f.nvars(), 0);
  for (const auto& [m, c] : f.terms())
    for (int i = 0; i < f.nvars(); ++i) maxe[i] = std::max(maxe[i], m[i]);
  std::vector<std::vector<MPoly<R>>> pows(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) {
    pows[i].push_back(MPoly<R>::constant(ring, target_vars, ring.one()));
    for (int e = 1; e <= maxe[i]; ++e) pows[i].push_back(pows[i].back().mul(images[i]));
  }
  MPoly<R> r(ring, target_vars);
  for (const auto& [m, c] : f.terms()) {
    MPoly<R> t = MPoly<R>::constant(ring, target_vars, c);
    for (int i = 0; i < f.nvars(); ++i)
      if (m[i] > 0) t = t.mul(pows[i][m[i]]);
    r = r.add(t);
  }
  return r;
}

// minimum total degree of a nonzero term; used for vanishing orders
template <typename R>
int min_total_degree(const MPoly<R>& f) {
  if (f.is_zero()) throw ZeroPolynomialError("order of the zero polynomial");
  int d = -1;
  for (const auto& [m, c] : f.terms()) {
    int t = total_degree(m);
    if (d < 0 || t < d) d = t;
  }
  return d;
}

// homogeneous component of total degree d
template <typename R>
MPoly<R> homogeneous_component(const MPoly<R>& f, int d) {
  MPoly<R> r(f.ring(), f.nvars());
  for (const auto& [m, c] : f.terms())
    if (total_degree(m) == d) r.add_term(m, c);
  return r;
}

// coefficient vector of a degree-d form in the canonical descending-lex
// monomial basis (monomials_of_degree)
template <typename R>
std::vector<typename R::Elem> coefficient_vector(const MPoly<R>& f, int d) {
  if (!f.is_homogeneous(d)) throw InvalidInputError("not homogeneous of the requested degree");
  std::vector<typename R::Elem> out;
  for (const auto& m : monomials_of_degree(f.nvars(), d)) out.push_back(f.coeff(m));
  return out;
}

template <typename R>
MPoly<R> poly_from_coefficients(R ring, int nvars, int d, const std::vector<typename R::Elem>& coeffs) {
  auto basis = monomials_of_degree(nvars, d);
  if (coeffs.size() != basis.size()) throw InvalidInputError("coefficient vector length mismatch");
  MPoly<R> f(ring, nvars);
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coeffs[i]);
  return f;
}

// random homogeneous form with coefficients drawn from `sample`
template <typename R, typename Fn>
MPoly<R> random_homogeneous(R ring, int nvars, int d, Rng& rng, Fn&& sample) {
  MPoly<R> f(ring, nvars);
  for (const auto& m : monomials_of_degree(nvars, d)) f.add_term(m, sample(rng));
  return f;
}

template <typename R>
std::string MPoly<R>::str(const std::string& varprefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  // canonical printing: descending graded-lex
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = ring_.str(c);
    bool neg = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
      neg = true;
      cs = cs.substr(1);
    }
    if (cs.find_first_of("+-/") != std::string::npos || cs.find('t') != std::string::npos) {
      if (cs.front() != '(') cs = "(" + (neg ? "-" + cs : cs) + ")";
      else if (neg) cs = "(-" + cs.substr(1);
      neg = false;
    }
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += varprefix + std::to_string(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else {
      term = cs + "*" + mono;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace discval
