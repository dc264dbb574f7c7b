#pragma once

// The coefficient-ring tower: integers, rationals, finite fields F_{p^m},
// and two concrete DVR families:
//
//   PLocalRing(p)  — rationals with denominator prime to p, uniformizer p,
//                    residue field F_p;
//   TLocalRing(p)  — rational functions over F_p regular at t = 0,
//                    uniformizer t, residue field F_p.
//
// Every ring is a small value object exposing the same operation surface;
// elements are plain values with no back-pointer, so mixing rings is caught
// at the container level (MPoly, Matrix) by comparing ring descriptors.
// All values are immutable and every operation is pure.

#include <array>
#include <cstdint>
#include <string>
#include <type_traits>

#include "discval/fppoly.hpp"
#include "discval/util.hpp"

namespace discval {

inline void check_prime(i64 p) {
  if (p < 2 || p >= (i64(1) << 31) || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw InvalidInputError("p must be a prime < 2^31, got " + std::to_string(p));
}

// ---------------------------------------------------------------------------
// ZZ
// ---------------------------------------------------------------------------

struct ZZRing {
  using Elem = Int;
  static constexpr bool kIsField = false;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long x) const { return Int(x); }
  Elem from_Int(const Int& x) const { return x; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
  Elem inv(const Elem& a) const {
    if (!is_unit(a)) throw InvalidInputError("non-unit integer inverse");
    return a;
  }
  Elem exact_div(const Elem& a, const Elem& b) const {
    if (b == 0) throw InvalidInputError("division by zero");
    Int q = a / b;
    if (q * b != a) throw InvalidInputError("inexact integer division");
    return q;
  }
  Int characteristic() const { return 0; }
  std::string str(const Elem& a) const { return a.str(); }
  std::string tag() const { return "ZZ"; }
  bool same(const ZZRing&) const { return true; }
};

// ---------------------------------------------------------------------------
// QQ
// ---------------------------------------------------------------------------

struct QQRing {
  using Elem = Rat;
  static constexpr bool kIsField = true;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long x) const { return Rat(x); }
  Elem from_Int(const Int& x) const { return Rat(x); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_unit(const Elem& a) const { return a != 0; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw InvalidInputError("division by zero");
    return Rat(1) / a;
  }
  Elem exact_div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Int characteristic() const { return 0; }
  std::string str(const Elem& a) const { return a.str(); }
  std::string tag() const { return "QQ"; }
  bool same(const QQRing&) const { return true; }
};

// ---------------------------------------------------------------------------
// F_{p^m}: elements are coefficient vectors in the basis 1, a, ..., a^{m-1}
// where a is a root of the (verified irreducible) modulus. m = 1 needs no
// modulus. Elements are fixed-capacity arrays so field loops stay
// allocation-free.
// ---------------------------------------------------------------------------

constexpr int kMaxFieldDegree = 8;

struct FqElem {
  std::array<i64, kMaxFieldDegree> c{};

  friend bool operator==(const FqElem& a, const FqElem& b) { return a.c == b.c; }
  friend bool operator!=(const FqElem& a, const FqElem& b) { return a.c != b.c; }
  friend bool operator<(const FqElem& a, const FqElem& b) { return a.c < b.c; }
};

struct FqRing {
  using Elem = FqElem;
  static constexpr bool kIsField = true;

  i64 p = 2;
  int m = 1;
  FpPoly modulus;  // monic, degree m, irreducible; empty when m == 1

  FqRing() = default;
  FqRing(i64 p_, int m_, FpPoly modulus_ = {}) : p(p_), m(m_), modulus(std::move(modulus_)) {
    check_prime(p);
    if (m < 1 || m > kMaxFieldDegree) throw InvalidInputError("extension degree out of range");
    if (m == 1) {
      modulus.clear();
    } else {
      if (fp_deg(modulus) != m || modulus.back() != 1)
        throw InvalidInputError("modulus must be monic of degree m");
      if (!fp_is_irreducible(modulus, p)) throw InvalidInputError("modulus is reducible");
    }
  }

  Elem zero() const { return {}; }
  Elem one() const {
    Elem e;
    e.c[0] = 1 % p;
    return e;
  }
  Elem from_int(long long x) const {
    Elem e;
    e.c[0] = mod_norm(x, p);
    return e;
  }
  Elem from_Int(const Int& x) const {
    Elem e;
    e.c[0] = static_cast<i64>(x % p);
    if (e.c[0] < 0) e.c[0] += p;
    return e;
  }
  Elem from_poly(const FpPoly& f) const {
    if (m == 1) {
      if (fp_deg(f) > 0) throw InvalidInputError("nonconstant element of a prime field");
      return f.empty() ? zero() : from_int(f[0]);
    }
    FpPoly r = fp_mod(f, modulus, p);
    Elem e;
    for (std::size_t i = 0; i < r.size(); ++i) e.c[i] = r[i];
    return e;
  }
  FpPoly to_poly(const Elem& a) const {
    FpPoly f(a.c.begin(), a.c.begin() + m);
    fp_trim(f);
    return f;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r;
    for (int i = 0; i < m; ++i) r.c[i] = mod_norm(a.c[i] + b.c[i], p);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r;
    for (int i = 0; i < m; ++i) r.c[i] = mod_norm(a.c[i] - b.c[i], p);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r;
    for (int i = 0; i < m; ++i) r.c[i] = mod_norm(-a.c[i], p);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    if (m == 1) {
      Elem r;
      r.c[0] = mod_mul(a.c[0], b.c[0], p);
      return r;
    }
    std::array<i64, 2 * kMaxFieldDegree> prod{};
    for (int i = 0; i < m; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < m; ++j) {
        if (b.c[j] == 0) continue;
        prod[i + j] = mod_norm(prod[i + j] + mod_mul(a.c[i], b.c[j], p), p);
      }
    }
    // reduce by the monic modulus
    for (int k = 2 * m - 2; k >= m; --k) {
      i64 c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (int j = 0; j < m; ++j) {
        prod[k - m + j] = mod_norm(prod[k - m + j] - mod_mul(c, modulus[j], p), p);
      }
    }
    Elem r;
    for (int i = 0; i < m; ++i) r.c[i] = prod[i];
    return r;
  }
  bool is_zero(const Elem& a) const {
    for (int i = 0; i < m; ++i)
      if (a.c[i] != 0) return false;
    return true;
  }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_unit(const Elem& a) const { return !is_zero(a); }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw InvalidInputError("inverse of zero field element");
    if (m == 1) {
      Elem r;
      r.c[0] = mod_inv(a.c[0], p);
      return r;
    }
    // extended Euclid in F_p[x] against the modulus
    FpPoly r0 = modulus, r1 = to_poly(a);
    FpPoly s0 = {}, s1 = {1};
    while (!fp_is_zero(r1)) {
      auto [q, rem] = fp_divmod(r0, r1, p);
      FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since modulus is irreducible)
    i64 ci = mod_inv(r0[0], p);
    return from_poly(fp_scale(s0, ci, p));
  }
  Elem exact_div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, Int e) const {
    Elem r = one();
    while (e > 0) {
      if ((e & 1) != 0) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem frobenius(const Elem& a) const { return pow(a, Int(p)); }

  Int order() const { return int_pow(Int(p), static_cast<unsigned long long>(m)); }

  // index <-> element, for exhaustive enumeration
  Elem elem_at(std::uint64_t idx) const {
    Elem e;
    for (int i = 0; i < m; ++i) {
      e.c[i] = static_cast<i64>(idx % static_cast<std::uint64_t>(p));
      idx /= static_cast<std::uint64_t>(p);
    }
    return e;
  }

  Int characteristic() const { return p; }
  std::string str(const Elem& a) const {
    if (m == 1) return std::to_string(a.c[0]);
    return fp_poly_str(to_poly(a), "a");
  }
  std::string tag() const {
    return "Fq:" + std::to_string(p) + (m > 1 ? "^" + std::to_string(m) : "");
  }
  bool same(const FqRing& o) const { return p == o.p && m == o.m && modulus == o.modulus; }
};

// Deterministic extension-field construction: scan monic degree-m polynomials
// x^m + c_{m-1} x^{m-1} + ... + c_0 in counter order over the low
// coefficients and take the first irreducible one.
inline FqRing build_extension_field(i64 p, int m) {
  check_prime(p);
  if (m < 1) throw InvalidInputError("extension degree must be >= 1");
  if (m == 1) return FqRing(p, 1);
  if (m > kMaxFieldDegree) throw InvalidInputError("extension degree out of range");
  Int total = int_pow(Int(p), static_cast<unsigned long long>(m));
  for (Int k = 1; k < total; ++k) {
    FpPoly f(m + 1, 0);
    Int rest = k;
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<i64>(rest % p);
      rest /= p;
    }
    f[m] = 1;
    if (fp_is_irreducible(f, p)) return FqRing(p, m, f);
  }
  throw Error("no irreducible polynomial found");  // cannot happen
}

// ---------------------------------------------------------------------------
// PLocal(p): Z localized at (p), as exact rationals with unit denominator.
// ---------------------------------------------------------------------------

struct PLocalRing {
  using Elem = Rat;
  static constexpr bool kIsField = false;

  i64 p = 2;

  PLocalRing() = default;
  explicit PLocalRing(i64 p_) : p(p_) { check_prime(p); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long x) const { return Rat(x); }
  Elem from_Int(const Int& x) const { return Rat(x); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  bool contains(const Elem& a) const { return a == 0 || den(a) % p != 0; }
  Elem make(const Rat& x) const {
    if (!contains(x)) throw InvalidInputError(x.str() + " is not integral at p=" + std::to_string(p));
    return x;
  }

  Valuation valuation(const Elem& a) const {
    if (a == 0) return Valuation::infinity();
    return Valuation::finite(int_valuation(num(a), p) - int_valuation(den(a), p));
  }
  bool is_unit(const Elem& a) const { return a != 0 && valuation(a) == 0; }
  Elem inv(const Elem& a) const {
    if (!is_unit(a)) throw InvalidInputError("inverse of a non-unit");
    return Rat(1) / a;
  }
  Elem exact_div(const Elem& a, const Elem& b) const {
    if (b == 0) throw InvalidInputError("division by zero");
    Rat q = a / b;
    if (!contains(q)) throw InvalidInputError("quotient leaves the local ring");
    return q;
  }
  Elem uniformizer() const { return Rat(p); }

  i64 residue(const Elem& a) const {
    if (a == 0) return 0;
    i64 n = static_cast<i64>(num(a) % p);
    i64 d = static_cast<i64>(den(a) % p);
    return mod_mul(mod_norm(n, p), mod_inv(mod_norm(d, p), p), p);
  }
  Elem lift(i64 r) const { return Rat(mod_norm(r, p)); }
  i64 residue_prime() const { return p; }
  FqRing residue_field() const { return FqRing(p, 1); }

  Int characteristic() const { return 0; }
  std::string str(const Elem& a) const { return a.str(); }
  std::string tag() const { return "Zp:" + std::to_string(p); }
  bool same(const PLocalRing& o) const { return p == o.p; }
};

// ---------------------------------------------------------------------------
// TLocal(p): F_p[t] localized at (t), as reduced rational functions whose
// denominator does not vanish at t = 0.
// ---------------------------------------------------------------------------

struct TLocalRing {
  using Elem = RatFunc;
  static constexpr bool kIsField = false;

  i64 p = 2;

  TLocalRing() = default;
  explicit TLocalRing(i64 p_) : p(p_) { check_prime(p); }

  Elem zero() const { return RatFunc{{}, {1}}; }
  Elem one() const { return RatFunc{{1}, {1}}; }
  Elem from_int(long long x) const { return RatFunc{fp_const(x, p), {1}}; }
  Elem from_Int(const Int& x) const {
    i64 r = static_cast<i64>(x % p);
    return from_int(r);
  }
  Elem add(const Elem& a, const Elem& b) const { return rf_add(a, b, p); }
  Elem sub(const Elem& a, const Elem& b) const { return rf_sub(a, b, p); }
  Elem neg(const Elem& a) const { return rf_neg(a, p); }
  Elem mul(const Elem& a, const Elem& b) const { return rf_mul(a, b, p); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return rf_eq(a, b); }

  bool contains(const Elem& a) const { return a.is_zero() || a.den[0] != 0; }
  Elem make(const RatFunc& x) const {
    RatFunc r = rf_make(x.num, x.den, p);
    if (!contains(r)) throw InvalidInputError(rf_str(r) + " is not regular at t=0");
    return r;
  }

  Valuation valuation(const Elem& a) const {
    if (a.is_zero()) return Valuation::infinity();
    return Valuation::finite(fp_t_valuation(a.num) - fp_t_valuation(a.den));
  }
  bool is_unit(const Elem& a) const { return !a.is_zero() && valuation(a) == 0; }
  Elem inv(const Elem& a) const {
    if (!is_unit(a)) throw InvalidInputError("inverse of a non-unit");
    return rf_div(one(), a, p);
  }
  Elem exact_div(const Elem& a, const Elem& b) const {
    if (b.is_zero()) throw InvalidInputError("division by zero");
    RatFunc q = rf_div(a, b, p);
    if (!contains(q)) throw InvalidInputError("quotient leaves the local ring");
    return q;
  }
  Elem uniformizer() const { return RatFunc{{0, 1}, {1}}; }

  i64 residue(const Elem& a) const {
    if (a.is_zero()) return 0;
    i64 n = fp_eval(a.num, 0, p);
    i64 d = fp_eval(a.den, 0, p);
    return mod_mul(n, mod_inv(d, p), p);
  }
  Elem lift(i64 r) const { return from_int(mod_norm(r, p)); }
  i64 residue_prime() const { return p; }
  FqRing residue_field() const { return FqRing(p, 1); }

  Int characteristic() const { return p; }
  std::string str(const Elem& a) const { return rf_str(a); }
  std::string tag() const { return "Fpt:" + std::to_string(p); }
  bool same(const TLocalRing& o) const { return p == o.p; }
};

// True for the two DVR families; used by generic code that needs a valuation.
template <typename R>
struct is_dvr : std::false_type {};
template <>
struct is_dvr<PLocalRing> : std::true_type {};
template <>
struct is_dvr<TLocalRing> : std::true_type {};
template <typename R>
inline constexpr bool is_dvr_v = is_dvr<R>::value;

}  // namespace discval
