#pragma once

// Dense univariate polynomials over a prime field F_p (p < 2^31) and reduced
// rational functions built from them. These are the raw material for the
// t-local DVR and for extension-field moduli.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "discval/util.hpp"

namespace discval {

using i64 = std::int64_t;

inline i64 mod_norm(i64 x, i64 p) {
  i64 r = x % p;
  return r < 0 ? r + p : r;
}

inline i64 mod_mul(i64 a, i64 b, i64 p) {
  return static_cast<i64>((static_cast<__int128>(a) * b) % p);
}

inline i64 mod_pow(i64 a, i64 e, i64 p) {
  i64 r = 1 % p;
  a = mod_norm(a, p);
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline i64 mod_inv(i64 a, i64 p) {
  a = mod_norm(a, p);
  if (a == 0) throw InvalidInputError("inverse of 0 mod " + std::to_string(p));
  // extended Euclid
  i64 t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    i64 q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  return mod_norm(t, p);
}

// Coefficients ascending in degree; invariant: no trailing zeros (the zero
// polynomial is the empty vector).
using FpPoly = std::vector<i64>;

inline void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

inline bool fp_is_zero(const FpPoly& f) { return f.empty(); }

inline FpPoly fp_const(i64 c, i64 p) {
  c = mod_norm(c, p);
  return c == 0 ? FpPoly{} : FpPoly{c};
}

inline FpPoly fp_add(const FpPoly& a, const FpPoly& b, i64 p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_norm(r[i] + b[i], p);
  fp_trim(r);
  return r;
}

inline FpPoly fp_neg(const FpPoly& a, i64 p) {
  FpPoly r(a);
  for (auto& c : r) c = mod_norm(-c, p);
  return r;
}

inline FpPoly fp_sub(const FpPoly& a, const FpPoly& b, i64 p) { return fp_add(a, fp_neg(b, p), p); }

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = mod_norm(r[i + j] + mod_mul(a[i], b[j], p), p);
    }
  }
  fp_trim(r);
  return r;
}

inline FpPoly fp_scale(const FpPoly& a, i64 c, i64 p) {
  c = mod_norm(c, p);
  if (c == 0) return {};
  FpPoly r(a);
  for (auto& x : r) x = mod_mul(x, c, p);
  return r;
}

// Division with remainder; b != 0.
inline std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, i64 p) {
  if (fp_is_zero(b)) throw InvalidInputError("polynomial division by zero");
  FpPoly q;
  i64 lead_inv = mod_inv(b.back(), p);
  int db = fp_deg(b);
  while (fp_deg(a) >= db) {
    int shift = fp_deg(a) - db;
    i64 c = mod_mul(a.back(), lead_inv, p);
    if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, 0);
    q[shift] = mod_norm(q[shift] + c, p);
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = mod_norm(a[shift + i] - mod_mul(c, b[i], p), p);
    }
    fp_trim(a);
  }
  fp_trim(q);
  return {q, a};
}

inline FpPoly fp_mod(const FpPoly& a, const FpPoly& b, i64 p) { return fp_divmod(a, b, p).second; }

inline FpPoly fp_monic(const FpPoly& a, i64 p) {
  if (fp_is_zero(a)) return a;
  return fp_scale(a, mod_inv(a.back(), p), p);
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, i64 p) {
  while (!fp_is_zero(b)) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

inline i64 fp_eval(const FpPoly& f, i64 x, i64 p) {
  i64 r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = mod_norm(mod_mul(r, x, p) + *it, p);
  return r;
}

// t-adic valuation: index of the lowest nonzero coefficient.
inline long long fp_t_valuation(const FpPoly& f) {
  if (fp_is_zero(f)) throw InvalidInputError("t-valuation of 0");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0) return static_cast<long long>(i);
  }
  throw InvalidInputError("unreachable");
}

// x^e mod (f) in F_p[x], e given as a big integer.
inline FpPoly fp_powmod_x(const Int& e, const FpPoly& modulus, i64 p) {
  FpPoly result{1};
  FpPoly base = fp_mod(FpPoly{0, 1}, modulus, p);
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = fp_mod(fp_mul(result, base, p), modulus, p);
    base = fp_mod(fp_mul(base, base, p), modulus, p);
    k >>= 1;
  }
  return result;
}

inline FpPoly fp_powmod(FpPoly a, Int e, const FpPoly& modulus, i64 p) {
  FpPoly result{1};
  a = fp_mod(a, modulus, p);
  while (e > 0) {
    if ((e & 1) != 0) result = fp_mod(fp_mul(result, a, p), modulus, p);
    a = fp_mod(fp_mul(a, a, p), modulus, p);
    e >>= 1;
  }
  return result;
}

// Standard irreducibility test for monic f of degree m over F_p:
// x^{p^m} == x mod f, and gcd(x^{p^{m/l}} - x, f) = 1 for every prime l | m.
inline bool fp_is_irreducible(const FpPoly& f, i64 p) {
  int m = fp_deg(f);
  if (m <= 0) return false;
  if (m == 1) return true;
  FpPoly x{0, 1};
  FpPoly xpm = fp_powmod_x(int_pow(Int(p), static_cast<unsigned long long>(m)), f, p);
  if (fp_sub(xpm, fp_mod(x, f, p), p) != FpPoly{}) return false;
  int rest = m;
  for (int l = 2; l <= rest; ++l) {
    if (rest % l != 0) continue;
    while (rest % l == 0) rest /= l;
    FpPoly xpl = fp_powmod_x(int_pow(Int(p), static_cast<unsigned long long>(m / l)), f, p);
    FpPoly g = fp_gcd(fp_sub(xpl, fp_mod(x, f, p), p), f, p);
    if (fp_deg(g) != 0) return false;
  }
  return true;
}

inline std::string fp_poly_str(const FpPoly& f, const std::string& var = "t") {
  if (fp_is_zero(f)) return "0";
  std::string s;
  for (int i = fp_deg(f); i >= 0; --i) {
    if (f[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(f[i]);
    } else {
      if (f[i] != 1) s += std::to_string(f[i]) + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Reduced rational functions num/den in F_p(t): gcd(num, den) = 1, den monic.
// ---------------------------------------------------------------------------

struct RatFunc {
  FpPoly num;
  FpPoly den{1};

  bool is_zero() const { return fp_is_zero(num); }
};

inline RatFunc rf_make(FpPoly num, FpPoly den, i64 p) {
  if (fp_is_zero(den)) throw InvalidInputError("rational function with zero denominator");
  if (fp_is_zero(num)) return RatFunc{{}, {1}};
  FpPoly g = fp_gcd(num, den, p);
  if (fp_deg(g) > 0) {
    num = fp_divmod(num, g, p).first;
    den = fp_divmod(den, g, p).first;
  }
  i64 lead = den.back();
  if (lead != 1) {
    i64 li = mod_inv(lead, p);
    num = fp_scale(num, li, p);
    den = fp_scale(den, li, p);
  }
  return RatFunc{std::move(num), std::move(den)};
}

inline RatFunc rf_add(const RatFunc& a, const RatFunc& b, i64 p) {
  return rf_make(fp_add(fp_mul(a.num, b.den, p), fp_mul(b.num, a.den, p), p), fp_mul(a.den, b.den, p), p);
}

inline RatFunc rf_neg(const RatFunc& a, i64 p) { return RatFunc{fp_neg(a.num, p), a.den}; }

inline RatFunc rf_sub(const RatFunc& a, const RatFunc& b, i64 p) { return rf_add(a, rf_neg(b, p), p); }

inline RatFunc rf_mul(const RatFunc& a, const RatFunc& b, i64 p) {
  return rf_make(fp_mul(a.num, b.num, p), fp_mul(a.den, b.den, p), p);
}

inline RatFunc rf_div(const RatFunc& a, const RatFunc& b, i64 p) {
  if (b.is_zero()) throw InvalidInputError("division by zero rational function");
  return rf_make(fp_mul(a.num, b.den, p), fp_mul(a.den, b.num, p), p);
}

inline bool rf_eq(const RatFunc& a, const RatFunc& b) { return a.num == b.num && a.den == b.den; }

inline std::string rf_str(const RatFunc& x) {
  if (x.is_zero()) return "0";
  std::string n = fp_poly_str(x.num);
  if (x.den == FpPoly{1}) return n;
  return "(" + n + ")/(" + fp_poly_str(x.den) + ")";
}

}  // namespace discval
