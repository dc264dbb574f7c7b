#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace discval {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct MixedRingError : Error {
  explicit MixedRingError(const std::string& msg) : Error("mixed-ring arithmetic: " + msg) {}
};

struct InvalidInputError : Error {
  explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

struct DegenerateMinorError : Error {
  explicit DegenerateMinorError(const std::string& msg) : Error(msg) {}
};

struct NonIntegralNormalizationError : Error {
  explicit NonIntegralNormalizationError(const std::string& msg) : Error(msg) {}
};

struct SizeLimitError : Error {
  explicit SizeLimitError(const std::string& msg) : Error(msg) {}
};

struct BudgetExceededError : Error {
  explicit BudgetExceededError(const std::string& msg) : Error(msg) {}
};

struct NotSingularError : Error {
  explicit NotSingularError(const std::string& msg) : Error(msg) {}
};

struct ZeroPolynomialError : Error {
  explicit ZeroPolynomialError(const std::string& msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Valuations: elements of Z >= 0 together with +infinity (the value at 0).
// ---------------------------------------------------------------------------

struct Valuation {
  long long v = 0;
  bool inf = false;

  static Valuation finite(long long x) { return Valuation{x, false}; }
  static Valuation infinity() { return Valuation{0, true}; }

  bool is_finite() const { return !inf; }

  Valuation operator+(const Valuation& o) const {
    if (inf || o.inf) return infinity();
    return finite(v + o.v);
  }
  Valuation operator+(long long x) const { return inf ? infinity() : finite(v + x); }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf == b.inf && (a.inf || a.v == b.v);
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.v < b.v;
  }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }
  friend bool operator==(const Valuation& a, long long x) { return !a.inf && a.v == x; }
  friend bool operator>=(const Valuation& a, long long x) { return a.inf || a.v >= x; }
  friend bool operator<=(const Valuation& a, long long x) { return !a.inf && a.v <= x; }

  std::string str() const { return inf ? "inf" : std::to_string(v); }
};

inline Valuation vmin(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

// ---------------------------------------------------------------------------
// Deterministic RNG (splitmix64). All randomized behavior in the library is
// driven by explicit seeds so runs are reproducible bit for bit.
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0. Rejection sampling keeps the distribution exact
  // and the stream portable.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw InvalidInputError("Rng::below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rng fork() { return Rng(next() ^ 0xa5a5a5a5deadbeefULL); }

 private:
  std::uint64_t state_;
};

// FNV-1a, used to derive deterministic retry seeds from canonical input text.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline Int int_pow(Int base, unsigned long long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Exponent of p in n (n != 0).
inline long long int_valuation(Int n, const Int& p) {
  if (n == 0) throw InvalidInputError("valuation of 0");
  if (n < 0) n = -n;
  long long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Deterministic Miller-Rabin, exact for all 64-bit inputs with this witness
// set; the library only ever uses p < 2^31.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace discval
