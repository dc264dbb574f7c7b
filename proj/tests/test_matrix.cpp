#include <gtest/gtest.h>

#include "discval/matrix.hpp"

using namespace discval;

namespace {
// independent oracle: cofactor-expansion determinant
template <typename R>
typename R::Elem naive_det(const Matrix<R>& m) {
  const R& ring = m.ring();
  std::size_t n = m.rows();
  if (n == 0) return ring.one();
  if (n == 1) return m.at(0, 0);
  typename R::Elem acc = ring.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (ring.is_zero(m.at(0, j))) continue;
    Matrix<R> minor(ring, n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    auto term = ring.mul(m.at(0, j), naive_det(minor));
    acc = (j % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
  }
  return acc;
}
}  // namespace

TEST(Bareiss, MatchesCofactorExpansion) {
  ZZRing zz;
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng.below(5);
    Matrix<ZZRing> m(zz, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Int(rng.range(-9, 9));
    EXPECT_EQ(bareiss_det(m), naive_det(m));
  }
}

TEST(Bareiss, OverFieldAndDvr) {
  FqRing f7(7, 1);
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng.below(4);
    Matrix<FqRing> m(f7, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = f7.from_int(rng.range(0, 6));
    EXPECT_EQ(bareiss_det(m), naive_det(m));
  }
  PLocalRing z5(5);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + rng.below(3);
    Matrix<PLocalRing> m(z5, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(rng.range(-20, 20), 1 + rng.below(3));
    EXPECT_EQ(bareiss_det(m), naive_det(m));
  }
}

TEST(Bareiss, SingularIsZero) {
  ZZRing zz;
  Matrix<ZZRing> m(zz, 3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    m.at(0, j) = Int(j + 1);
    m.at(1, j) = Int(2 * (j + 1));
    m.at(2, j) = Int(7 - j);
  }
  EXPECT_EQ(bareiss_det(m), Int(0));
}

TEST(NullSpace, BasisSolves) {
  FqRing f5(5, 1);
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(6);
    Matrix<FqRing> m(f5, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f5.from_int(rng.range(0, 4));
    auto basis = null_space(m);
    EXPECT_EQ(basis.size() + matrix_rank(m), cols);
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < rows; ++i) {
        FqElem dot = f5.zero();
        for (std::size_t j = 0; j < cols; ++j) dot = f5.add(dot, f5.mul(m.at(i, j), v[j]));
        EXPECT_TRUE(f5.is_zero(dot));
      }
    }
  }
}

TEST(Unimodular, DetIsUnit) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + rng.below(4);
    Matrix<ZZRing> m = random_unimodular(n, rng);
    Int d = bareiss_det(m);
    EXPECT_TRUE(d == 1 || d == -1);
  }
}
