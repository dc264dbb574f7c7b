#pragma once

// Dense matrices over any ring in the tower. Determinants use fraction-free
// Bareiss elimination: every division is by a previous pivot and is exact in
// the coefficient ring (the intermediate entries are minors of the input).

#include <vector>

#include "discval/rings.hpp"
#include "discval/util.hpp"

namespace discval {

template <typename R>
class Matrix {
 public:
  using Elem = typename R::Elem;

  Matrix() = default;
  Matrix(R ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

  static Matrix identity(R ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.ring_.one();
    return m;
  }

  const R& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw InvalidInputError("matrix dimension mismatch");
    Matrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (ring_.is_zero(at(i, k))) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(at(i, k), o.at(k, j)));
      }
    return r;
  }

  Matrix transpose() const {
    Matrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool eq(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!ring_.eq(data_[i], o.data_[i])) return false;
    return true;
  }

 private:
  R ring_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

// Fraction-free determinant (Bareiss). Exact over ZZ, QQ, finite fields and
// both DVRs: every quotient is a minor of the input matrix.
template <typename R>
typename R::Elem bareiss_det(Matrix<R> m) {
  const R& ring = m.ring();
  if (m.rows() != m.cols()) throw InvalidInputError("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return ring.one();
  bool negate = false;
  typename R::Elem prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && ring.is_zero(m.at(pivot, k))) ++pivot;
    if (pivot == n) return ring.zero();
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto t = ring.sub(ring.mul(m.at(i, j), m.at(k, k)), ring.mul(m.at(i, k), m.at(k, j)));
        m.at(i, j) = ring.exact_div(t, prev);
      }
      m.at(i, k) = ring.zero();
    }
    prev = m.at(k, k);
  }
  auto d = m.at(n - 1, n - 1);
  return negate ? ring.neg(d) : d;
}

// Row-reduce over a field; returns the rank. Pivot columns, in order, land in
// *pivot_cols when provided.
template <typename R>
std::size_t gauss_reduce(Matrix<R>& m, std::vector<std::size_t>* pivot_cols = nullptr) {
  static_assert(R::kIsField);
  const R& ring = m.ring();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && ring.is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(pivot, j));
    auto inv = ring.inv(m.at(rank, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(rank, j) = ring.mul(m.at(rank, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || ring.is_zero(m.at(i, col))) continue;
      auto f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = ring.sub(m.at(i, j), ring.mul(f, m.at(rank, j)));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

template <typename R>
std::size_t matrix_rank(Matrix<R> m) {
  return gauss_reduce(m);
}

// Basis of the right null space of m over a field, one vector per free column.
template <typename R>
std::vector<std::vector<typename R::Elem>> null_space(Matrix<R> m) {
  static_assert(R::kIsField);
  const R& ring = m.ring();
  std::vector<std::size_t> pivots;
  std::size_t rank = gauss_reduce(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename R::Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename R::Elem> v(m.cols(), ring.zero());
    v[free] = ring.one();
    for (std::size_t r = 0; r < rank; ++r) v[pivots[r]] = ring.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Random unimodular integer matrix: a product of elementary shears applied to
// a permutation, so det = +-1 and entries stay small.
inline Matrix<ZZRing> random_unimodular(std::size_t n, Rng& rng) {
  ZZRing zz;
  Matrix<ZZRing> m = Matrix<ZZRing>::identity(zz, n);
  // random permutation
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  Matrix<ZZRing> p(zz, n, n);
  for (std::size_t i = 0; i < n; ++i) p.at(i, perm[i]) = 1;
  m = m.mul(p);
  std::size_t shears = 2 * n + 2;
  for (std::size_t s = 0; s < shears; ++s) {
    std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j) continue;
    long long c = rng.range(-2, 2);
    if (c == 0) c = 1;
    for (std::size_t k = 0; k < n; ++k) m.at(i, k) += Int(c) * m.at(j, k);
  }
  return m;
}

}  // namespace discval
