#pragma once

// Macaulay's resultant for n+1 homogeneous forms of equal degree e in n+1
// variables. Rows and columns of the big matrix M are indexed by the
// monomials of degree D = (n+1)(e-1) + 1; the row for x^alpha is the
// coefficient vector of (x^alpha / x_i^e) * g_i where i is the first index
// with alpha_i >= e. Res = det(M) / det(M') where M' is the minor on the
// monomials divisible by x_i^e for more than one i. det(M) = Res * det(M')
// holds identically in the generic coefficients, so whenever det(M') != 0
// the division is exact in the coefficient ring.

#include <map>
#include <vector>

#include "discval/matrix.hpp"
#include "discval/mpoly.hpp"
#include "discval/util.hpp"

namespace discval {

inline constexpr std::size_t kDefaultMaxMacaulaySize = 2000;

template <typename R>
struct MacaulayMatrix {
  Matrix<R> matrix;                 // full square matrix M
  std::vector<Monomial> monomials;  // row/column index set, degree D
  std::vector<int> row_form;        // which g_i fills each row
  std::vector<bool> reduced;        // x^alpha divisible by exactly one x_i^e
  int big_degree = 0;               // D
};

template <typename R>
MacaulayMatrix<R> build_macaulay(const std::vector<MPoly<R>>& gs, std::size_t max_size) {
  if (gs.empty()) throw InvalidInputError("no input forms");
  const R& ring = gs[0].ring();
  int nvars = gs[0].nvars();
  if (static_cast<int>(gs.size()) != nvars)
    throw InvalidInputError("need exactly n+1 forms in n+1 variables");
  int e = gs[0].degree();
  for (const auto& g : gs) {
    gs[0].check_compatible(g);
    if (g.is_zero() || !g.is_homogeneous(g.degree()) || g.degree() != e)
      throw InvalidInputError("inputs must be nonzero homogeneous forms of one degree");
  }
  if (e < 1) throw InvalidInputError("form degree must be >= 1");

  int n = nvars - 1;
  int D = nvars * (e - 1) + 1;
  Int size = binomial(D + n, n);
  if (size > Int(static_cast<unsigned long long>(max_size)))
    throw SizeLimitError("Macaulay matrix size " + size.str() + " exceeds limit " + std::to_string(max_size));

  MacaulayMatrix<R> mm{Matrix<R>(ring, 0, 0), {}, {}, {}, D};
  mm.monomials = monomials_of_degree(nvars, D);
  std::size_t N = mm.monomials.size();
  std::map<Monomial, std::size_t> col_of;
  for (std::size_t j = 0; j < N; ++j) col_of[mm.monomials[j]] = j;

  mm.matrix = Matrix<R>(ring, N, N);
  mm.row_form.resize(N);
  mm.reduced.resize(N);
  for (std::size_t r = 0; r < N; ++r) {
    const Monomial& alpha = mm.monomials[r];
    int count = 0, first = -1;
    for (int i = 0; i < nvars; ++i) {
      if (alpha[i] >= e) {
        ++count;
        if (first < 0) first = i;
      }
    }
    // D > (n+1)(e-1) forces some alpha_i >= e
    mm.row_form[r] = first;
    mm.reduced[r] = (count == 1);
    Monomial shift(alpha);
    shift[first] -= e;
    for (const auto& [m, c] : gs[first].terms()) {
      mm.matrix.at(r, col_of.at(monomial_mul(m, shift))) = c;
    }
  }
  return mm;
}

template <typename R>
typename R::Elem macaulay_resultant(const std::vector<MPoly<R>>& gs,
                                    std::size_t max_size = kDefaultMaxMacaulaySize) {
  MacaulayMatrix<R> mm = build_macaulay(gs, max_size);
  const R& ring = mm.matrix.ring();

  std::vector<std::size_t> minor_idx;
  for (std::size_t i = 0; i < mm.monomials.size(); ++i)
    if (!mm.reduced[i]) minor_idx.push_back(i);

  Matrix<R> minor(ring, minor_idx.size(), minor_idx.size());
  for (std::size_t i = 0; i < minor_idx.size(); ++i)
    for (std::size_t j = 0; j < minor_idx.size(); ++j)
      minor.at(i, j) = mm.matrix.at(minor_idx[i], minor_idx[j]);

  auto det_minor = bareiss_det(minor);
  if (ring.is_zero(det_minor))
    throw DegenerateMinorError("Macaulay minor is singular for this coefficient configuration");
  auto det_full = bareiss_det(mm.matrix);
  return ring.exact_div(det_full, det_minor);
}

}  // namespace discval
