#include "ih/linalg.hpp"

#include <algorithm>

namespace ih::linalg {

namespace {

struct SmithWork {
  Matrix<Integer> a;
  std::optional<Matrix<Integer>> left;
  std::optional<Matrix<Integer>> right;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (left) left->swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (right) right->swap_cols(i, j);
  }
  // row_dst += q * row_src, starting at column `from` for the work matrix.
  void add_row(std::size_t dst, std::size_t src, const Integer& q,
               std::size_t from) {
    for (std::size_t c = from; c < a.cols(); ++c)
      if (!a(src, c).is_zero()) a(dst, c) += q * a(src, c);
    if (left)
      for (std::size_t c = 0; c < left->cols(); ++c)
        if (!(*left)(src, c).is_zero()) (*left)(dst, c) += q * (*left)(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q,
               std::size_t from) {
    for (std::size_t r = from; r < a.rows(); ++r)
      if (!a(r, src).is_zero()) a(r, dst) += q * a(r, src);
    if (right)
      for (std::size_t r = 0; r < right->rows(); ++r)
        if (!(*right)(r, src).is_zero())
          (*right)(r, dst) += q * (*right)(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (left)
      for (std::size_t c = 0; c < left->cols(); ++c)
        (*left)(i, c) = -(*left)(i, c);
  }
};

// Diagonalises in place; returns the nonzero diagonal entries.
std::vector<Integer> run_smith(SmithWork& w) {
  auto& a = w.a;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Integer> factors;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero magnitude in the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!a(i, j).is_zero() &&
            (!best || abs(a(i, j)) < abs(a(best->first, best->second))))
          best = std::pair{i, j};
    if (!best) break;
    w.swap_rows(t, best->first);
    w.swap_cols(t, best->second);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t).is_zero()) continue;
        const Integer q = a(i, t) / a(t, t);
        if (!q.is_zero()) w.add_row(i, t, -q, t);
        if (!a(i, t).is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j).is_zero()) continue;
        const Integer q = a(t, j) / a(t, t);
        if (!q.is_zero()) w.add_col(j, t, -q, t);
        if (!a(t, j).is_zero()) dirty = true;
      }
      if (dirty) {
        // Move the smallest remainder in row/column t onto the diagonal.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (!a(i, t).is_zero() && abs(a(i, t)) < abs(a(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (!a(t, j).is_zero() && abs(a(t, j)) < abs(a(bi, bj))) {
            bi = t;
            bj = j;
          }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the rest.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!(a(i, j) % a(t, t)).is_zero()) {
            offender = i;
            break;
          }
      if (!offender) break;
      w.add_row(t, *offender, 1, t);
    }
    if (a(t, t) < 0) w.negate_row(t);
    factors.push_back(a(t, t));
  }
  return factors;
}

template <class T, class Div>
T eliminate_determinant(Matrix<T> a, const T& zero, const T& one, Div divide) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of non-square");
  T det = one;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == zero) ++p;
    if (p == n) return zero;
    if (p != k) {
      a.swap_rows(p, k);
      det = zero - det;
    }
    det = det * a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == zero) continue;
      const T f = divide(a(i, k), a(k, k));
      for (std::size_t j = k; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
    }
  }
  return det;
}

}  // namespace

SmithForm smith_normal_form(const Matrix<Integer>& m) {
  SmithWork w{m, Matrix<Integer>::identity(m.rows(), 0, 1),
              Matrix<Integer>::identity(m.cols(), 0, 1)};
  SmithForm out;
  out.factors = run_smith(w);
  out.diagonal = std::move(w.a);
  out.left = std::move(*w.left);
  out.right = std::move(*w.right);
  return out;
}

std::vector<Integer> invariant_factors(const Matrix<Integer>& m) {
  SmithWork w{m, std::nullopt, std::nullopt};
  return run_smith(w);
}

std::vector<Integer> invariant_factors(const SparseMatrix<Integer>& m) {
  auto elim = eliminate_unit_pivots(IntegerRing{}, m);
  std::vector<Integer> out(elim.unit_pivots, Integer(1));
  if (!elim.residual.empty()) {
    auto rest = invariant_factors(elim.residual);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  // The residual may still produce factors equal to 1 (e.g. diag(2, 3)).
  std::sort(out.begin(), out.end());
  return out;
}

Integer determinant(const Matrix<Integer>& m) {
  Matrix<Rational> q(m.rows(), m.cols(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = Rational(m(r, c));
  const Rational d = determinant(q);
  return numerator(d);
}

Rational determinant(const Matrix<Rational>& m) {
  return eliminate_determinant<Rational>(
      m, Rational(0), Rational(1),
      [](const Rational& a, const Rational& b) { return a / b; });
}

Residue determinant(const PrimeField& field, const Matrix<Residue>& m) {
  return eliminate_determinant<Residue>(
      m, field.zero(), field.one(),
      [](const Residue& a, const Residue& b) { return a / b; });
}

}  // namespace ih::linalg
