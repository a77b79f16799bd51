#pragma once

// Exact linear algebra over the ring policies of ring.hpp: column echelon
// forms with tracked unimodular transforms, saturated kernels, lattice
// solves, Smith normal form and sparse rank / invariant-factor elimination.

#include "ih/matrix.hpp"
#include "ih/ring.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace ih::linalg {

template <class R>
using Value = typename R::value_type;

template <class R>
Matrix<Value<R>> zeros(const R& ring, std::size_t rows, std::size_t cols) {
  return Matrix<Value<R>>(rows, cols, ring.zero());
}

template <class R>
Matrix<Value<R>> identity(const R& ring, std::size_t n) {
  return Matrix<Value<R>>::identity(n, ring.zero(), ring.one());
}

template <class R>
Matrix<Value<R>> multiply(const R& ring, const Matrix<Value<R>>& a,
                          const Matrix<Value<R>>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  auto out = zeros(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!ring.is_zero(b(k, j))) out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

template <class R>
std::vector<Value<R>> apply(const R& ring, const Matrix<Value<R>>& a,
                            const std::vector<Value<R>>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("shape mismatch");
  std::vector<Value<R>> out(a.rows(), ring.zero());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (ring.is_zero(x[k])) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!ring.is_zero(a(i, k))) out[i] += a(i, k) * x[k];
    }
  }
  return out;
}

template <class R>
bool is_zero_matrix(const R& ring, const Matrix<Value<R>>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!ring.is_zero(m(r, c))) return false;
  return true;
}

/// Horizontal concatenation [a | b]; both must have the same row count.
template <class R>
Matrix<Value<R>> hconcat(const R& ring, const Matrix<Value<R>>& a,
                         const Matrix<Value<R>>& b) {
  if (a.rows() != b.rows() && a.cols() != 0 && b.cols() != 0)
    throw std::invalid_argument("hconcat row mismatch");
  const std::size_t rows = a.cols() != 0 ? a.rows() : b.rows();
  auto out = zeros(ring, rows, a.cols() + b.cols());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

template <class R>
Matrix<Value<R>> to_dense(const R& ring, const SparseMatrix<Value<R>>& s) {
  auto out = zeros(ring, s.rows(), s.cols());
  for (std::size_t c = 0; c < s.cols(); ++c)
    for (const auto& [r, v] : s.column(c)) out(r, c) = v;
  return out;
}

template <class R>
SparseMatrix<Value<R>> to_sparse(const R& ring, const Matrix<Value<R>>& m) {
  SparseMatrix<Value<R>> out(m.rows(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    typename SparseMatrix<Value<R>>::Column col;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!ring.is_zero(m(r, c))) col.emplace_back(r, m(r, c));
    out.push_column(std::move(col));
  }
  return out;
}

template <class R>
SparseMatrix<Value<R>> multiply(const R& ring, const SparseMatrix<Value<R>>& a,
                                const SparseMatrix<Value<R>>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  SparseMatrix<Value<R>> out(a.rows(), 0);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::map<std::size_t, Value<R>> acc;
    for (const auto& [k, bkj] : b.column(j)) {
      for (const auto& [i, aik] : a.column(k)) {
        auto it = acc.find(i);
        if (it == acc.end())
          acc.emplace(i, aik * bkj);
        else
          it->second += aik * bkj;
      }
    }
    typename SparseMatrix<Value<R>>::Column col;
    for (auto& [i, v] : acc)
      if (!ring.is_zero(v)) col.emplace_back(i, std::move(v));
    out.push_column(std::move(col));
  }
  return out;
}

namespace detail {

template <class R>
bool smaller_pivot(const R& ring, const Value<R>& a, const Value<R>& b) {
  if constexpr (R::is_field) {
    (void)ring;
    (void)a;
    (void)b;
    return false;  // any nonzero pivot is as good as another
  } else {
    return abs(a) < abs(b);
  }
}

template <class R>
Value<R> unit_inverse(const R& ring, const Value<R>& u) {
  if constexpr (R::is_field) {
    return ring.inverse(u);
  } else {
    return u;  // +-1
  }
}

}  // namespace detail

/// H = M * V with H in column echelon form and V invertible over the ring
/// (unimodular over the integers). Column k < rank has its leading nonzero
/// in row pivot_rows[k]; columns >= rank of H are zero.
template <class R>
struct ColumnEchelon {
  Matrix<Value<R>> reduced;
  Matrix<Value<R>> transform;
  std::optional<Matrix<Value<R>>> inverse_transform;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank = 0;
};

template <class R>
ColumnEchelon<R> column_echelon(const R& ring, Matrix<Value<R>> m,
                                bool track_inverse = false) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  ColumnEchelon<R> out;
  out.transform = identity(ring, cols);
  if (track_inverse) out.inverse_transform = identity(ring, cols);
  auto& h = m;
  auto& v = out.transform;

  const auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    h.swap_cols(a, b);
    v.swap_cols(a, b);
    if (out.inverse_transform) out.inverse_transform->swap_rows(a, b);
  };
  // col_dst -= q * col_src
  const auto subtract = [&](std::size_t dst, std::size_t src,
                            const Value<R>& q, std::size_t first_row) {
    for (std::size_t r = first_row; r < rows; ++r)
      if (!ring.is_zero(h(r, src))) h(r, dst) -= q * h(r, src);
    for (std::size_t r = 0; r < cols; ++r)
      if (!ring.is_zero(v(r, src))) v(r, dst) -= q * v(r, src);
    if (out.inverse_transform) {
      auto& w = *out.inverse_transform;
      for (std::size_t c = 0; c < cols; ++c)
        if (!ring.is_zero(w(dst, c))) w(src, c) += q * w(dst, c);
    }
  };

  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows && rank < cols; ++r) {
    bool found = false;
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t c = rank; c < cols; ++c) {
        if (ring.is_zero(h(r, c))) continue;
        if (!best || detail::smaller_pivot(ring, h(r, c), h(r, *best))) {
          best = c;
          if constexpr (R::is_field) break;
        }
      }
      if (!best) break;
      found = true;
      swap_cols(rank, *best);
      bool residue = false;
      for (std::size_t c = rank + 1; c < cols; ++c) {
        if (ring.is_zero(h(r, c))) continue;
        if constexpr (R::is_field) {
          const Value<R> q = h(r, c) / h(r, rank);
          subtract(c, rank, q, r);
        } else {
          const Value<R> q = h(r, c) / h(r, rank);  // truncating
          if (!q.is_zero()) subtract(c, rank, q, r);
          if (!h(r, c).is_zero()) residue = true;
        }
      }
      if (!residue) break;
    }
    if (found) {
      out.pivot_rows.push_back(r);
      ++rank;
    }
  }
  out.rank = rank;
  out.reduced = std::move(h);
  return out;
}

/// Columns form a basis of ker M. Over the integers the basis spans the full
/// kernel lattice, so the quotient of Z^cols by it is torsion-free.
template <class R>
Matrix<Value<R>> kernel_basis(const R& ring, const Matrix<Value<R>>& m) {
  auto ech = column_echelon(ring, m);
  const std::size_t cols = m.cols();
  return ech.transform.block(0, cols, ech.rank, cols);
}

/// Repeated exact solves against a fixed matrix with independent columns.
template <class R>
class LatticeSolver {
public:
  LatticeSolver(const R& ring, const Matrix<Value<R>>& basis)
      : ring_(ring), echelon_(column_echelon(ring, basis)) {
    if (echelon_.rank != basis.cols()) {
      throw std::invalid_argument("solver basis columns are dependent");
    }
  }

  std::size_t dimension() const { return echelon_.rank; }

  /// x with basis * x == v, or nullopt when v is outside the column
  /// lattice (integers) or column space (fields).
  std::optional<std::vector<Value<R>>> solve(
      const std::vector<Value<R>>& v) const {
    const auto& h = echelon_.reduced;
    if (v.size() != h.rows()) throw std::invalid_argument("shape mismatch");
    const std::size_t n = echelon_.rank;
    std::vector<Value<R>> y(n, ring_.zero());
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t r = echelon_.pivot_rows[k];
      Value<R> rhs = v[r];
      for (std::size_t l = 0; l < k; ++l)
        if (!ring_.is_zero(h(r, l))) rhs -= h(r, l) * y[l];
      if constexpr (R::is_field) {
        y[k] = rhs / h(r, k);
      } else {
        if (!(rhs % h(r, k)).is_zero()) return std::nullopt;
        y[k] = rhs / h(r, k);
      }
    }
    // Rows without pivots must be reproduced exactly.
    for (std::size_t r = 0; r < h.rows(); ++r) {
      Value<R> acc = ring_.zero();
      for (std::size_t k = 0; k < n; ++k)
        if (!ring_.is_zero(h(r, k)) && !ring_.is_zero(y[k]))
          acc += h(r, k) * y[k];
      if (acc != v[r]) return std::nullopt;
    }
    const auto& t = echelon_.transform;
    std::vector<Value<R>> x(n, ring_.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (!ring_.is_zero(t(i, k)) && !ring_.is_zero(y[k]))
          x[i] += t(i, k) * y[k];
    return x;
  }

private:
  R ring_;
  ColumnEchelon<R> echelon_;
};

template <class R>
std::optional<std::vector<Value<R>>> solve_in_lattice(
    const R& ring, const Matrix<Value<R>>& basis,
    const std::vector<Value<R>>& v) {
  return LatticeSolver<R>(ring, basis).solve(v);
}

/// Completion of a saturated basis S (r x s, independent columns) to an
/// invertible change of basis: W = [W_sub | W_quot] with W_sub spanning the
/// same lattice as S, and U = W^{-1}. The last r - s rows of U give
/// coordinates in the quotient Z^r / span(S).
template <class R>
struct BasisCompletion {
  Matrix<Value<R>> to_adapted;    // U
  Matrix<Value<R>> from_adapted;  // W
  std::size_t sub_rank = 0;
};

template <class R>
BasisCompletion<R> complete_basis(const R& ring, const Matrix<Value<R>>& sub,
                                  std::size_t ambient) {
  BasisCompletion<R> out;
  if (sub.cols() == 0) {
    out.to_adapted = identity(ring, ambient);
    out.from_adapted = identity(ring, ambient);
    return out;
  }
  // S^T V = H (column echelon) gives V^T S = H^T = [T; 0].
  auto ech = column_echelon(ring, sub.transpose(), true);
  if (ech.rank != sub.cols())
    throw std::invalid_argument("subspace basis columns are dependent");
  if constexpr (!R::is_field) {
    // Saturation: the s x s triangular block must be unimodular.
    for (std::size_t k = 0; k < ech.rank; ++k) {
      if (ech.pivot_rows[k] != k || !ring.is_unit(ech.reduced(k, k)))
        throw std::invalid_argument("sublattice is not saturated");
    }
  }
  out.to_adapted = ech.transform.transpose();
  out.from_adapted = ech.inverse_transform->transpose();
  out.sub_rank = sub.cols();
  return out;
}

/// Smith normal form over the integers: left * M * right == diagonal with
/// nonnegative diagonal d_1 | d_2 | ... ; `factors` lists the nonzero d_i.
struct SmithForm {
  Matrix<Integer> diagonal;
  Matrix<Integer> left;
  Matrix<Integer> right;
  std::vector<Integer> factors;
};

SmithForm smith_normal_form(const Matrix<Integer>& m);

/// Nonzero invariant factors only (no transforms); rank = factors.size().
std::vector<Integer> invariant_factors(const Matrix<Integer>& m);

Integer determinant(const Matrix<Integer>& m);
Rational determinant(const Matrix<Rational>& m);
Residue determinant(const PrimeField& field, const Matrix<Residue>& m);

/// Result of eliminating unit pivots from a sparse matrix. Over a field the
/// residual is always zero; over the integers it is the dense block left
/// when no entry of the remaining matrix is +-1.
template <class R>
struct UnitElimination {
  std::size_t unit_pivots = 0;
  Matrix<Value<R>> residual;
};

template <class R>
UnitElimination<R> eliminate_unit_pivots(const R& ring,
                                         const SparseMatrix<Value<R>>& m) {
  using V = Value<R>;
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::vector<std::map<std::size_t, V>> rows(nrows);
  std::vector<std::set<std::size_t>> col_rows(ncols);
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [r, v] : m.column(c)) {
      rows[r].emplace(c, v);
      col_rows[c].insert(r);
    }

  std::vector<bool> row_alive(nrows, true);
  UnitElimination<R> out;
  while (true) {
    std::size_t best_r = nrows, best_c = ncols;
    std::size_t best_cost = static_cast<std::size_t>(-1);
    for (std::size_t r = 0; r < nrows && best_cost != 0; ++r) {
      if (!row_alive[r] || rows[r].empty()) continue;
      const std::size_t rcost = rows[r].size() - 1;
      for (const auto& [c, v] : rows[r]) {
        if (!ring.is_unit(v)) continue;
        const std::size_t cost = rcost * (col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = c;
          if (cost == 0) break;
        }
      }
    }
    if (best_r == nrows) break;

    const V pivot_inv = detail::unit_inverse(ring, rows[best_r].at(best_c));
    const auto pivot_row = rows[best_r];
    const std::vector<std::size_t> targets(col_rows[best_c].begin(),
                                           col_rows[best_c].end());
    for (std::size_t r : targets) {
      if (r == best_r) continue;
      const V factor = rows[r].at(best_c) * pivot_inv;
      for (const auto& [c, v] : pivot_row) {
        auto it = rows[r].find(c);
        if (it == rows[r].end()) {
          rows[r].emplace(c, ring.zero() - factor * v);
          col_rows[c].insert(r);
        } else {
          it->second -= factor * v;
          if (ring.is_zero(it->second)) {
            rows[r].erase(it);
            col_rows[c].erase(r);
          }
        }
      }
    }
    for (const auto& [c, v] : pivot_row) col_rows[c].erase(best_r);
    rows[best_r].clear();
    row_alive[best_r] = false;
    ++out.unit_pivots;
  }

  std::vector<std::size_t> live_rows, live_cols;
  std::vector<std::size_t> col_index(ncols, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    if (row_alive[r] && !rows[r].empty()) live_rows.push_back(r);
  for (std::size_t c = 0; c < ncols; ++c)
    if (!col_rows[c].empty()) {
      col_index[c] = live_cols.size();
      live_cols.push_back(c);
    }
  out.residual = zeros(ring, live_rows.size(), live_cols.size());
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, v] : rows[live_rows[i]]) out.residual(i, col_index[c]) = v;
  return out;
}

/// Rank of a sparse matrix over a field or the integers.
template <class R>
std::size_t rank(const R& ring, const SparseMatrix<Value<R>>& m) {
  auto elim = eliminate_unit_pivots(ring, m);
  if constexpr (R::is_field) {
    return elim.unit_pivots;
  } else {
    return elim.unit_pivots + invariant_factors(elim.residual).size();
  }
}

template <class R>
std::size_t rank(const R& ring, const Matrix<Value<R>>& m) {
  return rank(ring, to_sparse(ring, m));
}

/// Nonzero invariant factors of a sparse integer matrix, ascending.
std::vector<Integer> invariant_factors(const SparseMatrix<Integer>& m);

}  // namespace ih::linalg
