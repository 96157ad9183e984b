#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ggm/error.hpp"
#include "ggm/int_matrix.hpp"

namespace ggm {

/// Rank over the rationals, by fraction-free (Bareiss) elimination on exact
/// integers. Every division below is exact by Sylvester's identity, so no
/// rational arithmetic is needed.
inline std::size_t rational_rank(IntMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a(piv, col) == 0) ++piv;
    if (piv == m) continue;
    if (piv != rank) a.swap_rows(rank, piv);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j)
        a(i, j) = (a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / prev;
      a(i, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

/// Exact determinant of a square matrix (Bareiss).
inline Int determinant(IntMatrix a) {
  if (!a.is_square())
    throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign < 0 ? Int(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

namespace detail {

inline IntMatrix minor_matrix(const IntMatrix& a, std::size_t row,
                              std::size_t col) {
  IntMatrix m(a.rows() - 1, a.cols() - 1);
  for (std::size_t i = 0, mi = 0; i < a.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, mj = 0; j < a.cols(); ++j) {
      if (j == col) continue;
      m(mi, mj) = a(i, j);
      ++mj;
    }
    ++mi;
  }
  return m;
}

}  // namespace detail

/// Exact integer inverse of a matrix with determinant +-1, via the adjugate.
/// Throws NotUnimodular otherwise.
inline IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square())
    throw Error(ErrorCode::NotUnimodular, "matrix not square");
  const Int det = determinant(a);
  if (det != 1 && det != -1)
    throw Error(ErrorCode::NotUnimodular, "determinant is not +-1");
  const std::size_t n = a.rows();
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(a)(i,j) = (-1)^{i+j} det(minor(a, j, i)); inverse = adj / det.
      Int c = determinant(detail::minor_matrix(a, j, i));
      if ((i + j) % 2 == 1) c = -c;
      inv(i, j) = det == 1 ? c : Int(-c);
    }
  return inv;
}

/// Basis of the integer kernel lattice {x : a x = 0}, as columns of an
/// m x k matrix with k = cols - rank. Computed by unimodular column
/// reduction to echelon form (pivots made positive, columns scanned left to
/// right, smallest-magnitude pivot first), so the result is deterministic
/// and the basis is primitive: its columns extend to a basis of Z^m.
inline IntMatrix integer_kernel_basis(const IntMatrix& a) {
  using boost::multiprecision::abs;
  const std::size_t m = a.cols();
  IntMatrix w = a;
  IntMatrix u = IntMatrix::identity(m);
  std::size_t pivots = 0;

  auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
    // col_dst += q * col_src, mirrored on the transform.
    for (std::size_t i = 0; i < w.rows(); ++i) w(i, dst) += q * w(i, src);
    for (std::size_t i = 0; i < m; ++i) u(i, dst) += q * u(i, src);
  };
  auto negate_col = [&](std::size_t c) {
    for (std::size_t i = 0; i < w.rows(); ++i) w(i, c) = -w(i, c);
    for (std::size_t i = 0; i < m; ++i) u(i, c) = -u(i, c);
  };
  auto swap_col = [&](std::size_t c1, std::size_t c2) {
    w.swap_cols(c1, c2);
    u.swap_cols(c1, c2);
  };

  for (std::size_t row = 0; row < w.rows() && pivots < m; ++row) {
    while (true) {
      std::size_t best = m;
      for (std::size_t j = pivots; j < m; ++j)
        if (w(row, j) != 0 &&
            (best == m || abs(w(row, j)) < abs(w(row, best))))
          best = j;
      if (best == m) break;
      if (best != pivots) swap_col(pivots, best);
      bool reduced = true;
      for (std::size_t j = pivots + 1; j < m; ++j) {
        if (w(row, j) == 0) continue;
        Int q = w(row, j) / w(row, pivots);
        if (q != 0) add_col(j, pivots, -q);
        if (w(row, j) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (pivots < m && w(row, pivots) != 0) {
      if (w(row, pivots) < 0) negate_col(pivots);
      ++pivots;
    }
  }

  IntMatrix kernel(m, m - pivots);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = pivots; j < m; ++j)
      kernel(i, j - pivots) = u(i, j);
  return kernel;
}

// --- symmetric vectorization ------------------------------------------------

/// Number of independent entries of a symmetric m x m matrix.
constexpr std::size_t sym_dim(std::size_t m) { return m * (m + 1) / 2; }

/// Position of entry (i, j), i <= j, in the upper-triangle row-major order
/// (diagonal included) fixed for the whole library.
constexpr std::size_t sym_index(std::size_t m, std::size_t i, std::size_t j) {
  return i * m - i * (i - 1) / 2 + (j - i);
}

/// A symmetric matrix flattened to its sym_dim(dim) independent entries.
struct SymVec {
  std::size_t dim = 0;
  std::vector<Int> coords;

  friend bool operator==(const SymVec&, const SymVec&) = default;
};

inline SymVec sym_vec(const IntMatrix& g) {
  if (!g.is_symmetric())
    throw Error(ErrorCode::NotSymmetric, "sym_vec: matrix not symmetric");
  const std::size_t m = g.rows();
  SymVec v;
  v.dim = m;
  v.coords.reserve(sym_dim(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) v.coords.push_back(g(i, j));
  return v;
}

inline IntMatrix sym_unvec(const SymVec& v) {
  if (v.coords.size() != sym_dim(v.dim))
    throw Error(ErrorCode::NotSymmetric, "sym_unvec: wrong coordinate count");
  IntMatrix g(v.dim, v.dim);
  std::size_t k = 0;
  for (std::size_t i = 0; i < v.dim; ++i)
    for (std::size_t j = i; j < v.dim; ++j) {
      g(i, j) = v.coords[k];
      g(j, i) = v.coords[k];
      ++k;
    }
  return g;
}

/// The sym_dim(m) x sym_dim(m) matrix C(p) with
/// sym_vec(p^T g p) = C(p) * sym_vec(g) for every symmetric g. Columns are
/// obtained by probing with symmetric unit matrices, which keeps every
/// coefficient integral (cross terms carry the factor 2 internally).
inline IntMatrix congruence_operator(const IntMatrix& p) {
  if (!p.is_square())
    throw std::invalid_argument("congruence_operator: matrix not square");
  const std::size_t m = p.rows();
  const std::size_t s = sym_dim(m);
  const IntMatrix pt = p.transposed();
  IntMatrix c(s, s);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = k; l < m; ++l) {
      IntMatrix g(m, m);
      g(k, l) = 1;
      g(l, k) = 1;
      const SymVec col = sym_vec(pt * g * p);
      const std::size_t q = sym_index(m, k, l);
      for (std::size_t r = 0; r < s; ++r) c(r, q) = col.coords[r];
    }
  return c;
}

}  // namespace ggm
