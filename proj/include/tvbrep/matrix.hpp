#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tvbrep/scalar.hpp"

namespace tvbrep {

// Dense square matrix over one exact ring. Entries are stored row-major.
template <Scalar S>
class Matrix {
 public:
  using scalar_type = S;
  using ring_type = typename S::ring_type;

  Matrix(ring_type ring, std::size_t dim) : ring_(std::move(ring)), dim_(dim), entries_(dim * dim, ring_.zero()) {
    if (dim == 0) throw DimensionMismatch("matrix dimension must be at least 1");
  }

  static Matrix identity(const ring_type& ring, std::size_t dim) {
    Matrix m(ring, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = ring.one();
    return m;
  }

  // Rows given as nested lists; every row must have `rows.size()` entries.
  static Matrix from_rows(const ring_type& ring, const std::vector<std::vector<S>>& rows) {
    Matrix m(ring, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw DimensionMismatch("matrix rows must form a square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t dim() const { return dim_; }
  const ring_type& ring() const { return ring_; }

  S& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_compatible(b);
    Matrix r(a.ring_, a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const S& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) {
          const S& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) = r(i, j) + aik * bkj;
        }
      }
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_compatible(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = a.entries_[i] + b.entries_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_compatible(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = a.entries_[i] - b.entries_[i];
    return r;
  }
  friend Matrix operator*(const S& s, const Matrix& m) {
    Matrix r = m;
    for (auto& e : r.entries_) e = s * e;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      if (!(a.entries_[i] == b.entries_[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }
  bool is_identity() const { return *this == identity(ring_, dim_); }

  // Top-left k x k block.
  Matrix leading_block(std::size_t k) const {
    if (k == 0 || k > dim_) throw DimensionMismatch("leading block size out of range");
    Matrix r(ring_, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) r(i, j) = (*this)(i, j);
    return r;
  }

  // Submatrix with row `skip_row` and column `skip_col` removed.
  Matrix minor_matrix(std::size_t skip_row, std::size_t skip_col) const {
    Matrix r(ring_, dim_ - 1);
    for (std::size_t i = 0, ri = 0; i < dim_; ++i) {
      if (i == skip_row) continue;
      for (std::size_t j = 0, rj = 0; j < dim_; ++j) {
        if (j == skip_col) continue;
        r(ri, rj++) = (*this)(i, j);
      }
      ++ri;
    }
    return r;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < dim_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < dim_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
      out += "]";
    }
    return out + "]";
  }
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

 private:
  void check_compatible(const Matrix& o) const {
    if (dim_ != o.dim_)
      throw DimensionMismatch("dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(o.dim_));
    if (!(ring_ == o.ring_)) throw RingMismatch("ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
  }

  ring_type ring_;
  std::size_t dim_;
  std::vector<S> entries_;
};

// Fraction-free (Bareiss) elimination; every division is exact in the ring.
template <Scalar S>
S determinant(const Matrix<S>& a) {
  const std::size_t n = a.dim();
  Matrix<S> m = a;
  S previous = a.ring().one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return a.ring().zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
    previous = m(k, k);
  }
  S det = m(n - 1, n - 1);
  return negate ? -det : det;
}

// Exact inverse. Over a field: Gauss-Jordan with the first nonzero pivot.
// Over a polynomial or Laurent ring: adjugate divided by the determinant,
// which must be a unit of the ring.
template <Scalar S>
Matrix<S> inverse(const Matrix<S>& a) {
  const std::size_t n = a.dim();
  const auto& ring = a.ring();
  if constexpr (FieldScalar<S>) {
    Matrix<S> m = a;
    Matrix<S> inv = Matrix<S>::identity(ring, n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && m(pivot, col).is_zero()) ++pivot;
      if (pivot == n) throw SingularMatrix("matrix is singular (determinant 0): " + a.to_string());
      if (pivot != col)
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(pivot, j), m(col, j));
          std::swap(inv(pivot, j), inv(col, j));
        }
      S scale = m(col, col).inverse();
      for (std::size_t j = 0; j < n; ++j) {
        m(col, j) = m(col, j) * scale;
        inv(col, j) = inv(col, j) * scale;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || m(i, col).is_zero()) continue;
        S factor = m(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          m(i, j) = m(i, j) - factor * m(col, j);
          inv(i, j) = inv(i, j) - factor * inv(col, j);
        }
      }
    }
    return inv;
  } else {
    S det = determinant(a);
    if (det.is_zero()) throw SingularMatrix("matrix is singular (determinant 0): " + a.to_string());
    if (!det.is_unit())
      throw NotAUnit("determinant " + det.to_string() + " is not a unit in " + ring.name());
    S det_inv = det.inverse();
    Matrix<S> inv(ring, n);
    if (n == 1) {
      inv(0, 0) = det_inv;
      return inv;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        S cofactor = determinant(a.minor_matrix(j, i));
        inv(i, j) = ((i + j) % 2 ? -cofactor : cofactor) * det_inv;
      }
    return inv;
  }
}

// I_{position-1} (+) block (+) I_rest, with `position` 1-based.
template <Scalar S>
Matrix<S> block_embed(const Matrix<S>& block, std::size_t position, std::size_t total_dim) {
  if (position < 1 || position - 1 + block.dim() > total_dim)
    throw DimensionMismatch("cannot place a " + std::to_string(block.dim()) + "x" + std::to_string(block.dim()) +
                            " block at position " + std::to_string(position) + " of dimension " +
                            std::to_string(total_dim));
  Matrix<S> m = Matrix<S>::identity(block.ring(), total_dim);
  for (std::size_t i = 0; i < block.dim(); ++i)
    for (std::size_t j = 0; j < block.dim(); ++j) m(position - 1 + i, position - 1 + j) = block(i, j);
  return m;
}

template <Scalar S>
Matrix<S> mat2(const typename S::ring_type& ring, S a, S b, S c, S d) {
  return Matrix<S>::from_rows(ring, {{std::move(a), std::move(b)}, {std::move(c), std::move(d)}});
}

}  // namespace tvbrep
