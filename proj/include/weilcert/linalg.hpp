#pragma once

// Exact dense linear algebra over Q(i) and over polynomial rings.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "weilcert/error.hpp"
#include "weilcert/exactnum.hpp"
#include "weilcert/multipoly.hpp"

namespace weilcert {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw Error("matrix entry count does not match its shape");
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transposed() const {
    std::vector<T> out;
    out.reserve(data_.size());
    for (std::size_t c = 0; c < cols_; ++c) {
      for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    }
    return Matrix(cols_, rows_, std::move(out));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<GaussianRational>;
using PolyMatrix = Matrix<Polynomial>;
using Vector = std::vector<GaussianRational>;

namespace detail {

inline GaussianRational one_like(const GaussianRational&) { return GaussianRational(1); }
inline Polynomial one_like(const Polynomial& p) { return Polynomial(p.registry(), GaussianRational(1)); }
inline GaussianRational zero_like(const GaussianRational&) { return {}; }
inline Polynomial zero_like(const Polynomial& p) { return Polynomial(p.registry()); }

inline std::optional<GaussianRational> exact_quotient(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) return std::nullopt;
  return a / b;
}
inline std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b) {
  return exact_divide(a, b);
}

template <class T>
void check_common_registry(const Matrix<T>&) {}

inline void check_common_registry(const PolyMatrix& m) {
  RegistryPtr reg;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) {
      if (!e.registry()) continue;
      if (!reg) {
        reg = e.registry();
      } else if (!same_registry(reg, e.registry())) {
        throw RegistryMismatch();
      }
    }
  }
}

}  // namespace detail

template <class T>
Matrix<T> identity_matrix(std::size_t n, const T& one) {
  Matrix<T> m(n, n, detail::zero_like(one));
  for (std::size_t k = 0; k < n; ++k) m(k, k) = one;
  return m;
}

/// Laplace expansion along the first row.
template <class T>
T det_cofactor(const Matrix<T>& m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw Error("determinant of an empty matrix");
  if (n == 1) return m(0, 0);
  T total = detail::zero_like(m(0, 0));
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<T> minor;
    minor.reserve((n - 1) * (n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) minor.push_back(m(r, c));
      }
    }
    T term = m(0, j) * det_cofactor(Matrix<T>(n - 1, n - 1, std::move(minor)));
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Fraction-free Bareiss elimination. The pivot of each step is the first
/// row (at or below the diagonal) with a nonzero entry in the current
/// column. Every division by the previous pivot must be exact; if one is
/// not, the computation restarts with cofactor expansion.
template <class T>
T det_bareiss(Matrix<T> a) {
  if (!a.is_square()) throw Error("determinant of a non-square matrix");
  detail::check_common_registry(a);
  const std::size_t n = a.rows();
  if (n == 0) throw Error("determinant of an empty matrix");
  const Matrix<T> original = a;
  T prev = detail::one_like(a(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return detail::zero_like(a(0, 0));
    if (p != k) {
      a.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto q = detail::exact_quotient(num, prev);
        if (!q) return det_cofactor(original);
        a(i, j) = std::move(*q);
      }
      a(i, k) = detail::zero_like(a(i, k));
    }
    prev = a(k, k);
  }
  T result = a(n - 1, n - 1);
  if (negate) result = -result;
  return result;
}

struct RowEchelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
inline RowEchelon row_reduce(ScalarMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const GaussianRational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GaussianRational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const ScalarMatrix& m) { return row_reduce(m).pivot_columns.size(); }

/// Basis of the right kernel {v : m v = 0}, one vector per free column, with
/// that free coordinate set to 1.
inline std::vector<Vector> kernel_basis(const ScalarMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Vector multiply(const ScalarMatrix& m, std::span<const GaussianRational> v) {
  if (v.size() != m.cols()) throw Error("matrix-vector shape mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

/// Entrywise evaluation of a polynomial matrix at a point.
inline ScalarMatrix evaluate(const PolyMatrix& m, const Point& point) {
  std::vector<GaussianRational> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) out.push_back(evaluate(e, point));
  }
  return ScalarMatrix(m.rows(), m.cols(), std::move(out));
}

}  // namespace weilcert
