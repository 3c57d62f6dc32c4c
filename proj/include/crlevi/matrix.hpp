#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crlevi/errors.hpp"
#include "crlevi/scalar.hpp"

namespace crlevi {

/// Dense row-major matrix over the Gaussian rationals.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  /// Column vector from entries.
  static CMatrix column_vector(std::span<const GaussianRational> v) {
    CMatrix m(v.size(), 1);
    for (std::size_t k = 0; k < v.size(); ++k) m(k, 0) = v[k];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const GaussianRational> data() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& g) { return g.is_zero(); });
  }

  CMatrix transpose() const {
    CMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }
  CMatrix conj() const {
    CMatrix t(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = data_[k].conj();
    return t;
  }
  CMatrix adjoint() const { return transpose().conj(); }

  CMatrix column(std::size_t c) const {
    CMatrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
    return v;
  }
  CMatrix row(std::size_t r) const {
    CMatrix v(1, cols_);
    for (std::size_t c = 0; c < cols_; ++c) v(0, c) = (*this)(r, c);
    return v;
  }

  GaussianRational trace() const {
    GaussianRational t;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
    return t;
  }

  CMatrix& operator+=(const CMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  CMatrix& operator*=(const GaussianRational& s) {
    for (auto& e : data_) e *= s;
    return *this;
  }
  CMatrix operator-() const {
    CMatrix t(*this);
    for (auto& e : t.data_) e = -e;
    return t;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, const GaussianRational& s) { return a *= s; }
  friend CMatrix operator*(const GaussianRational& s, CMatrix a) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matrix product " + a.shape() + " * " + b.shape());
    CMatrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& ark = a(r, k);
        if (ark.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += ark * b(k, c);
      }
    return p;
  }

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("shape " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// Horizontal concatenation [a | b].
inline CMatrix hconcat(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hconcat row counts differ");
  CMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

/// Keeps the listed columns, in order.
inline CMatrix select_columns(const CMatrix& a, std::span<const std::size_t> cols) {
  CMatrix m(a.rows(), cols.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = a(r, cols[k]);
  return m;
}

inline CMatrix select_rows(const CMatrix& a, std::span<const std::size_t> rows) {
  CMatrix m(rows.size(), a.cols());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t c = 0; c < a.cols(); ++c) m(k, c) = a(rows[k], c);
  return m;
}

namespace detail {

// Gaussian integer used by the fraction-free elimination.
struct GaussInt {
  Integer re{0};
  Integer im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
};

// Exact quotient a / b in Z[i]; the Bareiss recurrence guarantees divisibility.
inline GaussInt exact_divide(const GaussInt& a, const GaussInt& b) {
  Integer n = b.re * b.re + b.im * b.im;
  Integer re = a.re * b.re + a.im * b.im;
  Integer im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
    throw std::logic_error("Bareiss step produced an inexact quotient");
  Integer qre, qim;
  mpz_divexact(qre.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(qim.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return {qre, qim};
}

// Scales each row by the lcm of its denominators so that it lies in Z[i]^n.
inline std::vector<std::vector<GaussInt>> clear_denominators(const CMatrix& a) {
  std::vector<std::vector<GaussInt>> out(a.rows(), std::vector<GaussInt>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).im().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Rational re = a(r, c).re() * l;
      Rational im = a(r, c).im() * l;
      out[r][c] = {re.get_num(), im.get_num()};
    }
  }
  return out;
}

}  // namespace detail

struct RankKernel {
  std::size_t rank = 0;
  /// Columns span ker A; one column per non-pivot column of A.
  CMatrix kernel;
  /// Pivot column indices of the reduced echelon form, ascending.
  std::vector<std::size_t> pivots;
  /// Reduced row echelon form of A (rank rows).
  CMatrix rref;
};

/// Rank, pivot columns, reduced echelon form and kernel basis of `a`.
///
/// Elimination is fraction-free over Z[i] (Bareiss) with first-nonzero
/// pivoting; the echelon rows are then normalized and back-substituted. The
/// kernel column for free column f has a 1 in position f, zeros in the other
/// free positions and minus the RREF entries in the pivot positions.
inline RankKernel rank_and_kernel(const CMatrix& a) {
  using detail::GaussInt;
  auto m = detail::clear_denominators(a);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  GaussInt prev{1, 0};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = detail::exact_divide(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
      m[i][c] = {};
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }

  RankKernel out;
  out.rank = r;
  out.pivots = pivots;
  out.rref = CMatrix(r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    GaussianRational inv = GaussianRational(Rational(m[i][pivots[i]].re), Rational(m[i][pivots[i]].im)).inverse();
    for (std::size_t j = pivots[i]; j < cols; ++j)
      out.rref(i, j) = GaussianRational(Rational(m[i][j].re), Rational(m[i][j].im)) * inv;
  }
  for (std::size_t i = r; i-- > 0;) {
    for (std::size_t above = 0; above < i; ++above) {
      GaussianRational f = out.rref(above, pivots[i]);
      if (f.is_zero()) continue;
      for (std::size_t j = pivots[i]; j < cols; ++j) out.rref(above, j) -= f * out.rref(i, j);
    }
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  out.kernel = CMatrix(cols, cols - r);
  std::size_t k = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out.kernel(f, k) = 1;
    for (std::size_t i = 0; i < r; ++i) out.kernel(pivots[i], k) = -out.rref(i, f);
    ++k;
  }
  return out;
}

inline std::size_t rank(const CMatrix& a) { return rank_and_kernel(a).rank; }

/// Inverse of a square matrix by Gauss-Jordan elimination.
inline CMatrix inverse(const CMatrix& a) {
  if (!a.square()) throw DimensionMismatch("inverse of non-square " + a.shape());
  const std::size_t n = a.rows();
  auto rk = rank_and_kernel(hconcat(a, CMatrix::identity(n)));
  if (rk.rank < n || rk.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  CMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rk.rref(r, n + c);
  return inv;
}

/// Returns x with a*x = b when the system is consistent. When `a` has a
/// kernel the particular solution with zero free variables is returned.
inline std::optional<CMatrix> solve(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
  auto rk = rank_and_kernel(hconcat(a, b));
  CMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < rk.rank; ++i) {
    if (rk.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(rk.pivots[i], c) = rk.rref(i, a.cols() + c);
  }
  return x;
}

/// Exact matrix with the Hermitian invariant entry(a,b) = conj(entry(b,a)).
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(CMatrix m) : m_(std::move(m)) {
    if (!m_.square()) throw NonHermitianInput("non-square matrix " + m_.shape());
    for (std::size_t r = 0; r < m_.rows(); ++r)
      for (std::size_t c = r; c < m_.cols(); ++c)
        if (!(m_(r, c) == m_(c, r).conj()))
          throw NonHermitianInput("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") is not the conjugate of its transpose");
  }

  std::size_t size() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  /// The congruent form p* A p.
  HermitianMatrix congruent(const CMatrix& p) const { return HermitianMatrix(p.adjoint() * m_ * p); }

  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) { return a.m_ == b.m_; }

 private:
  CMatrix m_;
};

}  // namespace crlevi
