#include "novikov/matrix.hpp"

#include <algorithm>
#include <utility>

#include "novikov/error.hpp"

namespace novikov {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  Mat m(nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw DimensionMismatch("ragged row list");
    std::size_t c = 0;
    for (const auto& x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

Mat Mat::from_columns(std::span<const Vec> columns, std::size_t rows) {
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Mat Mat::diagonal(std::span<const Rational> entries) {
  Mat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Mat::set_column(std::size_t c, std::span<const Rational> v) {
  if (v.size() != rows_) throw DimensionMismatch("column length differs from row count");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Mat::swap_columns(std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

Mat Mat::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  Mat m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Mat m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Mat::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Mat::is_diagonal() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && sgn((*this)(r, c)) != 0) return false;
  return true;
}

Mat& Mat::operator+=(const Mat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix difference shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Mat& Mat::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
  Mat m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rational& x = a(i, l);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(l, j);
    }
  }
  return m;
}

Vec operator*(const Mat& a, std::span<const Rational> v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product shape");
  Vec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product length");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational pairing(const Mat& s, std::span<const Rational> a, std::span<const Rational> b) {
  return dot(a, s * b);
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Echelon row_reduce(const Mat& m) {
  Echelon e{m, {}};
  Mat& a = e.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && sgn(a(r, c)) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot_row, j));
    const Rational inv = 1 / a(pivot_row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(pivot_row, j);
    }
    e.pivot_cols.push_back(c);
    ++pivot_row;
  }
  return e;
}

std::size_t rank(const Mat& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const Echelon e = row_reduce(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.reduced(i, m.cols());
  return x;
}

Rational determinant(const Mat& m) {
  if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && sgn(a(r, c)) == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(r, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Mat inverse(const Mat& m) {
  if (!m.square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = row_reduce(aug);
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1))
    throw PreconditionError("matrix is singular");
  return e.reduced.block(0, n, n, n);
}

Congruence congruent_diagonalize(const Mat& s) {
  if (!s.is_symmetric()) throw PreconditionError("congruence diagonalization needs a symmetric matrix");
  const std::size_t n = s.rows();
  Mat a = s;
  Mat p = Mat::identity(n);

  // Simultaneous row/column operations; column operations are mirrored in p.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t j = 0; j < n; ++j) a(j, dst) += f * a(j, src);
    for (std::size_t j = 0; j < n; ++j) p(j, dst) += f * p(j, src);
  };
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    a.swap_columns(i, j);
    p.swap_columns(i, j);
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a(i, i)) == 0) {
      std::size_t j = i + 1;
      while (j < n && sgn(a(j, j)) == 0) ++j;
      if (j < n) {
        swap_index(i, j);
      } else {
        j = i + 1;
        while (j < n && sgn(a(i, j)) == 0) ++j;
        if (j == n) continue;  // row i already zero past the diagonal
        add_multiple(i, j, 1);  // new diagonal entry is 2 a(i,j)
      }
    }
    const Rational pivot = a(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      add_multiple(j, i, -a(i, j) / pivot);
    }
  }

  Mat d = p.transpose() * s * p;
  if (!d.is_diagonal()) throw InternalInvariantError("congruence did not diagonalize");
  return {std::move(p), std::move(d)};
}

Signature signature(const Mat& s) {
  const Congruence c = congruent_diagonalize(s);
  Signature sig;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    const int sg = sgn(c.diagonal(i, i));
    if (sg > 0)
      ++sig.n_plus;
    else if (sg < 0)
      ++sig.n_minus;
    else
      ++sig.n_zero;
  }
  return sig;
}

}  // namespace novikov
