#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "novikov/rational.hpp"

namespace novikov {

using Vec = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  /// Columns must all have the same length; an empty list gives a `rows x 0` matrix.
  static Mat from_columns(std::span<const Vec> columns, std::size_t rows);
  static Mat diagonal(std::span<const Rational> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_column(std::size_t c, std::span<const Rational> v);
  void swap_columns(std::size_t a, std::size_t b);

  /// Submatrix of the given rows and columns, in the given order.
  Mat select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Mat transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_diagonal() const;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  Mat& operator*=(const Rational& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rational& s) { return a *= s; }
  friend Mat operator*(const Rational& s, Mat a) { return a *= s; }
  friend Mat operator-(Mat a) { return a *= Rational(-1); }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, std::span<const Rational> v);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
/// Bilinear pairing a^T S b.
Rational pairing(const Mat& s, std::span<const Rational> a, std::span<const Rational> b);
Vec unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

/// Reduced row echelon form. Pivots are the first nonzero entry in row-major scan order.
struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivot_cols;
};
Echelon row_reduce(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis of {v : M v = 0}; one vector per free column, with that free variable set to 1.
std::vector<Vec> kernel_basis(const Mat& m);

/// A solution of M v = b with all free variables zero, or nullopt if inconsistent.
std::optional<Vec> solve(const Mat& m, std::span<const Rational> b);

Rational determinant(const Mat& m);
/// Throws PreconditionError when singular.
Mat inverse(const Mat& m);

struct Congruence {
  Mat basis;     // P, invertible
  Mat diagonal;  // D = P^T S P
};

/// Symmetric Gaussian elimination over the rationals: P^T S P = D exactly.
Congruence congruent_diagonalize(const Mat& s);

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;
  bool nondegenerate() const { return n_zero == 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric matrix (Sylvester). For nondegenerate S this is the type (n-p, p).
Signature signature(const Mat& s);

}  // namespace novikov
