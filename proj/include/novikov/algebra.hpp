#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "novikov/matrix.hpp"

namespace novikov {

using Element = Vec;

/// Finite-dimensional algebra given by structure constants:
/// e_i e_j = sum_m c(i, j, m) e_m, indices 0-based.
///
/// Right and left multiplication matrices of the basis are computed once at
/// construction; the value is immutable afterwards.
class Algebra {
 public:
  Algebra() : Algebra(0) {}
  /// The zero algebra of dimension n.
  explicit Algebra(std::size_t n);
  /// `constants` has n^3 entries indexed (i * n + j) * n + m.
  Algebra(std::size_t n, std::vector<Rational> constants);

  std::size_t dim() const noexcept { return n_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t m) const {
    return c_[(i * n_ + j) * n_ + m];
  }
  const std::vector<Rational>& constants() const noexcept { return c_; }

  /// Matrix of y -> y e_j.
  const Mat& right_basis(std::size_t j) const { return right_.at(j); }
  /// Matrix of y -> e_i y.
  const Mat& left_basis(std::size_t i) const { return left_.at(i); }

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  std::size_t n_;
  std::vector<Rational> c_;
  std::vector<Mat> right_;
  std::vector<Mat> left_;
};

/// Builder for sparse structure tensors.
class AlgebraBuilder {
 public:
  explicit AlgebraBuilder(std::size_t n) : n_(n), c_(n * n * n) {}
  /// Adds `coeff` to the e_m coefficient of e_i e_j.
  AlgebraBuilder& add(std::size_t i, std::size_t j, std::size_t m, const Rational& coeff);
  Algebra build() const { return Algebra(n_, c_); }

 private:
  std::size_t n_;
  std::vector<Rational> c_;
};

Element multiply(const Algebra& a, std::span<const Rational> x, std::span<const Rational> y);

/// Matrix of y -> y x.
Mat right_op(const Algebra& a, std::span<const Rational> x);
/// Matrix of y -> x y.
Mat left_op(const Algebra& a, std::span<const Rational> x);

/// (xy)z - x(yz) = (yx)z - y(xz), checked as L_{[e_i,e_j]} = [L_i, L_j] on basis pairs.
bool check_left_symmetric(const Algebra& a);
/// (xy)z = -(xz)y, i.e. R_i R_j + R_j R_i = 0 for all basis pairs (including i = j).
bool check_fermionic(const Algebra& a);
/// (xy)z = (xz)y, i.e. R_i R_j = R_j R_i.
bool check_novikov(const Algebra& a);

/// Structure constants of [x, y] = xy - yx.
std::vector<Rational> commutator_tensor(const Algebra& a);
/// Jacobi identity for the commutator bracket on all basis triples.
/// Throws PreconditionError unless `a` is left-symmetric.
bool commutator_check(const Algebra& a);

/// dim AA, the span of all products e_i e_j.
std::size_t derived_dim(const Algebra& a);

/// Change of basis: new basis vectors are the columns of `p` (must be invertible).
Algebra transport(const Algebra& a, const Mat& p);

}  // namespace novikov
