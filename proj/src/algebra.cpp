#include "novikov/algebra.hpp"

#include <utility>

#include "novikov/error.hpp"

namespace novikov {

namespace {

void require_dim(const Algebra& a, std::span<const Rational> x) {
  if (x.size() != a.dim()) throw DimensionMismatch("element length differs from algebra dimension");
}

}  // namespace

Algebra::Algebra(std::size_t n) : Algebra(n, std::vector<Rational>(n * n * n)) {}

Algebra::Algebra(std::size_t n, std::vector<Rational> constants) : n_(n), c_(std::move(constants)) {
  if (c_.size() != n * n * n) throw DimensionMismatch("structure tensor must have n^3 entries");
  right_.assign(n, Mat(n, n));
  left_.assign(n, Mat(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        const Rational& x = c(i, j, m);
        if (sgn(x) == 0) continue;
        right_[j](m, i) = x;  // e_i e_j, column i of R_{e_j}
        left_[i](m, j) = x;   // column j of L_{e_i}
      }
}

AlgebraBuilder& AlgebraBuilder::add(std::size_t i, std::size_t j, std::size_t m, const Rational& coeff) {
  if (i >= n_ || j >= n_ || m >= n_) throw DimensionMismatch("basis index out of range");
  Rational q = coeff;
  q.canonicalize();
  c_[(i * n_ + j) * n_ + m] += q;
  return *this;
}

Element multiply(const Algebra& a, std::span<const Rational> x, std::span<const Rational> y) {
  require_dim(a, x);
  require_dim(a, y);
  const std::size_t n = a.dim();
  Element out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t m = 0; m < n; ++m) out[m] += xy * a.c(i, j, m);
    }
  }
  return out;
}

Mat right_op(const Algebra& a, std::span<const Rational> x) {
  require_dim(a, x);
  Mat r(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (sgn(x[j]) != 0) r += a.right_basis(j) * x[j];
  return r;
}

Mat left_op(const Algebra& a, std::span<const Rational> x) {
  require_dim(a, x);
  Mat l(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (sgn(x[i]) != 0) l += a.left_basis(i) * x[i];
  return l;
}

bool check_left_symmetric(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec bracket(n);
      for (std::size_t m = 0; m < n; ++m) bracket[m] = a.c(i, j, m) - a.c(j, i, m);
      const Mat lhs = left_op(a, bracket);
      const Mat rhs = a.left_basis(i) * a.left_basis(j) - a.left_basis(j) * a.left_basis(i);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool check_fermionic(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Mat anti = a.right_basis(i) * a.right_basis(j) + a.right_basis(j) * a.right_basis(i);
      if (!anti.is_zero()) return false;
    }
  return true;
}

bool check_novikov(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(a.right_basis(i) * a.right_basis(j) == a.right_basis(j) * a.right_basis(i))) return false;
  return true;
}

std::vector<Rational> commutator_tensor(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Rational> b(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) b[(i * n + j) * n + m] = a.c(i, j, m) - a.c(j, i, m);
  return b;
}

bool commutator_check(const Algebra& a) {
  if (!check_left_symmetric(a)) throw PreconditionError("commutator check needs a left-symmetric algebra");
  const std::size_t n = a.dim();
  const Algebra lie(n, commutator_tensor(a));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        // [[x,y],z] + [[y,z],x] + [[z,x],y]
        Vec sum = multiply(lie, multiply(lie, ei, ej), ek);
        const Vec t2 = multiply(lie, multiply(lie, ej, ek), ei);
        const Vec t3 = multiply(lie, multiply(lie, ek, ei), ej);
        for (std::size_t m = 0; m < n; ++m) sum[m] += t2[m] + t3[m];
        if (!is_zero(sum)) return false;
      }
  return true;
}

std::size_t derived_dim(const Algebra& a) {
  const std::size_t n = a.dim();
  Mat products(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) products(i * n + j, m) = a.c(i, j, m);
  return rank(products);
}

Algebra transport(const Algebra& a, const Mat& p) {
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("basis change must be n x n");
  const Mat p_inv = inverse(p);
  std::vector<Rational> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec u = p.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vec coords = p_inv * multiply(a, u, p.column(j));
      for (std::size_t m = 0; m < n; ++m) c[(i * n + j) * n + m] = coords[m];
    }
  }
  return Algebra(n, std::move(c));
}

}  // namespace novikov
