#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "novikov/matrix.hpp"

namespace novikov {

/// Exponent vector, one entry per indeterminate.
using Monomial = std::vector<std::uint32_t>;

/// Multivariate polynomial over the rationals in a fixed number of indeterminates.
/// Terms are kept in lex order with no zero coefficients.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c);
  /// The indeterminate t_i (0-based).
  static Poly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::size_t total_degree() const;
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  void add_term(const Monomial& m, const Rational& c);
  Rational evaluate(std::span<const Rational> point) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Quotient of an exact division; throws InternalInvariantError if `divisor` does not divide.
  Poly divide_exact(const Poly& divisor) const;

 private:
  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

/// Matrix of polynomials sharing one set of indeterminates.
class PolyMat {
 public:
  PolyMat(std::size_t rows, std::size_t cols, std::size_t nvars);

  /// The linear pencil sum_j t_j * ops[j]; all ops must have equal shape.
  static PolyMat linear_pencil(std::span<const Mat> ops);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }

  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Mat evaluate(std::span<const Rational> point) const;

 private:
  std::size_t rows_, cols_, nvars_;
  std::vector<Poly> data_;
};

/// Rank over the field of rational functions, by fraction-free (Bareiss) elimination
/// with the first nonzero entry in row-major order as pivot.
std::size_t generic_rank(const PolyMat& m);

/// Maximum number of sampling attempts in find_generic_point.
inline constexpr int kGenericPointAttempts = 64;

/// Rational point where the specialized rank reaches `target_rank`. Attempt i draws
/// integer coordinates uniformly from [-w, w] with w = 2^(i+1) (capped at 2^40).
/// Throws GenericPointError once every attempt fails.
std::vector<Rational> find_generic_point(const PolyMat& m, std::size_t target_rank,
                                         std::uint64_t seed);

}  // namespace novikov
