#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/matrix.hpp"

namespace novikov {

/// Symmetric bilinear form with its inertia computed once.
class SymForm {
 public:
  /// Throws PreconditionError unless `b` is square and symmetric.
  explicit SymForm(Mat b);

  const Mat& matrix() const noexcept { return b_; }
  std::size_t dim() const noexcept { return b_.rows(); }
  const Signature& signature() const noexcept { return sig_; }
  bool nondegenerate() const noexcept { return sig_.nondegenerate(); }
  /// Number of negative directions p in the type (n - p, p).
  std::size_t p() const noexcept { return sig_.n_minus; }

  Rational operator()(std::span<const Rational> x, std::span<const Rational> y) const {
    return pairing(b_, x, y);
  }

  SymForm negated() const { return SymForm(-b_); }

  friend bool operator==(const SymForm& a, const SymForm& b) { return a.b_ == b.b_; }

 private:
  Mat b_;
  Signature sig_;
};

/// <R_x y, z> = <y, R_x z> for all x, y, z; checked as R_j^T B = B R_j on the basis.
bool is_invariant(const Algebra& a, const SymForm& b);

/// Basis of all symmetric B with R_j^T B = B R_j for every basis index j.
/// Unknowns are the upper-triangle entries of B in row-major order.
std::vector<Mat> invariant_form_space(const Algebra& a);

/// Coefficient sweep over {0, 1, -1}^d runs only when the space dimension d is at most this.
inline constexpr std::size_t kSweepMaxDim = 12;
/// Random combinations tried after the sweep.
inline constexpr int kRandomFormAttempts = 256;

/// A nondegenerate member of span(space), or nullopt.
///
/// Small spaces are swept first: coefficient vectors in {0, 1, -1}^d ordered by
/// support size, then support bitmask, then sign pattern. Candidates are screened by
/// their determinant mod 2^61 - 1, so a combination whose determinant happens to
/// vanish only mod p is skipped. After the sweep, seeded random integer combinations
/// with growing range are tried.
std::optional<SymForm> find_nondegenerate(const std::vector<Mat>& space, std::uint64_t seed);

/// B if it has at most as many negative as positive directions, otherwise -B.
/// Throws DegenerateFormError for singular input.
SymForm normalize_orientation(const SymForm& b);

/// <Im R_x, Im R_x> = 0 for every basis x, i.e. R_j^T B R_j = 0.
bool images_isotropic(const Algebra& a, const SymForm& b);
/// Largest dim Im R_{e_j} over the basis.
std::size_t max_basis_image_dim(const Algebra& a);

/// Change of basis for a form: P^T B P.
SymForm transport(const SymForm& b, const Mat& p);

}  // namespace novikov
