#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/forms.hpp"

namespace novikov {

/// Element whose right multiplication has maximal rank, with a rank certificate.
struct MaxRankElement {
  Element x0;
  std::size_t k = 0;
  /// For every basis direction y and k + 2 distinct l, rank(R_{x0 + l y}) <= k.
  /// The minors involved are polynomials of degree at most k + 1 in l, so they
  /// vanish identically along each line.
  bool certified = false;
};

/// Requires check_fermionic(a); throws PreconditionError otherwise.
MaxRankElement max_rank_element(const Algebra& a, std::uint64_t seed);

/// Adapted basis for a square-zero self-adjoint R_{x0}.
///
/// Columns of `basis` are u_1, w_1, ..., u_k, w_k followed by the complement.
/// R_{x0} u_i = w_i and R_{x0} kills everything else. The metric in this basis is
/// block diagonal: [[0, w_i], [w_i, 0]] for each pair (w_i = pair_weights[i]),
/// then diag(complement_diag) with negative entries first.
struct CanonReport {
  Element x0;
  std::size_t k = 0;
  Mat basis;
  std::vector<Rational> pair_weights;
  std::vector<int> pair_signs;
  std::vector<Rational> complement_diag;
  /// d_forms[j](i, l): coefficient of w_i in R_{e'_j} u_l, where e'_j is column j of `basis`.
  std::vector<Mat> d_forms;

  /// Gram matrix the basis is supposed to produce.
  Mat expected_metric() const;
};

/// Builds the adapted basis. Requires `b` invariant, nondegenerate, with p <= n - p,
/// and R_{x0}^2 = 0. Internal claims (isotropy of Im R_{x0}, Im = Ker^perp,
/// nondegenerate pairing) are asserted and raise InternalInvariantError if they fail.
CanonReport canonical_basis(const Algebra& a, const SymForm& b, const Element& x0);

/// Truth value of each structural claim about R_x in the adapted basis.
struct StructureClaims {
  bool metric_form = false;       // P^T B P equals the block metric
  bool x0_shape = false;          // R_{x0} is a sum of [[0,0],[1,0]] blocks
  bool lower_right_zero = false;  // complement x complement block vanishes
  bool side_blocks_zero = false;  // pair x complement blocks vanish
  bool core_shape = false;        // every 2x2 pair block is [[0,0],[d,0]], matching d_forms
  bool weighted_symmetry = false; // d_il w_i = d_li w_l
  bool products_vanish = false;   // R_x R_y = 0 for all basis pairs

  bool all() const {
    return metric_form && x0_shape && lower_right_zero && side_blocks_zero && core_shape &&
           weighted_symmetry && products_vanish;
  }
};

/// Throws PreconditionError when the report does not fit the algebra (sizes, singular basis).
StructureClaims verify_structure(const Algebra& a, const SymForm& b, const CanonReport& rep);

struct TheoremReport {
  SymForm form;  // after orientation normalization
  MaxRankElement max_rank;
  CanonReport canon;
  StructureClaims claims;
  bool novikov = false;
  std::size_t derived = 0;
  bool k_within_p = false;

  bool holds() const {
    return max_rank.certified && claims.all() && novikov && derived == max_rank.k && k_within_p;
  }
};

/// Full pipeline: orientation, maximal-rank element, adapted basis, structure claims,
/// Novikov identity, and dim AA = k. Preconditions: left-symmetric, fermionic, `b`
/// invariant and nondegenerate (DegenerateFormError for a singular form).
TheoremReport theorem_report(const Algebra& a, const SymForm& b, std::uint64_t seed);
bool theorem_check(const Algebra& a, const SymForm& b, std::uint64_t seed);

}  // namespace novikov
