#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "novikov/algebra.hpp"
#include "novikov/forms.hpp"

namespace novikov {

/// Single-product families with derived dimension at most one:
///   0: all products zero
///   1: e1 e1 = e2
///   2: e1 e2 = e2
///   3: e1 e3 = e2
/// Throws PreconditionError for an unknown variant or a dimension below 2 (variants 1, 2)
/// or 3 (variant 3).
Algebra make_family(int variant, std::size_t n);
std::size_t family_min_dim(int variant);

/// Identifies which of variants 1-3 a derived-dimension-one algebra is:
/// 1 if commutative, 2 if A(AA) != 0, 3 otherwise. Requires left symmetry, the
/// fermionic identity, dim AA = 1 and a nondegenerate invariant form.
int classify_k1(const Algebra& a);

/// Parameters of e1 e_i = l_i e2 + m_i e4, e3 e_i = m_i e2 + g_i e4 (1-based names, 0-based storage).
struct K2Params {
  std::size_t n = 5;
  Vec lambda, mu, gamma;

  static K2Params zero(std::size_t n) { return {n, Vec(n), Vec(n), Vec(n)}; }
};

/// Throws PreconditionError if n < 5 or a vector has the wrong length.
Algebra make_k2(const K2Params& params);

/// L_{e1} L_{e3} = L_{e3} L_{e1}. Throws PreconditionError unless `a` has the make_k2 shape.
bool k2_condition(const Algebra& a);

/// Seeded parameters satisfying k2_condition: the entries at e2 and e4 are chosen from the
/// {-1, 0, 1} solutions of the quadratic constraints they obey; every other index draws a
/// random point of the linear solution space.
K2Params sample_k2_params(std::size_t n, std::uint64_t seed);

/// Seeded parameters with entries in {-1, 0, 1}; may or may not satisfy k2_condition.
K2Params random_k2_params(std::size_t n, std::uint64_t seed);

struct Scrambled {
  Algebra algebra;
  SymForm form;
  Mat basis;  // columns are the new basis vectors in old coordinates
};

/// Maximum number of basis draws in scramble.
inline constexpr int kScrambleAttempts = 64;

/// Random invertible integer basis change (entries in [-3, 3]) applied to both the
/// algebra and the form.
Scrambled scramble(const Algebra& a, const SymForm& b, std::uint64_t seed);
Scrambled transport(const Algebra& a, const SymForm& b, const Mat& p);

/// One generated verification instance: a family (or k = 2 draw) padded to a random
/// dimension, with an invariant nondegenerate form found by the solver, then scrambled.
struct CorpusInstance {
  std::string label;
  int variant = 0;  // 0-3 for families, 4 for k = 2 draws
  Algebra algebra;
  SymForm form;
};

inline constexpr std::size_t kCorpusMaxDim = 8;

CorpusInstance corpus_instance(std::uint64_t seed, std::size_t index);

}  // namespace novikov
