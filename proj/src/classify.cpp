#include "novikov/classify.hpp"

#include <array>
#include <utility>
#include <vector>

#include "novikov/error.hpp"
#include "novikov/rng.hpp"

namespace novikov {

std::size_t family_min_dim(int variant) {
  switch (variant) {
    case 0: return 0;
    case 1:
    case 2: return 2;
    case 3: return 3;
    default: throw PreconditionError("unknown family variant " + std::to_string(variant));
  }
}

Algebra make_family(int variant, std::size_t n) {
  if (n < family_min_dim(variant))
    throw PreconditionError("dimension " + std::to_string(n) + " too small for variant " +
                            std::to_string(variant));
  AlgebraBuilder b(n);
  switch (variant) {
    case 1: b.add(0, 0, 1, 1); break;
    case 2: b.add(0, 1, 1, 1); break;
    case 3: b.add(0, 2, 1, 1); break;
    default: break;
  }
  return b.build();
}

int classify_k1(const Algebra& a) {
  if (!check_left_symmetric(a) || !check_fermionic(a))
    throw PreconditionError("classification needs a fermionic left-symmetric algebra");
  if (derived_dim(a) != 1) throw PreconditionError("classification needs dim AA = 1");
  if (!find_nondegenerate(invariant_form_space(a), 0))
    throw PreconditionError("algebra admits no nondegenerate invariant form");

  const std::size_t n = a.dim();
  bool commutative = true;
  for (std::size_t i = 0; i < n && commutative; ++i)
    for (std::size_t j = i + 1; j < n && commutative; ++j)
      for (std::size_t m = 0; m < n; ++m)
        if (a.c(i, j, m) != a.c(j, i, m)) {
          commutative = false;
          break;
        }
  if (commutative) return 1;

  // AA is spanned by one product; A(AA) != 0 iff some L_{e_i} is nonzero on it.
  Vec product(n);
  for (std::size_t i = 0; i < n && is_zero(product); ++i)
    for (std::size_t j = 0; j < n && is_zero(product); ++j)
      for (std::size_t m = 0; m < n; ++m) product[m] = a.c(i, j, m);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(a.left_basis(i) * product)) return 2;
  return 3;
}

namespace {

void validate(const K2Params& p) {
  if (p.n < 5) throw PreconditionError("k = 2 family needs n >= 5");
  if (p.lambda.size() != p.n || p.mu.size() != p.n || p.gamma.size() != p.n)
    throw PreconditionError("k = 2 parameter vectors must have length n");
}

// Indices of e2 and e4.
constexpr std::size_t kE2 = 1;
constexpr std::size_t kE4 = 3;

// Linear constraints on (lambda_i, mu_i, gamma_i) from L1 L3 e_i = L3 L1 e_i,
// given the entries at e2 and e4.
Mat index_constraints(const K2Params& p) {
  const Rational &l2 = p.lambda[kE2], &l4 = p.lambda[kE4];
  const Rational &m2 = p.mu[kE2], &m4 = p.mu[kE4];
  const Rational &g2 = p.gamma[kE2], &g4 = p.gamma[kE4];
  return Mat::from_rows({{-m2, l2 - m4, l4}, {-g2, m2 - g4, m4}});
}

bool satisfied(const Mat& cons, const Rational& l, const Rational& m, const Rational& g) {
  const Vec v{l, m, g};
  return is_zero(cons * v);
}

// Choices of the six entries at e2, e4 in {-1, 0, 1} that satisfy their own constraints.
const std::vector<std::array<int, 6>>& core_solutions() {
  static const std::vector<std::array<int, 6>> solutions = [] {
    std::vector<std::array<int, 6>> out;
    for (int code = 0; code < 729; ++code) {
      std::array<int, 6> v{};
      int t = code;
      for (auto& x : v) {
        x = t % 3 - 1;
        t /= 3;
      }
      K2Params p = K2Params::zero(5);
      p.lambda[kE2] = v[0], p.lambda[kE4] = v[1];
      p.mu[kE2] = v[2], p.mu[kE4] = v[3];
      p.gamma[kE2] = v[4], p.gamma[kE4] = v[5];
      const Mat cons = index_constraints(p);
      if (satisfied(cons, v[0], v[2], v[4]) && satisfied(cons, v[1], v[3], v[5])) out.push_back(v);
    }
    return out;
  }();
  return solutions;
}

}  // namespace

Algebra make_k2(const K2Params& params) {
  validate(params);
  AlgebraBuilder b(params.n);
  for (std::size_t i = 0; i < params.n; ++i) {
    b.add(0, i, kE2, params.lambda[i]).add(0, i, kE4, params.mu[i]);
    b.add(2, i, kE2, params.mu[i]).add(2, i, kE4, params.gamma[i]);
  }
  return b.build();
}

bool k2_condition(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n < 5) throw PreconditionError("not a k = 2 family algebra (n < 5)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        const bool allowed = (i == 0 || i == 2) && (m == kE2 || m == kE4);
        if (!allowed && sgn(a.c(i, j, m)) != 0) throw PreconditionError("not a k = 2 family algebra");
      }
  for (std::size_t j = 0; j < n; ++j)
    if (a.c(0, j, kE4) != a.c(2, j, kE2)) throw PreconditionError("not a k = 2 family algebra (mu mismatch)");
  const Mat& l1 = a.left_basis(0);
  const Mat& l3 = a.left_basis(2);
  return l1 * l3 == l3 * l1;
}

K2Params sample_k2_params(std::size_t n, std::uint64_t seed) {
  K2Params p = K2Params::zero(n);
  validate(p);
  Rng rng(seed);
  const auto& cores = core_solutions();
  const auto& core = cores[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cores.size()) - 1))];
  p.lambda[kE2] = core[0], p.lambda[kE4] = core[1];
  p.mu[kE2] = core[2], p.mu[kE4] = core[3];
  p.gamma[kE2] = core[4], p.gamma[kE4] = core[5];

  const auto free_dirs = kernel_basis(index_constraints(p));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == kE2 || i == kE4) continue;
    if (rng.uniform(0, 3) == 0) continue;  // leave some indices empty
    Vec v(3);
    for (const Vec& dir : free_dirs) {
      const Rational coeff = rng.uniform(-2, 2);
      for (std::size_t t = 0; t < 3; ++t) v[t] += coeff * dir[t];
    }
    p.lambda[i] = v[0], p.mu[i] = v[1], p.gamma[i] = v[2];
  }
  return p;
}

K2Params random_k2_params(std::size_t n, std::uint64_t seed) {
  K2Params p = K2Params::zero(n);
  validate(p);
  Rng rng(seed);
  for (Vec* v : {&p.lambda, &p.mu, &p.gamma})
    for (auto& x : *v) x = rng.uniform(0, 2) == 0 ? rng.uniform(-1, 1) : 0;
  return p;
}

Scrambled transport(const Algebra& a, const SymForm& b, const Mat& p) {
  return Scrambled{transport(a, p), transport(b, p), p};
}

Scrambled scramble(const Algebra& a, const SymForm& b, std::uint64_t seed) {
  const std::size_t n = a.dim();
  if (b.dim() != n) throw DimensionMismatch("form size differs from algebra dimension");
  Rng rng(seed);
  for (int attempt = 0; attempt < kScrambleAttempts; ++attempt) {
    Mat p(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p(r, c) = rng.uniform(-3, 3);
    if (sgn(determinant(p)) != 0) return transport(a, b, p);
  }
  throw InternalInvariantError("no invertible basis change drawn");
}

CorpusInstance corpus_instance(std::uint64_t seed, std::size_t index) {
  Rng rng(mix_seed(seed, index));
  const int variant = static_cast<int>(index % 5);
  Algebra source;
  std::string label;
  if (variant < 4) {
    const auto lo = static_cast<std::int64_t>(std::max<std::size_t>(family_min_dim(variant), 2));
    const auto n = static_cast<std::size_t>(rng.uniform(lo, kCorpusMaxDim));
    source = make_family(variant, n);
    label = "family" + std::to_string(variant) + "-n" + std::to_string(n);
  } else {
    const auto n = static_cast<std::size_t>(rng.uniform(5, kCorpusMaxDim));
    source = make_k2(sample_k2_params(n, mix_seed(seed, index + 1000003)));
    label = "k2-n" + std::to_string(n);
  }
  auto form = find_nondegenerate(invariant_form_space(source), mix_seed(seed, index + 2000003));
  if (!form) throw InternalInvariantError("no nondegenerate invariant form for " + label);
  Scrambled s = scramble(source, *form, mix_seed(seed, index + 3000003));
  return CorpusInstance{label + "#" + std::to_string(index), variant, std::move(s.algebra),
                        std::move(s.form)};
}

}  // namespace novikov
