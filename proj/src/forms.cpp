#include "novikov/forms.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "novikov/error.hpp"
#include "novikov/rng.hpp"

namespace novikov {

SymForm::SymForm(Mat b) : b_(std::move(b)) {
  if (!b_.is_symmetric()) throw PreconditionError("bilinear form matrix must be symmetric");
  sig_ = novikov::signature(b_);
}

bool is_invariant(const Algebra& a, const SymForm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("form size differs from algebra dimension");
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Mat& r = a.right_basis(j);
    if (!(r.transpose() * b.matrix() == b.matrix() * r)) return false;
  }
  return true;
}

std::vector<Mat> invariant_form_space(const Algebra& a) {
  const std::size_t n = a.dim();
  const std::size_t unknowns = n * (n + 1) / 2;
  auto index = [n](std::size_t r, std::size_t c) {
    if (r > c) std::swap(r, c);
    return r * n - r * (r - 1) / 2 + (c - r);
  };

  // (R^T B - B R) is antisymmetric for symmetric B, so rows r < s suffice.
  std::vector<Vec> equations;
  for (std::size_t j = 0; j < n; ++j) {
    const Mat& rj = a.right_basis(j);
    if (rj.is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = r + 1; s < n; ++s) {
        Vec eq(unknowns);
        for (std::size_t t = 0; t < n; ++t) {
          eq[index(t, s)] += rj(t, r);
          eq[index(r, t)] -= rj(t, s);
        }
        if (!is_zero(eq)) equations.push_back(std::move(eq));
      }
  }

  Mat system(equations.size(), unknowns);
  for (std::size_t e = 0; e < equations.size(); ++e)
    for (std::size_t u = 0; u < unknowns; ++u) system(e, u) = equations[e][u];

  std::vector<Mat> basis;
  for (const Vec& v : kernel_basis(system)) {
    Mat b(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) b(r, c) = b(c, r) = v[index(r, c)];
    basis.push_back(std::move(b));
  }
  return basis;
}

namespace {

Mat combine(const std::vector<Mat>& space, const std::vector<Rational>& coeffs) {
  Mat b(space.front().rows(), space.front().cols());
  for (std::size_t i = 0; i < space.size(); ++i)
    if (sgn(coeffs[i]) != 0) b += space[i] * coeffs[i];
  return b;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1, used to screen sweep candidates.
// A nonzero determinant mod p certifies a nonzero rational determinant.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(t & kPrime) + static_cast<std::uint64_t>(t >> 61);
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a))
    if (e & 1) r = mul_mod(r, a);
  return r;
}

std::uint64_t reduce(const Integer& z) {
  Integer r = z % Integer(std::to_string(kPrime));
  if (r < 0) r += Integer(std::to_string(kPrime));
  return std::stoull(r.get_str());
}

// Residue of q, or nullopt when its denominator vanishes mod p.
std::optional<std::uint64_t> reduce(const Rational& q) {
  const std::uint64_t den = reduce(Integer(q.get_den()));
  if (den == 0) return std::nullopt;
  return mul_mod(reduce(Integer(q.get_num())), pow_mod(den, kPrime - 2));
}

bool det_nonzero_mod(std::vector<std::uint64_t> a, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r * n + c] == 0) ++r;
    if (r == n) return false;
    if (r != c)
      for (std::size_t j = 0; j < n; ++j) std::swap(a[r * n + j], a[c * n + j]);
    const std::uint64_t inv = pow_mod(a[c * n + c], kPrime - 2);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i * n + c] == 0) continue;
      const std::uint64_t f = mul_mod(a[i * n + c], inv);
      for (std::size_t j = c; j < n; ++j)
        a[i * n + j] = (a[i * n + j] + kPrime - mul_mod(f, a[c * n + j])) % kPrime;
    }
  }
  return true;
}

// Sweep over {0, 1, -1}^d, nonzero combinations ordered by support size, then by
// support bitmask, then by sign pattern (bit set = -1).
std::optional<SymForm> sweep(const std::vector<Mat>& space) {
  const std::size_t d = space.size();
  const std::size_t n = space.front().rows();
  std::vector<std::vector<std::uint64_t>> residues;
  for (const Mat& b : space) {
    std::vector<std::uint64_t> r(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto x = reduce(b(i, j));
        if (!x) return std::nullopt;  // not representable mod p; leave it to the random phase
        r[i * n + j] = *x;
      }
    residues.push_back(std::move(r));
  }

  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << d); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
    return std::popcount(x) < std::popcount(y);
  });

  std::vector<std::size_t> members;
  std::vector<std::uint64_t> acc(n * n);
  for (std::uint32_t mask : masks) {
    members.clear();
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (std::uint32_t{1} << i)) members.push_back(i);
    for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << members.size()); ++signs) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t t = 0; t < members.size(); ++t) {
        const bool negative = signs & (std::uint32_t{1} << t);
        const auto& r = residues[members[t]];
        for (std::size_t e = 0; e < acc.size(); ++e)
          acc[e] = negative ? (acc[e] + kPrime - r[e]) % kPrime : (acc[e] + r[e]) % kPrime;
      }
      if (!det_nonzero_mod(acc, n)) continue;
      std::vector<Rational> coeffs(d);
      for (std::size_t t = 0; t < members.size(); ++t)
        coeffs[members[t]] = (signs & (std::uint32_t{1} << t)) ? -1 : 1;
      return SymForm(combine(space, coeffs));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SymForm> find_nondegenerate(const std::vector<Mat>& space, std::uint64_t seed) {
  if (space.empty()) return std::nullopt;
  const std::size_t d = space.size();

  if (d <= kSweepMaxDim)
    if (auto found = sweep(space)) return found;

  std::vector<Rational> coeffs(d);
  Rng rng(seed);
  for (int attempt = 0; attempt < kRandomFormAttempts; ++attempt) {
    const std::int64_t width = 3 + attempt;
    for (auto& x : coeffs) x = rng.uniform(-width, width);
    Mat b = combine(space, coeffs);
    if (sgn(determinant(b)) != 0) return SymForm(std::move(b));
  }
  return std::nullopt;
}

SymForm normalize_orientation(const SymForm& b) {
  if (!b.nondegenerate()) throw DegenerateFormError("orientation normalization needs a nondegenerate form");
  return b.signature().n_minus <= b.signature().n_plus ? b : b.negated();
}

bool images_isotropic(const Algebra& a, const SymForm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("form size differs from algebra dimension");
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Mat& r = a.right_basis(j);
    if (!(r.transpose() * b.matrix() * r).is_zero()) return false;
  }
  return true;
}

std::size_t max_basis_image_dim(const Algebra& a) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < a.dim(); ++j) best = std::max(best, rank(a.right_basis(j)));
  return best;
}

SymForm transport(const SymForm& b, const Mat& p) {
  return SymForm(p.transpose() * b.matrix() * p);
}

}  // namespace novikov
