#include "novikov/poly.hpp"

#include <algorithm>
#include <utility>

#include "novikov/error.hpp"
#include "novikov/rng.hpp"

namespace novikov {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m.at(i) = 1;
  p.add_term(m, 1);
  return p;
}

std::size_t Poly::total_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::size_t s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw DimensionMismatch("monomial arity");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point arity");
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    total += t;
  }
  return total;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("polynomial arity");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("polynomial arity");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial arity");
  Poly p(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  }
  return p;
}

Poly operator*(Poly a, const Rational& s) {
  if (sgn(s) == 0) return Poly(a.nvars_);
  for (auto& [m, c] : a.terms_) c *= s;
  return a;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.nvars_ != nvars_) throw DimensionMismatch("polynomial arity");
  if (divisor.is_zero()) throw InternalInvariantError("polynomial division by zero");
  // Lex-leading term is the largest key.
  const auto& [lead_m, lead_c] = *divisor.terms_.rbegin();
  Poly quotient(nvars_);
  Poly rest = *this;
  Monomial shift(nvars_);
  while (!rest.is_zero()) {
    const auto& [rm, rc] = *rest.terms_.rbegin();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (rm[i] < lead_m[i]) throw InternalInvariantError("inexact polynomial division");
      shift[i] = rm[i] - lead_m[i];
    }
    Poly step(nvars_);
    step.add_term(shift, rc / lead_c);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

PolyMat::PolyMat(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Poly(nvars)) {}

PolyMat PolyMat::linear_pencil(std::span<const Mat> ops) {
  const std::size_t nr = ops.empty() ? 0 : ops.front().rows();
  const std::size_t nc = ops.empty() ? 0 : ops.front().cols();
  PolyMat pm(nr, nc, ops.size());
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (ops[j].rows() != nr || ops[j].cols() != nc) throw DimensionMismatch("pencil operator shape");
    Monomial m(ops.size(), 0);
    m[j] = 1;
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) pm(r, c).add_term(m, ops[j](r, c));
  }
  return pm;
}

Mat PolyMat::evaluate(std::span<const Rational> point) const {
  Mat m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).evaluate(point);
  return m;
}

std::size_t generic_rank(const PolyMat& input) {
  PolyMat a = input;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  Poly previous = Poly::constant(a.nvars(), 1);
  std::size_t rank = 0;
  for (; rank < std::min(nr, nc); ++rank) {
    // First nonzero entry of the trailing block, row-major.
    std::size_t pr = nr, pc = nc;
    for (std::size_t r = rank; r < nr && pr == nr; ++r)
      for (std::size_t c = rank; c < nc; ++c)
        if (!a(r, c).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == nr) break;
    if (pr != rank)
      for (std::size_t c = 0; c < nc; ++c) std::swap(a(pr, c), a(rank, c));
    if (pc != rank)
      for (std::size_t r = 0; r < nr; ++r) std::swap(a(r, pc), a(r, rank));

    const Poly pivot = a(rank, rank);
    for (std::size_t r = rank + 1; r < nr; ++r) {
      for (std::size_t c = rank + 1; c < nc; ++c) {
        Poly v = pivot * a(r, c) - a(r, rank) * a(rank, c);
        a(r, c) = v.divide_exact(previous);
      }
      a(r, rank) = Poly(a.nvars());
    }
    previous = pivot;
  }
  return rank;
}

std::vector<Rational> find_generic_point(const PolyMat& m, std::size_t target_rank,
                                         std::uint64_t seed) {
  std::vector<Rational> point(m.nvars());
  if (target_rank == 0) return point;
  Rng rng(seed);
  for (int attempt = 0; attempt < kGenericPointAttempts; ++attempt) {
    const std::int64_t width = std::int64_t{1} << std::min(attempt + 1, 40);
    for (auto& x : point) x = rng.uniform(-width, width);
    if (rank(m.evaluate(point)) == target_rank) return point;
  }
  throw GenericPointError("no rank-attaining point found after " +
                          std::to_string(kGenericPointAttempts) + " attempts");
}

}  // namespace novikov
