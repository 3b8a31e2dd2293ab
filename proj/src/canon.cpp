#include "novikov/canon.hpp"

#include <algorithm>
#include <utility>

#include "novikov/error.hpp"
#include "novikov/poly.hpp"

namespace novikov {

MaxRankElement max_rank_element(const Algebra& a, std::uint64_t seed) {
  if (!check_fermionic(a)) throw PreconditionError("maximal-rank search needs a fermionic algebra");
  const std::size_t n = a.dim();
  std::vector<Mat> ops;
  ops.reserve(n);
  for (std::size_t j = 0; j < n; ++j) ops.push_back(a.right_basis(j));

  MaxRankElement out;
  const PolyMat pencil = PolyMat::linear_pencil(ops);
  out.k = generic_rank(pencil);
  out.x0 = find_generic_point(pencil, out.k, seed);

  out.certified = rank(right_op(a, out.x0)) == out.k;
  for (std::size_t j = 0; j < n && out.certified; ++j) {
    for (std::size_t l = 0; l < out.k + 2; ++l) {
      Element x = out.x0;
      x[j] += Rational(static_cast<long>(l));
      if (rank(right_op(a, x)) > out.k) {
        out.certified = false;
        break;
      }
    }
  }
  return out;
}

Mat CanonReport::expected_metric() const {
  const std::size_t n = basis.cols();
  Mat g(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    g(2 * i, 2 * i + 1) = pair_weights[i];
    g(2 * i + 1, 2 * i) = pair_weights[i];
  }
  for (std::size_t i = 0; i < complement_diag.size(); ++i) g(2 * k + i, 2 * k + i) = complement_diag[i];
  return g;
}

namespace {

Mat operator_in_basis(const Algebra& a, const Mat& p, const Mat& p_inv, std::span<const Rational> x) {
  return p_inv * right_op(a, x) * p;
}

}  // namespace

CanonReport canonical_basis(const Algebra& a, const SymForm& b, const Element& x0) {
  const std::size_t n = a.dim();
  if (b.dim() != n || x0.size() != n) throw DimensionMismatch("form/element size differs from algebra");
  if (!b.nondegenerate()) throw DegenerateFormError("adapted basis needs a nondegenerate form");
  if (b.signature().n_minus > b.signature().n_plus)
    throw PreconditionError("form orientation not normalized (p > n - p)");
  if (!is_invariant(a, b)) throw PreconditionError("form is not invariant");
  const Mat& g = b.matrix();
  const Mat r = right_op(a, x0);
  if (!(r * r).is_zero()) throw PreconditionError("R_{x0} does not square to zero");

  CanonReport rep;
  rep.x0 = x0;

  // Image basis w_i = columns of R at the pivot columns, preimages by elimination.
  const Echelon ech = row_reduce(r);
  rep.k = ech.pivot_cols.size();
  const std::size_t k = rep.k;
  std::vector<Vec> u, w;
  for (std::size_t c : ech.pivot_cols) {
    w.push_back(r.column(c));
    auto pre = solve(r, w.back());
    if (!pre) throw InternalInvariantError("image vector has no preimage");
    u.push_back(std::move(*pre));
  }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(pairing(g, w[i], w[j])) != 0) throw InternalInvariantError("Im R_{x0} is not totally isotropic");
  // Im R is orthogonal to Ker R; with dim Im = n - dim Ker this makes Im = Ker^perp.
  const auto ker = kernel_basis(r);
  if (ker.size() + k != n) throw InternalInvariantError("rank-nullity failed");
  for (const Vec& v : ker)
    for (const Vec& wi : w)
      if (sgn(pairing(g, v, wi)) != 0) throw InternalInvariantError("Im R_{x0} is not orthogonal to Ker R_{x0}");

  if (k > 0) {
    Mat pair(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) pair(i, j) = pairing(g, u[i], w[j]);
    if (!pair.is_symmetric()) throw InternalInvariantError("pairing <u_i, w_j> is not symmetric");
    if (sgn(determinant(pair)) == 0) throw InternalInvariantError("pairing <u_i, w_j> is degenerate");

    const Congruence cong = congruent_diagonalize(pair);
    const Mat u_mat = Mat::from_columns(u, n) * cong.basis;
    const Mat w_mat = Mat::from_columns(w, n) * cong.basis;
    for (std::size_t i = 0; i < k; ++i) {
      rep.pair_weights.push_back(cong.diagonal(i, i));
      rep.pair_signs.push_back(sgn(cong.diagonal(i, i)));
      u[i] = u_mat.column(i);
      w[i] = w_mat.column(i);
    }

    // Isotropize the preimages: u_i -= sum_j <u_i,u_j> / (2 w_j) * w_j.
    // R w_j = 0 and <w, w> = 0, so the images and the pairing are unchanged.
    Mat gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) gram(i, j) = pairing(g, u[i], u[j]);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (sgn(gram(i, j)) == 0) continue;
        const Rational f = gram(i, j) / (2 * rep.pair_weights[j]);
        for (std::size_t m = 0; m < n; ++m) u[i][m] -= f * w[j][m];
      }
  }

  // Orthogonal complement of span(u, w), diagonalized by congruence.
  Mat constraints(2 * k, n);
  for (std::size_t i = 0; i < k; ++i) {
    const Vec gu = g * u[i];
    const Vec gw = g * w[i];
    for (std::size_t m = 0; m < n; ++m) {
      constraints(2 * i, m) = gu[m];
      constraints(2 * i + 1, m) = gw[m];
    }
  }
  const auto comp = kernel_basis(constraints);
  if (comp.size() != n - 2 * k) throw InternalInvariantError("hyperbolic span is degenerate");
  const Mat comp_mat = Mat::from_columns(comp, n);
  const Congruence comp_cong = congruent_diagonalize(comp_mat.transpose() * g * comp_mat);
  const Mat comp_basis = comp_mat * comp_cong.basis;

  std::vector<std::size_t> order(comp.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return sgn(comp_cong.diagonal(x, x)) < 0 && sgn(comp_cong.diagonal(y, y)) > 0;
  });

  rep.basis = Mat(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    rep.basis.set_column(2 * i, u[i]);
    rep.basis.set_column(2 * i + 1, w[i]);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    rep.basis.set_column(2 * k + i, comp_basis.column(order[i]));
    rep.complement_diag.push_back(comp_cong.diagonal(order[i], order[i]));
  }

  if (!(rep.basis.transpose() * g * rep.basis == rep.expected_metric()))
    throw InternalInvariantError("adapted basis does not produce the block metric");

  const Mat p_inv = inverse(rep.basis);
  for (std::size_t j = 0; j < n; ++j) {
    const Mat rj = operator_in_basis(a, rep.basis, p_inv, rep.basis.column(j));
    Mat d(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) d(i, l) = rj(2 * i + 1, 2 * l);
    rep.d_forms.push_back(std::move(d));
  }
  return rep;
}

StructureClaims verify_structure(const Algebra& a, const SymForm& b, const CanonReport& rep) {
  const std::size_t n = a.dim();
  const std::size_t k = rep.k;
  if (b.dim() != n || rep.basis.rows() != n || rep.basis.cols() != n || rep.x0.size() != n ||
      2 * k > n || rep.pair_weights.size() != k || rep.complement_diag.size() != n - 2 * k ||
      rep.d_forms.size() != n)
    throw PreconditionError("canonical report does not match the algebra");
  if (sgn(determinant(rep.basis)) == 0) throw PreconditionError("report basis is singular");

  const Mat& p = rep.basis;
  const Mat p_inv = inverse(p);
  const std::size_t c = n - 2 * k;

  StructureClaims claims;
  claims.metric_form = p.transpose() * b.matrix() * p == rep.expected_metric();

  Mat x0_expected(n, n);
  for (std::size_t i = 0; i < k; ++i) x0_expected(2 * i + 1, 2 * i) = 1;
  claims.x0_shape = operator_in_basis(a, p, p_inv, rep.x0) == x0_expected;

  claims.lower_right_zero = claims.side_blocks_zero = claims.core_shape = true;
  claims.weighted_symmetry = claims.products_vanish = true;

  std::vector<Mat> ops;
  for (std::size_t j = 0; j < n; ++j) ops.push_back(operator_in_basis(a, p, p_inv, p.column(j)));

  for (std::size_t j = 0; j < n; ++j) {
    const Mat& m = ops[j];
    if (!m.block(2 * k, 2 * k, c, c).is_zero()) claims.lower_right_zero = false;
    if (!m.block(0, 2 * k, 2 * k, c).is_zero() || !m.block(2 * k, 0, c, 2 * k).is_zero())
      claims.side_blocks_zero = false;
    const Mat& d = rep.d_forms[j];
    if (d.rows() != k || d.cols() != k) throw PreconditionError("d-form has the wrong size");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        const bool shape = sgn(m(2 * i, 2 * l)) == 0 && sgn(m(2 * i, 2 * l + 1)) == 0 &&
                           sgn(m(2 * i + 1, 2 * l + 1)) == 0 && m(2 * i + 1, 2 * l) == d(i, l);
        if (!shape) claims.core_shape = false;
        if (m(2 * i + 1, 2 * l) * rep.pair_weights[i] != m(2 * l + 1, 2 * i) * rep.pair_weights[l])
          claims.weighted_symmetry = false;
      }
  }
  for (std::size_t i = 0; i < n && claims.products_vanish; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(ops[i] * ops[j]).is_zero()) {
        claims.products_vanish = false;
        break;
      }
  return claims;
}

TheoremReport theorem_report(const Algebra& a, const SymForm& b, std::uint64_t seed) {
  if (b.dim() != a.dim()) throw DimensionMismatch("form size differs from algebra dimension");
  if (!check_left_symmetric(a)) throw PreconditionError("algebra is not left-symmetric");
  if (!check_fermionic(a)) throw PreconditionError("algebra is not fermionic");
  if (!b.nondegenerate()) throw DegenerateFormError("form is degenerate");
  if (!is_invariant(a, b)) throw PreconditionError("form is not invariant");

  SymForm oriented = normalize_orientation(b);
  MaxRankElement mr = max_rank_element(a, seed);
  CanonReport canon = canonical_basis(a, oriented, mr.x0);
  StructureClaims claims = verify_structure(a, oriented, canon);
  const bool within = mr.k <= oriented.p() && oriented.p() <= a.dim() - oriented.p();
  return TheoremReport{std::move(oriented), std::move(mr), std::move(canon), claims,
                       check_novikov(a), derived_dim(a), within};
}

bool theorem_check(const Algebra& a, const SymForm& b, std::uint64_t seed) {
  return theorem_report(a, b, seed).holds();
}

}  // namespace novikov
