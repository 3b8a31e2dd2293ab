#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "novikov/canon.hpp"
#include "novikov/classify.hpp"
#include "novikov/error.hpp"
#include "novikov/io.hpp"
#include "novikov/poly.hpp"

namespace py = pybind11;
using namespace novikov;

namespace {

// Rationals cross the boundary as fractions.Fraction; any object whose str() is
// "p/q" or "p" is accepted on the way in.
py::object to_py(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

Rational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::list vec_to_py(std::span<const Rational> v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list mat_to_py(const Mat& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.append(vec_to_py(m.row(r)));
  return rows;
}

Vec vec_from_py(const py::sequence& s) {
  Vec v;
  for (const auto& x : s) v.push_back(from_py(x));
  return v;
}

Mat mat_from_py(const py::sequence& rows) {
  const std::size_t nr = py::len(rows);
  std::size_t nc = 0;
  if (nr > 0) nc = py::len(rows[0]);
  Mat m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    const py::sequence row = rows[r];
    if (py::len(row) != nc) throw DimensionMismatch("ragged matrix");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = from_py(row[c]);
  }
  return m;
}

py::dict claims_to_py(const StructureClaims& c) {
  py::dict d;
  d["metric_form"] = c.metric_form;
  d["x0_shape"] = c.x0_shape;
  d["lower_right_zero"] = c.lower_right_zero;
  d["side_blocks_zero"] = c.side_blocks_zero;
  d["core_shape"] = c.core_shape;
  d["weighted_symmetry"] = c.weighted_symmetry;
  d["products_vanish"] = c.products_vanish;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for fermionic Novikov algebras with invariant forms";

  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DegenerateFormError>(m, "DegenerateFormError", precondition.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<FileFormatError>(m, "FileFormatError", PyExc_ValueError);

  py::class_<Algebra>(m, "Algebra")
      .def_property_readonly("dim", &Algebra::dim)
      .def("c", [](const Algebra& a, std::size_t i, std::size_t j, std::size_t k) { return to_py(a.c(i, j, k)); },
           "Coefficient of e_k in e_i e_j (0-based indices)")
      .def("multiply", [](const Algebra& a, const py::sequence& x, const py::sequence& y) {
        return vec_to_py(multiply(a, vec_from_py(x), vec_from_py(y)));
      })
      .def("right_op", [](const Algebra& a, const py::sequence& x) { return mat_to_py(right_op(a, vec_from_py(x))); })
      .def("left_op", [](const Algebra& a, const py::sequence& x) { return mat_to_py(left_op(a, vec_from_py(x))); })
      .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; });

  m.def("make_family", &make_family, py::arg("variant"), py::arg("n"));
  m.def(
      "make_k2",
      [](const py::sequence& lambda, const py::sequence& mu, const py::sequence& gamma) {
        K2Params p{py::len(lambda), vec_from_py(lambda), vec_from_py(mu), vec_from_py(gamma)};
        return make_k2(p);
      },
      py::arg("lambda_"), py::arg("mu"), py::arg("gamma"));
  m.def("check_left_symmetric", &check_left_symmetric);
  m.def("check_fermionic", &check_fermionic);
  m.def("check_novikov", &check_novikov);
  m.def("commutator_check", &commutator_check);
  m.def("derived_dim", &derived_dim);
  m.def("k2_condition", &k2_condition);
  m.def("classify_k1", &classify_k1);

  m.def("invariant_form_space", [](const Algebra& a) {
    py::list out;
    for (const auto& b : invariant_form_space(a)) out.append(mat_to_py(b));
    return out;
  });
  m.def(
      "find_nondegenerate",
      [](const Algebra& a, std::uint64_t seed) -> py::object {
        auto f = find_nondegenerate(invariant_form_space(a), seed);
        if (!f) return py::none();
        return mat_to_py(f->matrix());
      },
      py::arg("algebra"), py::arg("seed") = 0);
  m.def("is_invariant", [](const Algebra& a, const py::sequence& b) { return is_invariant(a, SymForm(mat_from_py(b))); });
  m.def("signature", [](const py::sequence& s) {
    const Signature sig = signature(mat_from_py(s));
    return py::make_tuple(sig.n_plus, sig.n_minus, sig.n_zero);
  });
  m.def("rank", [](const py::sequence& s) { return rank(mat_from_py(s)); });
  m.def("generic_rank", [](const py::sequence& ops) {
    std::vector<Mat> mats;
    for (const auto& op : ops) mats.push_back(mat_from_py(op));
    return generic_rank(PolyMat::linear_pencil(mats));
  }, "Generic rank of the pencil sum_j t_j ops[j]");

  m.def(
      "theorem_report",
      [](const Algebra& a, const py::sequence& b, std::uint64_t seed) {
        const TheoremReport t = theorem_report(a, SymForm(mat_from_py(b)), seed);
        py::dict d;
        d["x0"] = vec_to_py(t.canon.x0);
        d["k"] = t.canon.k;
        d["type"] = py::make_tuple(t.form.signature().n_plus, t.form.signature().n_minus);
        d["rank_certified"] = t.max_rank.certified;
        d["basis"] = mat_to_py(t.canon.basis);
        d["pair_weights"] = vec_to_py(t.canon.pair_weights);
        d["complement_diag"] = vec_to_py(t.canon.complement_diag);
        d["claims"] = claims_to_py(t.claims);
        d["novikov"] = t.novikov;
        d["derived_dim"] = t.derived;
        d["holds"] = t.holds();
        return d;
      },
      py::arg("algebra"), py::arg("form"), py::arg("seed") = 0);
  m.def(
      "theorem_check",
      [](const Algebra& a, const py::sequence& b, std::uint64_t seed) {
        return theorem_check(a, SymForm(mat_from_py(b)), seed);
      },
      py::arg("algebra"), py::arg("form"), py::arg("seed") = 0);
  m.def(
      "scramble",
      [](const Algebra& a, const py::sequence& b, std::uint64_t seed) {
        Scrambled s = scramble(a, SymForm(mat_from_py(b)), seed);
        return py::make_tuple(s.algebra, mat_to_py(s.form.matrix()), mat_to_py(s.basis));
      },
      py::arg("algebra"), py::arg("form"), py::arg("seed") = 0);

  m.def("parse_algebra_file", [](const std::string& text) {
    AlgebraFile f = parse_algebra_file(text);
    py::object form = py::none();
    if (f.form) form = mat_to_py(f.form->matrix());
    return py::make_tuple(f.algebra, form);
  });
  m.def(
      "serialize_algebra_file",
      [](const Algebra& a, const py::object& form) {
        AlgebraFile f{a, std::nullopt, std::nullopt, std::nullopt};
        if (!form.is_none()) f.form = SymForm(mat_from_py(form));
        return serialize_algebra_file(f);
      },
      py::arg("algebra"), py::arg("form") = py::none());
}
