// Acceptance run: prints one PASS/FAIL line per criterion, exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "novikov/algebra.hpp"
#include "novikov/canon.hpp"
#include "novikov/classify.hpp"
#include "novikov/cli.hpp"
#include "novikov/error.hpp"
#include "novikov/forms.hpp"
#include "novikov/io.hpp"
#include "novikov/poly.hpp"
#include "novikov/rng.hpp"
#include "oracles.hpp"
#include "searches.hpp"

using namespace novikov;

namespace {

constexpr std::uint64_t kCorpusSeed = 2024;
constexpr std::size_t kCorpusSize = 200;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// Per-instance data shared by criteria 3, 4 and 5.
struct CorpusRow {
  std::string label;
  bool theorem = false;
  bool claims = false;
  std::size_t k = 0, derived = 0, p = 0, max_image = 0;
  bool isotropic = false;
};

std::vector<CorpusRow> g_corpus;
double g_corpus_seconds = 0;

Outcome families() {
  Outcome o;
  const auto t0 = Clock::now();
  int checked = 0;
  for (int v = 0; v <= 3; ++v)
    for (std::size_t n = std::max<std::size_t>(2, family_min_dim(v)); n <= 6; ++n) {
      const Algebra a = make_family(v, n);
      const std::string tag = "family " + std::to_string(v) + " n=" + std::to_string(n);
      o.require(check_left_symmetric(a), tag + " not left-symmetric");
      o.require(check_fermionic(a), tag + " not fermionic");
      o.require(check_novikov(a), tag + " not Novikov");
      ++checked;
    }
  const double s = seconds_since(t0);
  o.require(s < 1.0, "took " + fmt_seconds(s));
  if (o.pass) o.detail = std::to_string(checked) + " algebras, " + fmt_seconds(s);
  return o;
}

Outcome form_spaces() {
  Outcome o;
  struct Case {
    int variant;
    std::size_t n, expected;
  };
  for (const Case& c : {Case{1, 2, 2}, Case{3, 3, 4}}) {
    const Algebra a = make_family(c.variant, c.n);
    const std::size_t dim = invariant_form_space(a).size();
    std::size_t pow3 = 1;
    for (std::size_t i = 0; i < c.expected; ++i) pow3 *= 3;
    const std::string tag = "family " + std::to_string(c.variant) + " n=" + std::to_string(c.n);
    o.require(dim == c.expected, tag + " space dim " + std::to_string(dim));
    o.require(oracle::count_pm1_invariant_forms(a) == pow3, tag + " brute-force count disagrees");
  }
  int found = 0;
  for (int v = 1; v <= 3; ++v)
    for (std::size_t n = family_min_dim(v); n <= 6; ++n) {
      const Algebra a = make_family(v, n);
      const auto b = find_nondegenerate(invariant_form_space(a), 0);
      o.require(b && b->nondegenerate() && is_invariant(a, *b),
                "no form for family " + std::to_string(v) + " n=" + std::to_string(n));
      found += b.has_value();
    }
  if (o.pass) o.detail = "dims 2 and 4 confirmed, " + std::to_string(found) + " nondegenerate forms";
  return o;
}

void build_corpus() {
  const auto t0 = Clock::now();
  for (std::size_t i = 0; i < kCorpusSize; ++i) {
    const CorpusInstance inst = corpus_instance(kCorpusSeed, i);
    const TheoremReport t = theorem_report(inst.algebra, inst.form, mix_seed(kCorpusSeed, i));
    CorpusRow r;
    r.label = inst.label;
    r.theorem = theorem_check(inst.algebra, inst.form, mix_seed(kCorpusSeed, i));
    r.claims = t.claims.all();
    r.k = t.max_rank.k;
    r.derived = derived_dim(inst.algebra);
    r.p = t.form.p();
    r.max_image = max_basis_image_dim(inst.algebra);
    r.isotropic = images_isotropic(inst.algebra, t.form);
    g_corpus.push_back(r);
  }
  g_corpus_seconds = seconds_since(t0);
}

Outcome theorem_corpus() {
  Outcome o;
  std::size_t k2 = 0;
  for (const auto& r : g_corpus) {
    o.require(r.theorem, r.label + " theorem_check false");
    o.require(r.claims, r.label + " structure claim failed");
    k2 += r.k == 2;
  }
  o.require(g_corpus.size() == kCorpusSize, "corpus incomplete");
  o.require(k2 > 0, "no k = 2 instances");
  o.require(g_corpus_seconds < 60.0, "took " + fmt_seconds(g_corpus_seconds));
  if (o.pass)
    o.detail = std::to_string(g_corpus.size()) + " instances (" + std::to_string(k2) + " with k=2), " +
               fmt_seconds(g_corpus_seconds);
  return o;
}

Outcome derived_equals_k() {
  Outcome o;
  for (const auto& r : g_corpus)
    o.require(r.derived == r.k, r.label + " derived " + std::to_string(r.derived) + " k " + std::to_string(r.k));
  if (o.pass) o.detail = std::to_string(g_corpus.size()) + " instances";
  return o;
}

Outcome images_bounded() {
  Outcome o;
  for (const auto& r : g_corpus) {
    o.require(r.max_image <= r.p, r.label + " image dim exceeds p");
    o.require(r.isotropic, r.label + " image not isotropic");
  }
  if (o.pass) o.detail = std::to_string(g_corpus.size()) + " instances";
  return o;
}

Outcome oracle_equivalences() {
  Outcome o;
  int k2_true = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Algebra a = make_k2(random_k2_params(5 + s % 4, mix_seed(61, s)));
    const bool cond = k2_condition(a);
    o.require(cond == check_left_symmetric(a), "k2_condition disagrees at draw " + std::to_string(s));
    k2_true += cond;
  }

  Rng rng(62);
  for (int t = 0; t < 50; ++t) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 8));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 8));
    const auto vars = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<Mat> ops;
    // low-rank coefficients so generic rank is often below full
    const auto inner = static_cast<std::size_t>(rng.uniform(1, 3));
    for (std::size_t v = 0; v < vars; ++v)
      ops.push_back(oracle::random_mat(rng, rows, inner, 2) * oracle::random_mat(rng, inner, cols, 2));
    const PolyMat pm = PolyMat::linear_pencil(ops);
    const std::size_t g = generic_rank(pm);
    const auto point = find_generic_point(pm, g, static_cast<std::uint64_t>(t));
    o.require(rank(pm.evaluate(point)) == g, "specialization misses generic rank on pencil " + std::to_string(t));
    for (int s = 0; s < 5; ++s)
      o.require(rank(pm.evaluate(oracle::random_vec(rng, vars))) <= g, "specialization above generic rank");
    if (rows <= 4 && cols <= 4)
      o.require(oracle::symbolic_minor_rank(pm) == g, "minor oracle disagrees on pencil " + std::to_string(t));
  }

  int matrices = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (int m = 0; m < 3; ++m) {
      const Mat s = oracle::random_symmetric(rng, n);
      const Signature sig = SymForm(s).signature();
      o.require(sig == oracle::descartes_signature(s), "signature disagrees with characteristic polynomial");
      for (int q = 0; q < 50; ++q) {
        const Mat p = oracle::random_mat(rng, n, n);
        if (sgn(determinant(p)) == 0) continue;
        o.require(SymForm(p.transpose() * s * p).signature() == sig, "signature changed under congruence");
      }
      ++matrices;
    }
  if (o.pass)
    o.detail = "100 k2 draws (" + std::to_string(k2_true) + " left-symmetric), 50 pencils, " +
               std::to_string(matrices) + " matrices x 50 congruences";
  return o;
}

Outcome classifier() {
  Outcome o;
  for (int v = 1; v <= 3; ++v) {
    const Algebra a = make_family(v, 5);
    o.require(classify_k1(a) == v, "family " + std::to_string(v) + " misclassified");
    const auto b = find_nondegenerate(invariant_form_space(a), 0);
    o.require(b.has_value(), "no form");
    if (!b) continue;
    for (std::uint64_t s = 0; s < 50; ++s) {
      const Scrambled sc = scramble(a, *b, mix_seed(70 + v, s));
      o.require(classify_k1(sc.algebra) == v, "scramble of family " + std::to_string(v) + " misclassified");
    }
  }
  if (o.pass) o.detail = "3 families, 150 scrambles";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  std::ostringstream note;

  // (i) brute-force mutation of family 2, reported through the CLI
  const Algebra f2 = make_family(2, 2);
  const auto mu = search::first_mutation(f2, [](const Algebra& a) {
    return !(check_left_symmetric(a) && check_fermionic(a) && check_novikov(a));
  });
  o.require(mu.has_value(), "no breaking mutation found");
  if (mu) {
    const Algebra bad = search::apply(f2, *mu);
    o.require(!oracle::left_symmetric(bad) || !oracle::fermionic(bad) || !oracle::novikov_identity(bad),
              "oracle does not confirm the mutation");
    const std::string path = "acceptance-mutation.json";
    {
      std::ofstream(path) << serialize_algebra_file({bad, std::nullopt, "mutation", std::nullopt});
    }
    std::ostringstream out, err;
    const int code = cli::run({"novikov", "check", "--input", path}, out, err);
    std::remove(path.c_str());
    o.require(code == cli::kExitPropertyFailed, "check exit code " + std::to_string(code));
    note << "mutation e" << mu->i + 1 << "e" << mu->j + 1 << " += " << mu->delta << " e" << mu->m + 1 << " exit "
         << code;
  }

  // (ii) degenerate form
  {
    const Algebra f1 = make_family(1, 2);
    bool distinct = false;
    try {
      theorem_check(f1, SymForm(Mat::from_rows({{0, 0}, {0, 1}})), 0);
    } catch (const DegenerateFormError&) {
      distinct = true;
    } catch (const std::exception&) {
    }
    o.require(distinct, "degenerate form not rejected as DegenerateFormError");
    note << "; degenerate form rejected";
  }

  // (iii) fermionic non-Novikov witness admits no nondegenerate invariant form
  {
    const auto w3 = search::StrictlyUpperSearch(3).witness(false);
    o.require(!w3.has_value(), "unexpected witness in dimension 3");
    const auto w = search::StrictlyUpperSearch(4).witness(true);
    o.require(w.has_value(), "no witness in dimension 4");
    if (w) {
      o.require(check_fermionic(*w) && check_left_symmetric(*w) && !check_novikov(*w), "witness invalid");
      const auto space = invariant_form_space(*w);
      const std::size_t g = space.empty() ? 0 : generic_rank(PolyMat::linear_pencil(space));
      o.require(g < w->dim(), "witness admits a nondegenerate invariant form");
      o.require(!find_nondegenerate(space, 0).has_value(), "solver found a nondegenerate form");
      note << "; dim-4 witness, form space dim " << space.size() << ", generic rank " << g;
    }
  }
  if (o.pass) o.detail = note.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, families},
      {2, form_spaces},
      {3, [] {
         build_corpus();
         return theorem_corpus();
       }},
      {4, derived_equals_k},
      {5, images_bounded},
      {6, oracle_equivalences},
      {7, classifier},
      {8, negative_controls},
  };
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << r.detail << std::endl;
    failed += !r.pass;
  }
  std::cout << (8 - failed) << "/8 criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
