#include "novikov/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "novikov/canon.hpp"
#include "novikov/classify.hpp"
#include "novikov/error.hpp"
#include "novikov/io.hpp"
#include "novikov/rng.hpp"

namespace novikov::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string output;
  bool json = false;
  std::uint64_t seed = 0;
  std::string variant = "1";
  std::size_t dim = 0;
  std::size_t count = 200;
};

/// A usage or input problem; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.output);
  f << text;
}

json vec_json(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r)));
  return rows;
}

std::string vec_text(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// Form from the file if present, otherwise the solver's nondegenerate member.
std::optional<SymForm> form_for(const AlgebraFile& file, std::uint64_t seed) {
  if (file.form) return file.form;
  return find_nondegenerate(invariant_form_space(file.algebra), seed);
}

int cmd_check(const Options& o, std::ostream& out) {
  const AlgebraFile file = parse_algebra_file(read_file(o.input));
  const Algebra& a = file.algebra;
  const bool ls = check_left_symmetric(a);
  const bool fe = check_fermionic(a);
  const bool nv = check_novikov(a);
  std::optional<bool> jacobi;
  if (ls) jacobi = commutator_check(a);
  if (o.json) {
    json j = {{"command", "check"}, {"dim", a.dim()}, {"left_symmetric", ls}, {"fermionic", fe}, {"novikov", nv}};
    j["commutator_jacobi"] = jacobi ? json(*jacobi) : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "dim " << a.dim() << "\n";
    out << "left_symmetric " << yes_no(ls) << "\n";
    out << "fermionic " << yes_no(fe) << "\n";
    out << "novikov " << yes_no(nv) << "\n";
    if (jacobi) out << "commutator_jacobi " << yes_no(*jacobi) << "\n";
  }
  return ls && fe && nv && jacobi.value_or(true) ? kExitOk : kExitPropertyFailed;
}

int cmd_forms(const Options& o, std::ostream& out) {
  const AlgebraFile file = parse_algebra_file(read_file(o.input));
  const auto space = invariant_form_space(file.algebra);
  const auto form = find_nondegenerate(space, o.seed);
  if (o.json) {
    json j = {{"command", "forms"}, {"space_dim", space.size()}};
    json basis = json::array();
    for (const auto& b : space) basis.push_back(mat_json(b));
    j["basis"] = std::move(basis);
    if (form) {
      j["nondegenerate"] = mat_json(form->matrix());
      j["type"] = {form->signature().n_plus, form->signature().n_minus};
    } else {
      j["nondegenerate"] = nullptr;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "invariant form space dimension " << space.size() << "\n";
    if (form)
      out << "nondegenerate " << form->matrix() << " type (" << form->signature().n_plus << ", "
          << form->signature().n_minus << ")\n";
    else
      out << "no nondegenerate member found\n";
  }
  return form ? kExitOk : kExitPropertyFailed;
}

json claims_json(const StructureClaims& c) {
  return {{"metric_form", c.metric_form},         {"x0_shape", c.x0_shape},
          {"lower_right_zero", c.lower_right_zero}, {"side_blocks_zero", c.side_blocks_zero},
          {"core_shape", c.core_shape},           {"weighted_symmetry", c.weighted_symmetry},
          {"products_vanish", c.products_vanish}};
}

void claims_text(const StructureClaims& c, std::ostream& out) {
  out << "claim metric_form " << yes_no(c.metric_form) << "\n"
      << "claim x0_shape " << yes_no(c.x0_shape) << "\n"
      << "claim lower_right_zero " << yes_no(c.lower_right_zero) << "\n"
      << "claim side_blocks_zero " << yes_no(c.side_blocks_zero) << "\n"
      << "claim core_shape " << yes_no(c.core_shape) << "\n"
      << "claim weighted_symmetry " << yes_no(c.weighted_symmetry) << "\n"
      << "claim products_vanish " << yes_no(c.products_vanish) << "\n";
}

json report_json(const TheoremReport& t) {
  const CanonReport& r = t.canon;
  json d = json::array();
  for (const auto& m : r.d_forms) d.push_back(mat_json(m));
  return {{"x0", vec_json(r.x0)},
          {"k", r.k},
          {"type", {t.form.signature().n_plus, t.form.signature().n_minus}},
          {"rank_certified", t.max_rank.certified},
          {"basis", mat_json(r.basis)},
          {"pair_weights", vec_json(r.pair_weights)},
          {"pair_signs", r.pair_signs},
          {"complement_diag", vec_json(r.complement_diag)},
          {"d_forms", std::move(d)},
          {"claims", claims_json(t.claims)},
          {"novikov", t.novikov},
          {"derived_dim", t.derived},
          {"k_within_p", t.k_within_p},
          {"holds", t.holds()}};
}

void report_text(const TheoremReport& t, std::ostream& out) {
  const CanonReport& r = t.canon;
  out << "type (" << t.form.signature().n_plus << ", " << t.form.signature().n_minus << ")\n";
  out << "x0 " << vec_text(r.x0) << "\n";
  out << "k " << r.k << (t.max_rank.certified ? " (certified)" : " (NOT certified)") << "\n";
  out << "basis " << r.basis << "\n";
  for (std::size_t i = 0; i < r.k; ++i)
    out << "pair " << i + 1 << " weight " << r.pair_weights[i] << " sign " << (r.pair_signs[i] > 0 ? "+1" : "-1")
        << " (unit pairing after scaling u, w by 1/sqrt(|weight|))\n";
  out << "complement " << vec_text(r.complement_diag) << "\n";
  for (std::size_t j = 0; j < r.d_forms.size(); ++j) out << "d(e'" << j + 1 << ") " << r.d_forms[j] << "\n";
  claims_text(t.claims, out);
  out << "novikov " << yes_no(t.novikov) << "\n";
  out << "derived_dim " << t.derived << "\n";
  out << "k_within_p " << yes_no(t.k_within_p) << "\n";
  out << "theorem " << (t.holds() ? "holds" : "FAILS") << "\n";
}

int cmd_canon(const Options& o, std::ostream& out) {
  const AlgebraFile file = parse_algebra_file(read_file(o.input));
  const auto form = form_for(file, o.seed);
  if (!form) throw PreconditionError("no nondegenerate invariant form found");
  const TheoremReport t = theorem_report(file.algebra, *form, o.seed);
  if (o.json) {
    json j = report_json(t);
    j["command"] = "canon";
    out << j.dump(2) << "\n";
  } else {
    report_text(t, out);
  }
  return t.holds() ? kExitOk : kExitPropertyFailed;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const AlgebraFile file = parse_algebra_file(read_file(o.input));
  const Algebra& a = file.algebra;
  if (!check_left_symmetric(a) || !check_fermionic(a))
    throw PreconditionError("classification needs a fermionic left-symmetric algebra");
  const std::size_t k = derived_dim(a);
  std::string result;
  if (k == 0)
    result = "k=0";
  else if (k == 1)
    result = std::to_string(classify_k1(a));
  else
    result = "k≥2";
  if (o.json)
    out << json{{"command", "classify"}, {"derived_dim", k}, {"class", result}}.dump(2) << "\n";
  else
    out << result << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  struct Row {
    std::string label;
    std::size_t n, k, p;
    bool pass;
  };
  std::vector<Row> rows;
  if (!o.input.empty()) {
    const AlgebraFile file = parse_algebra_file(read_file(o.input));
    const auto form = form_for(file, o.seed);
    if (!form) throw PreconditionError("no nondegenerate invariant form found");
    const TheoremReport t = theorem_report(file.algebra, *form, o.seed);
    rows.push_back({file.name.value_or(o.input), file.algebra.dim(), t.max_rank.k, t.form.p(), t.holds()});
  } else {
    for (std::size_t i = 0; i < o.count; ++i) {
      const CorpusInstance inst = corpus_instance(o.seed, i);
      const TheoremReport t = theorem_report(inst.algebra, inst.form, mix_seed(o.seed, i));
      rows.push_back({inst.label, inst.algebra.dim(), t.max_rank.k, t.form.p(), t.holds()});
    }
  }
  std::size_t passed = 0;
  for (const auto& r : rows) passed += r.pass;
  if (o.json) {
    json inst = json::array();
    for (const auto& r : rows)
      inst.push_back({{"label", r.label}, {"dim", r.n}, {"k", r.k}, {"p", r.p}, {"pass", r.pass}});
    out << json{{"command", "verify"}, {"seed", o.seed}, {"instances", std::move(inst)},
                {"passed", passed}, {"total", rows.size()}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& r : rows)
      out << (r.pass ? "PASS " : "FAIL ") << r.label << " n=" << r.n << " k=" << r.k << " p=" << r.p << "\n";
    out << passed << "/" << rows.size() << " pass\n";
  }
  return passed == rows.size() ? kExitOk : kExitPropertyFailed;
}

int cmd_gen(const Options& o, std::ostream& out) {
  AlgebraFile file{Algebra(), std::nullopt, std::nullopt, o.seed};
  if (o.variant == "k2") {
    const std::size_t n = o.dim == 0 ? 5 : o.dim;
    file.algebra = make_k2(sample_k2_params(n, o.seed));
    file.name = "k2-n" + std::to_string(n);
  } else {
    int v = -1;
    if (o.variant.size() == 1 && o.variant[0] >= '0' && o.variant[0] <= '3') v = o.variant[0] - '0';
    if (v < 0) throw UsageError("--variant must be 0, 1, 2, 3 or k2");
    const std::size_t n = o.dim == 0 ? std::max<std::size_t>(family_min_dim(v), 1) : o.dim;
    file.algebra = make_family(v, n);
    file.name = "family" + o.variant + "-n" + std::to_string(n);
  }
  file.form = find_nondegenerate(invariant_form_space(file.algebra), o.seed);
  write_output(o, serialize_algebra_file(file), out);
  return file.form ? kExitOk : kExitPropertyFailed;
}

int cmd_scramble(const Options& o, std::ostream& out) {
  const AlgebraFile file = parse_algebra_file(read_file(o.input));
  const std::size_t n = file.algebra.dim();
  const SymForm form = file.form.value_or(SymForm(Mat(n, n)));
  Scrambled s = scramble(file.algebra, form, o.seed);
  AlgebraFile result{std::move(s.algebra), std::nullopt, file.name, o.seed};
  if (file.form) result.form = std::move(s.form);
  write_output(o, serialize_algebra_file(result), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for fermionic Novikov algebras with invariant forms"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: " << kSeedEnv << " is not an unsigned integer\n";
      return kExitUsage;
    }
  }

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
  };
  const Command commands[] = {
      {"check", "Evaluate the left-symmetric, fermionic and Novikov identities", cmd_check},
      {"forms", "Solve for invariant symmetric forms and find a nondegenerate one", cmd_forms},
      {"canon", "Build the adapted basis and verify every structural claim", cmd_canon},
      {"classify", "Classify by derived dimension (k=0, variant 1-3, or k>=2)", cmd_classify},
      {"verify", "Run the full theorem pipeline on a file or on a generated corpus", cmd_verify},
      {"gen", "Write a family algebra file", cmd_gen},
      {"scramble", "Write the algebra transported by a random basis change", cmd_scramble},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--input", o.input, "Algebra file");
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_option("--seed", o.seed, std::string("Random seed (default from ") + kSeedEnv + " or 0)");
    if (std::string(c.name) == "gen") {
      sub->add_option("--variant", o.variant, "0, 1, 2, 3 or k2");
      sub->add_option("--dim", o.dim, "Dimension");
    }
    if (std::string(c.name) == "gen" || std::string(c.name) == "scramble")
      sub->add_option("--output", o.output, "Output path (stdout if absent)");
    if (std::string(c.name) == "verify") sub->add_option("--count", o.count, "Corpus size");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& c : commands) {
    if (!app.got_subcommand(c.name)) continue;
    try {
      return c.fn(o, out);
    } catch (const DegenerateFormError& e) {
      err << "error: degenerate form: " << e.what() << "\n";
      return kExitUsage;
    } catch (const FileFormatError& e) {
      err << "error: bad input file: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "failure: " << e.what() << "\n";
      return kExitPropertyFailed;
    }
  }
  return kExitUsage;
}

}  // namespace novikov::cli
