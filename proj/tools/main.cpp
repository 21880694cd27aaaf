#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "trilie/analysis.hpp"
#include "trilie/builtin.hpp"
#include "trilie/document.hpp"
#include "trilie/errors.hpp"
#include "trilie/manin.hpp"

using namespace trilie;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  out << text;
}

// Collects notes and check lines, then renders them as text or JSON, deterministically.
class Reporter {
public:
  Reporter(std::string command, bool json_mode) : command_(std::move(command)), json_(json_mode) {}

  void note(const std::string& key, const std::string& value) { notes_.emplace_back(key, value); }
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    checks_.push_back({name, ok, detail});
    if (!ok) ok_ = false;
  }
  bool ok() const { return ok_; }

  int finish() const {
    if (json_) {
      nlohmann::json j;
      j["command"] = command_;
      j["ok"] = ok_;
      nlohmann::json notes = nlohmann::json::array();
      for (const auto& [k, v] : notes_) notes.push_back({{"key", k}, {"value", v}});
      j["notes"] = std::move(notes);
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : checks_) {
        nlohmann::json e;
        e["name"] = c.name;
        e["ok"] = c.ok;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
      }
      j["checks"] = std::move(checks);
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& [k, v] : notes_) std::cout << k << " = " << v << "\n";
      for (const auto& c : checks_) {
        std::cout << (c.ok ? "ok  " : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
      }
      std::cout << "result: " << (ok_ ? "ok" : "FAILED") << "\n";
    }
    return ok_ ? 0 : 1;
  }

private:
  struct Check {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::string command_;
  bool json_;
  bool ok_ = true;
  std::vector<std::pair<std::string, std::string>> notes_;
  std::vector<Check> checks_;
};

struct CommonOpts {
  std::string input;
  std::string derivation;
  std::string output;
  std::string format = "text";
  int bound = -1;
  bool strict = false;
};

ParsedDocument load_input(const CommonOpts& opts) {
  if (opts.input.rfind("builtin:", 0) == 0)
    return parse_algebra_document(builtin_algebra_document(opts.input.substr(8)));
  return parse_algebra_document(read_file(opts.input));
}

Mat parse_inline_derivation(const std::string& spec, int dim) {
  auto parse_list = [](const std::string& body) {
    std::vector<Rational> values;
    std::string token;
    std::istringstream is(body);
    while (std::getline(is, token, ',')) values.push_back(Rational::parse(token));
    return values;
  };
  if (spec.rfind("diag:", 0) == 0) {
    std::vector<Rational> d = parse_list(spec.substr(5));
    if (static_cast<int>(d.size()) != dim)
      throw Error(ErrorKind::ShapeMismatch, "diagonal derivation needs dim entries");
    return Mat::diagonal(Vec(d.begin(), d.end()));
  }
  if (spec.rfind("matrix:", 0) == 0) {
    std::vector<Rational> entries = parse_list(spec.substr(7));
    if (static_cast<int>(entries.size()) != dim * dim)
      throw Error(ErrorKind::ShapeMismatch, "matrix derivation needs dim*dim entries");
    Mat m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m(r, c) = entries[static_cast<size_t>(r * dim + c)];
    return m;
  }
  ParsedDocument doc = parse_algebra_document(read_file(spec));
  if (!doc.derivation) throw Error(ErrorKind::Parse, "'" + spec + "' carries no derivation");
  return *doc.derivation;
}

Mat required_derivation(const ParsedDocument& doc, const CommonOpts& opts) {
  if (!opts.derivation.empty()) return parse_inline_derivation(opts.derivation, doc.algebra.dim());
  if (doc.derivation) return *doc.derivation;
  throw Error(ErrorKind::Parse, "no derivation given (document field or --derivation)");
}

void describe_algebra(Reporter& r, const ThreeLieAlgebra& alg) {
  r.note("dim", std::to_string(alg.dim()));
  r.note("stored brackets", std::to_string(alg.constants().size()));
}

int run_validate(const CommonOpts& opts) {
  Reporter r("validate", opts.format == "json");
  ParsedDocument doc = load_input(opts);
  describe_algebra(r, doc.algebra);
  r.check("skew storage", true);  // enforced during parsing
  FiReport fi = doc.algebra.check_fundamental_identity();
  r.check("fundamental identity", fi.ok, fi.describe());
  if (doc.derivation) {
    DerivationReport der = is_derivation(doc.algebra, *doc.derivation);
    r.check("derivation law", der.ok, der.describe());
    bool involutive = (*doc.derivation) * (*doc.derivation) == Mat::identity(doc.algebra.dim());
    r.check("involutive", involutive);
  }
  return r.finish();
}

std::string span_labels(const Subspace& space, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : space.basis()) {
    os << (first ? "" : ", ") << format_combination(v, labels);
    first = false;
  }
  return first ? "0" : os.str();
}

int run_split(const CommonOpts& opts) {
  Reporter r("split", opts.format == "json");
  ParsedDocument doc = load_input(opts);
  describe_algebra(r, doc.algebra);
  Mat d = required_derivation(doc, opts);
  DerivationReport der = is_derivation(doc.algebra, d);
  r.check("derivation law", der.ok, der.describe());
  bool involutive = d * d == Mat::identity(doc.algebra.dim());
  r.check("involutive", involutive);
  if (der.ok && involutive) {
    InvolutiveDerivation g = InvolutiveDerivation::eigen_split(doc.algebra, d);
    r.note("s (dim of plus eigenspace)", std::to_string(g.s()));
    r.note("plus eigenspace", span_labels(g.plus_space(), doc.algebra.labels()));
    r.note("minus eigenspace", span_labels(g.minus_space(), doc.algebra.labels()));
    GradingReport grading = check_grading(g, doc.algebra);
    r.check("grading inclusions", grading.ok, grading.describe());
  }
  return r.finish();
}

ManinPipeline build_pipeline(const ParsedDocument& doc, const CommonOpts& opts) {
  Mat d = required_derivation(doc, opts);
  InvolutiveDerivation g = InvolutiveDerivation::eigen_split(doc.algebra, d);
  return run_pipeline(doc.algebra, g);
}

int run_semidirect(const CommonOpts& opts) {
  Reporter r("semidirect", opts.format == "json");
  ParsedDocument doc = load_input(opts);
  describe_algebra(r, doc.algebra);
  ManinPipeline p = build_pipeline(doc, opts);
  r.note("double space dim", std::to_string(p.b1.dim()));
  r.check("fundamental identity of the double space", true);
  r.check("closed-form table equals the generic table", true);  // asserted during the build
  if (!opts.output.empty()) write_file(opts.output, serialize_algebra_document(p.b1));
  return r.finish();
}

int run_bialgebra(const CommonOpts& opts) {
  Reporter r("bialgebra", opts.format == "json");
  ParsedDocument doc = load_input(opts);
  describe_algebra(r, doc.algebra);
  ManinPipeline p = build_pipeline(doc, opts);
  r.note("r-matrix terms", std::to_string(p.r.terms.size()));
  r.check("r-matrix skew", true);
  r.check("Yang-Baxter bracket vanishes", p.cybe.is_zero());
  r.check("comultiplication closed form agrees", true);
  CocycleReport c = check_local_cocycle(p.delta, p.b1);
  r.check("local cocycle conditions", c.ok, c.describe());
  return r.finish();
}

int run_dual(const CommonOpts& opts) {
  Reporter r("dual", opts.format == "json");
  ParsedDocument doc = load_input(opts);
  describe_algebra(r, doc.algebra);
  ManinPipeline p = build_pipeline(doc, opts);
  r.note("dual algebra dim", std::to_string(p.b2.dim()));
  r.check("fundamental identity of the dual algebra", true);
  r.check("closed-form dual table agrees", true);
  r.check("duality round-trip reproduces the comultiplication", true);
  if (!opts.output.empty()) write_file(opts.output, serialize_algebra_document(p.b2));
  return r.finish();
}

std::string manin_document(const ManinTriple& triple) {
  // Algebra document of the total space plus the pairing form, row-major.
  std::string base = serialize_algebra_document(triple.total);
  nlohmann::json j = nlohmann::json::parse(base);
  nlohmann::json form = nlohmann::json::array();
  for (int r = 0; r < triple.form.matrix.rows(); ++r)
    for (int c = 0; c < triple.form.matrix.cols(); ++c)
      form.push_back(triple.form.matrix(r, c).str());
  j["form"] = std::move(form);
  return j.dump(2) + "\n";
}

int manin_into(Reporter& r, const CommonOpts& opts, ManinTriple* out_triple) {
  ParsedDocument doc = load_input(opts);
  ManinPipeline p = build_pipeline(doc, opts);
  r.note("total dim", std::to_string(p.triple.total.dim()));
  r.check("total fundamental identity", true);  // verified inside the build
  r.check("metric invariance", true);
  r.check("isotropic factors and containments", true);
  MatchedPairReport mp = check_matched_pair(p.b1, p.b2, p.tables.adelta, p.tables.apsi);
  r.check("matched pair", mp.ok, mp.describe());
  JacobiReport jr = check_jacobi_constraints(p.base, p.grading);
  r.check("graded constraint families", jr.ok, jr.describe());
  DerImageReport di = check_derivation_images(p.tables);
  r.check("coadjoint images are derivations", di.ok, di.describe());
  if (!opts.output.empty()) write_file(opts.output, manin_document(p.triple));
  if (out_triple) *out_triple = p.triple;
  return r.ok() ? 0 : 1;
}

int run_manin(const CommonOpts& opts) {
  Reporter r("manin", opts.format == "json");
  ParsedDocument doc = load_input(opts);
  describe_algebra(r, doc.algebra);
  manin_into(r, opts, nullptr);
  return r.finish();
}

void analyze_into(Reporter& r, const ThreeLieAlgebra& alg, int bound,
                  const std::vector<int>* reference_ideal_1based) {
  SeriesReport lower = lower_central_series(alg, bound);
  r.note("lower central series", lower.describe());
  if (!lower.terms.empty()) r.note("dim B^1", std::to_string(lower.terms[0].dim()));
  std::string nilpotency =
      lower.verdict == SeriesVerdict::Nilpotent
          ? "nilpotent of class " + std::to_string(lower.index)
          : (lower.stabilized ? "non-nilpotent" : "not nilpotent within bound");
  r.note("nilpotency", nilpotency);

  SeriesReport derived = derived_series(alg, bound);
  r.note("derived series", derived.describe());
  if (derived.verdict == SeriesVerdict::Solvable)
    r.note("solvability", std::to_string(derived.index) + "-solvable");
  else
    r.note("solvability", "not solvable within bound");

  const Subspace* terminal = nullptr;
  for (const auto& term : derived.terms)
    if (!term.is_zero()) terminal = &term;
  if (terminal) {
    IdealReport ir = check_ideal(alg, *terminal);
    r.note("terminal derived term", "dim " + std::to_string(terminal->dim()) + " | " + ir.describe());
  }

  if (reference_ideal_1based) {
    std::vector<Vec> gens;
    for (int i : *reference_ideal_1based) gens.push_back(unit_vec(alg.dim(), i - 1));
    Subspace ideal = Subspace::span(alg.dim(), gens);
    IdealReport ir = check_ideal(alg, ideal);
    r.check("abelian ideal dim " + std::to_string(ideal.dim()), ir.is_ideal && ir.abelian_strong,
            ir.describe());
    MinimalityProbe probe = minimality_probe(alg, ideal);
    r.note("minimality probe (basis-generated ideals only)", probe.describe());
  }
}

int run_analyze(const CommonOpts& opts) {
  Reporter r("analyze", opts.format == "json");
  ParsedDocument doc = load_input(opts);
  describe_algebra(r, doc.algebra);
  analyze_into(r, doc.algebra, opts.bound, nullptr);
  return r.finish();
}

int run_diff_table(const CommonOpts& opts, const std::string& reference) {
  Reporter r("diff-table", opts.format == "json");
  TableDocument ref;
  ThreeLieAlgebra generated;
  if (reference.rfind("builtin:", 0) == 0) {
    const std::string id = reference.substr(8);
    ref = parse_table_document(builtin_reference_table(id));
    if (opts.input.empty()) {
      ParsedDocument doc = parse_algebra_document(builtin_algebra_document(id));
      InvolutiveDerivation g = InvolutiveDerivation::eigen_split(doc.algebra, *doc.derivation);
      generated = build_manin(doc.algebra, g).total;
    } else {
      generated = load_input(opts).algebra;
    }
  } else {
    if (opts.input.empty()) throw Error(ErrorKind::Parse, "--input required for file references");
    ref = parse_table_document(read_file(reference));
    generated = load_input(opts).algebra;
  }
  DiffReport diff = diff_table(generated, ref);
  for (const auto& e : diff.entries) {
    std::ostringstream line;
    line << "[" << e.args[0] << "," << e.args[1] << "," << e.args[2] << "] expected " << e.expected
         << ", regenerated " << e.found;
    std::string cls =
        e.cls == DiffClass::Match ? "match" : e.cls == DiffClass::Missing ? "missing" : "conflict";
    if (e.annotated) cls += " (annotated: " + e.annotation + ")";
    r.note(cls, line.str());
  }
  r.note("summary", diff.describe());
  r.check("non-annotated lines all match", diff.conflicting == 0);
  if (opts.strict) r.check("strict: no discrepancies at all", diff.conflicting == 0 && diff.missing == 0);
  return r.finish();
}

int run_example(const std::string& id, const std::string& stage, bool analyze, bool diff,
                const std::string& emit, const CommonOpts& opts_in) {
  CommonOpts opts = opts_in;
  opts.input = "builtin:" + id;
  if (!emit.empty()) {
    if (emit == "input")
      std::cout << builtin_algebra_document(id);
    else if (emit == "reference")
      std::cout << builtin_reference_table(id);
    else
      throw Error(ErrorKind::Parse, "--emit expects 'input' or 'reference'");
    return 0;
  }
  if (stage == "validate") return run_validate(opts);
  if (stage == "split") return run_split(opts);
  if (stage == "semidirect") return run_semidirect(opts);
  if (stage == "bialgebra") return run_bialgebra(opts);
  if (stage == "dual") return run_dual(opts);
  if (stage != "manin") throw Error(ErrorKind::Parse, "unknown stage '" + stage + "'");

  Reporter r("example " + id, opts.format == "json");
  ManinTriple triple;
  manin_into(r, opts, &triple);
  if (analyze) {
    std::vector<int> reference_ideal{1, 2, 7, 8, 9, 10, 15, 16};
    analyze_into(r, triple.total, opts.bound, &reference_ideal);
  }
  if (diff) {
    TableDocument ref = parse_table_document(builtin_reference_table(id));
    DiffReport d = diff_table(triple.total, ref);
    r.note("table diff", d.describe());
    r.check("non-annotated printed lines all match", d.conflicting == 0);
    if (opts.strict) r.check("strict: no discrepancies at all", d.conflicting == 0 && d.missing == 0);
  }
  return r.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for ternary Lie brackets, involutive gradings and double constructions"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string reference, example_id, stage = "manin", emit;
  bool do_analyze = false, do_diff = false;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    auto* in = cmd->add_option("--input", opts.input, "algebra document (file or builtin:ID)");
    if (needs_input) in->required();
    cmd->add_option("--derivation", opts.derivation,
                    "derivation override: file, diag:a,b,..., or matrix:row-major");
    cmd->add_option("--output", opts.output, "write the constructed document here");
    cmd->add_option("--format", opts.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--bound", opts.bound, "series length bound (default 2*dim)");
    cmd->add_flag("--strict", opts.strict, "treat reference-table discrepancies as failures");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse a document and check the fundamental identity");
  add_common(validate, true);
  CLI::App* split = app.add_subcommand("split", "verify an involutive derivation and split eigenspaces");
  add_common(split, true);
  CLI::App* semidirect = app.add_subcommand("semidirect", "build the double space A + A*");
  add_common(semidirect, true);
  CLI::App* bialgebra = app.add_subcommand("bialgebra", "r-matrix, Yang-Baxter check and comultiplication");
  add_common(bialgebra, true);
  CLI::App* dual = app.add_subcommand("dual", "build the dual algebra of the comultiplication");
  add_common(dual, true);
  CLI::App* manin = app.add_subcommand("manin", "assemble and verify the 4n-dimensional triple");
  add_common(manin, true);
  CLI::App* analyze = app.add_subcommand("analyze", "derived/lower-central series and ideal flags");
  add_common(analyze, true);
  CLI::App* diff = app.add_subcommand("diff-table", "compare a generated table against a reference");
  add_common(diff, false);
  diff->add_option("--reference", reference, "table document (file or builtin:ID)")->required();
  CLI::App* example = app.add_subcommand("example", "run a shipped example end to end");
  example->add_option("id", example_id, "example identifier")->required();
  example->add_option("--run", stage, "pipeline stage: validate|split|semidirect|bialgebra|dual|manin");
  example->add_flag("--analyze", do_analyze, "append series and ideal analysis");
  example->add_flag("--diff-table", do_diff, "append the reference-table diff");
  example->add_option("--emit", emit, "print the embedded document: input|reference");
  add_common(example, false);

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return run_validate(opts);
    if (split->parsed()) return run_split(opts);
    if (semidirect->parsed()) return run_semidirect(opts);
    if (bialgebra->parsed()) return run_bialgebra(opts);
    if (dual->parsed()) return run_dual(opts);
    if (manin->parsed()) return run_manin(opts);
    if (analyze->parsed()) return run_analyze(opts);
    if (diff->parsed()) return run_diff_table(opts, reference);
    if (example->parsed()) return run_example(example_id, stage, do_analyze, do_diff, emit, opts);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ERROR: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
