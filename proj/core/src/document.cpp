#include "trilie/document.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

using nlohmann::json;

constexpr const char* kAlgebraSchema = "trilie/algebra-v1";
constexpr const char* kTableSchema = "trilie/table-v1";

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    // Re-parse with exceptions to surface the location.
    try {
      json reparsed = json::parse(text);
      (void)reparsed;
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
    throw Error(ErrorKind::Parse, "malformed document");
  }
  return j;
}

int get_dim(const json& j) {
  if (!j.contains("dim") || !j.at("dim").is_number_integer()) parse_fail("dim", "missing integer field");
  int dim = j.at("dim").get<int>();
  if (dim < 0) parse_fail("dim", "negative");
  return dim;
}

void check_schema(const json& j, const char* expected) {
  if (!j.contains("schema") || !j.at("schema").is_string())
    parse_fail("schema", "missing string field");
  if (j.at("schema").get<std::string>() != expected)
    parse_fail("schema", "expected \"" + std::string(expected) + "\"");
}

int index_1based(const json& v, int dim, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where, "index must be an integer");
  int idx = v.get<int>();
  if (idx < 1 || idx > dim)
    throw Error(ErrorKind::IndexRange, where + ": index " + std::to_string(idx) + " outside 1.." +
                                           std::to_string(dim));
  return idx;
}

std::map<int, Rational> parse_coeffs(const json& v, int dim, const std::string& where) {
  if (!v.is_object()) parse_fail(where, "coeffs must be an object");
  std::map<int, Rational> out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    int idx;
    try {
      idx = std::stoi(it.key());
    } catch (...) {
      parse_fail(where, "coefficient key '" + it.key() + "' is not an index");
    }
    if (idx < 1 || idx > dim)
      throw Error(ErrorKind::IndexRange, where + ": coefficient index " + it.key());
    if (!it.value().is_string()) parse_fail(where, "coefficient values must be rational strings");
    Rational r = Rational::parse(it.value().get<std::string>());
    if (!r.is_zero()) out[idx] = r;
  }
  return out;
}

}  // namespace

ParsedDocument parse_algebra_document(const std::string& text) {
  json j = parse_json(text);
  check_schema(j, kAlgebraSchema);
  const int dim = get_dim(j);

  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j.at("basis").is_array()) parse_fail("basis", "must be an array of strings");
    for (const auto& l : j.at("basis")) {
      if (!l.is_string()) parse_fail("basis", "must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != dim) parse_fail("basis", "label count differs from dim");
  }

  ThreeLieAlgebra alg(dim, labels);
  if (j.contains("brackets")) {
    if (!j.at("brackets").is_array()) parse_fail("brackets", "must be an array");
    int line = 0;
    for (const auto& rec : j.at("brackets")) {
      const std::string where = "brackets[" + std::to_string(line) + "]";
      if (!rec.is_object()) parse_fail(where, "must be an object");
      for (const char* f : {"a", "b", "c"})
        if (!rec.contains(f)) parse_fail(where, std::string("missing field '") + f + "'");
      int a = index_1based(rec.at("a"), dim, where + ".a");
      int b = index_1based(rec.at("b"), dim, where + ".b");
      int c = index_1based(rec.at("c"), dim, where + ".c");
      if (!rec.contains("coeffs")) parse_fail(where, "missing field 'coeffs'");
      std::map<int, Rational> coeffs = parse_coeffs(rec.at("coeffs"), dim, where + ".coeffs");
      Vec value = zero_vec(dim);
      for (const auto& [k, r] : coeffs) value[static_cast<size_t>(k - 1)] = r;
      alg.set_bracket(a - 1, b - 1, c - 1, value);
      ++line;
    }
  }

  ParsedDocument out;
  out.algebra = std::move(alg);
  if (j.contains("derivation")) {
    const json& d = j.at("derivation");
    if (!d.is_array() || static_cast<int>(d.size()) != dim * dim)
      parse_fail("derivation", "must be a row-major array of dim*dim rational strings");
    Mat m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        const json& cell = d.at(static_cast<size_t>(r * dim + c));
        if (!cell.is_string()) parse_fail("derivation", "entries must be rational strings");
        m(r, c) = Rational::parse(cell.get<std::string>());
      }
    out.derivation = std::move(m);
  }
  return out;
}

std::string serialize_algebra_document(const ThreeLieAlgebra& alg, const Mat* derivation) {
  json j;
  j["schema"] = kAlgebraSchema;
  j["dim"] = alg.dim();
  j["basis"] = alg.labels();
  json brackets = json::array();
  for (const auto& [key, gamma] : alg.constants()) {
    json rec;
    rec["a"] = key[0] + 1;
    rec["b"] = key[1] + 1;
    rec["c"] = key[2] + 1;
    json coeffs = json::object();
    for (int k = 0; k < alg.dim(); ++k)
      if (!gamma[static_cast<size_t>(k)].is_zero())
        coeffs[std::to_string(k + 1)] = gamma[static_cast<size_t>(k)].str();
    rec["coeffs"] = std::move(coeffs);
    brackets.push_back(std::move(rec));
  }
  j["brackets"] = std::move(brackets);
  if (derivation) {
    json d = json::array();
    for (int r = 0; r < derivation->rows(); ++r)
      for (int c = 0; c < derivation->cols(); ++c) d.push_back((*derivation)(r, c).str());
    j["derivation"] = std::move(d);
  }
  return j.dump(2) + "\n";
}

TableDocument parse_table_document(const std::string& text) {
  json j = parse_json(text);
  check_schema(j, kTableSchema);
  TableDocument doc;
  doc.dim = get_dim(j);
  if (!j.contains("lines") || !j.at("lines").is_array()) parse_fail("lines", "missing array field");
  int line = 0;
  for (const auto& rec : j.at("lines")) {
    const std::string where = "lines[" + std::to_string(line) + "]";
    if (!rec.is_object() || !rec.contains("args") || !rec.at("args").is_array() ||
        rec.at("args").size() != 3)
      parse_fail(where, "must contain an 'args' array of three indices");
    TableLine tl;
    for (int i = 0; i < 3; ++i)
      tl.args[static_cast<size_t>(i)] = index_1based(rec.at("args").at(static_cast<size_t>(i)), doc.dim, where);
    if (rec.contains("coeffs")) {
      tl.coeffs = parse_coeffs(rec.at("coeffs"), doc.dim, where + ".coeffs");
    }
    if (rec.contains("annotation")) {
      if (!rec.at("annotation").is_string()) parse_fail(where, "annotation must be a string");
      tl.annotation = rec.at("annotation").get<std::string>();
    }
    doc.lines.push_back(std::move(tl));
    ++line;
  }
  return doc;
}

std::string serialize_table_document(const TableDocument& doc) {
  json j;
  j["schema"] = kTableSchema;
  j["dim"] = doc.dim;
  json lines = json::array();
  for (const auto& tl : doc.lines) {
    json rec;
    rec["args"] = {tl.args[0], tl.args[1], tl.args[2]};
    json coeffs = json::object();
    for (const auto& [k, r] : tl.coeffs) coeffs[std::to_string(k)] = r.str();
    rec["coeffs"] = std::move(coeffs);
    if (!tl.annotation.empty()) rec["annotation"] = tl.annotation;
    lines.push_back(std::move(rec));
  }
  j["lines"] = std::move(lines);
  return j.dump(2) + "\n";
}

TableDocument table_of(const ThreeLieAlgebra& alg) {
  TableDocument doc;
  doc.dim = alg.dim();
  for (const auto& [key, gamma] : alg.constants()) {
    TableLine tl;
    tl.args = {key[0] + 1, key[1] + 1, key[2] + 1};
    for (int k = 0; k < alg.dim(); ++k)
      if (!gamma[static_cast<size_t>(k)].is_zero()) tl.coeffs[k + 1] = gamma[static_cast<size_t>(k)];
    doc.lines.push_back(std::move(tl));
  }
  return doc;
}

std::string format_combination(const Vec& v, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Rational c = v[i];
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (!c.is_one()) os << c.str() << "*";
    os << (i < labels.size() ? labels[i] : "e" + std::to_string(i + 1));
    first = false;
  }
  if (first) return "0";
  return os.str();
}

namespace {

std::string format_line_coeffs(const std::map<int, Rational>& coeffs, int dim,
                               const std::vector<std::string>& labels) {
  Vec v = zero_vec(dim);
  for (const auto& [k, r] : coeffs) v[static_cast<size_t>(k - 1)] = r;
  return format_combination(v, labels);
}

}  // namespace

std::string DiffReport::describe() const {
  std::ostringstream os;
  os << "matched " << matched << ", annotated " << annotated << ", conflicting " << conflicting
     << ", missing-from-reference " << missing;
  return os.str();
}

DiffReport diff_table(const ThreeLieAlgebra& generated, const TableDocument& reference) {
  if (reference.dim != generated.dim())
    throw Error(ErrorKind::ShapeMismatch, "reference dimension differs from the regenerated table");
  DiffReport report;
  const int dim = generated.dim();
  const auto& labels = generated.labels();

  std::map<std::array<int, 3>, bool> covered;  // canonical 0-based triples mentioned by the reference

  for (const auto& line : reference.lines) {
    DiffEntry entry;
    entry.args = line.args;
    entry.key = line.args;
    std::sort(entry.key.begin(), entry.key.end());
    entry.annotated = !line.annotation.empty();
    entry.annotation = line.annotation;

    Vec found = generated.bracket_basis(line.args[0] - 1, line.args[1] - 1, line.args[2] - 1);
    Vec expected = zero_vec(dim);
    for (const auto& [k, r] : line.coeffs) expected[static_cast<size_t>(k - 1)] = r;
    entry.found = format_combination(found, labels);
    entry.expected = format_line_coeffs(line.coeffs, dim, labels);
    entry.cls = found == expected ? DiffClass::Match : DiffClass::Conflicting;

    if (entry.annotated)
      ++report.annotated;
    else if (entry.cls == DiffClass::Match)
      ++report.matched;
    else
      ++report.conflicting;

    covered[{entry.key[0] - 1, entry.key[1] - 1, entry.key[2] - 1}] = true;
    report.entries.push_back(std::move(entry));
  }

  for (const auto& [key, gamma] : generated.constants()) {
    if (covered.count(key)) continue;
    DiffEntry entry;
    entry.key = {key[0] + 1, key[1] + 1, key[2] + 1};
    entry.args = entry.key;
    entry.expected = "(absent)";
    entry.found = format_combination(gamma, labels);
    entry.cls = DiffClass::Missing;
    ++report.missing;
    report.entries.push_back(std::move(entry));
  }

  std::sort(report.entries.begin(), report.entries.end(), [](const DiffEntry& a, const DiffEntry& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.args != b.args) return a.args < b.args;
    return a.expected < b.expected;
  });
  return report;
}

}  // namespace trilie
