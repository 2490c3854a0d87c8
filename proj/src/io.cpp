#include "liebi/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace liebi::io {

using nlohmann::json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::size_t read_index(const json& j, const std::string& where, std::size_t bound) {
  if (!j.is_number_integer()) throw ParseError("expected an integer index", where);
  auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    throw ParseError("index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")", where);
  return static_cast<std::size_t>(v);
}

Rational read_coefficient(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError("coefficients must be strings such as \"3\" or \"-1/2\"", where);
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), where);
  }
}

std::vector<std::string> read_names(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("expected a list of basis names", where);
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError("basis names must be strings", where + "/" + std::to_string(i));
    names.push_back(j[i].get<std::string>());
    if (!seen.insert(names.back()).second)
      throw ParseError("duplicate basis name '" + names.back() + "'", where + "/" + std::to_string(i));
  }
  return names;
}

StructureConstants read_brackets(const json& j, const std::string& where, std::size_t n) {
  if (!j.is_array()) throw ParseError("expected a list of [i, j, k, coefficient] entries", where);
  StructureConstants c(n);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string at = where + "/" + std::to_string(e);
    const auto& entry = j[e];
    if (!entry.is_array() || entry.size() != 4) throw ParseError("expected [i, j, k, coefficient]", at);
    auto a = read_index(entry[0], at + "/0", n);
    auto b = read_index(entry[1], at + "/1", n);
    auto k = read_index(entry[2], at + "/2", n);
    auto value = read_coefficient(entry[3], at + "/3");
    if (a == b) throw ParseError("bracket of a basis vector with itself", at);
    if (!seen.insert({std::min(a, b), std::max(a, b), k}).second)
      throw ParseError("bracket slot given twice", at);
    c.set_bracket(a, b, k, value);
  }
  return c;
}

RMatrix read_r_matrix(const json& j, const std::string& where, std::size_t n) {
  if (!j.is_array()) throw ParseError("expected a list of [i, j, coefficient] entries", where);
  RMatrix r{Matrix(n, n)};
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string at = where + "/" + std::to_string(e);
    const auto& entry = j[e];
    if (!entry.is_array() || entry.size() != 3) throw ParseError("expected [i, j, coefficient]", at);
    auto a = read_index(entry[0], at + "/0", n);
    auto b = read_index(entry[1], at + "/1", n);
    if (!seen.insert({a, b}).second) throw ParseError("r-matrix entry given twice", at);
    r.r(a, b) = read_coefficient(entry[2], at + "/2");
  }
  return r;
}

json bracket_list(const StructureConstants& c) {
  json out = json::array();
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(c(i, j, k))) out.push_back({i, j, k, to_string(c(i, j, k))});
  return out;
}

}  // namespace

InputDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON", line_column(text, e.byte));
  }
  if (!j.is_object()) throw ParseError("top level must be an object", "/");

  static const std::set<std::string> known{"format_version", "name", "basis", "dual_basis",
                                           "brackets", "dual_brackets", "r_matrix"};
  for (const auto& [key, _] : j.items())
    if (!known.contains(key)) throw ParseError("unknown field '" + key + "'", "/" + key);

  InputDocument doc;
  if (!j.contains("format_version") || !j["format_version"].is_string())
    throw ParseError("missing format_version", "/format_version");
  doc.format_version = j["format_version"].get<std::string>();
  if (doc.format_version != input_format_version)
    throw ParseError("unsupported format_version '" + doc.format_version + "'", "/format_version");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name must be a string", "/name");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("basis")) throw ParseError("missing basis", "/basis");
  doc.basis = read_names(j["basis"], "/basis");
  const std::size_t n = doc.basis.size();
  if (n == 0) throw ParseError("basis must not be empty", "/basis");
  if (j.contains("dual_basis")) {
    doc.dual_basis = read_names(j["dual_basis"], "/dual_basis");
    if (doc.dual_basis->size() != n) throw ParseError("dual_basis must have as many names as basis", "/dual_basis");
  }
  doc.brackets = j.contains("brackets") ? read_brackets(j["brackets"], "/brackets", n) : StructureConstants(n);
  if (j.contains("dual_brackets")) doc.dual_brackets = read_brackets(j["dual_brackets"], "/dual_brackets", n);
  if (j.contains("r_matrix")) doc.r_matrix = read_r_matrix(j["r_matrix"], "/r_matrix", n);
  return doc;
}

InputDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file", path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string emit_document(const InputDocument& doc) {
  json j;
  j["format_version"] = doc.format_version;
  if (doc.name) j["name"] = *doc.name;
  j["basis"] = doc.basis;
  if (doc.dual_basis) j["dual_basis"] = *doc.dual_basis;
  j["brackets"] = bracket_list(doc.brackets);
  if (doc.dual_brackets) j["dual_brackets"] = bracket_list(*doc.dual_brackets);
  if (doc.r_matrix) {
    json r = json::array();
    const auto& m = doc.r_matrix->r;
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b)
        if (!is_zero(m(a, b))) r.push_back({a, b, to_string(m(a, b))});
    j["r_matrix"] = r;
  }
  return j.dump(2) + "\n";
}

InputDocument to_document(const catalog::CatalogEntry& entry) {
  const auto& b = entry.bialgebra;
  InputDocument doc;
  doc.name = entry.name;
  doc.basis = b.g().basis_names();
  doc.dual_basis = b.g_dual().basis_names();
  doc.brackets = b.g().constants();
  if (entry.r_matrix)
    doc.r_matrix = entry.r_matrix;
  else
    doc.dual_brackets = b.g_dual().constants();
  return doc;
}

DocumentValidation validate_document(const InputDocument& doc) {
  DocumentValidation out;
  out.is_bialgebra_document = doc.dual_brackets.has_value() || doc.r_matrix.has_value();
  if (doc.dual_brackets && doc.r_matrix) {
    out.violations.push_back("document gives both dual_brackets and r_matrix; exactly one is allowed");
    return out;
  }
  auto g_report = validate_lie(doc.brackets);
  for (const auto& v : g_report.violations) out.violations.push_back("g: " + v.describe(doc.basis));
  const auto dual_names = doc.dual_basis.value_or(LieAlgebra::default_names(doc.basis.size(), "xi"));
  if (doc.dual_brackets) {
    auto d_report = validate_lie(*doc.dual_brackets);
    for (const auto& v : d_report.violations) out.violations.push_back("g*: " + v.describe(dual_names));
  }
  if (!out.violations.empty() || !out.is_bialgebra_document) return out;

  auto g = std::make_shared<const LieAlgebra>(doc.basis, doc.brackets);
  BialgebraValidation v =
      doc.dual_brackets
          ? validate_bialgebra(g, std::make_shared<const LieAlgebra>(dual_names, *doc.dual_brackets))
          : coboundary_bialgebra(g, *doc.r_matrix, dual_names);
  out.violations = std::move(v.violations);
  if (v.bialgebra) {
    try {
      build_double(*v.bialgebra);
      out.bialgebra = std::move(v.bialgebra);
    } catch (const NotMatchedPair& e) {
      out.violations.push_back(e.what());
    }
  }
  return out;
}

json rational_array(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vector parse_rational_array(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  Vector v;
  for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

namespace {

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(rational_array(m.row(r)));
  return out;
}

Matrix matrix_from_json(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw std::invalid_argument("expected an n x n matrix");
  std::vector<Vector> rows;
  for (const auto& r : j) {
    rows.push_back(parse_rational_array(r));
    if (rows.back().size() != n) throw std::invalid_argument("expected an n x n matrix");
  }
  return Matrix::from_rows(rows);
}

json certificate_json(const SystemCertificate& c) {
  return {{"unknowns", c.unknowns},
          {"equations", c.equations},
          {"rank", c.rank},
          {"rank_augmented", c.rank_augmented}};
}

}  // namespace

json report_to_json(const AtiyahReport& report, const LieBialgebra& b, const json& input_echo) {
  json j;
  j["format_version"] = report_format_version;
  j["input"] = input_echo;
  j["input"]["dim"] = b.dim();
  j["input"]["basis"] = b.g().basis_names();
  j["input"]["dual_basis"] = b.g_dual().basis_names();

  j["verdicts"] = {
      {"atiyah_vanishes", report.vanishing ? json(*report.vanishing) : json(nullptr)},
      {"c1_vanishes", report.c1_vanishing},
      {"center_obstruction", report.center_obstruction.has_value()},
  };

  json w;
  if (report.witness_S) {
    w["S"] = json::array();
    for (const auto& blk : report.witness_S->blocks) w["S"].push_back(matrix_json(blk));
  } else {
    w["S"] = nullptr;
  }
  w["v"] = report.witness_v ? rational_array(*report.witness_v) : json(nullptr);
  if (report.center_obstruction) {
    w["center_obstruction"] = {{"x", rational_array(report.center_obstruction->x)},
                               {"xi", rational_array(report.center_obstruction->xi)},
                               {"image", rational_array(report.center_obstruction->image)}};
  } else {
    w["center_obstruction"] = nullptr;
  }
  j["witnesses"] = w;

  j["kappa"] = rational_array(report.kappa);
  json rep = json::array();
  for (const auto& v : report.c1_representative.values()) rep.push_back(rational_array(v));
  j["c1"] = {{"prefactor", c1_prefactor}, {"representative", rep}};

  j["certificates"] = {
      {"atiyah_system", report.atiyah_system ? certificate_json(*report.atiyah_system) : json(nullptr)},
      {"c1_system", certificate_json(report.c1_system)},
  };
  return j;
}

std::vector<std::string> verify_report(const LieBialgebra& b, const json& report) {
  std::vector<std::string> problems;
  const std::size_t n = b.dim();
  try {
    const auto& verdicts = report.at("verdicts");
    const auto& w = report.at("witnesses");

    const auto& av = verdicts.at("atiyah_vanishes");
    if (av.is_boolean()) {
      if (av.get<bool>()) {
        if (w.at("S").is_null()) {
          problems.push_back("vanishing Atiyah class recorded without a witness S");
        } else {
          ConnectionDatum s;
          for (const auto& blk : w.at("S")) s.blocks.push_back(matrix_from_json(blk, n));
          if (s.dim() != n) problems.push_back("witness S has the wrong number of blocks");
          else if (!curvature(b, s).is_zero()) problems.push_back("witness S does not make the curvature vanish");
        }
      } else if (atiyah_vanishes(b).vanishes) {
        problems.push_back("recorded non-vanishing Atiyah class, but dS = -lambda is solvable");
      }
    }

    const Vector kappa = modular_vector(b.g());
    if (parse_rational_array(report.at("kappa")) != kappa) problems.push_back("kappa does not match");
    if (verdicts.at("c1_vanishes").get<bool>()) {
      if (w.at("v").is_null()) {
        problems.push_back("vanishing c1 recorded without a witness v");
      } else {
        Vector v = parse_rational_array(w.at("v"));
        if (v.size() != n || !(b.g().ad(v) == b.ad_star_dual(kappa)))
          problems.push_back("witness v does not satisfy ad_v = ad*_kappa");
      }
    } else if (c1_vanishes(b).vanishes) {
      problems.push_back("recorded non-vanishing c1, but i_kappa gamma is a coboundary");
    }

    if (verdicts.at("center_obstruction").get<bool>()) {
      const auto& co = w.at("center_obstruction");
      Vector x = parse_rational_array(co.at("x"));
      Vector xi = parse_rational_array(co.at("xi"));
      if (x.size() != n || xi.size() != n || !b.g().is_central(x) ||
          b.g().is_central(b.ad_star_dual(xi) * x))
        problems.push_back("center obstruction witness does not check out");
    }
  } catch (const std::exception& e) {
    problems.push_back(std::string{"malformed report: "} + e.what());
  }
  return problems;
}

}  // namespace liebi::io
