// liebi: command-line front end for Atiyah classes of Lie bialgebras.
//
//   liebi validate <path>
//   liebi atiyah <path | catalog:name> [--c1-only] [--json] [--max-n N]
//   liebi catalog list
//   liebi catalog get <name> [--emit] [-o file] [--max-n N]
//   liebi verify <path | catalog:name> <report.json>
//
// Exit codes: 0 success, 1 mathematical invalidity or other failure, 2 parse error.

#include "liebi/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace liebi;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_parse = 2;

struct Loaded {
  io::InputDocument doc;
  std::string source;
  std::optional<catalog::CatalogEntry> entry;
};

Loaded load(const std::string& source, std::size_t max_n) {
  constexpr std::string_view prefix = "catalog:";
  if (source.starts_with(prefix)) {
    auto entry = catalog::get(source.substr(prefix.size()), max_n);
    auto doc = io::to_document(entry);
    return {std::move(doc), source, std::move(entry)};
  }
  return {io::read_document(source), source, std::nullopt};
}

/// Returns the bialgebra, or prints violations and returns nullopt.
std::optional<LieBialgebra> bialgebra_of(const Loaded& in) {
  if (in.entry) return in.entry->bialgebra;
  auto v = io::validate_document(in.doc);
  if (!v.is_bialgebra_document) {
    std::cerr << "error: " << in.source << " describes a Lie algebra only; give dual_brackets or r_matrix\n";
    return std::nullopt;
  }
  if (!v.bialgebra) {
    std::cerr << "error: " << in.source << " is not a valid Lie bialgebra\n";
    for (const auto& msg : v.violations) std::cerr << "  " << msg << "\n";
    return std::nullopt;
  }
  return std::move(v.bialgebra);
}

std::string vector_text(const Vector& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(v[i]) + ")" + names[i];
  }
  return out.empty() ? "0" : out;
}

int cmd_validate(const std::string& path) {
  auto doc = io::read_document(path);
  auto v = io::validate_document(doc);
  if (!v.violations.empty()) {
    std::cout << "invalid: " << v.violations.size() << " violation(s)\n";
    for (const auto& msg : v.violations) std::cout << "  " << msg << "\n";
    return exit_invalid;
  }
  std::cout << "valid " << (v.is_bialgebra_document ? "Lie bialgebra" : "Lie algebra") << " of dimension "
            << doc.basis.size() << "\n";
  return exit_ok;
}

int cmd_atiyah(const std::string& source, bool c1_only, bool as_json, std::size_t max_n) {
  auto in = load(source, max_n);
  auto b = bialgebra_of(in);
  if (!b) return exit_invalid;
  auto report = full_report(*b, {.c1_only = c1_only});

  if (as_json) {
    json echo = {{"source", in.source}, {"name", in.doc.name ? json(*in.doc.name) : json(nullptr)}};
    std::cout << io::report_to_json(report, *b, echo).dump(2) << "\n";
    return exit_ok;
  }

  const auto& names = b->g().basis_names();
  const auto& dual_names = b->g_dual().basis_names();
  std::cout << "input: " << in.source << " (dim " << b->dim() << ")\n";
  if (report.vanishing) {
    std::cout << "atiyah class: " << (*report.vanishing ? "vanishes" : "does not vanish");
    if (report.atiyah_system)
      std::cout << "  [system " << report.atiyah_system->equations << "x" << report.atiyah_system->unknowns
                << ", rank " << report.atiyah_system->rank << ", augmented " << report.atiyah_system->rank_augmented
                << "]";
    std::cout << "\n";
  }
  std::cout << "kappa: " << vector_text(report.kappa, dual_names) << "\n";
  std::cout << "c1: " << (report.c1_vanishing ? "vanishes" : "does not vanish") << "  [prefactor "
            << c1_prefactor << ", rank " << report.c1_system.rank << ", augmented "
            << report.c1_system.rank_augmented << "]\n";
  if (report.witness_v) std::cout << "  v = " << vector_text(*report.witness_v, names) << "\n";
  if (report.center_obstruction) {
    const auto& w = *report.center_obstruction;
    std::cout << "center obstruction: x = " << vector_text(w.x, names) << ", xi = " << vector_text(w.xi, dual_names)
              << ", ad*_xi(x) = " << vector_text(w.image, names) << " not central\n";
  }
  return exit_ok;
}

int cmd_catalog_list() {
  for (const auto& name : catalog::names()) {
    auto e = catalog::get(name);
    std::cout << name << "\tdim " << e.bialgebra.dim() << "\t" << e.provenance << "\n";
  }
  return exit_ok;
}

int cmd_catalog_get(const std::string& name, bool emit, const std::string& out_path, std::size_t max_n) {
  auto e = catalog::get(name, max_n);
  if (emit || !out_path.empty()) {
    auto text = io::emit_document(io::to_document(e));
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return exit_invalid;
      }
      out << text;
    }
    return exit_ok;
  }
  const auto& b = e.bialgebra;
  std::cout << "name: " << e.name << "\n"
            << "provenance: " << e.provenance << "\n"
            << "dim: " << b.dim() << "\n"
            << "basis: ";
  for (const auto& n : b.g().basis_names()) std::cout << n << " ";
  std::cout << "\ndual basis: ";
  for (const auto& n : b.g_dual().basis_names()) std::cout << n << " ";
  std::cout << "\n";
  auto show = [](const std::optional<bool>& v) { return v ? (*v ? "vanishes" : "does not vanish") : "unspecified"; };
  std::cout << "expected atiyah class: " << show(e.expected.vanishing) << "\n"
            << "expected c1: " << show(e.expected.c1_vanishing) << "\n";
  for (const auto& [k, v] : e.metadata) std::cout << k << ": " << v << "\n";
  return exit_ok;
}

int cmd_verify(const std::string& source, const std::string& report_path, std::size_t max_n) {
  auto in = load(source, max_n);
  auto b = bialgebra_of(in);
  if (!b) return exit_invalid;
  std::ifstream f(report_path);
  if (!f) throw io::ParseError("cannot read file", report_path);
  json report;
  try {
    report = json::parse(f);
  } catch (const json::parse_error& e) {
    throw io::ParseError("malformed JSON report", report_path + " byte " + std::to_string(e.byte));
  }
  auto problems = io::verify_report(*b, report);
  if (problems.empty()) {
    std::cout << "report confirmed\n";
    return exit_ok;
  }
  for (const auto& p : problems) std::cout << "mismatch: " << p << "\n";
  return exit_invalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atiyah classes of Lie bialgebras"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check a structure-constant document");
  validate->add_option("path", path, "Input document")->required();

  std::string source;
  bool c1_only = false;
  bool as_json = false;
  std::size_t max_n = catalog::default_max_n;
  auto* atiyah = app.add_subcommand("atiyah", "Decide vanishing of the Atiyah class and c1");
  atiyah->add_option("source", source, "Input document or catalog:<name>")->required();
  atiyah->add_flag("--c1-only", c1_only, "Skip the Atiyah-class solve");
  atiyah->add_flag("--json", as_json, "Emit a machine-readable report");
  atiyah->add_option("--max-n", max_n, "Largest n accepted for sl<n> catalog entries");

  auto* cat = app.add_subcommand("catalog", "Built-in examples");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List catalog entries");
  std::string name;
  bool emit = false;
  std::string out_path;
  auto* get = cat->add_subcommand("get", "Describe or emit one entry");
  get->add_option("name", name, "Entry name")->required();
  get->add_flag("--emit", emit, "Print the entry as an input document");
  get->add_option("-o,--output", out_path, "Write the input document to a file");
  get->add_option("--max-n", max_n, "Largest n accepted for sl<n> entries");

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Re-check a JSON report against its input");
  verify->add_option("source", source, "Input document or catalog:<name>")->required();
  verify->add_option("report", report_path, "Report produced by atiyah --json")->required();
  verify->add_option("--max-n", max_n, "Largest n accepted for sl<n> catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_parse;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*atiyah) return cmd_atiyah(source, c1_only, as_json, max_n);
    if (*list) return cmd_catalog_list();
    if (*get) return cmd_catalog_get(name, emit, out_path, max_n);
    if (*verify) return cmd_verify(source, report_path, max_n);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_invalid;
}
