#pragma once

#include "liebi/catalog.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liebi::io {

inline constexpr const char* input_format_version = "liebi-input/1";
inline constexpr const char* report_format_version = "liebi-report/1";

/// Malformed input. `position` is "line L, column C" for JSON syntax errors
/// or a JSON pointer ("/brackets/3/2") for schema errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string position)
      : std::runtime_error(message + " at " + position), position_{std::move(position)} {}
  const std::string& position() const { return position_; }

 private:
  std::string position_;
};

/// Sparse presentation of a Lie algebra or Lie bialgebra.
///
///   {
///     "format_version": "liebi-input/1",
///     "name": "optional label",
///     "basis": ["x1", "x2", "x3"],
///     "dual_basis": ["xi1", "xi2", "xi3"],          (optional)
///     "brackets": [[0, 1, 2, "1"]],                 [x_i, x_j] has coefficient on x_k
///     "dual_brackets": [[0, 1, 1, "1"], ...],       same, for g* in the dual basis
///     "r_matrix": [[0, 1, "1"], [1, 0, "-1"]]       r = sum c x_i (x) x_j
///   }
///
/// Coefficients are exact rationals written as strings ("p" or "p/q").
/// Each bracket entry also fixes [x_j, x_i] = -c x_k; repeating an (i, j, k)
/// slot in either order is an error, as is i == j.
struct InputDocument {
  std::string format_version = input_format_version;
  std::optional<std::string> name;
  std::vector<std::string> basis;
  std::optional<std::vector<std::string>> dual_basis;
  StructureConstants brackets;
  std::optional<StructureConstants> dual_brackets;
  std::optional<RMatrix> r_matrix;
};

InputDocument parse_document(std::string_view text);
/// Reads and parses a file; an unreadable file is reported as ParseError.
InputDocument read_document(const std::filesystem::path& path);
std::string emit_document(const InputDocument& doc);

/// The document that reproduces a catalog entry. Coboundary entries are
/// emitted through their r-matrix.
InputDocument to_document(const catalog::CatalogEntry& entry);

struct DocumentValidation {
  std::vector<std::string> violations;         ///< empty iff valid
  std::optional<LieBialgebra> bialgebra;       ///< set for valid bialgebra documents
  bool is_bialgebra_document = false;
};

/// validate_lie on every bracket table, then validate_bialgebra (or
/// coboundary_bialgebra for r-matrix documents). Documents carrying both
/// dual_brackets and r_matrix are reported as invalid.
DocumentValidation validate_document(const InputDocument& doc);

nlohmann::json rational_array(const Vector& v);
Vector parse_rational_array(const nlohmann::json& j);

/// Machine-readable report. Sections: format_version, input, verdicts,
/// witnesses, kappa, c1, certificates.
nlohmann::json report_to_json(const AtiyahReport& report, const LieBialgebra& b, const nlohmann::json& input_echo);

/// Re-checks the witnesses of a JSON report against a bialgebra: S must make
/// the curvature vanish and v must satisfy ad_v = ad*_kappa. Returns the list
/// of problems (empty when every recorded verdict is confirmed).
std::vector<std::string> verify_report(const LieBialgebra& b, const nlohmann::json& report);

}  // namespace liebi::io
