#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "spinspec/matterscan.hpp"
#include "spinspec/rwegen.hpp"
#include "spinspec/spectral.hpp"

// Vendored single-header nlohmann/json.
#include "json.hpp"

namespace spinspec {

using json = nlohmann::json;

enum class OutputFormat { json_fmt, csv, matrixmarket };

OutputFormat parse_format(const std::string& s);
std::string to_string(OutputFormat f);

struct Config {
  Surd default_coefficient = Surd(Rational(1));
  double snap_tol = 1e-7;
  double hsf_tol = 1e-12;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::json_fmt;
};

/// Loads the config file if given (or pointed to by SPINSPEC_CONFIG); missing
/// file with no explicit path is fine and yields defaults.
Config load_config(const std::optional<std::filesystem::path>& path);

/// Parses "p", "p/q", "sqrt(n)" or "p/q*sqrt(n)".
Surd parse_coefficient(const std::string& s);

// Exact-value serialization: HalfInt {"two":n}, Rational "p/q",
// Surd {"q":"p/q","rad":n}, GaussSurd adds "imag".
json to_json(const HalfInt& h);
json to_json(const Rational& r);
json to_json(const Surd& s);
json to_json(const GaussSurd& g);
json to_json(const RepLabel& rep);  // {"two_l":n,"two_ldot":m}

HalfInt halfint_from_json(const json& j);
Rational rational_from_json(const json& j);
Surd surd_from_json(const json& j);
RepLabel rep_from_json(const json& j);

json to_json(const SpectrumReport& r);
SpectrumReport spectrum_from_json(const json& j);

json to_json(const CensusReport& r);
CensusReport census_from_json(const json& j);

json to_json(const StabilityResult& r);
json to_json(const std::vector<MatterRow>& rows);
json rep_info_json(const RepLabel& rep, const Rational& mu0);
json chain_json(const RepLabel& rep);

/// Chain manifest: links, masses and matrix file references.
json system_manifest(const RweSystem& sys, const std::string& matrix_prefix);

std::string matter_table_csv(const std::vector<MatterRow>& rows);
std::string census_csv(const CensusReport& r);

/// Matrix Market coordinate complex with 17-significant-digit floats; the
/// exact entries go to <path>.exact.json.
void write_matrix_market(const OperatorMatrix& m, const std::filesystem::path& path);

/// Bit-stable writer: sorted JSON keys, '\n' terminated.
void write_text(const std::filesystem::path& path, const std::string& content);
std::string dump(const json& j);

}  // namespace spinspec
