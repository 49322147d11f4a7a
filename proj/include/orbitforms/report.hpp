#pragma once

#include "orbitforms/spectral.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbit {

inline constexpr const char* kReportSchema = "orbit-forms/1";

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string suite;
  std::string model_name;  // empty: suites run their default model list
  ModelSpec model;
  int n = -1;              // level; -1 picks the suite default
  std::optional<CharVector> f;
  Formula formula = Formula::Corrected;
  std::string ttw_variant = "all";
  double tolerance = 1e-6;
  int samples = 50;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string output;
  std::string cache_dir;
};

// Keys are the long CLI option names without dashes. Unknown keys and malformed values throw ConfigError.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);
// Flat key=value lines; blank lines and lines starting with # are ignored.
RunConfig parse_config_text(const std::string& text, RunConfig base = {});
// Canonical text: every key in a fixed order. parse_config_text(config_to_text(c)) reproduces c.
std::string config_to_text(const RunConfig& cfg);
// Fills model from model_name and the parameter keys, validating ranges.
ModelSpec resolve_model(const RunConfig& cfg);

enum class CheckStatus { Pass, Fail, ReportedOffset };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  nlohmann::json values = nlohmann::json::object();  // exact values as strings, numeric values as numbers
  double seconds = 0;  // kept out of the JSON so reports stay byte-identical
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  void add(const std::string& name, bool ok, const std::string& detail, nlohmann::json values = nlohmann::json::object());
  void merge(const VerificationReport& other);
  void sort();
  bool passed() const;  // reported offsets count as passes
  int count(CheckStatus s) const;
  nlohmann::json to_json(const RunConfig& cfg) const;
};

nlohmann::json model_json(const ModelSpec& s);
nlohmann::json poly_json(const MultiPoly& p);
nlohmann::json spectrum_json(const SpectrumRecord& rec, const RunConfig& cfg);
std::string spectrum_csv(const SpectrumRecord& rec);
nlohmann::json qes_spectrum_json(const QesSpectrum& q, const RunConfig& cfg);
nlohmann::json table_json();
std::string table_csv();

// Cache keyed by the canonical config text; a hit returns the stored document unchanged.
class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}
  bool enabled() const { return !dir_.empty(); }
  std::optional<std::string> get(const RunConfig& cfg) const;
  void put(const RunConfig& cfg, const std::string& document) const;
  std::string path_for(const RunConfig& cfg) const;

 private:
  std::string dir_;
};

// Cache directory from ORBITFORMS_CACHE, or empty.
std::string cache_dir_from_env();

}  // namespace orbit
