#include "orbitforms/report.hpp"
#include "orbitforms/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace orbit;

namespace {

// Exit codes: 0 all checks pass, 1 a check failed, 2 invalid config, 3 internal inconsistency.
constexpr int kFailed = 1, kBadConfig = 2, kInternal = 3;

// Option names double as config keys; values stay strings until apply_setting parses them.
const std::vector<std::string> kModelKeys{"model", "N",  "nu",      "nu2",     "nu3",         "mu",
                                          "b",     "a",  "omega",   "beta",    "n",           "m",
                                          "variant", "f", "formula", "tolerance", "samples", "seed",
                                          "format", "output", "cache"};

struct Invocation {
  std::string config_file;
  std::map<std::string, std::string> values;
};

void add_common(CLI::App* cmd, Invocation& inv, const std::vector<std::string>& keys) {
  cmd->add_option("--config", inv.config_file, "flat key=value config file");
  for (const auto& k : keys) cmd->add_option("--" + k, inv.values[k]);
}

RunConfig build_config(const std::string& command, const Invocation& inv, const std::vector<CLI::App*>& owners) {
  RunConfig cfg;
  cfg.model = default_parameters();
  cfg.cache_dir = cache_dir_from_env();
  if (!inv.config_file.empty()) {
    std::ifstream in(inv.config_file);
    if (!in) throw ConfigError("cannot read config file " + inv.config_file);
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = parse_config_text(ss.str(), cfg);
  }
  cfg.command = command;
  for (auto* app : owners)
    for (const auto& [k, v] : inv.values)
      if (const auto* opt = app->get_option_no_throw("--" + k); opt && opt->count() > 0) apply_setting(cfg, k, v);
  return cfg;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + cfg.output);
  out << text;
}

int cmd_spectrum(const RunConfig& cfg) {
  const ModelSpec spec = resolve_model(cfg);
  const ModelBundle model = build_model(spec);
  const int n = cfg.n >= 0 ? cfg.n : spec.n;
  const ResultCache cache(cfg.cache_dir);
  if (cfg.format == "json" && cache.enabled())
    if (auto hit = cache.get(cfg)) {
      emit(cfg, *hit);
      return 0;
    }
  std::string doc;
  if (spec.family == Family::BC1_QES || spec.family == Family::MW) {
    if (cfg.format == "csv") throw ConfigError("csv export covers exactly solvable spectra only");
    doc = qes_spectrum_json(qes_spectrum(model, n), cfg).dump(2) + "\n";
  } else {
    const SpectrumRecord rec = spectrum(model, n, cfg.formula, cfg.f);
    doc = cfg.format == "csv" ? spectrum_csv(rec) : spectrum_json(rec, cfg).dump(2) + "\n";
  }
  if (cfg.format == "json" && cache.enabled()) cache.put(cfg, doc);
  emit(cfg, doc);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const ResultCache cache(cfg.cache_dir);
  std::string doc;
  bool ok;
  if (auto hit = cache.enabled() ? cache.get(cfg) : std::nullopt) {
    doc = *hit;
    ok = nlohmann::json::parse(doc).at("summary").at("passed").get<bool>();
  } else {
    const VerificationReport rep = run_suite(cfg);
    doc = rep.to_json(cfg).dump(2) + "\n";
    ok = rep.passed();
    if (cache.enabled()) cache.put(cfg, doc);
  }
  emit(cfg, doc);
  if (!cfg.output.empty()) {
    const auto summary = nlohmann::json::parse(doc).at("summary");
    std::cerr << "verify " << cfg.suite << ": " << summary.dump() << "\n";
  }
  return ok ? 0 : kFailed;
}

int cmd_table(const RunConfig& cfg) {
  emit(cfg, cfg.format == "csv" ? table_csv() : table_json().dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks for orbit-space Calogero-Moser operators"};
  app.require_subcommand(1);
  Invocation inv;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact spectrum on a flag space");
  add_common(spectrum_cmd, inv, kModelKeys);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> verify_keys = kModelKeys;
  verify_keys.insert(verify_keys.end(), {"suite", "ttw-variant"});
  add_common(verify_cmd, inv, verify_keys);

  auto* table_cmd = app.add_subcommand("table", "dump the characteristic-vector table");
  table_cmd->add_option("--format", inv.values["format"]);
  table_cmd->add_option("--output", inv.values["output"]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kBadConfig;
  }

  try {
    if (spectrum_cmd->parsed()) return cmd_spectrum(build_config("spectrum", inv, {spectrum_cmd}));
    if (verify_cmd->parsed()) {
      RunConfig cfg = build_config("verify", inv, {verify_cmd});
      if (cfg.suite.empty()) throw ConfigError("verify needs --suite");
      return cmd_verify(cfg);
    }
    return cmd_table(build_config("table", inv, {table_cmd}));
  } catch (const FormulaMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const Inconsistency& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    // ConfigError, UnknownSuite, UnsupportedModel, ParseError and DimensionError all land here.
    std::cerr << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
