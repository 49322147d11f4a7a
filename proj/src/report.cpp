#include "orbitforms/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace orbit {

namespace {

using nlohmann::json;

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("option " + key + " expects an integer, got '" + v + "'");
  }
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("option " + key + " expects a number, got '" + v + "'");
  }
}

Rational parse_param(const std::string& key, const std::string& v) {
  try {
    return parse_rational(v);
  } catch (const std::exception&) {
    throw ConfigError("option " + key + " expects a rational p/q, got '" + v + "'");
  }
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// FNV-1a; stable across platforms, unlike std::hash.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

void apply_setting(RunConfig& c, const std::string& key, const std::string& v) {
  auto& m = c.model;
  if (key == "command") c.command = v;
  else if (key == "suite") c.suite = v;
  else if (key == "model") c.model_name = v;
  else if (key == "N") m.N = parse_int(key, v);
  else if (key == "nu") m.nu = parse_param(key, v);
  else if (key == "nu2") m.nu2 = parse_param(key, v);
  else if (key == "nu3") m.nu3 = parse_param(key, v);
  else if (key == "mu") m.mu = parse_param(key, v);
  else if (key == "b") m.b = parse_param(key, v);
  else if (key == "a") m.a = parse_param(key, v);
  else if (key == "omega") m.omega = parse_param(key, v);
  else if (key == "beta") m.beta = parse_param(key, v);
  else if (key == "n") c.n = parse_int(key, v);
  else if (key == "m") m.m = parse_int(key, v);
  else if (key == "variant") m.variant = v;
  else if (key == "f") {
    if (v.empty()) {
      c.f.reset();
    } else {
      std::vector<int> g;
      std::stringstream ss(v);
      std::string part;
      while (std::getline(ss, part, ',')) g.push_back(parse_int(key, part));
      try {
        c.f = CharVector(g);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("option f: ") + e.what());
      }
    }
  } else if (key == "formula") {
    if (v == "printed") c.formula = Formula::Printed;
    else if (v == "corrected") c.formula = Formula::Corrected;
    else throw ConfigError("option formula expects printed or corrected");
  } else if (key == "ttw-variant") {
    if (v != "all" && v != "plain" && v != "sextic" && v != "full")
      throw ConfigError("option ttw-variant expects all, plain, sextic or full");
    c.ttw_variant = v;
  } else if (key == "tolerance") c.tolerance = parse_double(key, v);
  else if (key == "samples") c.samples = parse_int(key, v);
  else if (key == "seed") {
    try {
      std::size_t used = 0;
      c.seed = std::stoull(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      throw ConfigError("option seed expects a non-negative integer");
    }
  } else if (key == "format") {
    if (v != "json" && v != "csv") throw ConfigError("option format expects json or csv");
    c.format = v;
  } else if (key == "output") c.output = v;
  else if (key == "cache") c.cache_dir = v;
  else throw ConfigError("unknown config key '" + key + "'");
}

RunConfig parse_config_text(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

std::string config_to_text(const RunConfig& c) {
  const auto& m = c.model;
  std::ostringstream os;
  os << "command=" << c.command << "\n"
     << "suite=" << c.suite << "\n"
     << "model=" << c.model_name << "\n"
     << "N=" << m.N << "\n"
     << "nu=" << to_string(m.nu) << "\n"
     << "nu2=" << to_string(m.nu2) << "\n"
     << "nu3=" << to_string(m.nu3) << "\n"
     << "mu=" << to_string(m.mu) << "\n"
     << "b=" << to_string(m.b) << "\n"
     << "a=" << to_string(m.a) << "\n"
     << "omega=" << to_string(m.omega) << "\n"
     << "beta=" << to_string(m.beta) << "\n"
     << "n=" << c.n << "\n"
     << "m=" << m.m << "\n"
     << "variant=" << m.variant << "\n";
  os << "f=";
  if (c.f)
    for (int i = 0; i < c.f->size(); ++i) os << (i ? "," : "") << c.f->f[i];
  os << "\n"
     << "formula=" << (c.formula == Formula::Printed ? "printed" : "corrected") << "\n"
     << "ttw-variant=" << c.ttw_variant << "\n"
     << "tolerance=" << format_double(c.tolerance) << "\n"
     << "samples=" << c.samples << "\n"
     << "seed=" << c.seed << "\n"
     << "format=" << c.format << "\n"
     << "output=" << c.output << "\n"
     << "cache=" << c.cache_dir << "\n";
  return os.str();
}

ModelSpec resolve_model(const RunConfig& c) {
  ModelSpec s = c.model;
  try {
    s.family = parse_family(c.model_name);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (c.n >= 0) s.n = c.n;
  if (s.family == Family::Sutherland && s.N < 2) throw ConfigError("sutherland needs N >= 2");
  if (s.family == Family::BCN && s.N < 1) throw ConfigError("bcn needs N >= 1");
  if ((s.family == Family::BC1 || s.family == Family::Sutherland || s.family == Family::BCN ||
       s.family == Family::G2) &&
      s.N > 8)
    throw ConfigError("N above 8 is outside the supported range");
  if (s.family == Family::MW && s.variant.empty()) throw ConfigError("mw needs variant (0+, 0-, 1-, 1+)");
  if (s.beta <= 0) throw ConfigError("beta must be positive");
  if (s.n < 0) throw ConfigError("n must be non-negative");
  return s;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ReportedOffset: return "reported-offset";
  }
  return "?";
}

void VerificationReport::add(const std::string& name, bool ok, const std::string& detail, json values) {
  CheckRecord r;
  r.name = name;
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  r.detail = detail;
  r.values = std::move(values);
  checks.push_back(std::move(r));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
}

bool VerificationReport::passed() const { return count(CheckStatus::Fail) == 0; }

int VerificationReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
}

json VerificationReport::to_json(const RunConfig& cfg) const {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "verify";
  j["suite"] = suite;
  j["seed"] = cfg.seed;
  j["formula"] = cfg.formula == Formula::Printed ? "printed" : "corrected";
  json arr = json::array();
  for (const auto& c : checks) {
    json r;
    r["name"] = c.name;
    r["status"] = to_string(c.status);
    r["detail"] = c.detail;
    r["values"] = c.values;
    arr.push_back(std::move(r));
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"total", checks.size()},
                  {"pass", count(CheckStatus::Pass)},
                  {"reported_offset", count(CheckStatus::ReportedOffset)},
                  {"fail", count(CheckStatus::Fail)},
                  {"passed", passed()}};
  return j;
}

json model_json(const ModelSpec& s) {
  json j;
  j["family"] = to_string(s.family);
  j["N"] = s.N;
  for (const auto& [k, v] : {std::pair{"nu", s.nu}, {"nu2", s.nu2}, {"nu3", s.nu3}, {"mu", s.mu}, {"b", s.b},
                             {"a", s.a}, {"omega", s.omega}, {"beta", s.beta}})
    j[k] = to_string(v);
  j["n"] = s.n;
  j["m"] = s.m;
  if (!s.variant.empty()) j["variant"] = s.variant;
  return j;
}

json poly_json(const MultiPoly& p) {
  json arr = json::array();
  for (const auto& [m, c] : p.terms()) arr.push_back({{"monomial", m}, {"coefficient", to_string(c)}});
  return arr;
}

json spectrum_json(const SpectrumRecord& rec, const RunConfig& cfg) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "spectrum";
  j["model"] = model_json(resolve_model(cfg));
  j["formula"] = rec.formula == Formula::Printed ? "printed" : "corrected";
  j["flag"] = {{"d", rec.d}, {"f", rec.f.f}, {"n", rec.n}};
  j["dimension"] = rec.size();
  json entries = json::array();
  for (std::size_t k = 0; k < rec.entries.size(); ++k) {
    const auto& e = rec.entries[k];
    json basis = json::array();
    for (const auto& q : e.eigenpolys) basis.push_back(poly_json(q));
    for (const auto& p : e.quanta)
      entries.push_back({{"p", p},
                         {"eps", to_string(e.eps)},
                         {"eigenspace", k},
                         {"multiplicity", e.multiplicity()},
                         {"kernel_dimension", e.eigenpolys.size()},
                         {"defective", e.defective()},
                         {"eigenpolynomials", basis}});
  }
  j["entries"] = std::move(entries);
  if (rec.numeric_max_dev) j["numeric"] = {{"max_deviation", *rec.numeric_max_dev}, {"max_imag", *rec.numeric_max_imag}};
  return j;
}

std::string spectrum_csv(const SpectrumRecord& rec) {
  std::ostringstream os;
  os << "p,eps,multiplicity,eigenpolynomial\n";
  for (const auto& e : rec.entries)
    for (const auto& p : e.quanta) {
      os << '"';
      for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
      os << "\"," << to_string(e.eps) << "," << e.multiplicity() << ",\"" << to_string(e.eigenpolys.front()) << "\"\n";
    }
  return os.str();
}

json qes_spectrum_json(const QesSpectrum& q, const RunConfig& cfg) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "spectrum";
  j["model"] = model_json(resolve_model(cfg));
  j["flag"] = {{"d", 1}, {"f", {1}}, {"n", q.n}};
  j["exact"] = false;
  j["trace"] = to_string(q.trace);
  json m = json::array();
  for (Eigen::Index r = 0; r < q.matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < q.matrix.cols(); ++c) row.push_back(to_string(q.matrix(r, c)));
    m.push_back(row);
  }
  j["matrix"] = std::move(m);
  json entries = json::array();
  for (std::size_t k = 0; k < q.eigenvalues.size(); ++k)
    entries.push_back({{"eigenvalue", q.eigenvalues[k]}, {"eigenvector", q.eigenvectors[k]}});
  j["entries"] = std::move(entries);
  j["max_imag"] = q.max_imag;
  return j;
}

json table_json() {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "table";
  json rows = json::array();
  for (const auto& r : char_vector_table()) {
    json row{{"model", r.model}, {"column", r.column}, {"vector", r.text}};
    if (!r.vector.empty()) row["components"] = r.vector;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string table_csv() {
  std::ostringstream os;
  os << "model,column,vector\n";
  for (const auto& r : char_vector_table()) os << r.model << "," << r.column << ",\"" << r.text << "\"\n";
  return os.str();
}

std::string ResultCache::path_for(const RunConfig& cfg) const {
  RunConfig key = cfg;
  key.output.clear();
  key.cache_dir.clear();
  std::ostringstream name;
  name << (cfg.command.empty() ? "run" : cfg.command) << "-" << std::hex << fnv1a(config_to_text(key)) << ".json";
  return (std::filesystem::path(dir_) / name.str()).string();
}

std::optional<std::string> ResultCache::get(const RunConfig& cfg) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(cfg));
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    const auto j = json::parse(ss.str());
    RunConfig key = cfg;
    key.output.clear();
    key.cache_dir.clear();
    // A hash collision or a stale layout falls through to a fresh run.
    if (j.at("config").get<std::string>() != config_to_text(key)) return std::nullopt;
    return j.at("document").get<std::string>();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ResultCache::put(const RunConfig& cfg, const std::string& document) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  RunConfig key = cfg;
  key.output.clear();
  key.cache_dir.clear();
  const std::string path = path_for(cfg);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << json{{"config", config_to_text(key)}, {"document", document}}.dump();
  }
  std::filesystem::rename(tmp, path);
}

std::string cache_dir_from_env() {
  const char* v = std::getenv("ORBITFORMS_CACHE");
  return v ? std::string(v) : std::string();
}

}  // namespace orbit
