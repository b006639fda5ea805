// Copyright 2026 the eqmanifold developers.
// SPDX-License-Identifier: Apache-2.0
#include "eqm/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "eqm/errors.hpp"

namespace eqm {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size())
    throw ConfigError(where + ": expected a number, got '" + text + "'");
  return v;
}

struct KeyValue {
  std::string value;
  int line = 0;
  bool used = false;
};

struct Section {
  std::string name;
  int line = 0;
  std::vector<std::pair<std::string, KeyValue>> entries;

  KeyValue* find(const std::string& key) {
    for (auto& [k, v] : entries)
      if (k == key) return &v;
    return nullptr;
  }
};

class IniDoc {
 public:
  IniDoc(const std::string& text, std::string filename) : filename_(std::move(filename)) {
    std::istringstream in(text);
    std::string line;
    Section* current = nullptr;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') fail(lineno, "unterminated section header");
        sections_.push_back({trim(line.substr(1, line.size() - 2)), lineno, {}});
        current = &sections_.back();
        continue;
      }
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
      if (!current) fail(lineno, "key outside of any [section]");
      current->entries.emplace_back(trim(line.substr(0, eq)),
                                    KeyValue{trim(line.substr(eq + 1)), lineno, false});
    }
  }

  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw ConfigError(filename_ + ":" + std::to_string(line) + ": " + msg);
  }

  Section* find(const std::string& name) {
    for (auto& s : sections_)
      if (s.name == name) return &s;
    return nullptr;
  }

  double require_number(Section& s, const std::string& key) {
    KeyValue* kv = s.find(key);
    if (!kv) fail(s.line, "section [" + s.name + "] is missing the key '" + key + "'");
    kv->used = true;
    return parse_number(kv->value, filename_ + ":" + std::to_string(kv->line) + ": " + key);
  }

  double number_or(Section& s, const std::string& key, double fallback) {
    KeyValue* kv = s.find(key);
    if (!kv) return fallback;
    kv->used = true;
    return parse_number(kv->value, filename_ + ":" + std::to_string(kv->line) + ": " + key);
  }

  std::string string_or(Section& s, const std::string& key, const std::string& fallback) {
    KeyValue* kv = s.find(key);
    if (!kv) return fallback;
    kv->used = true;
    return kv->value;
  }

  std::vector<Section>& sections() { return sections_; }
  const std::string& filename() const { return filename_; }

 private:
  std::string filename_;
  std::vector<Section> sections_;
};

GasModel parse_model(const std::string& text, const std::string& where) {
  if (text == "ideal") return GasModel::ideal;
  if (text == "vdw") return GasModel::vdw;
  throw ConfigError(where + ": model must be 'ideal' or 'vdw', got '" + text + "'");
}

Representation parse_representation(const std::string& text, const std::string& where) {
  if (text == "entropy_U") return Representation::entropy_U;
  if (text == "massieu_beta") return Representation::massieu_beta;
  if (text == "entropy_V") return Representation::entropy_V;
  throw ConfigError(where +
                    ": representation must be one of entropy_U, massieu_beta, entropy_V; got '" +
                    text + "'");
}

RunConfig parse_ini(const std::string& text, const std::string& filename) {
  IniDoc doc(text, filename);
  RunConfig cfg;

  Section* reaction = doc.find("reaction");
  if (!reaction) throw ConfigError(filename + ": missing [reaction] section");
  cfg.reaction.T = doc.require_number(*reaction, "temperature_K");
  cfg.reaction.V = doc.require_number(*reaction, "volume_L");
  cfg.reaction.R = doc.number_or(*reaction, "gas_constant", kGasConstant);
  cfg.model = parse_model(doc.string_or(*reaction, "model", "ideal"), filename);
  cfg.representation =
      parse_representation(doc.string_or(*reaction, "representation", "entropy_U"), filename);
  cfg.xi_anchor = doc.number_or(*reaction, "xi_anchor", cfg.xi_anchor);
  cfg.domain_margin = doc.number_or(*reaction, "domain_margin", cfg.domain_margin);

  for (Section& s : doc.sections()) {
    if (s.name.rfind("species.", 0) != 0) continue;
    SpeciesParams sp;
    sp.label = s.name.substr(8);
    if (sp.label.empty()) doc.fail(s.line, "species section needs a label: [species.<name>]");
    cfg.reaction.nu.push_back(doc.require_number(s, "nu"));
    cfg.reaction.n_init.push_back(doc.require_number(s, "initial_moles_mol"));
    sp.c = doc.require_number(s, "heat_capacity_c");
    sp.s0 = doc.require_number(s, "standard_entropy_J_per_molK");
    sp.U0 = doc.require_number(s, "standard_internal_energy_J");
    sp.V0 = doc.number_or(s, "standard_volume_L", 1.0);
    sp.n0 = doc.number_or(s, "standard_moles_mol", 1.0);
    sp.a = doc.number_or(s, "vdw_a_JL_per_mol2", 0.0);
    sp.b = doc.number_or(s, "vdw_b_L_per_mol", 0.0);
    cfg.reaction.species.push_back(std::move(sp));
  }

  if (Section* s = doc.find("scan"))
    cfg.scan_grid = static_cast<int>(doc.number_or(*s, "grid", cfg.scan_grid));
  if (Section* s = doc.find("curvature"))
    cfg.curvature_grid = static_cast<int>(doc.number_or(*s, "grid", cfg.curvature_grid));
  if (Section* s = doc.find("equilibrium"))
    cfg.tolerance = doc.number_or(*s, "tolerance", cfg.tolerance);

  if (Section* s = doc.find("geodesic")) {
    cfg.stepper.rel_tol = doc.number_or(*s, "rel_tol", cfg.stepper.rel_tol);
    cfg.stepper.abs_tol = doc.number_or(*s, "abs_tol", cfg.stepper.abs_tol);
    cfg.stepper.initial_step = doc.number_or(*s, "initial_step", cfg.stepper.initial_step);
    cfg.stepper.max_steps =
        static_cast<long>(doc.number_or(*s, "max_steps", static_cast<double>(cfg.stepper.max_steps)));
    for (auto& [key, kv] : s->entries) {
      if (key != "run") continue;
      kv.used = true;
      std::istringstream vals(kv.value);
      std::vector<double> nums;
      std::string tok;
      while (vals >> tok)
        nums.push_back(
            parse_number(tok, filename + ":" + std::to_string(kv.line) + ": run"));
      if (nums.size() < 2 || nums.size() > 4)
        doc.fail(kv.line, "run expects 2-4 numbers: xi0 xidot0 [e1_0 [e1dot_0]]");
      GeodesicRunInit run;
      run.xi0 = nums[0];
      run.xidot0 = nums[1];
      if (nums.size() > 2) run.e1_0 = nums[2];
      if (nums.size() > 3) run.e1dot_0 = nums[3];
      cfg.runs.push_back(run);
    }
  }

  for (Section& s : doc.sections())
    for (auto& [key, kv] : s.entries)
      if (!kv.used) doc.fail(kv.line, "unknown key '" + key + "' in section [" + s.name + "]");

  validate(cfg.reaction);
  return cfg;
}

RunConfig parse_json(const std::string& text, const std::string& filename) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(filename + ": " + e.what());
  }
  RunConfig cfg;
  try {
    const auto& r = j.at("reaction");
    cfg.reaction.T = r.at("temperature_K").get<double>();
    cfg.reaction.V = r.at("volume_L").get<double>();
    cfg.reaction.R = r.value("gas_constant", kGasConstant);
    cfg.model = parse_model(r.value("model", "ideal"), filename);
    cfg.representation = parse_representation(r.value("representation", "entropy_U"), filename);
    cfg.xi_anchor = r.value("xi_anchor", cfg.xi_anchor);
    cfg.domain_margin = r.value("domain_margin", cfg.domain_margin);

    for (const auto& s : j.at("species")) {
      SpeciesParams sp;
      sp.label = s.value("label", std::to_string(cfg.reaction.species.size()));
      cfg.reaction.nu.push_back(s.at("nu").get<double>());
      cfg.reaction.n_init.push_back(s.at("initial_moles_mol").get<double>());
      sp.c = s.at("heat_capacity_c").get<double>();
      sp.s0 = s.at("standard_entropy_J_per_molK").get<double>();
      sp.U0 = s.at("standard_internal_energy_J").get<double>();
      sp.V0 = s.value("standard_volume_L", 1.0);
      sp.n0 = s.value("standard_moles_mol", 1.0);
      sp.a = s.value("vdw_a_JL_per_mol2", 0.0);
      sp.b = s.value("vdw_b_L_per_mol", 0.0);
      cfg.reaction.species.push_back(std::move(sp));
    }

    if (j.contains("scan")) cfg.scan_grid = j["scan"].value("grid", cfg.scan_grid);
    if (j.contains("curvature"))
      cfg.curvature_grid = j["curvature"].value("grid", cfg.curvature_grid);
    if (j.contains("equilibrium")) cfg.tolerance = j["equilibrium"].value("tolerance", cfg.tolerance);
    if (j.contains("geodesic")) {
      const auto& g = j["geodesic"];
      cfg.stepper.rel_tol = g.value("rel_tol", cfg.stepper.rel_tol);
      cfg.stepper.abs_tol = g.value("abs_tol", cfg.stepper.abs_tol);
      cfg.stepper.initial_step = g.value("initial_step", cfg.stepper.initial_step);
      cfg.stepper.max_steps = g.value("max_steps", cfg.stepper.max_steps);
      if (g.contains("runs")) {
        for (const auto& run : g["runs"]) {
          if (!run.is_array() || run.size() < 2 || run.size() > 4)
            throw ConfigError(filename +
                              ": geodesic.runs entries must be arrays [xi0, xidot0, e1_0?, e1dot_0?]");
          GeodesicRunInit ri;
          ri.xi0 = run[0].get<double>();
          ri.xidot0 = run[1].get<double>();
          if (run.size() > 2) ri.e1_0 = run[2].get<double>();
          if (run.size() > 3) ri.e1dot_0 = run[3].get<double>();
          cfg.runs.push_back(ri);
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(filename + ": " + e.what());
  }
  validate(cfg.reaction);
  return cfg;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& filename) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return (ch == '{') ? parse_json(text, filename) : parse_ini(text, filename);
  }
  throw ConfigError(filename + ": empty configuration");
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::string csv_format(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace eqm
