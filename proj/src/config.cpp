#include "coyote/config.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace coyote {

namespace {

using nlohmann::json;

std::vector<double> require_array(const json& j, const std::string& key, size_t len,
                                  const std::string& len_desc) {
  if (!j.contains(key)) throw std::invalid_argument("config: missing field '" + key + "'");
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw std::invalid_argument("config: '" + key + "' must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw std::invalid_argument("config: '" + key + "' must be numeric");
    out.push_back(v.get<double>());
  }
  if (out.size() != len) {
    throw std::invalid_argument("config: '" + key + "' must have length " + len_desc + " (" +
                                std::to_string(len) + "), got " + std::to_string(out.size()));
  }
  return out;
}

} // namespace

void validate(const ChainConfig& config) {
  const int n = config.size();
  if (n < 2) throw std::invalid_argument("chain requires at least two masses");
  if (config.spring_constants_dyn_per_cm.size() != static_cast<size_t>(n - 1))
    throw std::invalid_argument("config: expected n-1 spring constants");
  if (config.spring_masses_g.size() != static_cast<size_t>(n - 1))
    throw std::invalid_argument("config: expected n-1 spring masses");
  if (config.natural_lengths_cm && config.natural_lengths_cm->size() != static_cast<size_t>(n - 1))
    throw std::invalid_argument("config: expected n-1 natural lengths");
  if (!(config.g_cm_s2 > 0.0)) throw std::invalid_argument("config: g must be positive");
  for (int i = 0; i < n - 1; ++i) {
    const double k = config.spring_constants_dyn_per_cm[static_cast<size_t>(i)];
    if (!(k > 0.0))
      throw std::invalid_argument("config: spring constant k" + std::to_string(i + 1) +
                                  " must be positive, got " + std::to_string(k));
    if (config.spring_masses_g[static_cast<size_t>(i)] < 0.0)
      throw std::invalid_argument("config: spring masses must be non-negative");
    if (config.natural_lengths_cm && !((*config.natural_lengths_cm)[static_cast<size_t>(i)] > 0.0))
      throw std::invalid_argument("config: natural lengths must be positive");
  }
  for (int j = 0; j < n; ++j) {
    if (config.bare_masses_g[static_cast<size_t>(j)] < 0.0)
      throw std::invalid_argument("config: bare masses must be non-negative");
  }
  effective_masses(config); // throws if any lumped mass is <= 0
}

ChainConfig load_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: JSON parse failure: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be a JSON object");

  static const char* known[] = {"n",
                                "bare_masses_g",
                                "spring_constants_dyn_per_cm",
                                "spring_masses_g",
                                "lumping_policy",
                                "g_cm_s2",
                                "natural_lengths_cm"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok)
      throw std::invalid_argument("config: unknown key '" + key +
                                  "' (units are fixed to cgs; no conversion is attempted)");
  }

  if (!j.contains("n")) throw std::invalid_argument("config: missing field 'n'");
  if (!j.at("n").is_number_integer()) throw std::invalid_argument("config: 'n' must be an integer");
  const int n = j.at("n").get<int>();
  if (n < 2) throw std::invalid_argument("chain requires at least two masses");

  ChainConfig config;
  config.bare_masses_g = require_array(j, "bare_masses_g", static_cast<size_t>(n), "n");
  config.spring_constants_dyn_per_cm =
      require_array(j, "spring_constants_dyn_per_cm", static_cast<size_t>(n - 1), "n-1");
  config.spring_masses_g = require_array(j, "spring_masses_g", static_cast<size_t>(n - 1), "n-1");
  if (j.contains("lumping_policy")) {
    const std::string policy = j.at("lumping_policy").get<std::string>();
    if (policy == "add-above")
      config.lumping = LumpingPolicy::AddAbove;
    else if (policy == "none")
      config.lumping = LumpingPolicy::None;
    else
      throw std::invalid_argument("config: unknown lumping_policy '" + policy + "'");
  }
  if (j.contains("g_cm_s2")) config.g_cm_s2 = j.at("g_cm_s2").get<double>();
  if (j.contains("natural_lengths_cm"))
    config.natural_lengths_cm =
        require_array(j, "natural_lengths_cm", static_cast<size_t>(n - 1), "n-1");

  validate(config);
  return config;
}

ChainConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_config(ss.str());
}

std::string config_to_json(const ChainConfig& config) {
  nlohmann::ordered_json j;
  j["n"] = config.size();
  j["bare_masses_g"] = config.bare_masses_g;
  j["spring_constants_dyn_per_cm"] = config.spring_constants_dyn_per_cm;
  j["spring_masses_g"] = config.spring_masses_g;
  j["lumping_policy"] = config.lumping == LumpingPolicy::AddAbove ? "add-above" : "none";
  j["g_cm_s2"] = config.g_cm_s2;
  if (config.natural_lengths_cm) j["natural_lengths_cm"] = *config.natural_lengths_cm;
  return j.dump(2);
}

std::vector<double> effective_masses(const ChainConfig& config) {
  const int n = config.size();
  std::vector<double> masses = config.bare_masses_g;
  if (config.lumping == LumpingPolicy::AddAbove) {
    for (int i = 0; i < n - 1; ++i)
      masses[static_cast<size_t>(i)] += config.spring_masses_g[static_cast<size_t>(i)];
  }
  for (int j = 0; j < n; ++j) {
    if (!(masses[static_cast<size_t>(j)] > 0.0))
      throw std::invalid_argument("config: effective mass m" + std::to_string(j + 1) +
                                  " must be positive after lumping");
  }
  return masses;
}

NondimSystem nondimensionalize(const ChainConfig& config) {
  const std::vector<double> m = effective_masses(config);
  const auto& k = config.spring_constants_dyn_per_cm;
  const int n = config.size();

  NondimSystem sys;
  sys.alphas.reserve(static_cast<size_t>(n - 1));
  sys.betas.reserve(static_cast<size_t>(n > 2 ? n - 2 : 0));
  for (int j = 2; j <= n; ++j) {
    sys.alphas.push_back(m[0] / m[static_cast<size_t>(j - 1)] *
                         (k[static_cast<size_t>(j - 2)] / k[0]));
    if (j <= n - 1)
      sys.betas.push_back(m[0] / m[static_cast<size_t>(j - 1)] *
                          (k[static_cast<size_t>(j - 1)] / k[0]));
  }
  sys.time_scale_s = std::sqrt(m[0] / k[0]);
  const double total = std::accumulate(m.begin(), m.end(), 0.0);
  sys.length_scale_cm = sys.time_scale_s * sys.time_scale_s * total * config.g_cm_s2 / m[0];
  return sys;
}

} // namespace coyote
