#include "sqbath/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sqbath {

namespace {

const char* kValidKeys =
    "model, N, T, J, lindblad_kind, Gamma, gamma_inverse, omega0, r, theta, dt, "
    "sample_every, snapshot_time, sweep_param, sweep_values";

const std::set<std::string> kSweepable = {"r",      "theta", "Gamma", "gamma_inverse",
                                          "omega0", "T",     "J",     "N"};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_plain_real(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("not a number: '" + text + "'");
  return value;
}

int parse_integer(const std::string& text, const char* key) {
  const double v = parse_real(text);
  const double rounded = std::round(v);
  if (std::abs(v - rounded) > 1e-9)
    throw std::invalid_argument(std::string(key) + " must be an integer, got '" + text + "'");
  return static_cast<int>(rounded);
}

std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> values;
  std::string token;
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ',') c = ' ';
  std::istringstream stream(normalized);
  while (stream >> token) values.push_back(parse_real(token));
  return values;
}

// shortest decimal form that round-trips the exact double
std::string fmt_roundtrip(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

double parse_real(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw std::invalid_argument("empty numeric value");
  if (text.size() >= 2 && text.compare(text.size() - 2, 2, "pi") == 0) {
    const std::string head = trim(text.substr(0, text.size() - 2));
    if (head.empty() || head == "+") return std::numbers::pi;
    if (head == "-") return -std::numbers::pi;
    return parse_plain_real(head) * std::numbers::pi;
  }
  return parse_plain_real(text);
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::string sweep_param;
  std::vector<double> sweep_values;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "config line " << line_no << ": expected 'key = value', got '" << line << "'";
      throw std::invalid_argument(msg.str());
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty())
      throw std::invalid_argument("config key '" + key + "' has an empty value");
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate config key '" + key + "'");

    {
      if (key == "model")
        cfg.model = value;
      else if (key == "N")
        cfg.n_sites = parse_integer(value, "N");
      else if (key == "T")
        cfg.T = parse_real(value);
      else if (key == "J")
        cfg.J = parse_real(value);
      else if (key == "lindblad_kind")
        cfg.lindblad_kind = value;
      else if (key == "Gamma")
        cfg.Gamma = parse_real(value);
      else if (key == "gamma_inverse")
        cfg.gamma_inverse = parse_real(value);
      else if (key == "omega0")
        cfg.omega0 = parse_real(value);
      else if (key == "r")
        cfg.r = parse_real(value);
      else if (key == "theta")
        cfg.theta = parse_real(value);
      else if (key == "dt")
        cfg.dt = parse_real(value);
      else if (key == "sample_every")
        cfg.sample_every = parse_integer(value, "sample_every");
      else if (key == "snapshot_time")
        cfg.snapshot_time = parse_real(value);
      else if (key == "sweep_param")
        sweep_param = value;
      else if (key == "sweep_values")
        sweep_values = parse_value_list(value);
      else {
        std::ostringstream msg;
        msg << "unknown config key '" << key << "'; valid keys: " << kValidKeys;
        throw std::invalid_argument(msg.str());
      }
    }
  }

  if (!sweep_param.empty() || !sweep_values.empty()) {
    if (sweep_param.empty())
      throw std::invalid_argument("sweep_values given without sweep_param");
    if (sweep_values.empty())
      throw std::invalid_argument("sweep_param given without sweep_values");
    cfg.sweep = SweepAxis{sweep_param, sweep_values};
  }

  if (cfg.lindblad_kind.empty())
    cfg.lindblad_kind = cfg.model == "xy_chain" ? "sigma_z" : "jx";

  validate(cfg);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate(const RunConfig& cfg) {
  if (cfg.model.empty())
    throw std::invalid_argument("missing required key 'model' (adiabatic | xy_chain)");
  if (cfg.model != "adiabatic" && cfg.model != "xy_chain")
    throw std::invalid_argument("model must be 'adiabatic' or 'xy_chain', got '" + cfg.model + "'");
  if (!(cfg.T > 0.0)) throw std::invalid_argument("T must be > 0");
  if (!(cfg.Gamma >= 0.0)) throw std::invalid_argument("Gamma must satisfy Gamma >= 0");
  if (!(cfg.gamma_inverse > 0.0))
    throw std::invalid_argument("gamma_inverse must be > 0 (bandwidth gamma = 1/gamma_inverse)");
  if (!(cfg.r >= 0.0 && cfg.r <= 1.0))
    throw std::invalid_argument("r out of range: r must lie in [0, 1]");
  if (!(cfg.dt > 0.0 && cfg.dt <= 0.01 + 1e-15))
    throw std::invalid_argument("dt must lie in (0, 0.01]");
  if (cfg.sample_every < 1) throw std::invalid_argument("sample_every must be >= 1");
  if (cfg.snapshot_time && !(*cfg.snapshot_time >= 0.0 && *cfg.snapshot_time <= cfg.T))
    throw std::invalid_argument("snapshot_time must lie in [0, T]");

  const bool chain = cfg.model == "xy_chain";
  if (chain) {
    if (cfg.n_sites < 2 || cfg.n_sites > 8)
      throw std::invalid_argument("N must lie in [2, 8]");
    if (cfg.lindblad_kind != "sigma_x" && cfg.lindblad_kind != "sigma_z")
      throw std::invalid_argument(
          "lindblad_kind for xy_chain must be 'sigma_x' or 'sigma_z', got '" +
          cfg.lindblad_kind + "'");
  } else {
    if (cfg.lindblad_kind != "jx")
      throw std::invalid_argument("lindblad_kind for adiabatic must be 'jx', got '" +
                                  cfg.lindblad_kind + "'");
  }

  if (cfg.sweep) {
    const auto& axis = *cfg.sweep;
    if (!kSweepable.count(axis.parameter))
      throw std::invalid_argument("sweep_param '" + axis.parameter +
                                  "' is not sweepable; choose one of: r, theta, Gamma, "
                                  "gamma_inverse, omega0, T, J, N");
    if (axis.values.empty()) throw std::invalid_argument("sweep_values must be nonempty");
    if ((axis.parameter == "N" || axis.parameter == "J") && !chain)
      throw std::invalid_argument("sweep_param '" + axis.parameter + "' requires model = xy_chain");
    for (double v : axis.values) validate(with_sweep_value(cfg, v));
  }
}

std::string render_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "model = " << cfg.model << "\n";
  out << "N = " << cfg.n_sites << "\n";
  out << "T = " << fmt_roundtrip(cfg.T) << "\n";
  out << "J = " << fmt_roundtrip(cfg.J) << "\n";
  out << "lindblad_kind = " << cfg.lindblad_kind << "\n";
  out << "Gamma = " << fmt_roundtrip(cfg.Gamma) << "\n";
  out << "gamma_inverse = " << fmt_roundtrip(cfg.gamma_inverse) << "\n";
  out << "omega0 = " << fmt_roundtrip(cfg.omega0) << "\n";
  out << "r = " << fmt_roundtrip(cfg.r) << "\n";
  out << "theta = " << fmt_roundtrip(cfg.theta) << "\n";
  out << "dt = " << fmt_roundtrip(cfg.dt) << "\n";
  out << "sample_every = " << cfg.sample_every << "\n";
  if (cfg.snapshot_time) out << "snapshot_time = " << fmt_roundtrip(*cfg.snapshot_time) << "\n";
  if (cfg.sweep) {
    out << "sweep_param = " << cfg.sweep->parameter << "\n";
    out << "sweep_values =";
    for (double v : cfg.sweep->values) out << " " << fmt_roundtrip(v);
    out << "\n";
  }
  return out.str();
}

SqueezedBathSpec bath_template_from(const RunConfig& cfg) {
  SqueezedBathSpec spec;
  spec.coupling_strength = cfg.Gamma;
  spec.bandwidth = 1.0 / cfg.gamma_inverse;
  spec.center_frequency = cfg.omega0;
  spec.squeeze_strength = cfg.r;
  double theta = std::fmod(cfg.theta, 2.0 * std::numbers::pi);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  spec.squeeze_direction = theta;
  return spec;  // lindblad is filled by the model builder
}

ModelInstance build_model(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.model == "adiabatic") return build_adiabatic_model(cfg.T, bath_template_from(cfg));
  const SiteCoupling coupling =
      cfg.lindblad_kind == "sigma_x" ? SiteCoupling::SigmaX : SiteCoupling::SigmaZ;
  return build_xy_chain_model(cfg.n_sites, cfg.J, cfg.T, bath_template_from(cfg), coupling);
}

IntegratorConfig integrator_from(const RunConfig& cfg) {
  IntegratorConfig out;
  out.dt = cfg.dt;
  out.sample_every = cfg.sample_every;
  return out;
}

RunConfig with_sweep_value(const RunConfig& cfg, double value) {
  if (!cfg.sweep) throw std::invalid_argument("with_sweep_value: no sweep axis set");
  RunConfig point = cfg;
  point.sweep.reset();
  const std::string& p = cfg.sweep->parameter;
  if (p == "r")
    point.r = value;
  else if (p == "theta")
    point.theta = value;
  else if (p == "Gamma")
    point.Gamma = value;
  else if (p == "gamma_inverse")
    point.gamma_inverse = value;
  else if (p == "omega0")
    point.omega0 = value;
  else if (p == "T")
    point.T = value;
  else if (p == "J")
    point.J = value;
  else if (p == "N") {
    const double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-9)
      throw std::invalid_argument("sweep over N requires integral values");
    point.n_sites = static_cast<int>(rounded);
  } else
    throw std::invalid_argument("unsupported sweep parameter '" + p + "'");
  return point;
}

}  // namespace sqbath
