#pragma once

// Flat key-value run configuration. Grammar: one `key = value` pair per
// line, `#` starts a comment, blank lines ignored. Real values accept a
// literal `pi` suffix ("0.3pi", "pi", "-0.5pi") so figure presets avoid
// decimal-pi transcription errors. The whole pipeline is seed-free and
// deterministic: identical config -> byte-identical CSV.

#include <optional>
#include <string>
#include <vector>

#include "sqbath/dynamics.hpp"

namespace sqbath {

struct SweepAxis {
  std::string parameter;        // r, theta, Gamma, gamma_inverse, omega0, T, J, N
  std::vector<double> values;   // executed in input order
  bool operator==(const SweepAxis&) const = default;
};

struct RunConfig {
  std::string model;                    // "adiabatic" | "xy_chain"
  int n_sites = 4;                      // key N, chain only
  double T = 10.0;
  double J = -1.0;                      // chain only
  std::string lindblad_kind;            // "jx" | "sigma_x" | "sigma_z"; defaulted per model
  double Gamma = 0.3;
  double gamma_inverse = 0.2;           // bath memory time, bandwidth = 1/gamma_inverse
  double omega0 = 0.0;
  double r = 0.5;
  double theta = 0.0;
  double dt = 1e-3;
  int sample_every = 10;
  std::optional<double> snapshot_time;  // F_at_t reference; unset = final sample
  std::optional<SweepAxis> sweep;

  bool operator==(const RunConfig&) const = default;
};

// "0.3pi" -> 0.3*pi; plain decimals pass through. Throws on trailing junk.
double parse_real(const std::string& text);

// Parse and validate. Unknown keys list the valid ones; range violations
// name the invariant.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Sidecar body: echoes every effective parameter with round-trip precision,
// so parse_config(render_config(cfg)) == cfg exactly.
std::string render_config(const RunConfig& cfg);

void validate(const RunConfig& cfg);

SqueezedBathSpec bath_template_from(const RunConfig& cfg);
ModelInstance build_model(const RunConfig& cfg);
IntegratorConfig integrator_from(const RunConfig& cfg);

// Copy of cfg with the sweep axis applied at `value` and the axis cleared.
RunConfig with_sweep_value(const RunConfig& cfg, double value);

}  // namespace sqbath
