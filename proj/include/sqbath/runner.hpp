#pragma once

// Execution front end behind the CLI: single trajectories, parameter sweeps
// (optionally parallel across points, output buffered in input order) and
// the Markovian-oracle comparison. CSV values are written with 15
// significant digits; each run leaves a metadata sidecar that parses back
// to the exact effective RunConfig.

#include <string>
#include <vector>

#include "sqbath/config.hpp"

namespace sqbath {

struct RunArtifacts {
  std::string trajectory_csv;
  std::string sidecar;
  TrajectoryRecord record;
};

// Writes <stem>.csv (header t,fidelity,trace_err,herm_err,purity) and
// <stem>.meta under out_dir. Requires no sweep axis.
RunArtifacts run_single(const RunConfig& cfg, const std::string& out_dir,
                        const std::string& stem);

struct SweepRow {
  double value = 0.0;
  bool ok = false;
  std::string error;  // abort diagnostic for flagged rows
  double t_star = 0.0;
  double f_max = 0.0;
  double f_at = 0.0;
  TrajectoryRecord record;
};

struct SweepResult {
  std::string parameter;
  std::vector<SweepRow> rows;      // one per sweep value, input order
  std::string sweep_csv;           // swept_param,value,t_star,F_max,F_at_t
  std::vector<std::string> point_csvs;
  std::string sidecar;
};

// Requires a sweep axis. Points run concurrently on up to `threads` workers
// (0 = hardware concurrency); serial and parallel runs produce identical
// files. A point that aborts becomes a nan-flagged row, the sweep continues.
SweepResult run_sweep(const RunConfig& cfg, const std::string& out_dir,
                      const std::string& stem, int threads = 0);

struct OracleReport {
  double max_abs_df = 0.0;  // max over sampled t of |F_evolve - F_lindblad|
  double t_at_max = 0.0;
  TrajectoryRecord non_markovian;
  TrajectoryRecord markovian;
};

OracleReport compare_oracle(const RunConfig& cfg);

// 15-significant-digit CSV number formatting.
std::string fmt_csv(double v);

struct Preset {
  std::string name;
  std::string description;
  std::string text;
};

// Built-in figure presets: fig1a fig1b fig2 fig3a fig3b fig3c fig4.
const std::vector<Preset>& builtin_presets();
const Preset* find_preset(const std::string& name);

}  // namespace sqbath
