#include "sqbath/runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <thread>

namespace sqbath {

namespace {

namespace fs = std::filesystem;

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

// fidelity at the sample nearest the snapshot time (final sample if unset)
double fidelity_at_snapshot(const RunConfig& cfg, const TrajectoryRecord& record) {
  if (!cfg.snapshot_time) return record.fidelity.back();
  const double target = *cfg.snapshot_time;
  std::size_t best = 0;
  for (std::size_t i = 1; i < record.times.size(); ++i)
    if (std::abs(record.times[i] - target) < std::abs(record.times[best] - target)) best = i;
  return record.fidelity[best];
}

std::string trajectory_csv_text(const TrajectoryRecord& record) {
  std::string out = "t,fidelity,trace_err,herm_err,purity\n";
  for (std::size_t i = 0; i < record.times.size(); ++i) {
    out += fmt_csv(record.times[i]);
    out += ',';
    out += fmt_csv(record.fidelity[i]);
    out += ',';
    out += fmt_csv(record.trace_err[i]);
    out += ',';
    out += fmt_csv(record.herm_err[i]);
    out += ',';
    out += fmt_csv(record.purity[i]);
    out += '\n';
  }
  return out;
}

std::string sidecar_text(const RunConfig& cfg, const TrajectoryRecord* record,
                         const std::vector<std::string>& notes) {
  std::string out = "# effective run configuration; parses back to the exact RunConfig\n";
  out += render_config(cfg);
  if (record) {
    for (const auto& [key, value] : record->metadata) out += "# " + key + ": " + value + "\n";
    double min_eig = std::numeric_limits<double>::infinity();
    for (double v : record->min_eigenvalue) min_eig = std::min(min_eig, v);
    out += "# min_eigenvalue: " + fmt_csv(min_eig) + "\n";
  }
  for (const auto& note : notes) out += "# " + note + "\n";
  return out;
}

SweepRow run_point(const RunConfig& cfg, double value) {
  SweepRow row;
  row.value = value;
  try {
    const RunConfig point = with_sweep_value(cfg, value);
    const ModelInstance model = build_model(point);
    row.record = evolve(model, integrator_from(point));
    const auto [t_star, f_max] = max_fidelity(row.record);
    row.t_star = t_star;
    row.f_max = f_max;
    row.f_at = fidelity_at_snapshot(point, row.record);
    row.ok = true;
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
    row.t_star = row.f_max = row.f_at = std::numeric_limits<double>::quiet_NaN();
  }
  return row;
}

}  // namespace

std::string fmt_csv(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

RunArtifacts run_single(const RunConfig& cfg, const std::string& out_dir,
                        const std::string& stem) {
  validate(cfg);
  if (cfg.sweep)
    throw std::invalid_argument("run_single: config has a sweep axis; use run_sweep");
  fs::create_directories(out_dir);

  const ModelInstance model = build_model(cfg);
  RunArtifacts artifacts;
  artifacts.record = evolve(model, integrator_from(cfg));
  artifacts.trajectory_csv = join(out_dir, stem + ".csv");
  artifacts.sidecar = join(out_dir, stem + ".meta");
  write_file(artifacts.trajectory_csv, trajectory_csv_text(artifacts.record));
  write_file(artifacts.sidecar, sidecar_text(cfg, &artifacts.record, {}));
  return artifacts;
}

SweepResult run_sweep(const RunConfig& cfg, const std::string& out_dir, const std::string& stem,
                      int threads) {
  validate(cfg);
  if (!cfg.sweep) throw std::invalid_argument("run_sweep: config has no sweep axis; use run_single");
  fs::create_directories(out_dir);

  const auto& axis = *cfg.sweep;
  SweepResult result;
  result.parameter = axis.parameter;
  result.rows.resize(axis.values.size());

  unsigned n_workers = threads > 0 ? static_cast<unsigned>(threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<unsigned>(n_workers, axis.values.size());

  // Each point owns its state exclusively; rows land at their input index,
  // so the emitted files do not depend on scheduling.
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= axis.values.size()) return;
      result.rows[i] = run_point(cfg, axis.values[i]);
    }
  };
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::string csv = "swept_param,value,t_star,F_max,F_at_t\n";
  std::vector<std::string> notes;
  char point_name[64];
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const SweepRow& row = result.rows[i];
    csv += axis.parameter;
    csv += ',';
    csv += fmt_csv(row.value);
    csv += ',';
    csv += fmt_csv(row.t_star);
    csv += ',';
    csv += fmt_csv(row.f_max);
    csv += ',';
    csv += fmt_csv(row.f_at);
    csv += '\n';
    std::snprintf(point_name, sizeof(point_name), "%s_point_%03zu.csv", stem.c_str(), i);
    if (row.ok) {
      const std::string path = join(out_dir, point_name);
      write_file(path, trajectory_csv_text(row.record));
      result.point_csvs.push_back(path);
    } else {
      notes.push_back("aborted point " + std::string(point_name) + " (value " +
                      fmt_csv(row.value) + "): " + row.error);
      std::fprintf(stderr, "warning: sweep point %s = %s aborted: %s\n", axis.parameter.c_str(),
                   fmt_csv(row.value).c_str(), row.error.c_str());
    }
  }

  result.sweep_csv = join(out_dir, stem + "_sweep.csv");
  result.sidecar = join(out_dir, stem + ".meta");
  write_file(result.sweep_csv, csv);
  write_file(result.sidecar, sidecar_text(cfg, nullptr, notes));
  return result;
}

OracleReport compare_oracle(const RunConfig& cfg) {
  validate(cfg);
  RunConfig point = cfg;
  point.sweep.reset();
  const ModelInstance model = build_model(point);
  const IntegratorConfig integ = integrator_from(point);

  OracleReport report;
  report.non_markovian = evolve(model, integ);
  report.markovian = evolve_lindblad(model, integ);
  for (std::size_t i = 0; i < report.non_markovian.times.size(); ++i) {
    const double df =
        std::abs(report.non_markovian.fidelity[i] - report.markovian.fidelity[i]);
    if (df > report.max_abs_df) {
      report.max_abs_df = df;
      report.t_at_max = report.non_markovian.times[i];
    }
  }
  return report;
}

}  // namespace sqbath
