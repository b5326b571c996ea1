#pragma once

// The three command-line modes. Each returns a process exit status:
// 0 pass, 1 numerical or tolerance failure, 2 usage or config error.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "zitterlab/config.hpp"
#include "zitterlab/dynamics.hpp"
#include "zitterlab/identities.hpp"
#include "zitterlab/io.hpp"

namespace zitterlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::string_view kTrajectoryHeader =
    "tau,x0,x1,x2,x3,u0,u1,u2,u3,wp0,wp1,wp2,wp3,wpp0,wpp1,wpp2,wpp3";
inline constexpr std::string_view kMonitorsHeader = "tau,H,u_sq,wp_drift";
inline constexpr std::string_view kSummaryHeader =
    "A_over_a,omega,helix,radius,frequency,varpi_sq,H_drift,u_sq_drift,wp_drift,status";
inline constexpr std::string_view kReportCsvHeader = "check,kind,max_residual,tolerance,status";

namespace detail {

inline std::filesystem::path prepare_out_dir(const RunConfig& cfg) {
  std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string padded(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace detail

inline void write_identity_report(const IdentityReport& report, std::ostream& text, std::ostream& csv) {
  text << "zitterlab identity check\n";
  text << "a = " << format_double(report.params.a) << "\n";
  text << "A = " << format_double(report.params.A) << "\n";
  text << "seed = " << report.seed << "\n";
  text << "samples = " << report.samples << "\n\n";
  text << detail::padded("check", 30) << detail::padded("kind", 10) << detail::padded("max_residual", 26)
       << detail::padded("tolerance", 12) << "status\n";
  csv << kReportCsvHeader << '\n';
  for (const auto& c : report.checks) {
    const char* kind = c.relative ? "relative" : "absolute";
    const char* status = c.passed() ? "PASS" : "FAIL";
    text << detail::padded(c.name, 30) << detail::padded(kind, 10) << detail::padded(format_double(c.worst), 26)
         << detail::padded(format_double(c.tolerance), 12) << status << '\n';
    csv << c.name << ',' << kind << ',' << format_double(c.worst) << ',' << format_double(c.tolerance) << ','
        << status << '\n';
  }
  text << "\noverall: " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

inline int run_check(const RunConfig& cfg, std::ostream& log) {
  validate(cfg, Mode::Check);
  const IdentityReport report = run_identity_suite(cfg.params, cfg.seed, cfg.sample_count);
  const auto dir = detail::prepare_out_dir(cfg);
  auto text = open_output((dir / "report.txt").string());
  auto csv = open_output((dir / "report.csv").string());
  write_identity_report(report, text, csv);
  for (const auto& c : report.checks) {
    if (!c.passed()) log << "FAIL " << c.name << ": " << format_double(c.worst) << " > " << format_double(c.tolerance) << '\n';
  }
  log << "check: " << report.checks.size() << " identities on " << report.samples << " jets, "
      << (report.passed() ? "all within tolerance" : "tolerance exceeded") << '\n';
  return report.passed() ? kExitOk : kExitFailure;
}

inline CanonicalState initial_state(const RunConfig& cfg) {
  if (cfg.helix) return helix(cfg.params, cfg.helix->omega, cfg.helix->phase).state(0.0);
  return make_initial_state(cfg.initial->u0, cfg.initial->udot0, cfg.initial->uddot0, cfg.params);
}

inline void write_trajectory_csv(const Trajectory& traj, std::ostream& os) {
  os << kTrajectoryHeader << '\n';
  for (const auto& s : traj.samples) {
    std::array<double, 17> row{s.tau};
    for (std::size_t i = 0; i < 4; ++i) {
      row[1 + i] = s.state.x[i];
      row[5 + i] = s.state.u[i];
      row[9 + i] = s.state.wp[i];
      row[13 + i] = s.state.wp1[i];
    }
    write_csv_row(os, row);
  }
}

inline void write_monitors_csv(const Trajectory& traj, std::ostream& os) {
  os << kMonitorsHeader << '\n';
  for (const auto& s : traj.samples) {
    const std::array<double, 4> row{s.tau, s.H, s.u_sq, s.wp_drift};
    write_csv_row(os, row);
  }
}

inline int run_simulate(const RunConfig& cfg, std::ostream& log) {
  validate(cfg, Mode::Simulate);
  const CanonicalState s0 = initial_state(cfg);
  const Trajectory traj = integrate_unit_gauge(s0, {cfg.tau_end, cfg.step, cfg.renormalize}, cfg.params);
  const auto dir = detail::prepare_out_dir(cfg);
  {
    auto os = open_output((dir / "trajectory.csv").string());
    write_trajectory_csv(traj, os);
  }
  {
    auto os = open_output((dir / "monitors.csv").string());
    write_monitors_csv(traj, os);
  }
  if (cfg.svg) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(traj.size());
    for (const auto& s : traj.samples) pts.emplace_back(s.state.x[1], s.state.x[2]);
    auto os = open_output((dir / "plot.svg").string());
    write_svg_polyline(os, pts, "worldline projection onto the x1-x2 plane");
  }
  double h_drift = 0.0;
  for (const auto& s : traj.samples) h_drift = std::max(h_drift, std::abs(s.H - 1.0));
  log << "simulate: " << traj.size() << " samples, max |H-1| = " << format_double(h_drift)
      << ", step-halving error estimate = " << format_double(traj.error.max()) << '\n';
  return kExitOk;
}

struct SweepRow {
  double A_over_a = 0.0;
  double omega = 0.0;
  bool has_helix = false;
  double radius = std::nan("");
  double frequency = std::nan("");
  double varpi_sq = std::nan("");
  double H_drift = std::nan("");
  double u_sq_drift = std::nan("");
  double wp_drift = std::nan("");
  std::string status = "ok";
};

/// One grid point: construct the helix, integrate it, measure drifts and the oscillation.
inline SweepRow sweep_point(const RunConfig& cfg, double A_over_a, double omega) {
  SweepRow row;
  row.A_over_a = A_over_a;
  row.omega = omega;
  const BoppParams params{cfg.params.a, cfg.params.a * A_over_a};
  try {
    const Helix hx = helix(params, omega, 0.0);
    row.has_helix = true;
    row.radius = hx.radius;
    const Trajectory traj = integrate_unit_gauge(hx.state(0.0), {cfg.tau_end, cfg.step, cfg.renormalize}, params);
    row.H_drift = row.u_sq_drift = row.wp_drift = 0.0;
    for (const auto& s : traj.samples) {
      row.H_drift = std::max(row.H_drift, std::abs(s.H - 1.0));
      row.u_sq_drift = std::max(row.u_sq_drift, std::abs(s.u_sq - 1.0));
      row.wp_drift = std::max(row.wp_drift, s.wp_drift);
    }
    const RieweFit fit = riewe_form_check(traj);
    row.frequency = fit.frequency;
    row.varpi_sq = fit.varpi_sq;
  } catch (const Error& e) {
    row.status = std::string(to_string(e.code()));
  }
  return row;
}

inline std::vector<SweepRow> run_sweep_rows(const RunConfig& cfg) {
  std::vector<std::pair<double, double>> grid;
  for (double r : cfg.sweep.A_over_a) {
    for (double w : cfg.sweep.omega) grid.emplace_back(r, w);
  }
  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, grid.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) rows[i] = sweep_point(cfg, grid[i].first, grid[i].second);
      });
    }
  }
  return rows;
}

inline void write_summary_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
  os << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    os << format_double(r.A_over_a) << ',' << format_double(r.omega) << ',' << (r.has_helix ? "yes" : "no") << ','
       << format_double(r.radius) << ',' << format_double(r.frequency) << ',' << format_double(r.varpi_sq) << ','
       << format_double(r.H_drift) << ',' << format_double(r.u_sq_drift) << ',' << format_double(r.wp_drift) << ','
       << r.status << '\n';
  }
}

inline int run_sweep(const RunConfig& cfg, std::ostream& log) {
  validate(cfg, Mode::Sweep);
  const auto rows = run_sweep_rows(cfg);
  const auto dir = detail::prepare_out_dir(cfg);
  auto os = open_output((dir / "summary.csv").string());
  write_summary_csv(rows, os);
  const auto helices = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.has_helix; });
  log << "sweep: " << rows.size() << " grid points, " << helices << " with a helix\n";
  return kExitOk;
}

/// Dispatch with the exit-code contract applied to every failure.
inline int run_mode(Mode mode, const RunConfig& cfg, std::ostream& log) {
  try {
    switch (mode) {
      case Mode::Check: return run_check(cfg, log);
      case Mode::Simulate: return run_simulate(cfg, log);
      case Mode::Sweep: return run_sweep(cfg, log);
    }
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace zitterlab
