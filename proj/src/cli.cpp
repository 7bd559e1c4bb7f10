#include "euler3d/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "euler3d/config.hpp"
#include "euler3d/diagnostics.hpp"
#include "euler3d/errors.hpp"
#include "euler3d/initial_conditions.hpp"
#include "euler3d/persistence.hpp"
#include "euler3d/solver.hpp"
#include "euler3d/spectral.hpp"
#include "euler3d/vortex_geometry.hpp"

namespace euler3d {

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
  std::string config_file;
  std::vector<std::string> overrides;
  std::string output_dir;
};

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("-c,--config", o.config_file, "key = value config file");
  app->add_option("-s,--set", o.overrides, "override one key (key=value)");
  app->add_option("-o,--output-dir", o.output_dir, "output directory (overrides output_dir)");
}

RunConfig gather(const CommonOptions& o, RunConfig base = {}) {
  RunConfig cfg = o.config_file.empty() ? std::move(base) : load_config_file(o.config_file, std::move(base));
  apply_overrides(cfg, o.overrides);
  if (!o.output_dir.empty()) set_config_value(cfg, "output_dir", o.output_dir);
  resolve_config(cfg);
  return cfg;
}

std::array<int, 3> parse_triple(const std::string& text, const char* what) {
  std::string s = text;
  for (char& c : s)
    if (c == ',' || c == 'x') c = ' ';
  std::istringstream is(s);
  std::array<int, 3> v{};
  std::string extra;
  if (!(is >> v[0] >> v[1] >> v[2]) || (is >> extra))
    throw ConfigError(std::string("expected three integers for ") + what + ", got '" + text + "'");
  return v;
}

/// Records every file a command writes and the resolved config.
class Manifest {
 public:
  Manifest(std::string command, fs::path dir, const RunConfig& cfg)
      : command_(std::move(command)), dir_(std::move(dir)), config_(config_text(cfg)) {}

  const fs::path& add(const fs::path& p) {
    files_.push_back(p);
    return files_.back();
  }
  void note(const std::string& line) { notes_.push_back(line); }

  void write() const {
    const fs::path path = dir_ / ("manifest_" + command_ + ".txt");
    std::ofstream os(path);
    if (!os) throw IoError("cannot write manifest " + path.string());
    os << "# command " << command_ << "\n# outputs\n";
    for (const auto& f : files_) {
      const std::string rel = fs::relative(f, dir_).generic_string();
      os << rel << '\n';
      // checkpoints carry a header sidecar
      if (f.extension() == ".ckpt") os << rel << ".json\n";
    }
    for (const auto& n : notes_) os << "# " << n << '\n';
    os << "# config\n" << config_;
  }

 private:
  std::string command_;
  fs::path dir_;
  std::string config_;
  std::vector<fs::path> files_;
  std::vector<std::string> notes_;
};

void ensure_dir(const fs::path& p) {
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw IoError("cannot create directory " + p.string() + ": " + ec.message());
}

std::string time_tag(double t) { return "t" + format_double(t); }

struct InitialData {
  Checkpoint checkpoint;
  std::optional<FinalizedVorticity> kerr;
};

InitialData initial_data(const RunConfig& cfg) {
  const GridSpec g = cfg.grid();
  InitialData d;
  d.checkpoint.state.config = cfg.solver;
  d.checkpoint.initial_condition = std::string(to_string(cfg.ic));
  if (cfg.ic == InitialKind::kerr) {
    d.kerr = kerr_initial_vorticity(g, cfg.kerr);
    d.checkpoint.state.omega_hat = d.kerr->omega_hat;
    d.checkpoint.kerr = cfg.kerr;
  } else {
    const AnalyticFlow kind =
        cfg.ic == InitialKind::beltrami ? AnalyticFlow::beltrami_abc : AnalyticFlow::taylor_green;
    SpectralField w = forward_transform(analytic_test_fields(kind, g, cfg.amplitudes).vorticity);
    zero_nyquist_modes(w);
    d.checkpoint.state.omega_hat = std::move(w);
  }
  return d;
}

void report_kerr(const FinalizedVorticity& f, std::ostream& out) {
  out << "rescale_factor = " << format_double(f.rescale_factor) << '\n'
      << "pre_rescale_peak = " << format_double(f.pre_rescale_peak) << '\n'
      << "grid_pre_rescale_peak = " << format_double(f.grid_pre_rescale_peak) << '\n'
      << "max_vorticity = " << format_double(f.max_vorticity) << '\n';
}

void rewrite_with_differences(const fs::path& diag) {
  if (!fs::exists(diag)) return;
  auto records = read_diagnostics(diag);
  if (records.size() < 3) return;
  for (std::size_t i = 1; i < records.size(); ++i)
    if (!(records[i].t > records[i - 1].t)) return;
  fill_production_differences(records);
  const fs::path tmp = diag.string() + ".tmp";
  fs::remove(tmp);
  for (const auto& r : records) append_diagnostics_row(r, tmp);
  fs::rename(tmp, diag);
}

/// Steps a state to cfg.solver.t_end writing diagnostics, spectra and
/// checkpoints at every sample time.
SimulationState drive(Checkpoint ck, const RunConfig& cfg, Manifest& manifest, bool fresh, std::ostream& out) {
  const fs::path dir = cfg.output_dir;
  const fs::path diag = dir / "diagnostics.csv";
  if (fresh) fs::remove(diag);
  manifest.add(diag);
  if (cfg.spectra) ensure_dir(dir / "spectra");
  if (cfg.checkpoints) ensure_dir(dir / "checkpoints");

  RunHooks hooks;
  hooks.sample_at_start = fresh;
  hooks.on_sample = [&](const SimulationState& s) {
    const DiagnosticsRecord r = compute_record(s.omega_hat, s.t);
    append_diagnostics_row(r, diag);
    if (cfg.spectra)
      write_spectrum(spectrum_row(s.omega_hat, s.t),
                     manifest.add(dir / "spectra" / ("spectrum_" + time_tag(s.t) + ".csv")));
    if (cfg.checkpoints) {
      Checkpoint c = ck;
      c.state = s;
      save_checkpoint(c, manifest.add(dir / "checkpoints" / ("ckpt_" + time_tag(s.t) + ".ckpt")));
    }
    out << "t = " << format_double(s.t) << "  steps = " << s.step_count
        << "  max_vorticity = " << format_double(r.max_vorticity) << '\n';
  };
  hooks.on_abort = [&](const SimulationState& s) {
    Checkpoint c = ck;
    c.state = s;
    save_checkpoint(c, manifest.add(dir / "abort.ckpt"));
  };

  SimulationState start = std::move(ck.state);
  start.config = cfg.solver;
  SimulationState final_state;
  try {
    final_state = run_simulation(std::move(start), hooks);
  } catch (...) {
    manifest.write();
    throw;
  }
  rewrite_with_differences(diag);
  ck.state = final_state;
  save_checkpoint(ck, manifest.add(dir / "final.ckpt"));
  return final_state;
}

int cmd_ic(const CommonOptions& o, std::ostream& out) {
  const RunConfig cfg = gather(o);
  const fs::path dir = cfg.output_dir;
  ensure_dir(dir);
  Manifest manifest("ic", dir, cfg);
  const InitialData d = initial_data(cfg);
  save_checkpoint(d.checkpoint, manifest.add(dir / "ic.ckpt"));
  if (d.kerr) {
    report_kerr(*d.kerr, out);
    if (core_under_resolved(cfg.grid(), cfg.kerr)) {
      out << "warning: the vortex core spans fewer than 4 nodes on some axis\n";
      manifest.note("core under-resolved");
    }
    export_plane_slice(d.kerr->omega, PlaneSpec{}, manifest.add(dir / "ic_slice_y0.txt"));
  } else {
    out << "max_vorticity = "
        << format_double(max_magnitude(inverse_transform(d.checkpoint.state.omega_hat))) << '\n';
  }
  manifest.write();
  return kExitOk;
}

int cmd_run(const CommonOptions& o, std::ostream& out) {
  const RunConfig cfg = gather(o);
  const fs::path dir = cfg.output_dir;
  ensure_dir(dir);
  out << "# config\n" << config_text(cfg);
  Manifest manifest("run", dir, cfg);
  InitialData d = initial_data(cfg);
  if (d.kerr) report_kerr(*d.kerr, out);
  const SimulationState s = drive(std::move(d.checkpoint), cfg, manifest, true, out);
  out << "finished t = " << format_double(s.t) << " after " << s.step_count << " steps\n";
  manifest.write();
  return kExitOk;
}

/// Config seeded from a checkpoint; explicit grid keys must agree with it.
RunConfig config_for_checkpoint(const CommonOptions& o, const Checkpoint& ck) {
  RunConfig base;
  const GridSpec& g = ck.state.omega_hat.grid();
  base.ic = parse_initial_kind(ck.initial_condition);
  base.n = g.n;
  base.length = g.length;
  base.solver = ck.state.config;
  if (ck.kerr) base.kerr = *ck.kerr;
  base.explicit_keys = {"lx", "ly", "lz", "dt_max"};
  RunConfig cfg = gather(o, base);
  if (cfg.n != g.n) throw ConfigError("config grid conflicts with the checkpoint grid");
  for (int a = 0; a < 3; ++a)
    if (std::abs(cfg.length[a] - g.length[a]) > 1e-12 * g.length[a])
      throw ConfigError("config box conflicts with the checkpoint box");
  return cfg;
}

int cmd_resume(const CommonOptions& o, const std::string& path, std::ostream& out) {
  Checkpoint ck = load_checkpoint(path);
  const RunConfig cfg = config_for_checkpoint(o, ck);
  const fs::path dir = cfg.output_dir;
  ensure_dir(dir);
  out << "# config\n" << config_text(cfg);
  out << "resuming from t = " << format_double(ck.state.t) << '\n';
  Manifest manifest("resume", dir, cfg);
  manifest.note("resumed from " + path);
  const SimulationState s = drive(std::move(ck), cfg, manifest, false, out);
  out << "finished t = " << format_double(s.t) << " after " << s.step_count << " steps\n";
  manifest.write();
  return kExitOk;
}

int cmd_upsample(const CommonOptions& o, const std::string& path, const std::string& grid_text,
                 const std::string& out_path, std::ostream& out) {
  Checkpoint ck = load_checkpoint(path);
  const std::array<int, 3> n = parse_triple(grid_text, "--grid");
  GridSpec target = ck.state.omega_hat.grid();
  target.n = n;
  RunConfig cfg = config_for_checkpoint(o, ck);
  cfg.n = n;
  const fs::path dir = cfg.output_dir;
  ensure_dir(dir);
  Manifest manifest("upsample", dir, cfg);
  ck.state = upsample_spectral(ck.state, target);
  const fs::path dest = out_path.empty() ? dir / "upsampled.ckpt" : fs::path(out_path);
  save_checkpoint(ck, manifest.add(dest));
  out << "upsampled " << path << " to " << n[0] << "x" << n[1] << "x" << n[2] << " -> " << dest.string() << '\n';
  manifest.write();
  return kExitOk;
}

std::vector<Checkpoint> load_sorted(const std::vector<std::string>& paths) {
  std::vector<Checkpoint> cks;
  for (const auto& p : paths) cks.push_back(load_checkpoint(p));
  std::sort(cks.begin(), cks.end(), [](const Checkpoint& a, const Checkpoint& b) { return a.state.t < b.state.t; });
  return cks;
}

void write_fit(std::ostream& os, const FitReport& f) {
  os << "[" << to_string(f.model) << "]\n"
     << "points = " << f.points << '\n'
     << "slope = " << format_double(f.slope) << '\n'
     << "intercept = " << format_double(f.intercept) << '\n'
     << "r_squared = " << format_double(f.r_squared) << '\n'
     << "prescale = " << format_double(f.prescale) << '\n';
  if (f.root) os << "root = " << format_double(*f.root) << '\n';
  if (!f.scaling_series.empty()) {
    os << "scaling_series =";
    for (double c : f.scaling_series) os << ' ' << format_double(c);
    os << '\n';
  }
}

GrowthModel parse_model(const std::string& s) {
  for (GrowthModel m : {GrowthModel::exponential, GrowthModel::double_exponential, GrowthModel::inverse_linear,
                        GrowthModel::power_constant})
    if (to_string(m) == s) return m;
  throw ConfigError("unknown growth model '" + s + "'");
}

int cmd_analyze(const CommonOptions& o, const std::vector<std::string>& ckpts, const std::string& diag_in,
                std::vector<std::string> models, std::optional<double> blowup, std::ostream& out) {
  if (ckpts.empty() == diag_in.empty()) throw ConfigError("analyze needs either --checkpoint or --diagnostics");
  RunConfig cfg;
  std::vector<DiagnosticsRecord> records;
  std::vector<Checkpoint> cks;
  if (!ckpts.empty()) {
    cks = load_sorted(ckpts);
    cfg = config_for_checkpoint(o, cks.front());
  } else {
    cfg = gather(o);
    records = read_diagnostics(diag_in);
  }
  const fs::path dir = cfg.output_dir;
  ensure_dir(dir);
  Manifest manifest("analyze", dir, cfg);
  if (!cks.empty()) {
    ensure_dir(dir / "spectra");
    for (const auto& ck : cks) {
      if (!ck.state.omega_hat.grid().same_shape(cks.front().state.omega_hat.grid()))
        throw ConfigError("checkpoints in one analysis must share a grid");
      records.push_back(compute_record(ck.state.omega_hat, ck.state.t));
      write_spectrum(spectrum_row(ck.state.omega_hat, ck.state.t),
                     manifest.add(dir / "spectra" / ("analysis_" + time_tag(ck.state.t) + ".csv")));
    }
    if (records.size() >= 3) fill_production_differences(records);
    const fs::path table = dir / "analysis.csv";
    fs::remove(table);
    for (const auto& r : records) append_diagnostics_row(r, table);
    manifest.add(table);
  }

  if (models.empty()) {
    models = {"exponential", "double_exponential", "inverse_linear"};
    if (blowup) models.push_back("power_constant");
  }
  std::vector<double> t, w;
  for (const auto& r : records) {
    t.push_back(r.t);
    w.push_back(r.max_vorticity);
  }
  std::ostringstream fits;
  if (records.size() >= 3) {
    for (const auto& name : models) {
      const GrowthModel m = parse_model(name);
      try {
        write_fit(fits, fit_growth(t, w, m, blowup));
      } catch (const std::invalid_argument& e) {
        fits << "[" << name << "]\nerror = " << e.what() << '\n';
      } catch (const std::domain_error& e) {
        fits << "[" << name << "]\nerror = " << e.what() << '\n';
      }
    }
  } else {
    fits << "# fewer than three records; no fits\n";
  }
  const fs::path fit_path = dir / "fits.txt";
  {
    std::ofstream os(fit_path);
    if (!os) throw IoError("cannot write " + fit_path.string());
    os << fits.str();
  }
  manifest.add(fit_path);
  out << fits.str();
  manifest.write();
  return kExitOk;
}

struct TraceArgs {
  std::vector<std::string> checkpoints;
  double ds = 0.0;
  int max_steps = 4000;
  double fraction = 0.6;
  std::optional<double> blowup;
  double alpha = 0.0;
  double beta = 0.5;
  double c0 = 0.1;
};

int cmd_trace(const CommonOptions& o, const TraceArgs& a, std::ostream& out) {
  if (a.checkpoints.empty()) throw ConfigError("trace needs at least one --checkpoint");
  const auto cks = load_sorted(a.checkpoints);
  const RunConfig cfg = config_for_checkpoint(o, cks.front());
  const fs::path dir = cfg.output_dir;
  ensure_dir(dir / "lines");
  Manifest manifest("trace", dir, cfg);
  std::vector<LineHistorySample> history;
  const fs::path table = dir / "geometry.csv";
  std::ofstream gt(manifest.add(table));
  if (!gt) throw IoError("cannot write " + table.string());
  gt << "t,max_velocity,length,kappa_max,div_xi_max,points,excluded\n";
  for (const auto& ck : cks) {
    const GridSpec& g = ck.state.omega_hat.grid();
    const double ds =
        a.ds > 0 ? a.ds : 0.5 * std::min({g.spacing(Axis::x), g.spacing(Axis::y), g.spacing(Axis::z)});
    const RealField omega = inverse_transform(ck.state.omega_hat);
    const RealField u = inverse_transform(velocity_from_vorticity(ck.state.omega_hat));
    const VortexLine line = max_vorticity_segment(omega, ds, a.max_steps, a.fraction);
    write_vortex_line(line, manifest.add(dir / "lines" / ("line_" + time_tag(ck.state.t) + ".csv")));
    LineHistorySample h;
    h.t = ck.state.t;
    h.length = line.arclength();
    for (const Vec3& p : line.points) {
      const Vec3 v = sample_vector(u, p);
      h.max_velocity = std::max(h.max_velocity, std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]));
    }
    std::size_t excluded = 0;
    if (line.points.size() >= 3) {
      const LineGeometry geo = line_geometry(line, omega);
      h.kappa_max = geo.kappa_max();
      h.div_xi_max = geo.div_xi_max();
      excluded = geo.excluded_points;
    }
    gt << format_double(h.t) << ',' << format_double(h.max_velocity) << ',' << format_double(h.length) << ','
       << format_double(h.kappa_max) << ',' << format_double(h.div_xi_max) << ',' << line.points.size() << ','
       << excluded << '\n';
    out << "t = " << format_double(h.t) << "  length = " << format_double(h.length)
        << "  kappa_max = " << format_double(h.kappa_max) << "  div_xi_max = " << format_double(h.div_xi_max)
        << '\n';
    history.push_back(h);
  }
  gt.close();
  if (a.blowup) {
    if (history.size() < 3) throw ConfigError("a report needs at least three checkpoints");
    const GeometryReport r = dhy_report(history, *a.blowup, a.alpha, a.beta, a.c0);
    write_geometry_report(r, manifest.add(dir / "dhy_report.txt"));
    out << "conditions_met = " << (r.conditions_met ? "true" : "false") << '\n';
  }
  manifest.write();
  return kExitOk;
}

struct CompareArgs {
  std::string reference_grid;
  std::string reference_spectrum;
  double floor = 1e-10;
};

int cmd_compare(const CommonOptions& o, const CompareArgs& a, std::ostream& out) {
  const RunConfig cfg = gather(o);
  const fs::path dir = cfg.output_dir;
  ensure_dir(dir);
  Manifest manifest("compare-filters", dir, cfg);
  out << "# config\n" << config_text(cfg);

  auto final_spectrum = [&](RunConfig c) {
    const InitialData d = initial_data(c);
    SimulationState s = d.checkpoint.state;
    s.config = c.solver;
    s.config.cadence = 0.0;
    return spectrum_row(run_simulation(std::move(s)).omega_hat, c.solver.t_end);
  };

  RunConfig smooth = cfg;
  smooth.solver.filter.kind = FilterKind::smoothing;
  RunConfig trunc = cfg;
  trunc.solver.filter.kind = FilterKind::two_thirds;
  const SpectrumRow s_row = final_spectrum(smooth);
  write_spectrum(s_row, manifest.add(dir / "spectrum_smoothing.csv"));
  const SpectrumRow t_row = final_spectrum(trunc);
  write_spectrum(t_row, manifest.add(dir / "spectrum_two_thirds.csv"));

  std::optional<SpectrumRow> ref;
  if (!a.reference_spectrum.empty()) {
    ref = read_spectrum(a.reference_spectrum);
  } else if (!a.reference_grid.empty()) {
    RunConfig fine = smooth;
    fine.n = parse_triple(a.reference_grid, "--reference-grid");
    fine.grid().validate();
    ref = final_spectrum(fine);
    write_spectrum(*ref, manifest.add(dir / "spectrum_reference.csv"));
  }

  const std::vector<int> cutoffs = two_thirds_cutoff_shells(cfg.grid());
  const auto spike_s = find_cutoff_spike(s_row.enstrophy, cutoffs);
  const auto spike_t = find_cutoff_spike(t_row.enstrophy, cutoffs);
  std::string cutoff_list;
  for (int c : cutoffs) cutoff_list += (cutoff_list.empty() ? "" : ",") + std::to_string(c);
  std::ostringstream rep;
  rep << "t_end = " << format_double(cfg.solver.t_end) << '\n'
      << "cutoff_shells = " << cutoff_list << '\n'
      << "smoothing_spike = " << (spike_s ? std::to_string(*spike_s) : "none") << '\n'
      << "two_thirds_spike = " << (spike_t ? std::to_string(*spike_t) : "none") << '\n';
  if (ref) {
    // both candidates on the same shells: the truncated run has fewer
    const std::size_t common = std::min(s_row.enstrophy.shells.size(), t_row.enstrophy.shells.size());
    const SpectrumDistance ds = log_spectrum_distance(s_row.enstrophy, ref->enstrophy, a.floor, common);
    const SpectrumDistance dt = log_spectrum_distance(t_row.enstrophy, ref->enstrophy, a.floor, common);
    rep << "shells_compared = " << std::min(ds.shells, dt.shells) << '\n'
        << "smoothing_distance = " << format_double(ds.distance) << '\n'
        << "two_thirds_distance = " << format_double(dt.distance) << '\n'
        << "smoothing_closer = " << (ds.distance < dt.distance ? "true" : "false") << '\n';
  }
  const fs::path rp = dir / "comparison.txt";
  {
    std::ofstream os(rp);
    if (!os) throw IoError("cannot write " + rp.string());
    os << rep.str();
  }
  manifest.add(rp);
  out << rep.str();
  manifest.write();
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-spectral 3D Euler solver for antiparallel vortex tubes"};
  app.require_subcommand(1);
  CommonOptions common;

  auto* ic = app.add_subcommand("ic", "write the finalized initial condition");
  add_common(ic, common);

  auto* run = app.add_subcommand("run", "generate the initial condition and integrate to t_end");
  add_common(run, common);

  std::string ckpt_path;
  auto* resume = app.add_subcommand("resume", "continue a run from a checkpoint");
  add_common(resume, common);
  resume->add_option("--checkpoint", ckpt_path, "checkpoint file")->required();

  std::string grid_text, out_path;
  auto* upsample = app.add_subcommand("upsample", "zero-pad a checkpoint onto a finer grid");
  add_common(upsample, common);
  upsample->add_option("--checkpoint", ckpt_path, "checkpoint file")->required();
  upsample->add_option("--grid", grid_text, "target grid nx,ny,nz")->required();
  upsample->add_option("--out", out_path, "output checkpoint path");

  std::vector<std::string> ckpts, models;
  std::string diag_in;
  std::optional<double> blowup;
  auto* analyze = app.add_subcommand("analyze", "records, spectra and growth fits");
  add_common(analyze, common);
  analyze->add_option("--checkpoint", ckpts, "checkpoint files");
  analyze->add_option("--diagnostics", diag_in, "existing diagnostics table");
  analyze->add_option("--fit", models, "growth models to fit");
  analyze->add_option("--blowup-time", blowup, "assumed blowup time T");

  TraceArgs ta;
  auto* trace = app.add_subcommand("trace", "vortex lines through the vorticity maximum");
  add_common(trace, common);
  trace->add_option("--checkpoint", ta.checkpoints, "checkpoint files")->required();
  trace->add_option("--ds", ta.ds, "integration step (default half the finest spacing)");
  trace->add_option("--max-steps", ta.max_steps, "steps per direction");
  trace->add_option("--fraction", ta.fraction, "stop where |omega| drops below this fraction of the max");
  trace->add_option("--blowup-time", ta.blowup, "T for the line-condition report");
  trace->add_option("--alpha", ta.alpha, "velocity exponent");
  trace->add_option("--beta", ta.beta, "length exponent");
  trace->add_option("--c0", ta.c0, "length bound constant");

  CompareArgs ca;
  auto* compare = app.add_subcommand("compare-filters", "same run under smoothing and two-thirds truncation");
  add_common(compare, common);
  compare->add_option("--reference-grid", ca.reference_grid, "also run a smoothing reference on this grid");
  compare->add_option("--reference-spectrum", ca.reference_spectrum, "reference spectrum file");
  compare->add_option("--floor", ca.floor, "relative floor for resolved reference shells");

  std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (ic->parsed()) return cmd_ic(common, out);
    if (run->parsed()) return cmd_run(common, out);
    if (resume->parsed()) return cmd_resume(common, ckpt_path, out);
    if (upsample->parsed()) return cmd_upsample(common, ckpt_path, grid_text, out_path, out);
    if (analyze->parsed()) return cmd_analyze(common, ckpts, diag_in, models, blowup, out);
    if (trace->parsed()) return cmd_trace(common, ta, out);
    if (compare->parsed()) return cmd_compare(common, ca, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << " (last good t = " << format_double(e.last_good_time()) << ")\n";
    return kExitNumerical;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace euler3d
