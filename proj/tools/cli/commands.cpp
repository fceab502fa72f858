#include "cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <CLI11.hpp>

#include "cli/io.hpp"
#include "fracdyn/analysis.hpp"
#include "fracdyn/kernel.hpp"
#include "fracdyn/lyapunov.hpp"
#include "fracdyn/maps.hpp"
#include "fracdyn/simulator.hpp"
#include "fracdyn/zero_one.hpp"

namespace fracdyn::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct SimFlags {
  std::string map = "gompertz";
  double r = 1.0;
  double p = kCanonicalGompertzPower;
  double q = 0.8;
  double x0 = 0.3;
  std::size_t steps = 1000;
  double threshold = kDefaultDivergenceThreshold;
};

struct ControlFlags {
  std::string mode = "none";
  double gamma = 0.0;
  std::size_t delta = 1;
  std::size_t n_star = kDefaultActivationStep;
};

struct AnalysisFlags {
  double transient_cut = kDefaultTransientCut;
  std::size_t tail_points = kDefaultTailPoints;
  double nspo_tolerance = kDefaultNspoTolerance;
  std::size_t max_period = kDefaultMaxPeriod;
  std::string estimator = "correlation";
  std::size_t c_count = kDefaultCCount;
};

struct OutputFlags {
  std::string output;
  std::string manifest;
};

// Exact default text for manifests.
CLI::Option* add_real(CLI::App* cmd, const std::string& name, double& value,
                      const std::string& help) {
  return cmd->add_option(name, value, help)->default_str(format_real(value));
}

void add_sim_flags(CLI::App* cmd, SimFlags& f) {
  cmd->add_option("--map", f.map, "Map family")->check(CLI::IsMember({"gompertz", "logistic"}));
  add_real(cmd, "--r", f.r, "Bifurcation parameter r");
  add_real(cmd, "--p", f.p, "Power exponent p (gompertz only)");
  add_real(cmd, "--q", f.q, "Fractional order q in (0, 1]");
  add_real(cmd, "--x0", f.x0, "Initial condition");
  cmd->add_option("--steps", f.steps, "Number of steps N");
  add_real(cmd, "--divergence-threshold", f.threshold, "Divergence magnitude threshold");
}

void add_control_flags(CLI::App* cmd, ControlFlags& f) {
  cmd->add_option("--control", f.mode, "Impulse mode")
      ->check(CLI::IsMember({"none", "mult", "add"}));
  add_real(cmd, "--gamma", f.gamma, "Impulse strength gamma");
  cmd->add_option("--delta", f.delta, "Impulse stride delta");
  cmd->add_option("--n-star", f.n_star, "Activation step n*");
}

void add_analysis_flags(CLI::App* cmd, AnalysisFlags& f) {
  add_real(cmd, "--transient-cut", f.transient_cut, "Fraction of steps discarded as transient");
  cmd->add_option("--tail-points", f.tail_points, "Tail samples kept for NSPO detection");
  add_real(cmd, "--nspo-tol", f.nspo_tolerance, "NSPO closing-error tolerance");
  cmd->add_option("--max-period", f.max_period, "Largest NSPO period searched");
  cmd->add_option("--estimator", f.estimator, "0-1 test growth-rate estimator")
      ->check(CLI::IsMember({"correlation", "regression"}));
  cmd->add_option("--c-count", f.c_count, "Number of 0-1 test frequencies");
}

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
  cmd->add_option("--output,-o", f.output, "Data file (default: standard output)");
  cmd->add_option("--manifest", f.manifest,
                  "Manifest file (default: <output>.manifest when --output is given)");
}

SimConfig to_config(const SimFlags& f) {
  const auto family = parse_family(f.map);
  const MapSpec map = *family == MapFamily::GompertzLike ? MapSpec::gompertz(f.r, f.p)
                                                         : MapSpec::logistic(f.r);
  SimConfig config{map, FractionalOrder(f.q), f.x0, f.steps, f.threshold};
  config.validate();
  return config;
}

ControlSchedule to_control(const ControlFlags& f) {
  ControlSchedule control{*parse_mode(f.mode), f.gamma, f.delta, f.n_star};
  control.validate();
  return control;
}

GrowthEstimator to_estimator(const std::string& name) {
  return name == "regression" ? GrowthEstimator::LogLogRegression : GrowthEstimator::Correlation;
}

AnalysisOptions to_analysis(const AnalysisFlags& f) {
  AnalysisOptions options;
  options.transient_cut = f.transient_cut;
  options.tail_points = f.tail_points;
  options.nspo_tolerance = f.nspo_tolerance;
  options.max_period = f.max_period;
  options.test01.estimator = to_estimator(f.estimator);
  options.test01.c_count = f.c_count;
  return options;
}

/// Data destination: a file when a path is given, otherwise `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw InputError(path, 0, "cannot open output file");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const { return !path_.empty(); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::ofstream open_file(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw InputError(path, 0, "cannot open output file");
  return file;
}

std::vector<std::pair<std::string, std::string>> resolved_parameters(const CLI::App& cmd) {
  std::vector<std::pair<std::string, std::string>> params;
  for (const CLI::Option* opt : cmd.get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string name = opt->get_lnames().front();
    if (name == "help" || name == "output" || name == "manifest") continue;
    std::string value;
    if (opt->count() > 0) {
      for (const auto& r : opt->results()) value += (value.empty() ? "" : ";") + r;
    } else {
      value = opt->get_default_str();
    }
    params.emplace_back(name, value);
  }
  return params;
}

/// Writes the manifest next to file outputs, or where --manifest points.
void emit_manifest(const CLI::App& cmd, const OutputFlags& out_flags,
                   std::vector<std::string> inputs, std::vector<std::string> outputs,
                   Clock::time_point started) {
  std::string path = out_flags.manifest;
  if (path.empty() && !out_flags.output.empty()) path = out_flags.output + ".manifest";
  if (path.empty()) return;
  RunManifest manifest;
  manifest.subcommand = cmd.get_name();
  manifest.parameters = resolved_parameters(cmd);
  manifest.inputs = std::move(inputs);
  manifest.outputs = std::move(outputs);
  manifest.wall_clock = Clock::now() - started;
  manifest.write_file(path);
}

void write_series_csv(std::ostream& os, const Trajectory& traj,
                      const std::vector<char>* nspo_marks = nullptr) {
  std::set<std::size_t> fired(traj.control_events.begin(), traj.control_events.end());
  os << "step,x,impulse_fired" << (nspo_marks ? ",nspo_element" : "") << '\n';
  for (std::size_t n = 0; n < traj.samples.size(); ++n) {
    os << n << ',' << format_real(traj.samples[n]) << ',' << (fired.count(n) ? 1 : 0);
    if (nspo_marks) os << ',' << static_cast<int>((*nspo_marks)[n]);
    os << '\n';
  }
}

void write_pq_csv(const std::string& path, const TranslationPath& path_pq) {
  auto file = open_file(path);
  file << "n,p,q\n";
  for (std::size_t i = 0; i < path_pq.p.size(); ++i) {
    file << i + 1 << ',' << format_real(path_pq.p[i]) << ',' << format_real(path_pq.q[i]) << '\n';
  }
}

void write_m_csv(const std::string& path, const std::vector<double>& M) {
  auto file = open_file(path);
  file << "n,M\n";
  for (std::size_t i = 0; i < M.size(); ++i) file << i + 1 << ',' << format_real(M[i]) << '\n';
}

void report_divergence(std::ostream& err, const Trajectory& traj) {
  err << "diverged at step " << traj.divergence->step << ": "
      << reason_name(traj.divergence->reason) << '\n';
}

std::vector<std::string> file_outputs(std::initializer_list<std::string> paths) {
  std::vector<std::string> outputs;
  for (const auto& p : paths) {
    if (!p.empty()) outputs.push_back(p);
  }
  return outputs;
}

// --- subcommands -----------------------------------------------------------

int cmd_simulate(const CLI::App& cmd, const SimFlags& sim, const ControlFlags& ctl,
                 const OutputFlags& io, std::ostream& out, std::ostream& err) {
  const auto started = Clock::now();
  const SimConfig config = to_config(sim);
  const ControlSchedule control = to_control(ctl);
  const KernelTable kernel(config.q, config.steps);
  const Trajectory traj = simulate(config, kernel, control);

  Sink sink(io.output, out);
  write_series_csv(sink.stream(), traj);
  emit_manifest(cmd, io, {}, file_outputs({io.output}), started);
  if (!traj.completed()) {
    report_divergence(err, traj);
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_lyapunov(const CLI::App& cmd, const SimFlags& sim, const ControlFlags& ctl,
                 const std::string& indexing, std::size_t from_step, const OutputFlags& io,
                 std::ostream& out, std::ostream& err) {
  const auto started = Clock::now();
  const SimConfig config = to_config(sim);
  const ControlSchedule control = to_control(ctl);
  const KernelTable kernel(config.q, config.steps);
  const Trajectory traj = simulate(config, kernel, control);
  if (!traj.completed()) {
    report_divergence(err, traj);
    return kExitDomain;
  }

  LyapunovOptions options;
  options.indexing = indexing == "current" ? DerivativeIndexing::Current : DerivativeIndexing::Previous;
  options.from_step = from_step;
  options.control = control;
  TangentState state;
  try {
    state = lyapunov_exponent(traj, config, kernel, options);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  Sink sink(io.output, out);
  auto& os = sink.stream();
  os << "n,a,lambda_running\n";
  for (std::size_t n = 0; n < state.a.size(); ++n) {
    os << n << ',' << format_real(state.a[n]) << ',' << format_real(running_lambda(state.a, n)) << '\n';
  }
  std::ostream& summary = sink.to_file() ? out : err;
  summary << "lambda=" << format_real(state.lambda) << '\n'
          << "reported_n=" << state.reported_n << '\n'
          << "from_step=" << state.from_step << '\n'
          << "truncated=" << (state.truncated ? 1 : 0) << '\n'
          << "clamped_evaluations=" << state.clamped_evaluations << '\n';
  emit_manifest(cmd, io, {}, file_outputs({io.output}), started);
  return kExitOk;
}

struct ZeroOneFlags {
  std::string input;
  std::optional<std::string> column;
  std::optional<double> transient;
  std::size_t c_count = kDefaultCCount;
  std::optional<std::size_t> n_cut;
  std::string estimator = "correlation";
  std::string pq_out;
  std::string m_out;
};

int cmd_zero_one(const CLI::App& cmd, const ZeroOneFlags& z, const SimFlags& sim,
                 const ControlFlags& ctl, const OutputFlags& io, std::ostream& out,
                 std::ostream& err) {
  const auto started = Clock::now();
  std::vector<double> series;
  if (!z.input.empty()) {
    series = read_series_file(z.input, z.column);
  } else {
    const SimConfig config = to_config(sim);
    const KernelTable kernel(config.q, config.steps);
    Trajectory traj = simulate(config, kernel, to_control(ctl));
    if (!traj.completed()) {
      report_divergence(err, traj);
      return kExitDomain;
    }
    series = std::move(traj.samples);
  }

  const double transient = z.transient.value_or(z.input.empty() ? 0.2 : 0.0);
  if (!(transient >= 0.0 && transient < 1.0)) {
    throw std::invalid_argument("--transient must lie in [0, 1)");
  }
  const auto drop = static_cast<std::size_t>(transient * static_cast<double>(series.size()));
  std::span<const double> window(series);
  window = window.subspan(drop);

  Test01Config config;
  config.c_count = z.c_count;
  config.n_cut = z.n_cut;
  config.estimator = to_estimator(z.estimator);
  const Test01Result result = run_test01(window, config);

  out << "K=" << format_real(result.K) << '\n';
  if (!z.pq_out.empty()) write_pq_csv(z.pq_out, result.pq_path);
  if (!z.m_out.empty()) write_m_csv(z.m_out, result.M_curve);

  OutputFlags manifest_flags = io;
  if (manifest_flags.manifest.empty() && !z.pq_out.empty()) manifest_flags.manifest = z.pq_out + ".manifest";
  if (manifest_flags.manifest.empty() && !z.m_out.empty()) manifest_flags.manifest = z.m_out + ".manifest";
  emit_manifest(cmd, manifest_flags, file_outputs({z.input}), file_outputs({z.pq_out, z.m_out}),
                started);
  return kExitOk;
}

int cmd_bifurcate(const CLI::App& cmd, const std::string& axis, double lo, double hi,
                  std::size_t grid, const SimFlags& sim, const ControlFlags& ctl,
                  const AnalysisFlags& an, const OutputFlags& io, std::ostream& out) {
  const auto started = Clock::now();
  ControlFlags control = ctl;
  if (axis == "gamma" && !cmd.get_option("--control")->count()) control.mode = "mult";
  SweepSpec spec{*parse_axis(axis), lo, hi, grid, to_config(sim), to_control(control), to_analysis(an)};
  const auto rows = run_sweep(spec);

  Sink sink(io.output, out);
  auto& os = sink.stream();
  os << "param,tail_index,x,le,K,diverged,nspo_period\n";
  for (const auto& row : rows) {
    const std::string param = format_real(row.param_value);
    if (row.diverged) {
      os << param << ",,,,,1,\n";
      continue;
    }
    const std::string le = row.le ? format_real(*row.le) : "";
    const std::string K = row.K ? format_real(*row.K) : "";
    for (std::size_t i = 0; i < row.tail.size(); ++i) {
      os << param << ',' << i << ',' << format_real(row.tail[i]) << ',' << le << ',' << K << ",0,"
         << row.nspo.period << '\n';
    }
  }
  emit_manifest(cmd, io, {}, file_outputs({io.output}), started);
  return kExitOk;
}

int cmd_control(const CLI::App& cmd, const SimFlags& sim, const ControlFlags& ctl,
                const AnalysisFlags& an, bool require_nspo, const std::string& pq_out,
                const std::string& m_out, const OutputFlags& io, std::ostream& out,
                std::ostream& err) {
  const auto started = Clock::now();
  const SimConfig config = to_config(sim);
  const ControlSchedule control = to_control(ctl);
  const KernelTable kernel(config.q, config.steps);
  const RunAnalysis run = analyze_run(config, kernel, control, to_analysis(an));

  Sink sink(io.output, out);
  std::vector<char> marks(run.trajectory.samples.size(), 0);
  if (run.nspo.found) {
    const std::size_t tail = std::min(an.tail_points, marks.size());
    std::fill(marks.end() - static_cast<std::ptrdiff_t>(tail), marks.end(), 1);
  }
  write_series_csv(sink.stream(), run.trajectory, &marks);

  std::ostream& summary = sink.to_file() ? out : err;
  if (!run.trajectory.completed()) {
    report_divergence(err, run.trajectory);
    emit_manifest(cmd, io, {}, file_outputs({io.output}), started);
    return kExitDomain;
  }
  summary << "nspo_found=" << (run.nspo.found ? 1 : 0) << '\n'
          << "nspo_period=" << run.nspo.period << '\n'
          << "nspo_elements=" << run.nspo.element_count << '\n'
          << "closing_error=" << format_real(run.nspo.closing_error) << '\n';
  if (run.nspo.found) {
    summary << "nspo_values=";
    for (std::size_t i = 0; i < run.nspo.elements.size(); ++i) {
      summary << (i ? ";" : "") << format_real(run.nspo.elements[i]);
    }
    summary << '\n';
  }
  summary << "K=" << (run.test01 ? format_real(run.test01->K) : "") << '\n'
          << "lambda=" << (run.tangent ? format_real(run.tangent->lambda) : "") << '\n'
          << "window_start=" << run.window_start << '\n'
          << "impulses=" << run.trajectory.control_events.size() << '\n';
  if (!run.note.empty()) summary << "note=" << run.note << '\n';

  if (run.test01) {
    if (!pq_out.empty()) write_pq_csv(pq_out, run.test01->pq_path);
    if (!m_out.empty()) write_m_csv(m_out, run.test01->M_curve);
  }
  emit_manifest(cmd, io, {}, file_outputs({io.output, pq_out, m_out}), started);
  return (require_nspo && !run.nspo.found) ? kExitDomain : kExitOk;
}

int cmd_validate_kernel(const CLI::App& cmd, const std::vector<double>& orders, std::size_t n,
                        const OutputFlags& io, std::ostream& out) {
  const auto started = Clock::now();
  Sink sink(io.output, out);
  auto& os = sink.stream();
  bool ok = true;
  for (double q : orders) {
    const KernelTable table(FractionalOrder(q), n);
    const auto report = check_partial_sum_bound(table);
    ok = ok && report.ok();
    os << "q=" << format_real(q) << " n=" << report.checked << " violations=" << report.violations
       << " worst_margin=" << format_real(report.worst_margin) << " worst_n=" << report.worst_n
       << " monotone=" << (report.monotone ? 1 : 0) << " status=" << (report.ok() ? "ok" : "FAIL")
       << '\n';
  }
  emit_manifest(cmd, io, {}, file_outputs({io.output}), started);
  return ok ? kExitOk : kExitDomain;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional-order discrete map toolkit: simulation, impulsive control, "
               "Lyapunov exponents, 0-1 test and bifurcation sweeps",
               "fracdyn"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  // simulate
  SimFlags sim_s;
  ControlFlags ctl_s;
  OutputFlags io_s;
  auto* simulate_cmd = app.add_subcommand("simulate", "Integrate the FO map; CSV step,x,impulse_fired");
  add_sim_flags(simulate_cmd, sim_s);
  add_control_flags(simulate_cmd, ctl_s);
  add_output_flags(simulate_cmd, io_s);

  // lyapunov
  SimFlags sim_l;
  ControlFlags ctl_l;
  OutputFlags io_l;
  std::string indexing = "previous";
  std::size_t from_step = 0;
  auto* lyapunov_cmd = app.add_subcommand("lyapunov", "Finite-time LE; CSV n,a,lambda_running");
  add_sim_flags(lyapunov_cmd, sim_l);
  add_control_flags(lyapunov_cmd, ctl_l);
  lyapunov_cmd->add_option("--indexing", indexing, "Derivative argument x(j-1) or x(j)")
      ->check(CLI::IsMember({"previous", "current"}));
  lyapunov_cmd->add_option("--from-step", from_step, "Start of the averaging window");
  add_output_flags(lyapunov_cmd, io_l);

  // zero-one
  ZeroOneFlags zf;
  SimFlags sim_z;
  ControlFlags ctl_z;
  OutputFlags io_z;
  auto* zero_one_cmd = app.add_subcommand(
      "zero-one", "0-1 test for chaos on a CSV series or an inline simulation; prints K");
  zero_one_cmd->add_option("--input,-i", zf.input, "CSV series (one value per line or a named column)");
  zero_one_cmd->add_option("--column", zf.column, "Column name when the CSV has a header");
  zero_one_cmd->add_option("--transient", zf.transient,
                           "Leading fraction dropped (default 0 for --input, 0.2 inline)");
  zero_one_cmd->add_option("--c-count", zf.c_count, "Number of frequencies in [pi/5, 4pi/5]");
  zero_one_cmd->add_option("--n-cut", zf.n_cut, "Largest displacement lag (default N/10)");
  zero_one_cmd->add_option("--estimator", zf.estimator, "Growth-rate estimator")
      ->check(CLI::IsMember({"correlation", "regression"}));
  zero_one_cmd->add_option("--pq-out", zf.pq_out, "CSV n,p,q for the diagnostic frequency");
  zero_one_cmd->add_option("--m-out", zf.m_out, "CSV n,M for the diagnostic frequency");
  add_sim_flags(zero_one_cmd, sim_z);
  add_control_flags(zero_one_cmd, ctl_z);
  zero_one_cmd->add_option("--manifest", io_z.manifest, "Manifest file");

  // bifurcate
  SimFlags sim_b;
  ControlFlags ctl_b;
  AnalysisFlags an_b;
  OutputFlags io_b;
  std::string axis;
  double lo = 0.0, hi = 0.0;
  std::size_t grid = 0;
  auto* bifurcate_cmd = app.add_subcommand(
      "bifurcate", "Parameter sweep; CSV param,tail_index,x,le,K,diverged,nspo_period");
  bifurcate_cmd->add_option("--axis", axis, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"r", "p", "q", "gamma"}));
  add_real(bifurcate_cmd, "--lo", lo, "Lower end of the range")->required();
  add_real(bifurcate_cmd, "--hi", hi, "Upper end of the range")->required();
  bifurcate_cmd->add_option("--grid", grid, "Number of grid points (>= 2)")->required();
  add_sim_flags(bifurcate_cmd, sim_b);
  add_control_flags(bifurcate_cmd, ctl_b);
  bifurcate_cmd->get_option("--control")->description("Impulse mode (mult when sweeping gamma)");
  add_analysis_flags(bifurcate_cmd, an_b);
  add_output_flags(bifurcate_cmd, io_b);

  // control
  SimFlags sim_c;
  ControlFlags ctl_c;
  ctl_c.mode = "mult";
  AnalysisFlags an_c;
  OutputFlags io_c;
  bool require_nspo = false;
  std::string pq_out_c, m_out_c;
  auto* control_cmd = app.add_subcommand(
      "control", "Single controlled run: time series with impulse markers and NSPO summary");
  add_sim_flags(control_cmd, sim_c);
  add_control_flags(control_cmd, ctl_c);
  add_analysis_flags(control_cmd, an_c);
  control_cmd->add_flag("--require-nspo", require_nspo, "Exit 2 when no NSPO is found");
  control_cmd->add_option("--pq-out", pq_out_c, "CSV n,p,q for the diagnostic frequency");
  control_cmd->add_option("--m-out", m_out_c, "CSV n,M for the diagnostic frequency");
  add_output_flags(control_cmd, io_c);

  // validate-kernel
  std::vector<double> orders{0.1, 0.25, 0.5, 0.8, 1.0};
  std::size_t kernel_n = 100000;
  OutputFlags io_v;
  auto* validate_cmd = app.add_subcommand(
      "validate-kernel", "Check |sum of kernel weights - n^q/q| <= 1/q for all n <= N");
  validate_cmd->add_option("--q", orders, "Fractional orders to check")->delimiter(',');
  validate_cmd->add_option("--n", kernel_n, "Largest n checked");
  add_output_flags(validate_cmd, io_v);

  std::vector<const char*> argv;
  argv.push_back("fracdyn");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate_cmd) return cmd_simulate(*simulate_cmd, sim_s, ctl_s, io_s, out, err);
    if (*lyapunov_cmd)
      return cmd_lyapunov(*lyapunov_cmd, sim_l, ctl_l, indexing, from_step, io_l, out, err);
    if (*zero_one_cmd) return cmd_zero_one(*zero_one_cmd, zf, sim_z, ctl_z, io_z, out, err);
    if (*bifurcate_cmd)
      return cmd_bifurcate(*bifurcate_cmd, axis, lo, hi, grid, sim_b, ctl_b, an_b, io_b, out);
    if (*control_cmd)
      return cmd_control(*control_cmd, sim_c, ctl_c, an_c, require_nspo, pq_out_c, m_out_c, io_c,
                         out, err);
    if (*validate_cmd) return cmd_validate_kernel(*validate_cmd, orders, kernel_n, io_v, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fracdyn::cli
