#include "alexsnn/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "alexsnn/experiment_io.hpp"
#include "alexsnn/train_csv.hpp"

namespace alexsnn::cli {

namespace {

LeakRate to_alpha(const std::string& text) {
  if (auto a = parse_alpha(text)) return *a;
  double v;
  if (parse_double(text, v)) throw UsageError("alpha must be non-negative");
  throw UsageError("alpha: expected a number or 'inf', got '" + text + "'");
}

double to_threshold(const std::string& text) {
  double v;
  if (!parse_double(text, v)) throw UsageError("threshold: not a number: '" + text + "'");
  if (v <= 0.0) throw UsageError("threshold must be positive");
  return v;
}

ResetMode to_mode(const std::string& text) {
  if (auto m = parse_reset_mode(text)) return *m;
  throw UsageError("mode must be one of zero, subtract, mod; got '" + text + "'");
}

struct LifFlags {
  std::string threshold;
  std::string alpha;
  std::string mode;
  std::string train;

  void attach(CLI::App* sub) {
    sub->add_option("--threshold", threshold, "firing threshold (> 0)")->required();
    sub->add_option("--alpha", alpha, "leak rate (>= 0 or inf)")->required();
    sub->add_option("--mode", mode, "reset mode: zero | subtract | mod")->required();
    sub->add_option("train", train, "input spike-train CSV")->required();
  }
  LifConfig config() const {
    return LifConfig(to_threshold(threshold), to_alpha(alpha), to_mode(mode));
  }
};

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Leaky integrate-and-fire spike-train quantization toolkit", "alexsnn"};
  app.require_subcommand(1);

  std::string alpha;
  std::string norm_train;
  auto* norm = app.add_subcommand("norm", "leaky Alexiewicz norm of a spike train");
  norm->add_option("--alpha", alpha, "leak rate (>= 0 or inf)")->required();
  norm->add_option("train", norm_train, "spike-train CSV")->required();

  LifFlags lif_flags;
  std::string trace_times;
  std::string trace_out = "trace.csv";
  auto* lif = app.add_subcommand("lif", "apply the LIF operator and print the output train");
  lif_flags.attach(lif);
  lif->add_option("--trace", trace_times, "CSV of sample times (header 'time')");
  lif->add_option("--trace-out", trace_out, "membrane-trace output CSV")->capture_default_str();

  LifFlags quant_flags;
  auto* quant = app.add_subcommand("quant-error", "norm of LIF(train) - train");
  quant_flags.attach(quant);

  std::string config_path;
  std::string out_dir = ".";
  std::string svg_dir;
  std::string threads = "0";
  auto* experiment = app.add_subcommand("experiment", "Monte-Carlo quantization-error study");
  experiment->add_option("--config", config_path, "experiment config JSON")->required();
  experiment->add_option("--out", out_dir, "directory for results.csv and stats.csv")->capture_default_str();
  experiment->add_option("--svg", svg_dir, "directory for boxplot SVG files");
  experiment->add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();

  std::string runs = "10000";
  std::string max_spikes = "1000";
  std::string mode = "mod";
  std::string half_range = "1.5";
  std::string seed = "0";
  std::string replay;
  auto* selftest = app.add_subcommand("selftest", "fuzz the quantization bound and the oracle");
  selftest->add_option("--runs", runs, "number of random trains")->capture_default_str();
  selftest->add_option("--max-spikes", max_spikes, "largest train length")->capture_default_str();
  selftest->add_option("--mode", mode, "reset mode checked against the bound")->capture_default_str();
  selftest->add_option("--half-range", half_range, "amplitude half range in thresholds")->capture_default_str();
  selftest->add_option("--seed", seed, "master seed")->capture_default_str();
  selftest->add_option("--replay", replay, "re-run the single train with this seed");
  selftest->add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    return HelpCommand{subs.empty() ? app.help() : subs.front()->help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  auto to_count = [](const std::string& text, const char* name, bool allow_zero) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 10);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw UsageError(std::string(name) + ": expected a non-negative integer, got '" + text +
                       "'");
    }
    if (!allow_zero && v == 0) throw UsageError(std::string(name) + " must be at least 1");
    return v;
  };

  if (*norm) return NormCommand{to_alpha(alpha), norm_train};
  if (*lif) {
    LifCommand cmd{lif_flags.config(), lif_flags.train, std::nullopt, trace_out};
    if (!trace_times.empty()) cmd.trace_times = trace_times;
    return cmd;
  }
  if (*quant) return QuantErrorCommand{quant_flags.config(), quant_flags.train};
  if (*experiment) {
    ExperimentCommand cmd;
    cmd.config_path = config_path;
    try {
      cmd.config = read_experiment_config(config_path);
    } catch (const FormatError& e) {
      throw UsageError(e.what());
    }
    cmd.out_dir = out_dir;
    if (!svg_dir.empty()) cmd.svg_dir = svg_dir;
    cmd.threads = static_cast<unsigned>(to_count(threads, "threads", true));
    return cmd;
  }

  SelftestCommand cmd;
  cmd.options.trains = to_count(runs, "runs", false);
  cmd.options.max_spikes = to_count(max_spikes, "max-spikes", false);
  cmd.options.mode = to_mode(mode);
  double h;
  if (!parse_double(half_range, h) || h <= 0.0) throw UsageError("half-range must be positive");
  cmd.options.half_range = h;
  cmd.options.seed = to_count(seed, "seed", true);
  if (!replay.empty()) {
    std::uint64_t v = 0;
    const bool hex = replay.starts_with("0x");
    const char* first = replay.data() + (hex ? 2 : 0);
    auto [ptr, ec] = std::from_chars(first, replay.data() + replay.size(), v, hex ? 16 : 10);
    if (ec != std::errc{} || ptr != replay.data() + replay.size()) {
      throw UsageError("replay: expected a seed, got '" + replay + "'");
    }
    cmd.options.replay = v;
  }
  cmd.options.threads = static_cast<unsigned>(to_count(threads, "threads", true));
  return cmd;
}

namespace {

std::string hex_seed(std::uint64_t seed) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(seed));
  return buf;
}

int run_selftest(const FuzzOptions& options, std::ostream& out) {
  const FuzzReport r = run_theorem_fuzz(options);
  out << "trains: " << r.trains << ", evaluations: " << r.evaluations
      << ", output spikes: " << r.output_spikes << '\n';
  out << "bound (reset-" << to_string(options.mode) << ", error < threshold): "
      << r.evaluations - r.bound_violations << " pass, " << r.bound_violations << " fail"
      << " (max error/threshold " << format_double(r.max_error_ratio) << ")\n";
  out << "oracle equivalence (reset-mod vs cascaded subtraction): "
      << r.evaluations - r.oracle_mismatches << " pass, " << r.oracle_mismatches << " fail\n";
  out << "threshold multiples (reset-mod): " << r.output_spikes - r.multiple_violations
      << " pass, " << r.multiple_violations << " fail\n";
  if (r.violations() == 0) {
    out << "OK: 0 violations\n";
    return kExitOk;
  }
  out << "FAIL: " << r.violations() << " violations; first failing train seed "
      << hex_seed(*r.first_failing_seed) << " (replay with --replay "
      << hex_seed(*r.first_failing_seed) << ")\n";
  return kExitViolation;
}

struct Runner {
  std::ostream& out;
  std::ostream& err;

  int operator()(const NormCommand& c) const {
    out << format_double(alexiewicz_norm(read_train_csv(c.train), c.alpha)) << '\n';
    return kExitOk;
  }
  int operator()(const LifCommand& c) const {
    const SpikeTrain train = read_train_csv(c.train);
    std::vector<double> times;
    if (c.trace_times) times = read_times_csv(*c.trace_times);
    write_train_csv(lif_transform(train, c.config), out);
    if (c.trace_times) {
      std::ofstream trace(c.trace_out, std::ios::binary);
      if (!trace) throw FormatError("cannot write " + c.trace_out.string());
      trace << "time,potential\n";
      for (const auto& [t, u] : membrane_trace(train, c.config, times)) {
        trace << format_double(t) << ',' << format_double(u) << '\n';
      }
    }
    return kExitOk;
  }
  int operator()(const QuantErrorCommand& c) const {
    out << format_double(quantization_error(read_train_csv(c.train), c.config)) << '\n';
    return kExitOk;
  }
  int operator()(const ExperimentCommand& c) const {
    const auto records = run_trials(c.config, c.threads);
    write_experiment_outputs(c.config, records, c.out_dir, c.svg_dir);
    out << "wrote " << records.size() << " trials to " << (c.out_dir / "results.csv").string()
        << '\n';
    return kExitOk;
  }
  int operator()(const SelftestCommand& c) const { return run_selftest(c.options, out); }
  int operator()(const HelpCommand& c) const {
    out << c.text;
    return kExitOk;
  }
};

}  // namespace

int run(const Command& command, std::ostream& out, std::ostream& err) {
  return std::visit(Runner{out, err}, command);
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_args(args), out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace alexsnn::cli
