#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dqdotto/sweep.hpp"
#include "dqdotto/table.hpp"

namespace dqdotto::cli {

enum class Format { Csv, Json };

// Thrown by parse_config on --help; carries the help text (exit status 0).
struct HelpRequested {
  std::string text;
};

// Fully resolved invocation: subcommand plus the flat parameter map.
// Defaults are the baseline operating point used throughout the figures
// (delta1_hot 10, delta2_hot 3, v_hot 10, t_hot 2, t_cold 1, two levels);
// cold-endpoint values mirror the hot endpoint unless overridden.
struct RunConfig {
  std::string subcommand;  // spectrum | probs | cycle | sweep | crossings | optimize
  std::optional<std::string> figure;  // alias this config was expanded from

  double delta1_hot = 10.0;
  double delta2_hot = 3.0;
  double v_hot = 10.0;
  std::optional<double> delta1_cold;
  std::optional<double> delta2_cold;
  std::optional<double> v_cold;
  std::optional<double> r;  // shorthand: v_cold = r * v_hot
  double t_hot = 2.0;
  double t_cold = 1.0;
  LevelScheme levels = LevelScheme::TwoLevel;

  SweepAxis axis = SweepAxis::CompressionRatio;  // probs defaults to temperature
  bool axis_set = false;
  double lo = 0.2;
  double hi = 6.0;
  int steps = 600;
  bool normalized = false;  // sweep: emit eta_n/cop_n table
  double gamma = 5.0 / 3.0;
  std::optional<double> tol;  // classification tolerance override

  std::string output = "-";  // path, or - for stdout
  Format format = Format::Csv;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;

  // Endpoint and cycle assembly (applies mirroring and the r shorthand).
  DqdParams hot_params() const;
  DqdParams cold_params() const;
  OttoCycleSpec cycle_spec() const;
  SweepPlan sweep_plan(bool refine) const;

  // Canonical argv (no program name) that parses back to an equal config.
  std::vector<std::string> render_args() const;
};

// Parse argv (without the program name). Flags override config-file
// entries override defaults; `--figure N` expands to the parameter set of
// the corresponding publication figure. Throws UsageError on unknown
// keys, malformed values, or invariant violations (exit status 2).
RunConfig parse_config(const std::vector<std::string>& args);

// Parameter set behind one `--figure` alias (4, 5, 6, 7, 8a-8d, 9, 10, 11).
RunConfig figure_config(const std::string& name);

// Run the configured computation and produce the result table.
Table dispatch(const RunConfig& config);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

// Render per config.format and write to config.output; "-" writes to the
// supplied stream. Throws IoError on file failures.
void emit(const Table& table, const RunConfig& config, std::ostream& out);

// Full program: parse, dispatch, emit. Returns the process exit status
// (0 ok, 1 runtime/io, 2 usage); errors are reported on err.
int run_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace dqdotto::cli
