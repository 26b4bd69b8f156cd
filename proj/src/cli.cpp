#include "dqdotto/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>

#include "dqdotto/spectrum.hpp"

namespace dqdotto::cli {

namespace {

using Cell = Table::Cell;

Cell cell(double x) { return Cell{x}; }
Cell cell(const std::string& s) { return Cell{s}; }
Cell cell(std::optional<double> x) {
  if (x) return Cell{*x};
  return Cell{std::monostate{}};
}
Cell regime_cell(const std::optional<Regime>& r) {
  if (r) return Cell{regime_name(*r)};
  return Cell{std::monostate{}};
}

const std::map<std::string, SweepAxis> kAxisNames = {
    {"r", SweepAxis::CompressionRatio},
    {"delta2_cold", SweepAxis::Delta2Cold},
    {"temperature", SweepAxis::Temperature},
    {"delta2_shared", SweepAxis::Delta2Shared},
};

std::string axis_flag_value(SweepAxis a) {
  for (const auto& [name, value] : kAxisNames) {
    if (value == a) return name;
  }
  return "r";
}

}  // namespace

DqdParams RunConfig::hot_params() const {
  return DqdParams(delta1_hot, delta2_hot, v_hot);
}

DqdParams RunConfig::cold_params() const {
  double v = v_cold.value_or(v_hot);
  if (r) v = *r * v_hot;
  return DqdParams(delta1_cold.value_or(delta1_hot),
                   delta2_cold.value_or(delta2_hot), v);
}

OttoCycleSpec RunConfig::cycle_spec() const {
  return OttoCycleSpec(hot_params(), cold_params(), t_hot, t_cold, levels);
}

SweepPlan RunConfig::sweep_plan(bool refine) const {
  return SweepPlan{cycle_spec(), axis, lo, hi, steps, refine, tol};
}

std::vector<std::string> RunConfig::render_args() const {
  std::vector<std::string> args;
  const auto push = [&args](const std::string& flag, const std::string& value) {
    args.push_back(flag);
    args.push_back(value);
  };
  if (figure) {
    push("--figure", *figure);
  } else {
    args.push_back(subcommand);
    push("--delta1-hot", format_double(delta1_hot));
    push("--delta2-hot", format_double(delta2_hot));
    push("--v-hot", format_double(v_hot));
    if (delta1_cold) push("--delta1-cold", format_double(*delta1_cold));
    if (delta2_cold) push("--delta2-cold", format_double(*delta2_cold));
    if (v_cold) push("--v-cold", format_double(*v_cold));
    if (r) push("--r", format_double(*r));
    push("--t-hot", format_double(t_hot));
    push("--t-cold", format_double(t_cold));
    push("--levels", levels == LevelScheme::TwoLevel ? "2" : "4");
    if (axis_set) push("--axis", axis_flag_value(axis));
    push("--lo", format_double(lo));
    push("--hi", format_double(hi));
    push("--steps", std::to_string(steps));
    if (normalized) args.push_back("--normalized");
    push("--gamma", format_double(gamma));
    if (tol) push("--tol", format_double(*tol));
  }
  push("--output", output);
  push("--format", format == Format::Csv ? "csv" : "json");
  return args;
}

RunConfig figure_config(const std::string& name) {
  RunConfig cfg;
  cfg.figure = name;
  const auto r_sweep = [&cfg](double lo, double hi) {
    cfg.subcommand = "sweep";
    cfg.axis = SweepAxis::CompressionRatio;
    cfg.axis_set = true;
    cfg.lo = lo;
    cfg.hi = hi;
    cfg.steps = 600;
  };
  if (name == "4") {
    r_sweep(0.2, 6.0);
  } else if (name == "5") {
    r_sweep(0.2, 6.0);
    cfg.subcommand = "probs";
  } else if (name == "6") {
    // Zoom on the heat-flux inversion; the full four-level model splits
    // the q_hot and q_cold roots apart.
    r_sweep(2.5, 2.9);
    cfg.levels = LevelScheme::FourLevel;
  } else if (name == "7") {
    r_sweep(2.7, 6.0);
  } else if (name == "8a") {
    r_sweep(0.2, 6.0);
    cfg.normalized = true;
    cfg.delta2_cold = 4.0;
  } else if (name == "8b") {
    r_sweep(0.2, 6.0);
    cfg.normalized = true;
    cfg.delta2_cold = 2.0;
  } else if (name == "8c") {
    r_sweep(0.2, 6.0);
    cfg.normalized = true;
    cfg.delta1_cold = 18.0;
    cfg.delta2_cold = 2.0;
  } else if (name == "8d") {
    r_sweep(0.2, 6.0);
    cfg.normalized = true;
    cfg.delta1_cold = 7.0;
    cfg.delta2_cold = 4.0;
  } else if (name == "9") {
    cfg.subcommand = "sweep";
    cfg.axis = SweepAxis::Delta2Shared;
    cfg.axis_set = true;
    cfg.lo = 0.05;
    cfg.hi = 10.0;
    cfg.steps = 600;
    cfg.v_cold = 20.0;
  } else if (name == "10") {
    r_sweep(0.2, 6.0);
    cfg.levels = LevelScheme::FourLevel;
    cfg.t_hot = 20.0;
    cfg.t_cold = 10.0;
  } else if (name == "11") {
    cfg.subcommand = "probs";
    cfg.axis = SweepAxis::Temperature;
    cfg.axis_set = true;
    cfg.lo = 0.1;
    cfg.hi = 20.0;
    cfg.steps = 600;
    cfg.levels = LevelScheme::FourLevel;
  } else {
    throw UsageError("unknown figure '" + name +
                     "' (expected 4, 5, 6, 7, 8a, 8b, 8c, 8d, 9, 10 or 11)");
  }
  return cfg;
}

namespace {

const std::vector<std::string> kSubcommands = {"spectrum", "probs",  "cycle",
                                               "sweep",    "crossings",
                                               "optimize"};

void cross_validate(const RunConfig& cfg) {
  if (!(cfg.t_cold > 0.0)) {
    throw UsageError("--t-cold must be > 0, got " + format_double(cfg.t_cold));
  }
  if (!(cfg.t_hot > cfg.t_cold)) {
    throw UsageError("--t-hot must exceed --t-cold (got t_hot = " +
                     format_double(cfg.t_hot) + ", t_cold = " +
                     format_double(cfg.t_cold) + ")");
  }
  const bool swept = cfg.subcommand == "sweep" || cfg.subcommand == "probs" ||
                     cfg.subcommand == "crossings" ||
                     cfg.subcommand == "optimize";
  if (swept) {
    if (!(cfg.lo < cfg.hi)) {
      throw UsageError("--lo must be below --hi (got lo = " +
                       format_double(cfg.lo) + ", hi = " +
                       format_double(cfg.hi) + ")");
    }
    if (cfg.steps < 2) {
      throw UsageError("--steps must be at least 2, got " +
                       std::to_string(cfg.steps));
    }
  }
  if (cfg.normalized && cfg.subcommand != "sweep") {
    throw UsageError("--normalized only applies to the sweep subcommand");
  }
  if (!(cfg.gamma > 1.0)) {
    throw UsageError("--gamma must exceed 1, got " + format_double(cfg.gamma));
  }
  if (cfg.subcommand == "optimize" &&
      (!(cfg.lo > 0.0) || !(cfg.hi <= cfg.delta1_hot))) {
    throw UsageError("optimize searches delta2 in (0, delta1]: need 0 < --lo "
                     "< --hi <= --delta1-hot");
  }
  if (cfg.subcommand == "probs" && cfg.axis != SweepAxis::CompressionRatio &&
      cfg.axis != SweepAxis::Temperature) {
    throw UsageError("probs supports --axis r or --axis temperature");
  }
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string levels_str = "2";
  std::string axis_str;
  std::string format_str = "csv";
  std::string figure_str;

  CLI::App app{"Quasi-static Otto machine built on two coupled double "
               "quantum dots"};
  app.name("dqd_otto");
  app.set_config("--config", "", "Read `key = value` defaults from a file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  std::vector<CLI::Option*> param_opts;
  const auto param = [&param_opts](CLI::Option* o) {
    param_opts.push_back(o);
    return o;
  };

  param(app.add_option("--delta1-hot,--delta1_hot", cfg.delta1_hot,
                       "Hot-endpoint tunneling coupling of DQD 1 (ueV)")
            ->check(CLI::NonNegativeNumber));
  param(app.add_option("--delta2-hot,--delta2_hot", cfg.delta2_hot,
                       "Hot-endpoint tunneling coupling of DQD 2 (ueV)")
            ->check(CLI::NonNegativeNumber));
  param(app.add_option("--v-hot,--v_hot", cfg.v_hot,
                       "Hot-endpoint Coulomb coupling (ueV)")
            ->check(CLI::NonNegativeNumber));
  param(app.add_option("--delta1-cold,--delta1_cold", cfg.delta1_cold,
                       "Cold-endpoint tunneling coupling of DQD 1 "
                       "(default: mirror hot)")
            ->check(CLI::NonNegativeNumber));
  param(app.add_option("--delta2-cold,--delta2_cold", cfg.delta2_cold,
                       "Cold-endpoint tunneling coupling of DQD 2 "
                       "(default: mirror hot)")
            ->check(CLI::NonNegativeNumber));
  auto* opt_v_cold =
      param(app.add_option("--v-cold,--v_cold", cfg.v_cold,
                           "Cold-endpoint Coulomb coupling (default: mirror "
                           "hot)")
                ->check(CLI::NonNegativeNumber));
  auto* opt_r = param(app.add_option(
      "--r", cfg.r, "Compression ratio shorthand: v_cold = r * v_hot"));
  opt_r->check(CLI::NonNegativeNumber)->excludes(opt_v_cold);
  param(app.add_option("--t-hot,--t_hot", cfg.t_hot,
                       "Hot bath temperature (ueV, k_B = 1)")
            ->check(CLI::PositiveNumber));
  param(app.add_option("--t-cold,--t_cold", cfg.t_cold,
                       "Cold bath temperature (ueV, k_B = 1)")
            ->check(CLI::PositiveNumber));
  param(app.add_option("--levels", levels_str,
                       "Level scheme: 2 (truncated) or 4 (full)")
            ->check(CLI::IsMember({"2", "4"})));
  auto* opt_axis =
      param(app.add_option("--axis", axis_str,
                           "Swept variable: r, delta2_cold, temperature or "
                           "delta2_shared")
                ->check(CLI::IsMember({"r", "delta2_cold", "temperature",
                                       "delta2_shared"})));
  param(app.add_option("--lo", cfg.lo, "Sweep range lower end"));
  param(app.add_option("--hi", cfg.hi, "Sweep range upper end"));
  param(app.add_option("--steps", cfg.steps, "Sweep grid point count")
            ->check(CLI::PositiveNumber));
  param(app.add_flag("--normalized", cfg.normalized,
                     "Sweep: emit eta/eta_carnot and cop/cop_carnot columns"));
  param(app.add_option("--gamma", cfg.gamma,
                       "Specific-heat ratio of the classical Otto reference"));
  param(app.add_option("--tol", cfg.tol,
                       "Regime classification tolerance override (ueV)")
            ->check(CLI::PositiveNumber));

  app.add_option("--output", cfg.output, "Output path, - for stdout");
  app.add_option("--format", format_str, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  auto* opt_figure =
      app.add_option("--figure", figure_str,
                     "Emit the data behind one publication figure")
          ->check(CLI::IsMember({"4", "5", "6", "7", "8a", "8b", "8c", "8d",
                                 "9", "10", "11"}));

  for (const std::string& name : kSubcommands) {
    app.add_subcommand(name)->fallthrough();
  }
  app.require_subcommand(0, 1);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("dqd_otto");
  for (const std::string& a : args) argv_store.push_back(a);
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto chosen = app.get_subcommands();
  if (opt_figure->count() > 0) {
    if (!chosen.empty()) {
      throw UsageError("--figure replaces the subcommand; drop '" +
                       chosen.front()->get_name() + "'");
    }
    for (const CLI::Option* o : param_opts) {
      if (o->count() > 0) {
        throw UsageError("--figure fixes the parameter set; drop " +
                         o->get_name());
      }
    }
    RunConfig expanded = figure_config(figure_str);
    expanded.output = cfg.output;
    expanded.format = format_str == "json" ? Format::Json : Format::Csv;
    return expanded;
  }

  if (chosen.empty()) {
    throw UsageError("expected a subcommand (spectrum, probs, cycle, sweep, "
                     "crossings, optimize) or --figure");
  }
  cfg.subcommand = chosen.front()->get_name();
  cfg.levels =
      levels_str == "4" ? LevelScheme::FourLevel : LevelScheme::TwoLevel;
  cfg.format = format_str == "json" ? Format::Json : Format::Csv;
  if (opt_axis->count() > 0) {
    cfg.axis = kAxisNames.at(axis_str);
    cfg.axis_set = true;
  } else if (cfg.subcommand == "probs") {
    cfg.axis = SweepAxis::Temperature;
  }
  cross_validate(cfg);
  return cfg;
}

namespace {

constexpr const char* kCycleColumns[] = {
    "r",       "delta1_ratio", "delta2_ratio", "q_hot",
    "q_cold",  "work",         "eta_raw",      "eta",
    "cop",     "regime",       "eta_carnot",   "cop_carnot"};

void append_cycle_cells(std::vector<Cell>& out, const SweepRow& row) {
  out.push_back(cell(row.r));
  out.push_back(cell(row.delta1_ratio));
  out.push_back(cell(row.delta2_ratio));
  if (row.quantities) {
    const CycleQuantities& q = *row.quantities;
    out.push_back(cell(q.q_hot));
    out.push_back(cell(q.q_cold));
    out.push_back(cell(q.work));
    out.push_back(cell(q.eta_raw));
    out.push_back(cell(row.eta));
    out.push_back(cell(row.cop));
    out.push_back(regime_cell(row.regime));
    out.push_back(cell(q.eta_carnot));
    out.push_back(cell(q.cop_carnot));
  } else {
    for (int i = 0; i < 9; ++i) out.push_back(Cell{std::monostate{}});
  }
}

Table spectrum_table(const RunConfig& cfg) {
  const DqdParams p = cfg.hot_params();
  Spectrum s;
  try {
    s = eigenstates(p);
  } catch (const DegenerateConstruction&) {
    s = eigenenergies(p);  // energies stay well-defined
  }

  Table t;
  t.singleton = true;
  t.columns = {"delta1", "delta2", "v", "e1", "e2", "e3", "e4",
               "e1_sorted", "e2_sorted", "e3_sorted", "e4_sorted",
               "n_minus", "n_plus"};
  std::vector<Cell> row{
      cell(p.delta1()),    cell(p.delta2()),    cell(p.v()),
      cell(s.e_paper[0]),  cell(s.e_paper[1]),  cell(s.e_paper[2]),
      cell(s.e_paper[3]),  cell(s.e_sorted[0]), cell(s.e_sorted[1]),
      cell(s.e_sorted[2]), cell(s.e_sorted[3]), cell(s.n_minus),
      cell(s.n_plus)};
  const char* basis[] = {"ll", "lr", "rl", "rr"};
  for (int k = 0; k < 4; ++k) {
    for (int b = 0; b < 4; ++b) {
      t.columns.push_back("psi" + std::to_string(k + 1) + "_" + basis[b]);
      if (s.eigvecs) {
        row.push_back(cell((*s.eigvecs)[k][b]));
      } else {
        row.push_back(Cell{std::monostate{}});
      }
    }
  }
  t.rows.push_back(std::move(row));
  return t;
}

Table cycle_table(const RunConfig& cfg) {
  const OttoCycleSpec spec = cfg.cycle_spec();
  const CycleResult res = run_cycle(spec, cfg.tol);

  SweepRow row;
  row.r = spec.hot().v() != 0.0
              ? spec.cold().v() / spec.hot().v()
              : std::numeric_limits<double>::quiet_NaN();
  row.delta1_ratio = spec.hot().delta1() != 0.0
                         ? spec.cold().delta1() / spec.hot().delta1()
                         : std::numeric_limits<double>::quiet_NaN();
  row.delta2_ratio = spec.hot().delta2() != 0.0
                         ? spec.cold().delta2() / spec.hot().delta2()
                         : std::numeric_limits<double>::quiet_NaN();
  row.quantities = cycle_quantities(spec);
  row.regime = res.regime;
  row.eta = res.efficiency;
  row.cop = res.cop;

  Table t;
  t.singleton = true;
  t.columns.assign(std::begin(kCycleColumns), std::end(kCycleColumns));
  std::vector<Cell> cells;
  append_cycle_cells(cells, row);
  t.rows.push_back(std::move(cells));
  return t;
}

Table sweep_table(const RunConfig& cfg) {
  const SweepPlan plan = cfg.sweep_plan(false);

  if (cfg.normalized) {
    Table t;
    t.columns = {"r", "eta_n", "cop_n", "eta_otto", "regime", "error"};
    for (const NormalizedRow& row :
         normalized_performance_sweep(plan, cfg.gamma)) {
      t.rows.push_back({cell(row.axis_value), cell(row.eta_n), cell(row.cop_n),
                        cell(row.eta_otto), regime_cell(row.regime),
                        cell(row.error)});
    }
    return t;
  }

  Table t;
  const bool extra_axis = plan.axis != SweepAxis::CompressionRatio;
  if (extra_axis) t.columns.push_back(axis_name(plan.axis));
  t.columns.insert(t.columns.end(), std::begin(kCycleColumns),
                   std::end(kCycleColumns));
  t.columns.push_back("error");
  for (const SweepRow& row : sweep(plan)) {
    std::vector<Cell> cells;
    if (extra_axis) cells.push_back(cell(row.axis_value));
    append_cycle_cells(cells, row);
    cells.push_back(cell(row.error));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table crossings_table(const RunConfig& cfg) {
  const SweepPlan plan = cfg.sweep_plan(true);
  const std::vector<SweepRow> rows = sweep(plan);

  Table t;
  t.columns = {"quantity",   "location",      "bracket_lo",
               "bracket_hi", "regime_before", "regime_after"};
  for (const CrossingReport& report : find_crossings(plan, rows)) {
    t.rows.push_back({cell(quantity_name(report.quantity)),
                      cell(report.location), cell(report.bracket_lo),
                      cell(report.bracket_hi),
                      regime_cell(report.regime_before),
                      regime_cell(report.regime_after)});
  }
  return t;
}

Table probs_table(const RunConfig& cfg) {
  const SweepPlan plan = cfg.sweep_plan(false);
  const std::vector<OccupationRow> rows = occupations_vs_axis(plan);

  Table t;
  if (plan.axis == SweepAxis::CompressionRatio) {
    t.columns = {"r", "p1_hot", "p2_hot", "p1_cold", "p2_cold", "error"};
  } else {
    t.columns = {"t", "p1", "p2", "p3", "p4", "error"};
  }
  for (const OccupationRow& row : rows) {
    std::vector<Cell> cells{cell(row.axis_value)};
    for (int i = 0; i < 4; ++i) {
      if (i < static_cast<int>(row.probs.size())) {
        cells.push_back(cell(row.probs[static_cast<size_t>(i)]));
      } else {
        cells.push_back(Cell{std::monostate{}});
      }
    }
    cells.push_back(cell(row.error));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table optimize_table(const RunConfig& cfg) {
  const DqdParams cold = cfg.cold_params();
  const WorkOptimum opt = optimize_work_over_delta2(
      cfg.v_hot, cold.v(), cfg.delta1_hot, cfg.t_hot, cfg.t_cold, cfg.lo,
      cfg.hi);

  Table t;
  t.singleton = true;
  t.columns = {"v_hot", "v_cold", "delta1", "t_hot", "t_cold",
               "lo",    "hi",     "delta2_star", "w_star"};
  t.rows.push_back({cell(cfg.v_hot), cell(cold.v()), cell(cfg.delta1_hot),
                    cell(cfg.t_hot), cell(cfg.t_cold), cell(cfg.lo),
                    cell(cfg.hi), cell(opt.delta2_star), cell(opt.w_star)});
  return t;
}

}  // namespace

Table dispatch(const RunConfig& cfg) {
  if (cfg.subcommand == "spectrum") return spectrum_table(cfg);
  if (cfg.subcommand == "probs") return probs_table(cfg);
  if (cfg.subcommand == "cycle") return cycle_table(cfg);
  if (cfg.subcommand == "sweep") return sweep_table(cfg);
  if (cfg.subcommand == "crossings") return crossings_table(cfg);
  if (cfg.subcommand == "optimize") return optimize_table(cfg);
  throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json json_cell(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return nullptr;
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  const double x = std::get<double>(c);
  // null is reserved for absent values; non-finite numbers keep an
  // explicit marker.
  if (!std::isfinite(x)) return format_double(x);
  return x;
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      const Cell& c = row[i];
      if (std::holds_alternative<double>(c)) {
        out += format_double(std::get<double>(c));
      } else if (std::holds_alternative<std::string>(c)) {
        out += csv_escape(std::get<std::string>(c));
      }
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  const auto row_object = [&table](const std::vector<Cell>& row) {
    nlohmann::ordered_json obj;
    for (size_t i = 0; i < table.columns.size() && i < row.size(); ++i) {
      obj[table.columns[i]] = json_cell(row[i]);
    }
    return obj;
  };
  nlohmann::ordered_json doc;
  if (table.singleton && table.rows.size() == 1) {
    doc = row_object(table.rows.front());
  } else {
    doc = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) doc.push_back(row_object(row));
  }
  return doc.dump(2) + "\n";
}

void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
  const std::string payload =
      cfg.format == Format::Csv ? to_csv(table) : to_json(table);
  if (cfg.output == "-") {
    out << payload;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw IoError("cannot open '" + cfg.output + "' for writing");
  file << payload;
  if (!file) throw IoError("write failed for '" + cfg.output + "'");
}

int run_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  try {
    const RunConfig cfg = parse_config(args);
    emit(dispatch(cfg), cfg, out);
    return 0;
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dqdotto::cli
