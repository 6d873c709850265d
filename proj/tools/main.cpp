#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridpursuit/engine.hpp"
#include "gridpursuit/errors.hpp"
#include "gridpursuit/experiments.hpp"
#include "gridpursuit/trace_io.hpp"
#include "gridpursuit/verification.hpp"

namespace gp = gridpursuit;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

// Default outputs land in GRIDPURSUIT_OUT_DIR when set; explicit paths are
// used verbatim.
fs::path out_dir() {
  if (const char* dir = std::getenv("GRIDPURSUIT_OUT_DIR")) {
    return fs::path(dir);
  }
  return fs::path(".");
}

fs::path resolve_output(const std::string& given, const std::string& fallback) {
  if (!given.empty()) return fs::path(given);
  return out_dir() / fallback;
}

std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Key=value config support: keys mirror long flag names one-to-one, and
// flags given on the command line override file values. Implemented as a
// pre-parse expansion so the precedence rule is exact.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) {
    throw gp::InvalidDimensionError("cannot open config file '" + path + "'");
  }
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw gp::InvalidDimensionError("config line without '=': " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw gp::InvalidDimensionError("config line with empty key: " + line);
    }
    const std::string flag = "--" + key;
    bool present = false;
    for (const std::string& arg : args) {
      if (arg == flag || arg.rfind(flag + "=", 0) == 0) {
        present = true;
        break;
      }
    }
    if (present) continue;
    if (value == "false") continue;
    args.push_back(flag);
    if (!value.empty() && value != "true") args.push_back(value);
  }
  return args;
}

std::vector<gp::GridShape> parse_shapes(const std::string& list) {
  std::vector<gp::GridShape> shapes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) shapes.push_back(gp::parse_shape(item));
  }
  if (shapes.empty()) {
    throw gp::InvalidDimensionError("no shapes given");
  }
  return shapes;
}

std::vector<gp::Position> parse_cop_positions(const std::string& list,
                                              const gp::GridShape& shape) {
  std::vector<gp::Position> cops;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (!item.empty()) cops.push_back(gp::parse_position(item, shape));
  }
  return cops;
}

struct SimulateArgs {
  std::string shape;
  std::string cops;
  std::string robber = "greedy3";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string init_cops;
  std::string init_robber;
  std::int64_t cap = 0;
  std::string trace_out;
  bool quiet = false;
};

struct GameSetup {
  gp::GridShape shape;
  gp::Configuration initial;
  std::vector<gp::CopStrategySpec> cop_specs;
  std::vector<std::unique_ptr<gp::CopStrategy>> cops_owned;
  std::vector<gp::CopStrategy*> cops;
  std::int64_t cap = 0;
};

// Initial positions: explicit flags win; anything missing is drawn from the
// seed the same way experiment trials draw theirs.
GameSetup build_setup(const std::string& shape_text, const std::string& cops_text,
                      const std::string& init_cops_text,
                      const std::string& init_robber_text, std::uint64_t seed,
                      std::int64_t cap, bool positions_required_from_seed) {
  GameSetup setup;
  setup.shape = gp::parse_shape(shape_text);

  std::vector<gp::Position> explicit_cops =
      init_cops_text.empty()
          ? std::vector<gp::Position>{}
          : parse_cop_positions(init_cops_text, setup.shape);

  if (!cops_text.empty()) {
    setup.cop_specs = gp::parse_cop_specs(cops_text);
  } else if (!explicit_cops.empty()) {
    // Default strategies for explicitly placed cops: S_i per slot.
    for (std::size_t i = 0; i < explicit_cops.size(); ++i) {
      gp::CopStrategySpec spec;
      spec.kind = gp::CopStrategySpec::Kind::AlgorithmOne;
      spec.assigned_index =
          static_cast<int>(i % setup.shape.n());
      setup.cop_specs.push_back(spec);
    }
  } else {
    throw gp::InvalidDimensionError("need --cops or --init-cops");
  }

  if (!explicit_cops.empty() &&
      explicit_cops.size() != setup.cop_specs.size()) {
    throw gp::InvalidDimensionError(
        "--init-cops count does not match --cops count");
  }

  const std::size_t m = setup.cop_specs.size();
  gp::Configuration drawn;
  const bool need_draw = explicit_cops.empty() || init_robber_text.empty();
  if (need_draw) {
    if (!positions_required_from_seed) {
      throw gp::InvalidDimensionError(
          "need --seed or explicit --init-cops/--init-robber");
    }
    drawn = gp::random_initial_configuration(setup.shape, m, seed);
  }
  setup.initial.cops = explicit_cops.empty() ? drawn.cops : explicit_cops;
  setup.initial.robber = init_robber_text.empty()
                             ? drawn.robber
                             : gp::parse_position(init_robber_text, setup.shape);
  gp::require_configuration(setup.initial, setup.shape);

  for (std::size_t k = 0; k < m; ++k) {
    setup.cops_owned.push_back(gp::make_cop_strategy(
        setup.cop_specs[k], setup.shape,
        gp::derive_trial_seed(seed, static_cast<std::uint64_t>(k) + 1)));
    setup.cops.push_back(setup.cops_owned.back().get());
  }
  setup.cap = cap > 0 ? cap : gp::default_tick_cap(setup.shape, setup.cops);
  return setup;
}

std::string outcome_line(const gp::Outcome& oc) {
  std::ostringstream out;
  out << "outcome=" << (oc.captured ? "captured" : "evaded")
      << " jumps=" << oc.robber_jumps << " by=";
  if (oc.capturing_cop >= 0) {
    out << oc.capturing_cop;
  } else {
    out << '-';
  }
  out << " half=" << gp::half_step_name(oc.half_step);
  return out.str();
}

int cmd_simulate(const SimulateArgs& args) {
  GameSetup setup = build_setup(args.shape, args.cops, args.init_cops,
                                args.init_robber, args.seed, args.cap,
                                args.seed_given);
  const gp::RobberStrategySpec robber_spec =
      gp::RobberStrategySpec::parse(args.robber);
  if (robber_spec.kind == gp::RobberStrategySpec::Kind::Interactive) {
    throw gp::InvalidDimensionError(
        "interactive robber is for the play subcommand");
  }
  std::unique_ptr<gp::RobberStrategy> robber =
      gp::make_robber_strategy(robber_spec, setup.shape);

  const gp::GameTrace trace =
      gp::run(setup.initial, *robber, setup.cops, setup.shape, setup.cap);

  gp::TraceMeta meta;
  for (const gp::CopStrategySpec& spec : setup.cop_specs) {
    meta.cop_strategy_names.push_back(spec.canonical_name());
  }
  meta.robber_strategy_name = robber_spec.canonical_name();
  meta.seed = args.seed_given ? std::to_string(args.seed) : "none";
  meta.tick_cap = setup.cap;

  const fs::path trace_path = resolve_output(args.trace_out, "trace.txt");
  {
    std::ofstream out(trace_path);
    if (!out) {
      throw gp::InvalidDimensionError("cannot open trace output '" +
                                      trace_path.string() + "'");
    }
    gp::write_trace(out, trace, meta);
  }

  if (!args.quiet) {
    std::cout << outcome_line(trace.outcome) << '\n';
    std::cout << "trace=" << trace_path.string() << '\n';
  }

  // A full Algorithm-1 set that fails to capture contradicts the capture
  // theorem; surface it loudly rather than as a normal evasion.
  if (!trace.outcome.captured &&
      gp::is_full_algorithm_one_set(setup.shape, setup.cops)) {
    std::cerr << "error: full Algorithm-1 cop set reached the tick cap\n";
    return kExitRuntime;
  }
  return kExitOk;
}

struct ExperimentArgs {
  std::string shape;
  std::string cops;
  std::string robber;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t cap = 0;
  int workers = 1;
  std::string out_csv;
  std::string out_summary;
};

int cmd_experiment(const ExperimentArgs& args) {
  gp::ExperimentSpec spec;
  spec.shape = gp::parse_shape(args.shape);
  spec.cops = gp::parse_cop_specs(args.cops);
  spec.robber = gp::RobberStrategySpec::parse(args.robber);
  if (spec.robber.kind == gp::RobberStrategySpec::Kind::Interactive) {
    throw gp::InvalidDimensionError(
        "interactive robber cannot drive an experiment");
  }
  spec.trials = args.trials;
  spec.master_seed = args.seed;
  spec.tick_cap = args.cap;
  spec.workers = args.workers;

  const fs::path csv_path = resolve_output(args.out_csv, "experiment.csv");
  const fs::path summary_path =
      resolve_output(args.out_summary, "experiment_summary.txt");

  std::ofstream csv(csv_path);
  if (!csv) {
    throw gp::InvalidDimensionError("cannot open CSV output '" +
                                    csv_path.string() + "'");
  }
  gp::write_trial_csv_header(csv);
  const gp::StatsSummary summary = gp::run_experiment(
      spec, [&](const gp::TrialRecord& record) {
        gp::write_trial_csv_row(csv, record);
      });
  csv.close();

  std::ofstream out(summary_path);
  if (!out) {
    throw gp::InvalidDimensionError("cannot open summary output '" +
                                    summary_path.string() + "'");
  }
  gp::write_summary(out, spec, summary);
  out.close();

  gp::write_summary(std::cout, spec, summary);
  std::cout << "csv=" << csv_path.string() << '\n'
            << "summary=" << summary_path.string() << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string claim = "all";
  std::string shapes;
  std::int64_t horizon = 1000;
  std::int64_t node_budget = gp::AdversarialOracle::kDefaultNodeBudget;
  std::int64_t random_traces = 1000;
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  std::string out_dir;
};

int cmd_verify(const VerifyArgs& args) {
  const std::vector<std::string> known = {"lemma1",   "lemma3",   "lemma4",
                                          "theorem1", "theorem2", "theorem3",
                                          "theorem4"};
  std::vector<std::string> claims;
  if (args.claim == "all") {
    claims = known;
  } else if (std::find(known.begin(), known.end(), args.claim) != known.end()) {
    claims = {args.claim};
  } else {
    throw gp::InvalidDimensionError("unknown claim '" + args.claim +
                                    "' (expected one of lemma1, lemma3, "
                                    "lemma4, theorem1, theorem2, theorem3, "
                                    "theorem4, all)");
  }

  const auto shapes_or = [&](const char* fallback) {
    return parse_shapes(args.shapes.empty() ? fallback : args.shapes);
  };

  std::vector<gp::ClaimReport> reports;
  for (const std::string& claim : claims) {
    if (claim == "lemma1") {
      reports.push_back(gp::check_lemma1_random_games(
          shapes_or("3x3,10x10,4x4x4"), args.random_traces, args.seed));
    } else if (claim == "lemma3") {
      reports.push_back(gp::check_lemma3_random_games(
          shapes_or("3x3,10x10,4x4x4"), args.random_traces, args.seed));
    } else if (claim == "lemma4") {
      reports.push_back(gp::check_lemma4_random_games(
          shapes_or("4x4,9x9,10x10"), args.random_traces, args.seed));
    } else if (claim == "theorem1") {
      for (const gp::GridShape& shape : shapes_or("3x3,2x2x2")) {
        reports.push_back(gp::check_theorem1(shape, shape.n() - 1,
                                             args.horizon));
      }
    } else if (claim == "theorem2") {
      for (const gp::GridShape& shape : shapes_or("2x2,2x3,3x3,2x2x2")) {
        reports.push_back(gp::check_theorem2(shape, args.node_budget));
      }
    } else if (claim == "theorem3") {
      std::optional<std::int64_t> fixed_c;
      for (const gp::GridShape& shape : shapes_or("4x4,5x5,6x6")) {
        gp::ClaimReport report =
            gp::check_theorem3_and_5(shape, fixed_c, args.node_budget);
        // The first shape in the list calibrates the linear constant; later
        // shapes regress against it.
        if (!fixed_c.has_value()) {
          for (const auto& [key, value] : report.stats) {
            if (key == "c") fixed_c = std::stoll(value);
          }
        }
        reports.push_back(std::move(report));
      }
    } else if (claim == "theorem4") {
      const std::vector<gp::GridShape> shapes = shapes_or("10x10,3x3");
      for (std::size_t i = 0; i < shapes.size(); ++i) {
        // Monte Carlo only on the first shape; enumeration on all.
        reports.push_back(gp::check_theorem4(
            shapes[i], i == 0 ? args.trials : 0, args.seed));
      }
    }
  }

  bool any_violated = false;
  int witness_counter = 0;
  for (const gp::ClaimReport& report : reports) {
    std::string line = gp::format_claim_report(report);
    if (report.verdict == gp::Verdict::Violated) {
      any_violated = true;
      if (report.witness.has_value()) {
        const fs::path dir =
            args.out_dir.empty() ? out_dir() : fs::path(args.out_dir);
        fs::create_directories(dir);
        const fs::path witness_path =
            dir / ("witness_" + report.claim_id + "_" +
                   std::to_string(witness_counter++) + ".trace");
        gp::TraceMeta meta = report.witness_meta;
        if (meta.cop_strategy_names.empty()) {
          meta.cop_strategy_names.assign(
              report.witness->initial.num_cops(), "unknown");
        }
        if (meta.robber_strategy_name.empty()) {
          meta.robber_strategy_name = "unknown";
        }
        std::ofstream out(witness_path);
        gp::write_trace(out, *report.witness, meta);
        line += " witness=" + witness_path.string();
      }
    }
    std::cout << line << '\n';
  }
  return any_violated ? kExitRuntime : kExitOk;
}

struct EnumerateArgs {
  std::string shape;
};

int cmd_enumerate(const EnumerateArgs& args) {
  const gp::GridShape shape = gp::parse_shape(args.shape);
  const gp::Rational fraction = gp::enumerate_parity_fraction(shape);
  const double value =
      static_cast<double>(fraction.num) / static_cast<double>(fraction.den);
  std::cout << "shape=" << gp::format_shape(shape) << " even_pairs="
            << fraction.num << '/' << fraction.den << " decimal=" << value
            << " exceeds_half="
            << (2 * fraction.num > fraction.den ? "true" : "false") << '\n';
  return kExitOk;
}

struct PlayArgs {
  std::string shape;
  std::string cops;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string init_cops;
  std::string init_robber;
  std::int64_t cap = 0;
};

void render_board(const gp::Configuration& config, const gp::GridShape& shape,
                  std::ostream& out) {
  if (shape.n() == 1) {
    for (gp::Coord x = 0; x < shape.dims()[0]; ++x) {
      const gp::Position here{{x}};
      char cell = '.';
      if (here == config.robber) cell = 'R';
      for (std::size_t i = 0; i < config.cops.size(); ++i) {
        if (config.cops[i] == here) {
          cell = here == config.robber ? 'X' : static_cast<char>('0' + (i % 10));
        }
      }
      out << cell;
    }
    out << '\n';
    return;
  }
  if (shape.n() == 2) {
    // Axis 0 runs down the page, axis 1 across; cops print their index.
    for (gp::Coord x = 0; x < shape.dims()[0]; ++x) {
      for (gp::Coord y = 0; y < shape.dims()[1]; ++y) {
        const gp::Position here{{x, y}};
        char cell = '.';
        if (here == config.robber) cell = 'R';
        for (std::size_t i = 0; i < config.cops.size(); ++i) {
          if (config.cops[i] == here) {
            cell = here == config.robber ? 'X'
                                         : static_cast<char>('0' + (i % 10));
          }
        }
        out << cell;
      }
      out << '\n';
    }
    return;
  }
  for (std::size_t i = 0; i < config.cops.size(); ++i) {
    out << "cop " << i << " at " << gp::format_position(config.cops[i]) << '\n';
  }
  out << "robber at " << gp::format_position(config.robber) << '\n';
}

struct QuitRequested {};

int cmd_play(const PlayArgs& args) {
  GameSetup setup = build_setup(args.shape, args.cops, args.init_cops,
                                args.init_robber, args.seed, args.cap,
                                /*positions_required_from_seed=*/true);

  std::cout << "You are the robber on a " << gp::format_shape(setup.shape)
            << " grid. Enter moves as axis:+1 or axis:-1, q to quit.\n";

  auto prompt = [&](const gp::Configuration& config, const gp::GridShape& shape,
                    std::int64_t tick) -> gp::Jump {
    render_board(config, shape, std::cout);
    while (true) {
      std::cout << "[tick " << tick << "] your move> " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) throw QuitRequested{};
      if (line == "q" || line == "quit") throw QuitRequested{};
      try {
        const gp::Jump j = gp::parse_jump(line, shape);
        if (!gp::jump_in_bounds(config.robber, j, shape)) {
          std::cout << "that jump leaves the grid; try again\n";
          continue;
        }
        return j;
      } catch (const std::exception& e) {
        std::cout << e.what() << "; try again\n";
      }
    }
  };

  gp::InteractiveRobber robber(prompt);
  try {
    const gp::GameTrace trace =
        gp::run(setup.initial, robber, setup.cops, setup.shape, setup.cap);
    if (!trace.ticks.empty() || trace.outcome.captured) {
      const gp::Configuration& last = trace.ticks.empty()
                                          ? trace.initial
                                          : trace.ticks.back().after_cops;
      render_board(last, setup.shape, std::cout);
    }
    std::cout << outcome_line(trace.outcome) << '\n';
    if (trace.outcome.captured) {
      std::cout << "caught after " << trace.outcome.robber_jumps
                << " jumps\n";
    }
  } catch (const QuitRequested&) {
    std::cout << "\nbye\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops-and-robber pursuit games on n-dimensional grids"};
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Run one game");
  std::string config_doc;
  simulate->add_option("--config", config_doc,
                       "key=value config file; flags override file values");
  simulate->add_option("--shape", sim.shape, "Grid shape, e.g. 10x10 or 3x3x3")
      ->required();
  simulate->add_option("--cops", sim.cops,
                       "Cop strategies, e.g. alg1:0,alg1:1 or alg2s");
  simulate->add_option("--robber", sim.robber,
                       "Robber strategy (default greedy3)");
  CLI::Option* sim_seed =
      simulate->add_option("--seed", sim.seed, "Seed for drawn positions");
  simulate->add_option("--init-cops", sim.init_cops,
                       "Explicit cop positions, e.g. 0,0;2,2");
  simulate->add_option("--init-robber", sim.init_robber,
                       "Explicit robber position, e.g. 1,1");
  simulate->add_option("--cap", sim.cap, "Tick cap (0 = default)");
  simulate->add_option("--trace-out", sim.trace_out, "Trace output path");
  simulate->add_flag("--quiet", sim.quiet, "Suppress stdout lines");

  ExperimentArgs exp;
  CLI::App* experiment =
      app.add_subcommand("experiment", "Monte Carlo over random starts");
  experiment->add_option("--config", config_doc,
                      "key=value config file; flags override file values");
  experiment->add_option("--shape", exp.shape, "Grid shape")->required();
  experiment->add_option("--cops", exp.cops, "Cop strategies")->required();
  experiment->add_option("--robber", exp.robber, "Robber strategy")
      ->required();
  experiment->add_option("--trials", exp.trials, "Trial count")->required();
  experiment->add_option("--seed", exp.seed, "Master seed");
  experiment->add_option("--cap", exp.cap, "Tick cap (0 = default)");
  experiment->add_option("--workers", exp.workers,
                         "Worker threads (results are identical for any "
                         "count)");
  experiment->add_option("--out-csv", exp.out_csv, "Per-trial CSV path");
  experiment->add_option("--out-summary", exp.out_summary, "Summary path");

  VerifyArgs ver;
  CLI::App* verify =
      app.add_subcommand("verify",
                         "Mechanized checks of the capture and evasion claims");
  verify->add_option("--config", config_doc,
                      "key=value config file; flags override file values");
  verify->add_option("--claim", ver.claim,
                     "lemma1|lemma3|lemma4|theorem1|theorem2|theorem3|"
                     "theorem4|all");
  verify->add_option("--shapes", ver.shapes,
                     "Comma-separated shapes (per-claim defaults)");
  verify->add_option("--horizon", ver.horizon, "Survival horizon");
  verify->add_option("--node-budget", ver.node_budget,
                     "Adversarial search node budget");
  verify->add_option("--random-traces", ver.random_traces,
                     "Random games for trace-invariant claims");
  verify->add_option("--trials", ver.trials,
                     "Monte Carlo trials for theorem4");
  verify->add_option("--seed", ver.seed, "Master seed");
  verify->add_option("--out-dir", ver.out_dir, "Witness output directory");

  EnumerateArgs enm;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Exact even-parity pair fraction");
  enumerate->add_option("--config", config_doc,
                      "key=value config file; flags override file values");
  enumerate->add_option("--shape", enm.shape, "Two-dimensional shape")
      ->required();

  PlayArgs play;
  CLI::App* play_cmd =
      app.add_subcommand("play", "Drive the robber from the terminal");
  play_cmd->add_option("--config", config_doc,
                      "key=value config file; flags override file values");
  play_cmd->add_option("--shape", play.shape, "Grid shape")->required();
  play_cmd->add_option("--cops", play.cops, "Cop strategies");
  CLI::Option* play_seed =
      play_cmd->add_option("--seed", play.seed, "Seed for drawn positions");
  play_cmd->add_option("--init-cops", play.init_cops, "Explicit cop positions");
  play_cmd->add_option("--init-robber", play.init_robber,
                       "Explicit robber position");
  play_cmd->add_option("--cap", play.cap, "Tick cap (0 = default)");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const gp::InvalidDimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  sim.seed_given = sim_seed->count() > 0;
  play.seed_given = play_seed->count() > 0;

  try {
    if (simulate->parsed()) return cmd_simulate(sim);
    if (experiment->parsed()) {
      if (exp.trials < 1) {
        std::cerr << "error: --trials must be at least 1\n";
        return kExitUsage;
      }
      return cmd_experiment(exp);
    }
    if (verify->parsed()) return cmd_verify(ver);
    if (enumerate->parsed()) return cmd_enumerate(enm);
    if (play_cmd->parsed()) return cmd_play(play);
  } catch (const gp::OracleInfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const gp::IllegalMoveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const gp::InvalidDimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gp::InvalidPositionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
