// fashion — simulation CLI: single runs, parameter sweeps, phase scans,
// grid rendering, and the exhaustive equilibrium oracle.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fashion/dynamics.hpp"
#include "fashion/errors.hpp"
#include "fashion/graph.hpp"
#include "fashion/metrics.hpp"
#include "fashion/oracle.hpp"
#include "fashion/patterns.hpp"
#include "fashion/state_io.hpp"
#include "fashion/sweep.hpp"

namespace fs = std::filesystem;
using namespace fashion;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  return in;
}

Network load_edges(const std::string& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

const char* termination_name(TerminationKind kind) {
  switch (kind) {
    case TerminationKind::EquilibriumReached:
      return "equilibrium";
    case TerminationKind::Period2Cycle:
      return "cycle2";
    case TerminationKind::StepBudgetExhausted:
    default:
      return "budget";
  }
}

struct NetworkFlags {
  std::string family = "torus";
  std::int32_t rows = 41, cols = 41;
  std::int32_t n = 200;
  std::string k = "8";
  std::string q = "0";

  void attach(CLI::App* cmd, bool lists) {
    cmd->add_option("--family", family, "network family: torus | smallworld | msw")
        ->check(CLI::IsMember({"torus", "smallworld", "msw"}));
    cmd->add_option("--rows", rows, "torus/msw grid rows");
    cmd->add_option("--cols", cols, "torus/msw grid cols");
    cmd->add_option("--n", n, "small-world node count");
    cmd->add_option("--k", k, lists ? "small-world degree list (a:b:s or comma list)"
                                    : "small-world degree");
    cmd->add_option("--q", q, lists ? "rewiring probability list" : "rewiring probability");
  }
};

std::vector<std::int32_t> parse_int_list(const std::string& text) {
  std::vector<std::int32_t> out;
  for (const Decimal& d : parse_decimal_list(text)) {
    if (d.exponent() < 0) throw ParameterError("expected integer values, got " + d.to_string());
    out.push_back(static_cast<std::int32_t>(d.to_double()));
  }
  return out;
}

SweepConfig sweep_config_from(const NetworkFlags& net, const std::string& r,
                              const std::string& p, std::int64_t reps, std::int64_t steps,
                              std::uint64_t seed, std::int32_t workers) {
  SweepConfig config;
  config.family = parse_family(net.family);
  config.rows = net.rows;
  config.cols = net.cols;
  config.n = net.n;
  if (config.family == Family::SmallWorld) config.k_values = parse_int_list(net.k);
  if (config.family != Family::Torus) config.q_values = parse_decimal_list(net.q);
  config.r_values = parse_decimal_list(r);
  config.p_values = parse_decimal_list(p);
  config.replicates = reps;
  config.max_steps = steps;
  config.master_seed = seed;
  config.workers = workers;
  return config;
}

void print_state_report(const Network& network, const GameState& state) {
  IndexTriple t = indices(network, state.types, state.actions);
  std::cout << "n " << network.node_count() << "\n";
  std::cout << "cooperation_degree " << fmt(t.cooperation_degree) << "\n";
  std::cout << "average_satisfaction " << fmt(t.average_satisfaction) << "\n";
  std::cout << "complete_ratio " << fmt(t.complete_ratio) << "\n";
  std::cout << "equilibrium " << (is_equilibrium(network, state.types, state.actions) ? "yes" : "no")
            << "\n";
  ContinentDecomposition d = continents(network, state.actions);
  std::cout << "continents " << d.count << "\n";
  std::cout << "largest_continent " << (d.sizes.empty() ? 0 : d.sizes.front()) << "\n";
  if (state.grid) {
    StreetStatistics s = street_statistics(*state.grid, state.types, state.actions);
    std::cout << "street_fraction " << fmt(s.street_fraction) << "\n";
    std::cout << "corner_fraction " << fmt(s.corner_fraction) << "\n";
  }
}

// ---- subcommand drivers ----

struct RunArgs {
  NetworkFlags net;
  std::string r = "0.5", p = "0.5";
  std::int64_t steps = 500;
  std::uint64_t seed = 0;
  std::int64_t snapshots = 0;
  std::int32_t cell_pixels = 8;
  std::string out_dir, traj_path, state_path, graph_path;
  bool record_traj = false;
};

int do_run(const RunArgs& args) {
  RunConfig config;
  Family family = parse_family(args.net.family);
  std::optional<TorusSpec> grid;
  switch (family) {
    case Family::Torus:
      grid = TorusSpec{args.net.rows, args.net.cols};
      config.network = *grid;
      break;
    case Family::SmallWorld:
      config.network = SmallWorldSpec{args.net.n, parse_int_list(args.net.k).at(0),
                                      Decimal::parse(args.net.q).to_double()};
      break;
    case Family::ModifiedSmallWorld:
      grid = TorusSpec{args.net.rows, args.net.cols};
      config.network =
          ModifiedSmallWorldSpec{*grid, Decimal::parse(args.net.q).to_double()};
      break;
  }
  config.rebel_ratio = Decimal::parse(args.r).to_double();
  config.update_probability = Decimal::parse(args.p).to_double();
  config.max_steps = args.steps;
  config.master_seed = args.seed;
  config.record_trajectory = args.record_traj || !args.traj_path.empty();
  config.snapshot_stride = args.snapshots;
  if (args.snapshots > 0 && !grid)
    throw ParameterError("snapshots need grid geometry (torus or msw family)");
  if (args.snapshots > 0 && args.out_dir.empty())
    throw ParameterError("--snapshots needs --out DIR for the frames");

  RunRecord record = run(config);
  IndexTriple t = indices(record.terminal_counts);
  std::cout << "family " << family_name(family) << "\n";
  std::cout << "n " << record.terminal_counts.n << "\n";
  std::cout << "termination " << termination_name(record.termination.kind) << "\n";
  std::cout << "steps " << record.steps_executed << "\n";
  std::cout << "cooperation_degree " << fmt(t.cooperation_degree) << "\n";
  std::cout << "average_satisfaction " << fmt(t.average_satisfaction) << "\n";
  std::cout << "complete_ratio " << fmt(t.complete_ratio) << "\n";

  if (!args.traj_path.empty()) {
    auto out = open_output(args.traj_path);
    write_trajectory_csv(out, record);
  }
  if (!args.state_path.empty()) {
    auto out = open_output(args.state_path);
    write_state(out, GameState{grid, record.types, record.terminal_profile});
  }
  if (!args.graph_path.empty()) {
    auto out = open_output(args.graph_path);
    write_edge_list(out, build_network(config));
  }
  if (args.snapshots > 0) {
    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec) throw IoError("cannot create directory: " + args.out_dir);
    const std::string run_id = family_name(family) + std::to_string(grid->rows) + "x" +
                               std::to_string(grid->cols) + "_s" + std::to_string(args.seed);
    for (const auto& [step, profile] : record.snapshots) {
      std::vector<std::uint8_t> bytes = render(*grid, record.types, profile, args.cell_pixels);
      const fs::path frame =
          fs::path(args.out_dir) / (run_id + "_step" + std::to_string(step) + ".ppm");
      auto out = open_output(frame.string());
      out.write(reinterpret_cast<const char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
    }
    std::cout << "frames " << record.snapshots.size() << "\n";
  }
  return 0;
}

int do_sweep(const SweepConfig& config, const std::string& out_path,
             const std::string& per_run_path) {
  SweepConfig effective = config;
  effective.keep_per_run = !per_run_path.empty();
  SweepResult result = run_sweep(effective);
  auto out = open_output(out_path);
  write_aggregate_csv(out, result);
  if (!per_run_path.empty()) {
    auto log = open_output(per_run_path);
    write_per_run_csv(log, effective, result);
  }
  std::cout << "rows " << result.rows.size() << "\n";
  return 0;
}

int do_oracle(const std::string& edges_path, const std::string& types_text, bool list,
              std::int32_t limit) {
  Network net = load_edges(edges_path);
  if (types_text.size() != static_cast<std::size_t>(net.node_count()))
    throw ParameterError("--types must give one C/R letter per node");
  TypeAssignment types;
  for (char c : types_text) {
    if (c == 'C' || c == 'c')
      types.push_back(AgentType::Conformist);
    else if (c == 'R' || c == 'r')
      types.push_back(AgentType::Rebel);
    else
      throw ParameterError(std::string("bad type letter '") + c + "'");
  }
  EquilibriumSet set = enumerate_equilibria(net, types, limit);
  std::cout << set.profiles.size() << " equilibria\n";
  if (list) {
    for (std::uint64_t bits : set.profiles) {
      std::string pattern(static_cast<std::size_t>(set.n), '0');
      for (std::int32_t i = 0; i < set.n; ++i)
        if ((bits >> i) & 1u) pattern[static_cast<std::size_t>(i)] = '1';
      std::cout << pattern << "\n";  // agent 0 leftmost
    }
  }
  return 0;
}

int do_render(const std::string& state_path, std::int32_t cell_pixels,
              const std::string& out_path) {
  auto in = open_input(state_path);
  GameState state = read_state(in);
  if (!state.grid) throw ParameterError("state file has no grid dims; cannot render");
  std::vector<std::uint8_t> bytes = render(*state.grid, state.types, state.actions, cell_pixels);
  auto out = open_output(out_path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  return 0;
}

int do_analyze(const std::string& state_path, const std::string& edges_path) {
  auto in = open_input(state_path);
  GameState state = read_state(in);
  Network network;
  if (!edges_path.empty()) {
    network = load_edges(edges_path);
  } else if (state.grid) {
    network = make_torus(*state.grid);
  } else {
    throw ParameterError("analyze needs --edges for states without grid dims");
  }
  print_state_report(network, state);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fashion game simulator: conformists and rebels under the probabilistic "
               "synchronous best-response dynamic"};
  app.require_subcommand(1);

  // run
  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "simulate one seeded run");
  run_args.net.attach(run_cmd, false);
  run_cmd->add_option("--r", run_args.r, "rebel ratio");
  run_cmd->add_option("--p", run_args.p, "updating probability");
  run_cmd->add_option("--steps", run_args.steps, "step budget")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run_args.seed, "master seed");
  run_cmd->add_option("--snapshots", run_args.snapshots, "write a PPM frame every S steps")
      ->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--cell-pixels", run_args.cell_pixels, "square pixels per agent")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", run_args.out_dir, "frame output directory");
  run_cmd->add_option("--traj", run_args.traj_path, "write per-step index CSV here");
  run_cmd->add_option("--dump-state", run_args.state_path, "write terminal types+actions here");
  run_cmd->add_option("--dump-graph", run_args.graph_path, "write the network edge list here");

  // sweep
  NetworkFlags sweep_net;
  std::string sweep_r = "0:1:0.05", sweep_p = "0.05:1:0.05";
  std::int64_t sweep_reps = 10, sweep_steps = 500;
  std::uint64_t sweep_seed = 0;
  std::int32_t sweep_workers = 0;
  std::string sweep_out, sweep_log;
  auto* sweep_cmd = app.add_subcommand("sweep", "replicate-averaged parameter grid");
  sweep_net.attach(sweep_cmd, true);
  sweep_cmd->add_option("--r", sweep_r, "rebel ratio grid");
  sweep_cmd->add_option("--p", sweep_p, "updating probability grid");
  sweep_cmd->add_option("--reps", sweep_reps, "replicates per combination")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--steps", sweep_steps, "step budget per run")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sweep_seed, "master seed")->required();
  sweep_cmd->add_option("--workers", sweep_workers, "worker threads (0 = all cores)");
  sweep_cmd->add_option("--out", sweep_out, "aggregate CSV path")->required();
  sweep_cmd->add_option("--per-run-log", sweep_log, "also write one CSV row per run");
  sweep_cmd->set_config("--config", "", "key = value defaults, flags override");

  // phase
  NetworkFlags phase_net;
  std::string phase_r = "1", phase_p = "0.8:1:0.005";
  std::int64_t phase_reps = 10, phase_steps = 5000;
  std::uint64_t phase_seed = 0;
  std::int32_t phase_workers = 0;
  std::string phase_out, phase_log;
  auto* phase_cmd = app.add_subcommand("phase", "fine-grained phase-transition scan");
  phase_net.attach(phase_cmd, true);
  phase_cmd->add_option("--r", phase_r, "rebel ratio grid");
  phase_cmd->add_option("--p", phase_p, "updating probability grid");
  phase_cmd->add_option("--reps", phase_reps, "replicates per combination")
      ->check(CLI::PositiveNumber);
  phase_cmd->add_option("--steps", phase_steps, "step budget per run")
      ->check(CLI::PositiveNumber);
  phase_cmd->add_option("--seed", phase_seed, "master seed")->required();
  phase_cmd->add_option("--workers", phase_workers, "worker threads (0 = all cores)");
  phase_cmd->add_option("--out", phase_out, "aggregate CSV path")->required();
  phase_cmd->add_option("--per-run-log", phase_log, "also write one CSV row per run");
  phase_cmd->set_config("--config", "", "key = value defaults, flags override");

  // render
  std::string render_state, render_out;
  std::int32_t render_cell_pixels = 8;
  auto* render_cmd = app.add_subcommand("render", "rasterize a dumped state to PPM");
  render_cmd->add_option("--state", render_state, "state file from run --dump-state")
      ->required();
  render_cmd->add_option("--cell-pixels", render_cell_pixels, "square pixels per agent")
      ->check(CLI::PositiveNumber);
  render_cmd->add_option("--out", render_out, "output .ppm path")->required();

  // oracle
  std::string oracle_edges, oracle_types;
  bool oracle_list = false;
  std::int32_t oracle_limit = 24;
  auto* oracle_cmd = app.add_subcommand("oracle", "enumerate all pure Nash equilibria");
  oracle_cmd->add_option("--edges", oracle_edges, "edge-list file ('# nodes=N' header)")
      ->required();
  oracle_cmd->add_option("--types", oracle_types, "one C/R letter per node")->required();
  oracle_cmd->add_flag("--list", oracle_list, "print each equilibrium as a bit string");
  oracle_cmd->add_option("--limit", oracle_limit, "exhaustive-search node limit")
      ->check(CLI::PositiveNumber);

  // analyze
  std::string analyze_state, analyze_edges;
  auto* analyze_cmd = app.add_subcommand("analyze", "recompute indices and continent stats");
  analyze_cmd->add_option("--state", analyze_state, "state file")->required();
  analyze_cmd->add_option("--edges", analyze_edges,
                          "edge list of the true network (required for rewired families)");

  try {
    app.parse(argc, argv);
    if (*run_cmd) return do_run(run_args);
    if (*sweep_cmd)
      return do_sweep(sweep_config_from(sweep_net, sweep_r, sweep_p, sweep_reps, sweep_steps,
                                        sweep_seed, sweep_workers),
                      sweep_out, sweep_log);
    if (*phase_cmd)
      return do_sweep(sweep_config_from(phase_net, phase_r, phase_p, phase_reps, phase_steps,
                                        phase_seed, phase_workers),
                      phase_out, phase_log);
    if (*render_cmd) return do_render(render_state, render_cell_pixels, render_out);
    if (*oracle_cmd) return do_oracle(oracle_edges, oracle_types, oracle_list, oracle_limit);
    if (*analyze_cmd) return do_analyze(analyze_state, analyze_edges);
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    // ParameterError and SizeError land here
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 2;
  }
}
