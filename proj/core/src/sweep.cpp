#include "fashion/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ostream>
#include <thread>

#include "fashion/errors.hpp"

namespace fashion {

namespace {

struct Combination {
  std::int32_t k;
  Decimal q, r, p;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::vector<Combination> enumerate_combinations(const SweepConfig& config) {
  std::vector<Combination> combos;
  combos.reserve(config.k_values.size() * config.q_values.size() * config.r_values.size() *
                 config.p_values.size());
  for (std::int32_t k : config.k_values)
    for (const Decimal& q : config.q_values)
      for (const Decimal& r : config.r_values)
        for (const Decimal& p : config.p_values) combos.push_back({k, q, r, p});
  return combos;
}

void validate(const SweepConfig& config) {
  if (config.r_values.empty() || config.p_values.empty() || config.k_values.empty() ||
      config.q_values.empty())
    throw ParameterError("sweep value lists must be non-empty");
  if (config.replicates < 1) throw ParameterError("sweep needs replicates >= 1");
  if (config.max_steps < 1) throw ParameterError("sweep needs max_steps >= 1");
  const Decimal zero, one(1, 0);
  for (const Decimal& r : config.r_values)
    if (r < zero || one < r) throw ParameterError("rebel ratio out of [0,1]: " + r.to_string());
  for (const Decimal& p : config.p_values)
    if (!(zero < p) || one < p)
      throw ParameterError("update probability out of (0,1]: " + p.to_string());
  for (const Decimal& q : config.q_values)
    if (q < zero || one < q)
      throw ParameterError("rewiring probability out of [0,1]: " + q.to_string());
  switch (config.family) {
    case Family::Torus:
      if (config.q_values.size() != 1 || !(config.q_values[0] == zero))
        throw ParameterError("torus family takes no rewiring probability");
      [[fallthrough]];
    case Family::ModifiedSmallWorld:
      if (config.rows < 3 || config.cols < 3)
        throw ParameterError("grid families need rows, cols >= 3");
      if (config.k_values != std::vector<std::int32_t>{8})
        throw ParameterError("grid families have fixed degree 8");
      break;
    case Family::SmallWorld:
      if (config.n < 2) throw ParameterError("small-world family needs n >= 2");
      break;
  }
}

template <typename T>
void sort_unique(std::vector<T>& values) {
  std::sort(values.begin(), values.end(), [](const T& a, const T& b) { return a < b; });
  values.erase(std::unique(values.begin(), values.end(),
                           [](const T& a, const T& b) { return a == b; }),
               values.end());
}

// canonical (k, q, r, p) order is independent of how the caller listed values
SweepConfig normalized(const SweepConfig& config) {
  SweepConfig out = config;
  sort_unique(out.k_values);
  sort_unique(out.q_values);
  sort_unique(out.r_values);
  sort_unique(out.p_values);
  return out;
}

NetworkSpec make_spec(const SweepConfig& config, const Combination& combo) {
  switch (config.family) {
    case Family::Torus:
      return TorusSpec{config.rows, config.cols};
    case Family::SmallWorld:
      return SmallWorldSpec{config.n, combo.k, combo.q.to_double()};
    case Family::ModifiedSmallWorld:
    default:
      return ModifiedSmallWorldSpec{{config.rows, config.cols}, combo.q.to_double()};
  }
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::Torus:
      return "torus";
    case Family::SmallWorld:
      return "smallworld";
    case Family::ModifiedSmallWorld:
    default:
      return "msw";
  }
}

Family parse_family(const std::string& name) {
  if (name == "torus") return Family::Torus;
  if (name == "smallworld") return Family::SmallWorld;
  if (name == "msw") return Family::ModifiedSmallWorld;
  throw ParameterError("unknown network family: " + name);
}

SweepResult run_sweep(const SweepConfig& raw_config) {
  const SweepConfig config = normalized(raw_config);
  validate(config);
  const auto combos = enumerate_combinations(config);
  const std::int64_t reps = config.replicates;
  const std::int64_t total_runs = static_cast<std::int64_t>(combos.size()) * reps;
  const std::uint64_t sweep_seed = derive_seed(config.master_seed, stream::sweep);

  std::vector<RunOutcome> outcomes(static_cast<std::size_t>(total_runs));
  std::atomic<std::int64_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t job = cursor.fetch_add(1, std::memory_order_relaxed);
      if (job >= total_runs) return;
      const std::int64_t combo_idx = job / reps;
      const std::int64_t replicate = job % reps;
      const Combination& combo = combos[static_cast<std::size_t>(combo_idx)];
      RunConfig rc;
      rc.network = make_spec(config, combo);
      rc.rebel_ratio = combo.r.to_double();
      rc.update_probability = combo.p.to_double();
      rc.max_steps = config.max_steps;
      rc.master_seed = derive_seed(sweep_seed, static_cast<std::uint64_t>(job));
      RunRecord record = run(rc);
      outcomes[static_cast<std::size_t>(job)] = {combo_idx,          replicate,
                                                 rc.master_seed,     record.termination,
                                                 record.steps_executed, record.terminal_counts};
    }
  };

  std::int32_t workers = config.workers > 0
                             ? config.workers
                             : static_cast<std::int32_t>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<std::int32_t>(workers, static_cast<std::int32_t>(total_runs)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int32_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  // aggregate in job order: integer totals, one division per column
  SweepResult result;
  result.rows.reserve(combos.size());
  for (std::size_t c = 0; c < combos.size(); ++c) {
    const Combination& combo = combos[c];
    std::int64_t satisfied = 0, complete = 0, agents = 0, equilibria = 0, steps = 0;
    double satisfaction = 0.0;
    for (std::int64_t rep = 0; rep < reps; ++rep) {
      const auto& outcome = outcomes[c * static_cast<std::size_t>(reps) +
                                     static_cast<std::size_t>(rep)];
      satisfied += outcome.counts.satisfied;
      complete += outcome.counts.completely_satisfied;
      agents += outcome.counts.n;
      satisfaction += outcome.counts.satisfaction_sum / outcome.counts.n;
      equilibria += outcome.counts.equilibrium();
      steps += outcome.steps;
    }
    SweepRow row;
    row.family = config.family;
    row.n = outcomes[c * static_cast<std::size_t>(reps)].counts.n;
    row.k = config.family == Family::SmallWorld ? combo.k : 8;
    row.q = combo.q;
    row.r = combo.r;
    row.p = combo.p;
    row.replicates = reps;
    row.max_steps = config.max_steps;
    row.cooperation_degree = static_cast<double>(satisfied) / static_cast<double>(agents);
    row.average_satisfaction = satisfaction / static_cast<double>(reps);
    row.complete_ratio = static_cast<double>(complete) / static_cast<double>(agents);
    row.equilibrium_ratio = static_cast<double>(equilibria) / static_cast<double>(reps);
    row.mean_steps = static_cast<double>(steps) / static_cast<double>(reps);
    result.rows.push_back(row);
  }
  if (config.keep_per_run) result.per_run = std::move(outcomes);
  return result;
}

SweepResult phase_scan(const std::vector<Decimal>& r_values,
                       const std::vector<Decimal>& p_values, std::int64_t replicates,
                       std::int64_t max_steps, const SweepConfig& network) {
  SweepConfig config = network;
  config.r_values = r_values;
  config.p_values = p_values;
  config.replicates = replicates;
  config.max_steps = max_steps > 0 ? max_steps : 5000;
  return run_sweep(config);
}

void write_aggregate_csv(std::ostream& out, const SweepResult& result) {
  out << "family,n,k,q,r,p,reps,max_steps,coop_degree,avg_satisfaction,complete_ratio,"
         "eq_ratio,mean_steps\n";
  for (const auto& row : result.rows) {
    out << family_name(row.family) << "," << row.n << "," << row.k << "," << row.q.to_string()
        << "," << row.r.to_string() << "," << row.p.to_string() << "," << row.replicates << ","
        << row.max_steps << "," << fmt(row.cooperation_degree) << ","
        << fmt(row.average_satisfaction) << "," << fmt(row.complete_ratio) << ","
        << fmt(row.equilibrium_ratio) << "," << fmt(row.mean_steps) << "\n";
  }
}

void write_per_run_csv(std::ostream& out, const SweepConfig& raw_config,
                       const SweepResult& result) {
  const SweepConfig config = normalized(raw_config);
  const auto combos = enumerate_combinations(config);
  out << "family,n,k,q,r,p,replicate,seed,termination,steps,coop_degree,avg_satisfaction,"
         "complete_ratio\n";
  for (const auto& outcome : result.per_run) {
    const Combination& combo = combos[static_cast<std::size_t>(outcome.combination)];
    const char* cause = outcome.termination.kind == TerminationKind::EquilibriumReached
                            ? "equilibrium"
                            : outcome.termination.kind == TerminationKind::Period2Cycle
                                  ? "cycle2"
                                  : "budget";
    const IndexTriple t = indices(outcome.counts);
    out << family_name(config.family) << "," << outcome.counts.n << ","
        << (config.family == Family::SmallWorld ? combo.k : 8) << "," << combo.q.to_string()
        << "," << combo.r.to_string() << "," << combo.p.to_string() << "," << outcome.replicate
        << "," << outcome.seed << "," << cause << "," << outcome.steps << ","
        << fmt(t.cooperation_degree) << "," << fmt(t.average_satisfaction) << ","
        << fmt(t.complete_ratio) << "\n";
  }
}

}  // namespace fashion
