#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fashion/decimal.hpp"
#include "fashion/dynamics.hpp"

namespace fashion {

enum class Family : std::uint8_t { Torus, SmallWorld, ModifiedSmallWorld };

std::string family_name(Family family);
Family parse_family(const std::string& name);

/// Parameter-grid campaign. Combinations are the cross product of the value
/// lists, ordered lexicographically by (k, q, r, p); run seeds derive from
/// (master_seed, combination index, replicate index), so the outcome does
/// not depend on worker count.
struct SweepConfig {
  Family family = Family::Torus;
  std::int32_t rows = 0, cols = 0;  // torus, modified small-world
  std::int32_t n = 0;               // small-world
  std::vector<std::int32_t> k_values{8};      // small-world density
  std::vector<Decimal> q_values{Decimal()};   // rewiring probability
  std::vector<Decimal> r_values;
  std::vector<Decimal> p_values;
  std::int64_t replicates = 10;
  std::int64_t max_steps = 500;
  std::uint64_t master_seed = 0;
  std::int32_t workers = 0;     // 0 = hardware concurrency
  bool keep_per_run = false;    // retain one row per run for the per-run log
};

struct SweepRow {
  Family family;
  std::int64_t n = 0;
  std::int32_t k = 0;
  Decimal q, r, p;
  std::int64_t replicates = 0;
  std::int64_t max_steps = 0;
  // replicate means of the terminal-profile indices
  double cooperation_degree = 0.0;
  double average_satisfaction = 0.0;
  double complete_ratio = 0.0;
  double equilibrium_ratio = 0.0;
  double mean_steps = 0.0;
};

struct RunOutcome {
  std::int64_t combination = 0;
  std::int64_t replicate = 0;
  std::uint64_t seed = 0;
  Termination termination;
  std::int64_t steps = 0;
  IndexCounts counts;
};

struct SweepResult {
  std::vector<SweepRow> rows;        // canonical (k, q, r, p) order
  std::vector<RunOutcome> per_run;   // filled iff keep_per_run
};

SweepResult run_sweep(const SweepConfig& config);

/// The fine-grained transition scan: a run_sweep with a 5000-step budget by
/// default and equilibrium ratio as the headline column.
SweepResult phase_scan(const std::vector<Decimal>& r_values,
                       const std::vector<Decimal>& p_values, std::int64_t replicates,
                       std::int64_t max_steps, const SweepConfig& network);

/// Header: family,n,k,q,r,p,reps,max_steps,coop_degree,avg_satisfaction,
/// complete_ratio,eq_ratio,mean_steps
void write_aggregate_csv(std::ostream& out, const SweepResult& result);

/// One row per run; requires keep_per_run.
void write_per_run_csv(std::ostream& out, const SweepConfig& config, const SweepResult& result);

}  // namespace fashion
