#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gridpursuit/cop_strategies.hpp"
#include "gridpursuit/engine.hpp"
#include "gridpursuit/grid.hpp"
#include "gridpursuit/robber_strategies.hpp"

namespace gridpursuit {

/// One Monte Carlo run: repeated games from uniform-random initial
/// configurations. Everything needed to reproduce the run bit-exactly.
struct ExperimentSpec {
  GridShape shape;
  std::vector<CopStrategySpec> cops;
  RobberStrategySpec robber;
  std::int64_t trials = 1;
  std::uint64_t master_seed = 0;
  std::int64_t tick_cap = 0;  // 0 = engine default for the cop set
  int workers = 1;            // never affects results, only wall time
};

struct StatsSummary {
  std::int64_t trials = 0;
  std::int64_t captures = 0;
  std::int64_t evasions = 0;
  std::int64_t zero_jump_captures = 0;  // immediately terminating draws
  std::int64_t min_jumps = 0;           // over captured trials
  std::int64_t max_jumps = 0;
  std::int64_t sum_jumps = 0;    // exact integer sums; no accumulation error
  std::int64_t sumsq_jumps = 0;

  double capture_rate() const;
  double mean_jumps() const;      // over captured trials
  double variance_jumps() const;  // population variance over captured trials
};

struct TrialRecord {
  std::int64_t trial_index = 0;
  std::uint64_t seed = 0;
  Configuration initial;
  bool captured = false;
  std::int64_t robber_jumps = 0;
  HalfStep half_step = HalfStep::None;
  int capturing_cop = -1;
};

/// SplitMix64 seed stream: trial i receives the i-th output of the reference
/// generator seeded with master_seed, i.e. mix(master_seed + (i+1)*golden).
/// Pinned bit-exactly (mix(0 + golden) = 0xE220A8397B1DCDAF, the published
/// first output for state 0) so independent implementations agree.
std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                std::uint64_t trial_index);

/// Uniform independent positions for m cops then the robber, one per-axis
/// draw each, from a SplitMix64 stream seeded with `seed`. Terminating draws
/// are kept; the harness counts them as 0-jump captures.
Configuration random_initial_configuration(const GridShape& shape,
                                           std::size_t m, std::uint64_t seed);

/// Runs the spec. `sink`, when provided, receives every trial record in
/// trial-index order regardless of worker count. Strategy errors abort with
/// the offending trial's seed in the message.
StatsSummary run_experiment(
    const ExperimentSpec& spec,
    const std::function<void(const TrialRecord&)>& sink = nullptr);

struct Theorem4Result {
  std::int64_t trials = 0;
  std::int64_t captures = 0;
  double capture_fraction = 0.0;
  double standard_error = 0.0;    // of the capture fraction
  std::int64_t parity_even_num = 0;  // exact enumerated fraction, reduced
  std::int64_t parity_even_den = 1;
};

/// Monte Carlo side of the average-case claim for the two-dimensional single
/// cop: random starts, one Algorithm-2 cop, and the capture fraction to set
/// against the exact even-parity enumeration.
Theorem4Result theorem4_frequency(
    const GridShape& shape, std::int64_t trials, std::uint64_t master_seed,
    const RobberStrategySpec& robber = RobberStrategySpec::parse("greedy3"));

// Per-trial CSV and summary files (newline-delimited UTF-8, versioned).
void write_trial_csv_header(std::ostream& out);
void write_trial_csv_row(std::ostream& out, const TrialRecord& record);
void write_summary(std::ostream& out, const ExperimentSpec& spec,
                   const StatsSummary& summary);

}  // namespace gridpursuit
