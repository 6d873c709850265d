#include "gridpursuit/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "gridpursuit/errors.hpp"
#include "gridpursuit/rng.hpp"
#include "gridpursuit/verification.hpp"

namespace gridpursuit {

double StatsSummary::capture_rate() const {
  return trials == 0 ? 0.0
                     : static_cast<double>(captures) /
                           static_cast<double>(trials);
}

double StatsSummary::mean_jumps() const {
  return captures == 0 ? 0.0
                       : static_cast<double>(sum_jumps) /
                             static_cast<double>(captures);
}

double StatsSummary::variance_jumps() const {
  if (captures == 0) return 0.0;
  const auto n = static_cast<__int128>(captures);
  const __int128 numer = n * static_cast<__int128>(sumsq_jumps) -
                         static_cast<__int128>(sum_jumps) *
                             static_cast<__int128>(sum_jumps);
  return static_cast<double>(static_cast<long double>(numer) /
                             (static_cast<long double>(captures) *
                              static_cast<long double>(captures)));
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                std::uint64_t trial_index) {
  return SplitMix64::mix(master_seed + (trial_index + 1) * SplitMix64::kGolden);
}

Configuration random_initial_configuration(const GridShape& shape,
                                           std::size_t m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto draw = [&] {
    Position p;
    p.coords.reserve(shape.n());
    for (Coord d : shape.dims()) {
      p.coords.push_back(static_cast<Coord>(
          rng.next_below(static_cast<std::uint64_t>(d))));
    }
    return p;
  };
  Configuration config;
  config.cops.reserve(m);
  for (std::size_t i = 0; i < m; ++i) config.cops.push_back(draw());
  config.robber = draw();
  return config;
}

namespace {

bool specs_are_full_alg1_set(const GridShape& shape,
                             const std::vector<CopStrategySpec>& specs) {
  if (specs.size() != shape.n()) return false;
  std::vector<bool> seen(shape.n(), false);
  for (const CopStrategySpec& spec : specs) {
    if (spec.kind != CopStrategySpec::Kind::AlgorithmOne) return false;
    const int i = spec.assigned_index;
    if (i < 0 || static_cast<std::size_t>(i) >= shape.n() ||
        seen[static_cast<std::size_t>(i)]) {
      return false;
    }
    seen[static_cast<std::size_t>(i)] = true;
  }
  return true;
}

std::int64_t resolve_tick_cap(const ExperimentSpec& spec) {
  if (spec.tick_cap > 0) return spec.tick_cap;
  if (specs_are_full_alg1_set(spec.shape, spec.cops)) {
    return static_cast<std::int64_t>(spec.shape.n()) *
               spec.shape.sum_dims() + 8;
  }
  return 10 * spec.shape.sum_dims();
}

using RobberFactory = std::function<std::unique_ptr<RobberStrategy>()>;

// Scripted robbers read their file once per experiment, not once per trial;
// every trial still gets a fresh instance.
RobberFactory make_robber_factory(const RobberStrategySpec& spec,
                                  const GridShape& shape) {
  if (spec.kind == RobberStrategySpec::Kind::Scripted) {
    auto script =
        std::make_shared<std::vector<Jump>>(load_jump_script(spec.script_path,
                                                             shape));
    return [script] { return std::make_unique<ScriptedRobber>(*script); };
  }
  return [spec, shape] { return make_robber_strategy(spec, shape); };
}

TrialRecord run_one_trial(const ExperimentSpec& spec, std::int64_t index,
                          std::int64_t tick_cap, bool full_alg1_set,
                          const RobberFactory& robber_factory) {
  TrialRecord record;
  record.trial_index = index;
  record.seed = derive_trial_seed(spec.master_seed,
                                  static_cast<std::uint64_t>(index));
  record.initial = random_initial_configuration(spec.shape, spec.cops.size(),
                                                record.seed);

  // Fresh strategy instances per trial; any internal randomness is seeded
  // from (trial seed, slot) so results do not depend on execution order.
  std::vector<std::unique_ptr<CopStrategy>> cops;
  std::vector<CopStrategy*> cop_ptrs;
  for (std::size_t k = 0; k < spec.cops.size(); ++k) {
    cops.push_back(make_cop_strategy(
        spec.cops[k], spec.shape,
        derive_trial_seed(record.seed, static_cast<std::uint64_t>(k) + 1)));
    cop_ptrs.push_back(cops.back().get());
  }
  std::unique_ptr<RobberStrategy> robber = robber_factory();

  GameTrace trace;
  try {
    trace = run(record.initial, *robber, cop_ptrs, spec.shape, tick_cap);
  } catch (const IllegalMoveError& e) {
    throw IllegalMoveError(e.agent(),
                           std::string(e.what()) + " (trial " +
                               std::to_string(index) + ", seed " +
                               std::to_string(record.seed) + ")");
  }

  record.captured = trace.outcome.captured;
  record.robber_jumps = trace.outcome.robber_jumps;
  record.half_step = trace.outcome.half_step;
  record.capturing_cop = trace.outcome.capturing_cop;

  if (!record.captured && full_alg1_set) {
    // Contradicts the n-cop sufficiency theorem; never a soft outcome.
    throw InternalConsistencyError(
        "full Algorithm-1 cop set failed to capture within the tick cap "
        "(trial " +
        std::to_string(index) + ", seed " + std::to_string(record.seed) + ")");
  }
  return record;
}

void accumulate(StatsSummary& summary, const TrialRecord& record) {
  ++summary.trials;
  if (!record.captured) {
    ++summary.evasions;
    return;
  }
  if (record.robber_jumps == 0) ++summary.zero_jump_captures;
  if (summary.captures == 0 || record.robber_jumps < summary.min_jumps) {
    summary.min_jumps = record.robber_jumps;
  }
  if (summary.captures == 0 || record.robber_jumps > summary.max_jumps) {
    summary.max_jumps = record.robber_jumps;
  }
  ++summary.captures;
  summary.sum_jumps += record.robber_jumps;
  summary.sumsq_jumps += record.robber_jumps * record.robber_jumps;
}

}  // namespace

StatsSummary run_experiment(const ExperimentSpec& spec,
                            const std::function<void(const TrialRecord&)>& sink) {
  if (spec.trials < 1) {
    throw InvalidDimensionError("experiment needs at least one trial");
  }
  if (spec.cops.empty()) {
    throw InvalidDimensionError("experiment needs at least one cop");
  }
  const int workers = std::max(1, spec.workers);
  const std::int64_t tick_cap = resolve_tick_cap(spec);
  const bool full_alg1 = specs_are_full_alg1_set(spec.shape, spec.cops);
  const RobberFactory robber_factory =
      make_robber_factory(spec.robber, spec.shape);

  StatsSummary summary;

  // Trials stream through fixed-size blocks: workers fill a block in
  // parallel, then records are consumed in index order, keeping memory
  // bounded and output independent of the worker count.
  const std::int64_t block_size = std::max<std::int64_t>(1024, workers * 256);
  std::vector<TrialRecord> block(static_cast<std::size_t>(block_size));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(block_size));

  for (std::int64_t start = 0; start < spec.trials; start += block_size) {
    const std::int64_t count = std::min(block_size, spec.trials - start);
    const auto work = [&](int worker) {
      for (std::int64_t off = worker; off < count; off += workers) {
        try {
          block[static_cast<std::size_t>(off)] = run_one_trial(
              spec, start + off, tick_cap, full_alg1, robber_factory);
        } catch (...) {
          errors[static_cast<std::size_t>(off)] = std::current_exception();
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (std::thread& t : pool) t.join();
    }
    for (std::int64_t off = 0; off < count; ++off) {
      if (errors[static_cast<std::size_t>(off)]) {
        std::rethrow_exception(errors[static_cast<std::size_t>(off)]);
      }
      const TrialRecord& record = block[static_cast<std::size_t>(off)];
      accumulate(summary, record);
      if (sink) sink(record);
    }
  }
  return summary;
}

Theorem4Result theorem4_frequency(const GridShape& shape, std::int64_t trials,
                                  std::uint64_t master_seed,
                                  const RobberStrategySpec& robber) {
  if (shape.n() != 2) {
    throw InvalidDimensionError(
        "the average-case capture claim is two-dimensional");
  }
  ExperimentSpec spec;
  spec.shape = shape;
  CopStrategySpec cop;
  cop.kind = CopStrategySpec::Kind::AlgorithmTwoS;
  spec.cops = {cop};
  spec.robber = robber;
  spec.trials = trials;
  spec.master_seed = master_seed;

  const StatsSummary summary = run_experiment(spec);

  Theorem4Result result;
  result.trials = summary.trials;
  result.captures = summary.captures;
  result.capture_fraction = summary.capture_rate();
  const double p = result.capture_fraction;
  result.standard_error =
      trials > 0 ? std::sqrt(p * (1.0 - p) / static_cast<double>(trials)) : 0.0;
  const Rational exact = enumerate_parity_fraction(shape);
  result.parity_even_num = exact.num;
  result.parity_even_den = exact.den;
  return result;
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string join_cop_positions(const std::vector<Position>& cops) {
  std::string out;
  for (std::size_t i = 0; i < cops.size(); ++i) {
    if (i) out += ';';
    out += format_position(cops[i]);
  }
  return out;
}

}  // namespace

void write_trial_csv_header(std::ostream& out) {
  out << "# gridpursuit-trials v1\n";
  out << "trial_index,seed,cop_positions,robber_position,outcome,"
         "robber_jumps,capture_half_step,capturing_cop\n";
}

void write_trial_csv_row(std::ostream& out, const TrialRecord& record) {
  out << record.trial_index << ',' << record.seed << ",\""
      << join_cop_positions(record.initial.cops) << "\",\""
      << format_position(record.initial.robber) << "\","
      << (record.captured ? "captured" : "evaded") << ','
      << record.robber_jumps << ',';
  if (record.captured) {
    out << half_step_name(record.half_step) << ',' << record.capturing_cop;
  } else {
    out << "-,-";
  }
  out << '\n';
}

void write_summary(std::ostream& out, const ExperimentSpec& spec,
                   const StatsSummary& summary) {
  out << "gridpursuit-summary v1\n";
  out << "shape=" << format_shape(spec.shape) << '\n';
  out << "cops=";
  for (std::size_t i = 0; i < spec.cops.size(); ++i) {
    if (i) out << ',';
    out << spec.cops[i].canonical_name();
  }
  out << '\n';
  out << "robber=" << spec.robber.canonical_name() << '\n';
  out << "trials=" << spec.trials << '\n';
  out << "master_seed=" << spec.master_seed << '\n';
  out << "tick_cap=" << resolve_tick_cap(spec) << '\n';
  // Replication caveats: greedy means are sensitive to the tie rule, and
  // immediately terminating draws are kept rather than redrawn.
  out << "tie_break=neighbor-order-first-max\n";
  out << "zero_jump_capture_policy=counted-as-captures\n";
  out << "trials_run=" << summary.trials << '\n';
  out << "captures=" << summary.captures << '\n';
  out << "evasions=" << summary.evasions << '\n';
  out << "zero_jump_captures=" << summary.zero_jump_captures << '\n';
  out << "capture_rate=" << fixed6(summary.capture_rate()) << '\n';
  if (summary.captures > 0) {
    out << "robber_jumps_min=" << summary.min_jumps << '\n';
    out << "robber_jumps_max=" << summary.max_jumps << '\n';
    out << "robber_jumps_mean=" << fixed6(summary.mean_jumps()) << '\n';
    out << "robber_jumps_variance=" << fixed6(summary.variance_jumps()) << '\n';
  } else {
    out << "robber_jumps_min=-\nrobber_jumps_max=-\n"
           "robber_jumps_mean=-\nrobber_jumps_variance=-\n";
  }
}

}  // namespace gridpursuit
