#include "gridpursuit/verification.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "gridpursuit/cop_strategies.hpp"
#include "gridpursuit/errors.hpp"
#include "gridpursuit/experiments.hpp"
#include "gridpursuit/robber_strategies.hpp"

namespace gridpursuit {

namespace {

constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 2;

std::string scope_for(const GridShape& shape, const std::string& extra) {
  std::string s = "shape=" + format_shape(shape);
  if (!extra.empty()) s += ";" + extra;
  return s;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::string format_claim_report(const ClaimReport& report) {
  std::ostringstream out;
  out << "claim=" << report.claim_id << " scope=" << report.scope
      << " verdict=" << verdict_name(report.verdict)
      << " checked=" << report.cases_checked
      << " inapplicable=" << report.cases_inapplicable;
  for (const auto& [key, value] : report.stats) {
    out << ' ' << key << '=' << value;
  }
  if (!report.note.empty()) out << " note=\"" << report.note << '"';
  return out.str();
}

// ---------------------------------------------------------------------------
// Trace invariants: replay, Lemma 1 parity, Proposition 1 alternation,
// Lemma 2 favorability.
// ---------------------------------------------------------------------------

ClaimReport check_trace_invariants(const GameTrace& trace) {
  ClaimReport report;
  report.claim_id = "trace-invariants";
  report.scope = scope_for(trace.shape,
                           "ticks=" + std::to_string(trace.ticks.size()));

  const GridShape& shape = trace.shape;
  require_configuration(trace.initial, shape);
  const std::size_t m = trace.initial.num_cops();
  const int n = static_cast<int>(shape.n());

  const auto violated = [&](std::int64_t tick, const std::string& what) {
    report.verdict = Verdict::Violated;
    report.note = what + " at tick " + std::to_string(tick);
    report.witness = trace;
    return report;
  };

  std::vector<int> initial_parity;
  {
    const DistanceReport d = distance_report(trace.initial);
    for (const CopDistance& cd : d.cops) initial_parity.push_back(cd.parity);
  }

  Configuration state = trace.initial;
  for (std::size_t k = 0; k < trace.ticks.size(); ++k) {
    const TickRecord& tr = trace.ticks[k];
    if (tr.after_robber.num_cops() != m || tr.after_cops.num_cops() != m) {
      throw TraceFormatError("tick " + std::to_string(tr.tick) +
                             " changes the cop count");
    }
    if (tr.tick != static_cast<std::int64_t>(k)) {
      return violated(tr.tick, "tick indices out of order");
    }
    if (terminating(state)) {
      return violated(tr.tick, "tick recorded after a terminating configuration");
    }

    // Replay: recorded configurations must follow from the recorded jumps.
    if (!jump_in_bounds(state.robber, tr.robber_jump, shape)) {
      return violated(tr.tick, "robber jump leaves the grid");
    }
    Configuration expect_after_robber = state;
    expect_after_robber.robber =
        apply_jump(state.robber, tr.robber_jump, shape);
    if (expect_after_robber != tr.after_robber) {
      return violated(tr.tick, "post-robber configuration does not replay");
    }

    const bool robber_half_capture = terminating(tr.after_robber);
    if (robber_half_capture) {
      if (!tr.capture || tr.capture_half != HalfStep::RobberMove ||
          !tr.cop_jumps.empty() || tr.after_cops != tr.after_robber) {
        return violated(tr.tick, "robber half-step capture recorded wrongly");
      }
    } else {
      if (tr.cop_jumps.size() != m) {
        return violated(tr.tick, "cop jump count mismatch");
      }
      Configuration expect_after_cops = tr.after_robber;
      for (std::size_t i = 0; i < m; ++i) {
        if (!jump_in_bounds(state.cops[i], tr.cop_jumps[i], shape)) {
          return violated(tr.tick,
                          "cop " + std::to_string(i) + " jump leaves the grid");
        }
        expect_after_cops.cops[i] =
            apply_jump(state.cops[i], tr.cop_jumps[i], shape);
      }
      if (expect_after_cops != tr.after_cops) {
        return violated(tr.tick, "post-cop configuration does not replay");
      }
      if (terminating(tr.after_cops) != tr.capture ||
          (tr.capture && tr.capture_half != HalfStep::CopMove)) {
        return violated(tr.tick, "capture flag disagrees with configurations");
      }
    }

    // Proposition 1: each half-step changes every cop's distance by exactly 1.
    const DistanceReport d0 = distance_report(state);
    const DistanceReport d1 = distance_report(tr.after_robber);
    for (std::size_t i = 0; i < m; ++i) {
      if (std::llabs(d1.cops[i].total - d0.cops[i].total) != 1) {
        return violated(tr.tick, "robber half-step distance change != 1 for cop " +
                                     std::to_string(i));
      }
    }
    if (!robber_half_capture) {
      const DistanceReport d2 = distance_report(tr.after_cops);
      for (std::size_t i = 0; i < m; ++i) {
        if (std::llabs(d2.cops[i].total - d1.cops[i].total) != 1) {
          return violated(tr.tick, "cop half-step distance change != 1 for cop " +
                                       std::to_string(i));
        }
      }
      // Lemma 1: full-tick parity equals the initial parity.
      for (std::size_t i = 0; i < m; ++i) {
        if (d2.cops[i].parity != initial_parity[i]) {
          return violated(tr.tick,
                          "full-tick parity flip for cop " + std::to_string(i));
        }
      }
    }

    // Lemma 2: a jump along axis p is favorable to cop p*1 when it exists.
    const std::size_t lemma2_cop =
        static_cast<std::size_t>(wrap_index(tr.robber_jump.axis, 1, n));
    if (lemma2_cop < m) {
      if (!is_favorable(lemma2_cop, state, tr.robber_jump, shape)) {
        return violated(tr.tick, "jump on axis " +
                                     std::to_string(tr.robber_jump.axis) +
                                     " not favorable to cop " +
                                     std::to_string(lemma2_cop));
      }
    }

    state = tr.after_cops;
    ++report.cases_checked;
  }

  // Outcome must agree with the tail of the tick list.
  const Outcome& oc = trace.outcome;
  if (oc.captured) {
    if (trace.ticks.empty()) {
      if (!terminating(trace.initial) || oc.half_step != HalfStep::Initial ||
          oc.robber_jumps != 0) {
        return violated(0, "initial-capture outcome does not match trace");
      }
    } else {
      const TickRecord& last = trace.ticks.back();
      if (!last.capture || last.capture_half != oc.half_step ||
          last.capturing_cop != oc.capturing_cop ||
          oc.robber_jumps != last.tick + 1) {
        return violated(last.tick, "outcome does not match final tick");
      }
    }
  } else {
    if (!trace.ticks.empty() && trace.ticks.back().capture) {
      return violated(trace.ticks.back().tick, "evaded outcome after capture");
    }
    if (oc.robber_jumps != static_cast<std::int64_t>(trace.ticks.size())) {
      return violated(oc.robber_jumps, "evaded outcome jump count mismatch");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Adversarial oracle
// ---------------------------------------------------------------------------

AdversarialOracle::AdversarialOracle(const GridShape& shape,
                                     std::vector<CopStrategy*> cops,
                                     std::int64_t node_budget)
    : shape_(shape), cops_(std::move(cops)), node_budget_(node_budget) {
  if (cops_.empty()) {
    throw std::invalid_argument("adversarial oracle needs at least one cop");
  }
  for (const CopStrategy* cop : cops_) {
    if (!cop->deterministic_memoryless()) {
      throw std::invalid_argument(
          "adversarial oracle requires deterministic memoryless cop "
          "strategies; got " +
          cop->name());
    }
  }
  num_nodes_ = shape_.num_nodes();
  // The memo key packs m+1 node indices into 64 bits; anything larger is far
  // beyond any node budget anyway.
  long double capacity = 1.0L;
  for (std::size_t i = 0; i < cops_.size() + 1; ++i) {
    capacity *= static_cast<long double>(num_nodes_);
  }
  if (capacity >= static_cast<long double>(
                      std::numeric_limits<std::uint64_t>::max())) {
    throw OracleInfeasibleError(
        "state space of " + format_shape(shape_) + " with " +
        std::to_string(cops_.size()) + " cops is not indexable in 64 bits");
  }
}

std::uint64_t AdversarialOracle::config_key(const Configuration& c) const {
  // Positions here come from validated transitions; skip revalidation.
  const auto index_of = [&](const Position& p) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < shape_.n(); ++i) {
      index = index * static_cast<std::uint64_t>(shape_.dims()[i]) +
              static_cast<std::uint64_t>(p.coords[i]);
    }
    return index;
  };
  std::uint64_t key = 0;
  for (const Position& cop : c.cops) {
    key = key * num_nodes_ + index_of(cop);
  }
  return key * num_nodes_ + index_of(c.robber);
}

bool AdversarialOracle::apply_robber_move(const Configuration& config,
                                          const Jump& move) {
  // Scratch assignment reuses buffers, so the hot path stays allocation-free.
  after_robber_ = config;
  after_robber_.robber.coords[static_cast<std::size_t>(move.axis)] +=
      static_cast<Coord>(move.dir);
  for (const Position& cop : after_robber_.cops) {
    if (cop == after_robber_.robber) return true;
  }
  // Simultaneous batch, identical to the engine's: every cop decides from the
  // same post-robber configuration.
  child_ = after_robber_;
  for (std::size_t i = 0; i < cops_.size(); ++i) {
    const std::optional<Jump> cj = cops_[i]->next(i, after_robber_, shape_, 0);
    if (!cj.has_value()) {
      throw InternalConsistencyError(
          "cop strategy reported capture in a non-terminating configuration");
    }
    if (!jump_in_bounds(after_robber_.cops[i], *cj, shape_)) {
      throw InternalConsistencyError(
          "cop strategy returned an out-of-bounds jump");
    }
    child_.cops[i].coords[static_cast<std::size_t>(cj->axis)] +=
        static_cast<Coord>(cj->dir);
  }
  return terminating(child_);
}

std::int64_t AdversarialOracle::solve(const Configuration& initial) {
  struct Frame {
    Configuration config;
    std::uint64_t key = 0;
    std::vector<Jump> moves;
    std::size_t next = 0;
    std::int64_t best = -1;
    int best_move = -1;
  };

  const std::uint64_t root_key = config_key(initial);
  if (const auto it = value_.find(root_key); it != value_.end()) {
    return it->second;
  }

  std::vector<Frame> stack;
  std::unordered_map<std::uint64_t, std::size_t> on_stack;  // key -> depth

  const auto push = [&](Configuration config, std::uint64_t key) {
    if (++expansions_ > node_budget_) {
      throw OracleInfeasibleError(
          "adversarial search exceeded its node budget of " +
          std::to_string(node_budget_) + " on " + format_shape(shape_));
    }
    Frame f;
    f.config = std::move(config);
    f.key = key;
    f.moves = neighbor_jumps(f.config.robber, shape_);
    on_stack.emplace(key, stack.size());
    stack.push_back(std::move(f));
  };

  push(initial, root_key);
  std::optional<std::int64_t> returned;

  while (!stack.empty()) {
    Frame& f = stack.back();

    if (returned.has_value()) {
      // A child frame finished; fold its value into the branch that spawned
      // it (the move consumed just before the push).
      const std::int64_t val =
          *returned >= kInfinite ? kInfinite : *returned + 1;
      returned.reset();
      if (val > f.best) {
        f.best = val;
        f.best_move = static_cast<int>(f.next - 1);
      }
    }

    bool descended = false;
    while (f.next < f.moves.size()) {
      const std::size_t idx = f.next++;
      const bool capture = apply_robber_move(f.config, f.moves[idx]);
      std::int64_t val;
      if (capture) {
        val = 1;
      } else {
        const std::uint64_t child_key = config_key(child_);
        if (on_stack.contains(child_key)) {
          // Back edge: the robber can drive this cycle forever.
          val = kInfinite;
        } else if (const auto it = value_.find(child_key);
                   it != value_.end()) {
          val = it->second >= kInfinite ? kInfinite : it->second + 1;
        } else {
          push(child_, child_key);
          descended = true;
          break;
        }
      }
      if (val > f.best) {
        f.best = val;
        f.best_move = static_cast<int>(idx);
      }
    }
    if (descended) continue;

    // All moves resolved.
    value_[f.key] = f.best;
    best_move_[f.key] = f.moves[static_cast<std::size_t>(f.best_move)];
    on_stack.erase(f.key);
    returned = f.best;
    stack.pop_back();
  }
  return *returned;
}

std::int64_t AdversarialOracle::max_survival(const Configuration& initial,
                                             std::int64_t horizon) {
  require_configuration(initial, shape_);
  if (initial.num_cops() != cops_.size()) {
    throw std::invalid_argument("configuration cop count != strategy count");
  }
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
  if (terminating(initial)) return 0;
  const std::int64_t value = solve(initial);
  return std::min(value, horizon);
}

std::vector<Jump> AdversarialOracle::best_line(const Configuration& initial,
                                               std::int64_t horizon) {
  max_survival(initial, horizon);  // ensure solved
  std::vector<Jump> line;
  Configuration config = initial;
  while (!terminating(config) &&
         static_cast<std::int64_t>(line.size()) < horizon) {
    const auto it = best_move_.find(config_key(config));
    if (it == best_move_.end()) {
      throw InternalConsistencyError("best line walked into an unsolved state");
    }
    line.push_back(it->second);
    if (apply_robber_move(config, it->second)) break;
    config = child_;
  }
  return line;
}

std::int64_t adversarial_survival(const GridShape& shape,
                                  std::span<CopStrategy* const> cop_strategies,
                                  const Configuration& initial,
                                  std::int64_t horizon,
                                  std::int64_t node_budget) {
  AdversarialOracle oracle(
      shape, std::vector<CopStrategy*>(cop_strategies.begin(),
                                       cop_strategies.end()),
      node_budget);
  return oracle.max_survival(initial, horizon);
}

// ---------------------------------------------------------------------------
// Theorem sweeps
// ---------------------------------------------------------------------------

namespace {

// Replays an oracle line through the real engine so a violation witness is a
// bona fide trace, reproducible independent of the oracle.
GameTrace replay_line(const GridShape& shape,
                      std::span<CopStrategy* const> cops,
                      const Configuration& initial, std::vector<Jump> line,
                      std::int64_t tick_cap) {
  ScriptedRobber robber(std::move(line));
  return run(initial, robber, cops, shape, std::max<std::int64_t>(tick_cap, 1));
}

// Enumerates all placements of `count` agents over the grid, as node indices.
class PlacementIter {
 public:
  PlacementIter(std::uint64_t num_nodes, std::size_t count)
      : num_nodes_(num_nodes), indices_(count, 0) {}

  bool done() const { return done_; }
  const std::vector<std::uint64_t>& indices() const { return indices_; }

  void advance() {
    for (std::size_t i = indices_.size(); i-- > 0;) {
      if (++indices_[i] < num_nodes_) return;
      indices_[i] = 0;
    }
    done_ = true;
  }

 private:
  std::uint64_t num_nodes_;
  std::vector<std::uint64_t> indices_;
  bool done_ = false;
};

}  // namespace

ClaimReport check_theorem2(const GridShape& shape, std::int64_t node_budget) {
  const std::size_t n = shape.n();
  const std::int64_t bound =
      static_cast<std::int64_t>(n) * shape.sum_dims();
  const std::uint64_t num_nodes = shape.num_nodes();

  std::vector<std::unique_ptr<CopStrategy>> owned;
  std::vector<CopStrategy*> cops;
  for (std::size_t i = 0; i < n; ++i) {
    owned.push_back(
        std::make_unique<AlgorithmOneCop>(static_cast<int>(i), shape));
    cops.push_back(owned.back().get());
  }

  ClaimReport report;
  report.claim_id = "theorem2";
  report.verdict = Verdict::Holds;

  AdversarialOracle oracle(shape, cops, node_budget);
  std::int64_t max_time = 0;
  std::uint64_t swept = 0;

  for (PlacementIter cop_iter(num_nodes, n); !cop_iter.done();
       cop_iter.advance()) {
    Configuration config;
    for (std::uint64_t idx : cop_iter.indices()) {
      config.cops.push_back(node_at(idx, shape));
    }
    for (std::uint64_t r = 0; r < num_nodes; ++r) {
      config.robber = node_at(r, shape);
      const std::int64_t survival = oracle.max_survival(config, bound + 1);
      ++swept;
      max_time = std::max(max_time, survival);
      if (survival > bound) {
        report.verdict = Verdict::Violated;
        report.note = "survival " + std::to_string(survival) +
                      " exceeds bound " + std::to_string(bound);
        report.witness = replay_line(shape, cops, config,
                                     oracle.best_line(config, bound + 1),
                                     bound + 1);
        for (const CopStrategy* cop : cops) {
          report.witness_meta.cop_strategy_names.push_back(cop->name());
        }
        report.witness_meta.robber_strategy_name = "scripted";
        report.witness_meta.tick_cap = bound + 1;
      }
      if (report.verdict == Verdict::Violated) break;
    }
    if (report.verdict == Verdict::Violated) break;
  }

  report.cases_checked = static_cast<std::int64_t>(swept);
  report.scope = scope_for(
      shape, "initial_configs=" + std::to_string(swept) + ";cops=" +
                 std::to_string(n));
  report.add_stat("bound", std::to_string(bound));
  report.add_stat("max_capture_time", std::to_string(max_time));
  report.add_stat("nodes_expanded", std::to_string(oracle.nodes_expanded()));
  return report;
}

ClaimReport check_theorem1(const GridShape& shape, std::size_t m,
                           std::int64_t horizon, int random_corpus,
                           std::uint64_t corpus_seed) {
  const std::size_t n = shape.n();
  if (m >= n) {
    throw InvalidDimensionError(
        "necessity check requires fewer cops than dimensions");
  }
  const std::uint64_t num_nodes = shape.num_nodes();

  ClaimReport report;
  report.claim_id = "theorem1";
  report.verdict = Verdict::Holds;

  std::int64_t games = 0;
  std::uint64_t config_index = 0;

  // All m-tuples of Algorithm-1 indices; duplicates included since the
  // theorem quantifies over every cop behavior anyway.
  std::vector<std::vector<int>> assignments;
  {
    std::vector<int> current(m, 0);
    bool more = true;
    while (more) {
      assignments.push_back(current);
      more = false;
      for (std::size_t i = m; i-- > 0;) {
        if (++current[i] < static_cast<int>(n)) {
          more = true;
          break;
        }
        current[i] = 0;
      }
    }
  }

  const auto run_and_check = [&](const Configuration& initial,
                                 std::vector<CopStrategy*>& cops,
                                 const std::string& label) {
    ParityEvaderRobber evader;
    const GameTrace trace = run(initial, evader, cops, shape, horizon);
    ++games;
    if (trace.outcome.captured) {
      report.verdict = Verdict::Violated;
      report.note = "parity evader captured against " + label + " after " +
                    std::to_string(trace.outcome.robber_jumps) + " jumps";
      report.witness = trace;
      for (const CopStrategy* cop : cops) {
        report.witness_meta.cop_strategy_names.push_back(cop->name());
      }
      report.witness_meta.robber_strategy_name = evader.name();
      report.witness_meta.tick_cap = horizon;
      return false;
    }
    return true;
  };

  for (PlacementIter cop_iter(num_nodes, m); !cop_iter.done();
       cop_iter.advance()) {
    Configuration config;
    for (std::uint64_t idx : cop_iter.indices()) {
      config.cops.push_back(node_at(idx, shape));
    }
    for (std::uint64_t r = 0; r < num_nodes; ++r, ++config_index) {
      config.robber = node_at(r, shape);
      const DistanceReport d = distance_report(config);
      const bool all_odd =
          std::all_of(d.cops.begin(), d.cops.end(),
                      [](const CopDistance& cd) { return cd.parity == 1; });
      if (!all_odd) {
        ++report.cases_inapplicable;
        continue;
      }
      ++report.cases_checked;

      for (const std::vector<int>& assignment : assignments) {
        std::vector<std::unique_ptr<CopStrategy>> owned;
        std::vector<CopStrategy*> cops;
        std::string label = "alg1 assignment";
        for (int idx : assignment) {
          owned.push_back(std::make_unique<AlgorithmOneCop>(idx, shape));
          cops.push_back(owned.back().get());
          label += " " + std::to_string(idx);
        }
        if (!run_and_check(config, cops, label)) goto finished;
      }
      for (int r_i = 0; r_i < random_corpus; ++r_i) {
        std::vector<std::unique_ptr<CopStrategy>> owned;
        std::vector<CopStrategy*> cops;
        for (std::size_t c = 0; c < m; ++c) {
          owned.push_back(std::make_unique<RandomJumpCop>(derive_trial_seed(
              corpus_seed,
              config_index * static_cast<std::uint64_t>(random_corpus * m) +
                  static_cast<std::uint64_t>(r_i) * m + c)));
          cops.push_back(owned.back().get());
        }
        if (!run_and_check(config, cops,
                           "random cop corpus #" + std::to_string(r_i))) {
          goto finished;
        }
      }
    }
  }
finished:
  report.scope = scope_for(
      shape, "m=" + std::to_string(m) + ";horizon=" + std::to_string(horizon));
  report.add_stat("games", std::to_string(games));
  report.add_stat("alg1_assignments", std::to_string(assignments.size()));
  report.add_stat("random_corpus", std::to_string(random_corpus));
  report.add_stat("corpus_seed", std::to_string(corpus_seed));
  return report;
}

ClaimReport check_theorem3_and_5(const GridShape& shape,
                                 std::optional<std::int64_t> fixed_c,
                                 std::int64_t node_budget) {
  if (shape.n() != 2) {
    throw InvalidDimensionError("single-cop sweep is two-dimensional");
  }
  const std::int64_t perimeter = shape.sum_dims();
  const std::int64_t horizon = 20 * perimeter;
  const std::uint64_t num_nodes = shape.num_nodes();

  auto cop = std::make_unique<AlgorithmTwoCop>(shape, TieRule::Deterministic,
                                               0, 0);
  std::vector<CopStrategy*> cops{cop.get()};

  ClaimReport report;
  report.claim_id = "theorem3";
  report.verdict = Verdict::Holds;

  AdversarialOracle oracle(shape, cops, node_budget);
  std::int64_t t_max = 0;

  for (std::uint64_t c = 0; c < num_nodes && report.verdict == Verdict::Holds;
       ++c) {
    for (std::uint64_t r = 0; r < num_nodes; ++r) {
      Configuration config{{node_at(c, shape)}, node_at(r, shape)};
      if (manhattan(config.cops[0], config.robber) % 2 != 0) {
        ++report.cases_inapplicable;
        continue;
      }
      ++report.cases_checked;
      const std::int64_t survival = oracle.max_survival(config, horizon);
      if (survival >= horizon) {
        report.verdict = Verdict::Violated;
        report.note = "even-distance start not captured within horizon " +
                      std::to_string(horizon);
        report.witness = replay_line(shape, cops, config,
                                     oracle.best_line(config, horizon),
                                     horizon);
        report.witness_meta.cop_strategy_names.push_back(cop->name());
        report.witness_meta.robber_strategy_name = "scripted";
        report.witness_meta.tick_cap = horizon;
        break;
      }
      t_max = std::max(t_max, survival);
    }
  }

  const std::int64_t c_value =
      fixed_c.has_value() ? *fixed_c
                          : (t_max + perimeter - 1) / std::max<std::int64_t>(
                                                          perimeter, 1);
  if (report.verdict == Verdict::Holds && t_max > c_value * perimeter) {
    report.verdict = Verdict::Violated;
    report.note = "T_max " + std::to_string(t_max) + " exceeds " +
                  std::to_string(c_value) + "*(d0+d1)=" +
                  std::to_string(c_value * perimeter);
    // The linear-time regression has no single offending game; the witness is
    // the slowest capture, reconstructed below if needed by callers.
  }

  report.scope = scope_for(shape, "horizon=" + std::to_string(horizon));
  report.add_stat("t_max", std::to_string(t_max));
  report.add_stat("c", std::to_string(c_value));
  report.add_stat("linear_bound", std::to_string(c_value * perimeter));
  report.add_stat("nodes_expanded", std::to_string(oracle.nodes_expanded()));
  return report;
}

Rational enumerate_parity_fraction(const GridShape& shape) {
  if (shape.n() != 2) {
    throw InvalidDimensionError("parity enumeration is two-dimensional");
  }
  const std::uint64_t num_nodes = shape.num_nodes();
  std::int64_t even = 0;
  std::int64_t total = 0;
  for (std::uint64_t c = 0; c < num_nodes; ++c) {
    const Position cop = node_at(c, shape);
    for (std::uint64_t r = 0; r < num_nodes; ++r) {
      const Position robber = node_at(r, shape);
      ++total;
      if (manhattan(cop, robber) % 2 == 0) ++even;
    }
  }
  const std::int64_t g = std::gcd(even, total);
  return Rational{even / g, total / g};
}

ClaimReport check_theorem4(const GridShape& shape, std::int64_t trials,
                           std::uint64_t master_seed) {
  ClaimReport report;
  report.claim_id = "theorem4";
  report.verdict = Verdict::Holds;

  const Rational exact = enumerate_parity_fraction(shape);
  report.cases_checked =
      static_cast<std::int64_t>(shape.num_nodes() * shape.num_nodes());
  report.add_stat("even_parity_fraction", std::to_string(exact.num) + "/" +
                                              std::to_string(exact.den));
  const double exact_value =
      static_cast<double>(exact.num) / static_cast<double>(exact.den);
  const bool exceeds_half = 2 * exact.num > exact.den;
  if (exceeds_half) {
    // Odd dimensions skew per-axis parity; the one-half average is exact
    // only when the per-axis parity counts balance.
    report.note = "even-parity fraction exceeds 1/2 on this shape";
  }

  if (trials > 0) {
    const Theorem4Result mc = theorem4_frequency(shape, trials, master_seed);
    report.add_stat("mc_trials", std::to_string(mc.trials));
    report.add_stat("mc_capture_fraction",
                    std::to_string(mc.capture_fraction));
    report.add_stat("mc_standard_error", std::to_string(mc.standard_error));
    if (std::abs(mc.capture_fraction - exact_value) >
        3.0 * mc.standard_error) {
      report.verdict = Verdict::Violated;
      report.note = "capture fraction " +
                    std::to_string(mc.capture_fraction) +
                    " departs from the enumerated fraction by more than 3 "
                    "standard errors";
    }
  }
  report.scope = scope_for(shape, "trials=" + std::to_string(trials));
  return report;
}

ClaimReport check_lemma3(const GameTrace& trace, std::size_t cop_index,
                         const GridShape& shape) {
  if (cop_index >= trace.initial.num_cops()) {
    throw InvalidPositionError("cop index out of range for trace");
  }
  const std::int64_t bound = shape.sum_dims();

  ClaimReport report;
  report.claim_id = "lemma3";
  report.scope = scope_for(shape, "cop=" + std::to_string(cop_index) +
                                      ";bound=" + std::to_string(bound));
  report.verdict = Verdict::Holds;

  std::int64_t favorable = 0;
  Configuration state = trace.initial;
  for (const TickRecord& tr : trace.ticks) {
    if (is_favorable(cop_index, state, tr.robber_jump, shape)) ++favorable;
    ++report.cases_checked;

    if (favorable >= bound) {
      // The cop must have caught up by now: this tick must end the game with
      // cop_index on the robber's node.
      const Configuration& final_config =
          tr.capture_half == HalfStep::RobberMove ? tr.after_robber
                                                  : tr.after_cops;
      const bool caught_by_cop =
          tr.capture && final_config.cops[cop_index] == final_config.robber;
      if (!caught_by_cop) {
        report.verdict = Verdict::Violated;
        report.note = "favorable count reached " + std::to_string(favorable) +
                      " without capture by cop " + std::to_string(cop_index) +
                      " at tick " + std::to_string(tr.tick);
        report.witness = trace;
        break;
      }
    }
    state = tr.after_cops;
  }
  report.add_stat("favorable_count", std::to_string(favorable));
  return report;
}

ClaimReport check_lemma4(const GameTrace& trace) {
  ClaimReport report;
  report.claim_id = "lemma4";
  report.scope = scope_for(trace.shape,
                           "ticks=" + std::to_string(trace.ticks.size()));
  report.verdict = Verdict::Holds;

  if (trace.shape.n() != 2 || trace.initial.num_cops() != 1) {
    report.verdict = Verdict::Inapplicable;
    report.note = "needs a single cop in two dimensions";
    return report;
  }
  if (manhattan(trace.initial.cops[0], trace.initial.robber) % 2 != 0) {
    report.verdict = Verdict::Inapplicable;
    report.note = "initial parity is odd";
    return report;
  }

  const auto sign = [](std::int64_t v) { return v < 0 ? -1 : v > 0 ? 1 : 0; };
  for (int axis = 0; axis < 2; ++axis) {
    bool moved = false;   // cop has jumped on this axis already
    int locked_sign = 0;  // first nonzero sign seen after that jump
    for (const TickRecord& tr : trace.ticks) {
      if (!moved) {
        if (!tr.cop_jumps.empty() && tr.cop_jumps[0].axis == axis) {
          moved = true;
        } else {
          continue;
        }
      }
      if (tr.cop_jumps.empty()) continue;  // no full-tick instant to sample
      const int s = sign(
          static_cast<std::int64_t>(
              tr.after_cops.cops[0].coords[static_cast<std::size_t>(axis)]) -
          tr.after_cops.robber.coords[static_cast<std::size_t>(axis)]);
      ++report.cases_checked;
      if (s == 0) continue;
      if (locked_sign == 0) {
        locked_sign = s;
      } else if (s != locked_sign) {
        report.verdict = Verdict::Violated;
        report.note = "sign of cop-robber gap on axis " +
                      std::to_string(axis) + " flipped at tick " +
                      std::to_string(tr.tick);
        report.witness = trace;
        return report;
      }
    }
  }
  return report;
}

std::optional<Jump> RandomJumpCop::next(std::size_t cop_index,
                                        const Configuration& config,
                                        const GridShape& shape,
                                        std::int64_t /*tick*/) {
  const Position& me = config.cops.at(cop_index);
  if (me == config.robber) return std::nullopt;
  const std::vector<Jump> moves = neighbor_jumps(me, shape);
  return moves[static_cast<std::size_t>(rng_.next_below(moves.size()))];
}

ClaimReport check_lemma1_random_games(std::span<const GridShape> shapes,
                                      std::int64_t count,
                                      std::uint64_t master_seed) {
  if (shapes.empty()) {
    throw InvalidDimensionError("need at least one shape");
  }
  ClaimReport report;
  report.claim_id = "lemma1";
  report.verdict = Verdict::Holds;

  std::int64_t captured = 0;
  for (std::int64_t k = 0; k < count; ++k) {
    const GridShape& shape =
        shapes[static_cast<std::size_t>(k) % shapes.size()];
    const std::size_t n = shape.n();
    const std::uint64_t seed =
        derive_trial_seed(master_seed, static_cast<std::uint64_t>(k));

    // Rotate through cop-set flavors valid for this shape.
    std::vector<std::unique_ptr<CopStrategy>> owned;
    std::vector<CopStrategy*> cops;
    const int flavor =
        static_cast<int>((static_cast<std::size_t>(k) / shapes.size()) % 4);
    if (flavor == 0 || (flavor == 2 && n != 2)) {
      for (std::size_t i = 0; i < n; ++i) {
        owned.push_back(
            std::make_unique<AlgorithmOneCop>(static_cast<int>(i), shape));
      }
    } else if (flavor == 1) {
      owned.push_back(std::make_unique<AlgorithmOneCop>(0, shape));
    } else if (flavor == 2) {
      owned.push_back(std::make_unique<AlgorithmTwoCop>(
          shape, TieRule::Deterministic, 0, 0));
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        owned.push_back(std::make_unique<RandomJumpCop>(
            derive_trial_seed(seed, 100 + i)));
      }
    }
    for (auto& cop : owned) cops.push_back(cop.get());

    const Configuration initial =
        random_initial_configuration(shape, cops.size(), seed);

    // Robber mix: the three greedy evaluators plus the parity evader whenever
    // its preconditions hold for the drawn configuration.
    std::unique_ptr<RobberStrategy> robber;
    const int robber_pick = static_cast<int>(k % 4);
    if (robber_pick == 3 && cops.size() < n) {
      const DistanceReport d = distance_report(initial);
      const bool all_odd =
          std::all_of(d.cops.begin(), d.cops.end(),
                      [](const CopDistance& cd) { return cd.parity == 1; });
      if (all_odd && !terminating(initial)) {
        robber = std::make_unique<ParityEvaderRobber>();
      }
    }
    if (!robber) {
      const GreedyMetric metric =
          robber_pick == 0   ? GreedyMetric::SumSquaredEuclidean
          : robber_pick == 1 ? GreedyMetric::SumManhattan
                             : GreedyMetric::SumEuclidean;
      robber = std::make_unique<GreedyRobber>(metric);
    }

    const std::int64_t cap = default_tick_cap(shape, cops);
    const GameTrace trace = run(initial, *robber, cops, shape, cap);
    if (trace.outcome.captured) ++captured;

    ClaimReport inner = check_trace_invariants(trace);
    ++report.cases_checked;
    if (inner.verdict != Verdict::Holds) {
      report.verdict = Verdict::Violated;
      report.note = "game " + std::to_string(k) + " (seed " +
                    std::to_string(seed) + "): " + inner.note;
      report.witness = std::move(inner.witness);
      for (const CopStrategy* cop : cops) {
        report.witness_meta.cop_strategy_names.push_back(cop->name());
      }
      report.witness_meta.robber_strategy_name = robber->name();
      report.witness_meta.seed = std::to_string(seed);
      report.witness_meta.tick_cap = cap;
      break;
    }
  }

  std::string scope = "shapes=";
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i) scope += ',';
    scope += format_shape(shapes[i]);
  }
  report.scope = scope + ";games=" + std::to_string(count);
  report.add_stat("captured", std::to_string(captured));
  report.add_stat("master_seed", std::to_string(master_seed));
  return report;
}

namespace {

std::string shapes_scope(std::span<const GridShape> shapes,
                         std::int64_t count) {
  std::string scope = "shapes=";
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i) scope += ',';
    scope += format_shape(shapes[i]);
  }
  return scope + ";games=" + std::to_string(count);
}

}  // namespace

ClaimReport check_lemma3_random_games(std::span<const GridShape> shapes,
                                      std::int64_t count,
                                      std::uint64_t master_seed) {
  if (shapes.empty()) {
    throw InvalidDimensionError("need at least one shape");
  }
  ClaimReport report;
  report.claim_id = "lemma3";
  report.verdict = Verdict::Holds;
  std::int64_t max_favorable = 0;

  for (std::int64_t k = 0; k < count; ++k) {
    const GridShape& shape =
        shapes[static_cast<std::size_t>(k) % shapes.size()];
    const std::size_t n = shape.n();
    const std::uint64_t seed =
        derive_trial_seed(master_seed, static_cast<std::uint64_t>(k));

    std::vector<std::unique_ptr<CopStrategy>> owned;
    std::vector<CopStrategy*> cops;
    for (std::size_t i = 0; i < n; ++i) {
      owned.push_back(
          std::make_unique<AlgorithmOneCop>(static_cast<int>(i), shape));
      cops.push_back(owned.back().get());
    }
    GreedyRobber robber(k % 3 == 0   ? GreedyMetric::SumSquaredEuclidean
                        : k % 3 == 1 ? GreedyMetric::SumManhattan
                                     : GreedyMetric::SumEuclidean);
    const Configuration initial =
        random_initial_configuration(shape, n, seed);
    const std::int64_t cap = default_tick_cap(shape, cops);
    const GameTrace trace = run(initial, robber, cops, shape, cap);

    for (std::size_t i = 0; i < n; ++i) {
      ClaimReport inner = check_lemma3(trace, i, shape);
      ++report.cases_checked;
      for (const auto& [key, value] : inner.stats) {
        if (key == "favorable_count") {
          max_favorable = std::max<std::int64_t>(max_favorable, std::stoll(value));
        }
      }
      if (inner.verdict != Verdict::Holds) {
        report.verdict = Verdict::Violated;
        report.note = "game " + std::to_string(k) + " (seed " +
                      std::to_string(seed) + "): " + inner.note;
        report.witness = trace;
        for (const CopStrategy* cop : cops) {
          report.witness_meta.cop_strategy_names.push_back(cop->name());
        }
        report.witness_meta.robber_strategy_name = robber.name();
        report.witness_meta.seed = std::to_string(seed);
        report.witness_meta.tick_cap = cap;
        break;
      }
    }
    if (report.verdict != Verdict::Holds) break;
  }
  report.scope = shapes_scope(shapes, count);
  report.add_stat("max_favorable_count", std::to_string(max_favorable));
  report.add_stat("master_seed", std::to_string(master_seed));
  return report;
}

ClaimReport check_lemma4_random_games(std::span<const GridShape> shapes,
                                      std::int64_t count,
                                      std::uint64_t master_seed) {
  if (shapes.empty()) {
    throw InvalidDimensionError("need at least one shape");
  }
  ClaimReport report;
  report.claim_id = "lemma4";
  report.verdict = Verdict::Holds;

  for (std::int64_t k = 0; k < count; ++k) {
    const GridShape& shape =
        shapes[static_cast<std::size_t>(k) % shapes.size()];
    if (shape.n() != 2) {
      throw InvalidDimensionError(
          "the single-cop sign claim needs two-dimensional shapes");
    }
    const std::uint64_t seed =
        derive_trial_seed(master_seed, static_cast<std::uint64_t>(k));
    const Configuration initial = random_initial_configuration(shape, 1, seed);
    if (manhattan(initial.cops[0], initial.robber) % 2 != 0) {
      ++report.cases_inapplicable;
      continue;
    }

    AlgorithmTwoCop cop(shape, TieRule::Deterministic, 0, 0);
    std::vector<CopStrategy*> cops{&cop};
    GreedyRobber robber(k % 3 == 0   ? GreedyMetric::SumSquaredEuclidean
                        : k % 3 == 1 ? GreedyMetric::SumManhattan
                                     : GreedyMetric::SumEuclidean);
    const std::int64_t cap = default_tick_cap(shape, cops);
    const GameTrace trace = run(initial, robber, cops, shape, cap);

    ClaimReport inner = check_lemma4(trace);
    ++report.cases_checked;
    if (inner.verdict == Verdict::Violated) {
      report.verdict = Verdict::Violated;
      report.note = "game " + std::to_string(k) + " (seed " +
                    std::to_string(seed) + "): " + inner.note;
      report.witness = trace;
      report.witness_meta.cop_strategy_names.push_back(cop.name());
      report.witness_meta.robber_strategy_name = robber.name();
      report.witness_meta.seed = std::to_string(seed);
      report.witness_meta.tick_cap = cap;
      break;
    }
  }
  report.scope = shapes_scope(shapes, count);
  report.add_stat("master_seed", std::to_string(master_seed));
  return report;
}

}  // namespace gridpursuit
