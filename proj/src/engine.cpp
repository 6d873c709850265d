#include "gridpursuit/engine.hpp"

#include <algorithm>

#include "gridpursuit/errors.hpp"

namespace gridpursuit {

const char* half_step_name(HalfStep h) {
  switch (h) {
    case HalfStep::Initial: return "initial";
    case HalfStep::RobberMove: return "robber";
    case HalfStep::CopMove: return "cop";
    case HalfStep::None: break;
  }
  return "none";
}

bool terminating(const Configuration& c) {
  return std::any_of(c.cops.begin(), c.cops.end(),
                     [&](const Position& cop) { return cop == c.robber; });
}

namespace {

int cop_on_robber(const Configuration& c) {
  for (std::size_t i = 0; i < c.cops.size(); ++i) {
    if (c.cops[i] == c.robber) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

bool is_favorable(std::size_t cop_index, const Configuration& config_before,
                  const Jump& robber_jump, const GridShape& shape) {
  require_configuration(config_before, shape);
  if (cop_index >= config_before.cops.size()) {
    throw InvalidPositionError("cop index out of range");
  }
  if (!jump_well_formed(robber_jump, shape)) {
    throw InvalidPositionError("malformed robber jump");
  }
  const Position& cop = config_before.cops[cop_index];
  const Position& robber = config_before.robber;
  const int n = static_cast<int>(shape.n());
  const int i = static_cast<int>(cop_index);

  int j1 = -1;
  for (int j = 0; j < n; ++j) {
    const int axis = wrap_index(i, j, n);
    if (cop.coords[static_cast<std::size_t>(axis)] !=
        robber.coords[static_cast<std::size_t>(axis)]) {
      j1 = j;
      break;
    }
  }
  if (j1 < 0) {
    throw AlreadyTerminatedError(
        "cop " + std::to_string(cop_index) +
        " already shares the robber's node; favorability is undefined");
  }
  // Excluded axes are i*0 .. i*(j1-1); the jump is favorable iff its cyclic
  // offset from i is at least j1. j1 == 0 excludes nothing.
  const int offset = wrap_index(robber_jump.axis, -i, n);
  return offset >= j1;
}

TickRecord step(const Configuration& state, RobberStrategy& robber,
                std::span<CopStrategy* const> cops, const GridShape& shape,
                std::int64_t tick) {
  require_configuration(state, shape);
  if (terminating(state)) {
    throw AlreadyTerminatedError("step() called on a terminating configuration");
  }
  if (cops.size() != state.cops.size()) {
    throw InternalConsistencyError("cop strategy count differs from cop count");
  }

  TickRecord record;
  record.tick = tick;

  const Jump rj = robber.next(state, shape, tick);
  if (!jump_in_bounds(state.robber, rj, shape)) {
    throw IllegalMoveError("robber", "jump " + format_jump(rj) + " from " +
                                         format_position(state.robber) +
                                         " at tick " + std::to_string(tick));
  }
  record.robber_jump = rj;
  record.after_robber = state;
  record.after_robber.robber = apply_jump(state.robber, rj, shape);

  if (const int idx = cop_on_robber(record.after_robber); idx >= 0) {
    record.after_cops = record.after_robber;
    record.capture = true;
    record.capture_half = HalfStep::RobberMove;
    record.capturing_cop = idx;
    return record;
  }

  // Simultaneous batch: every strategy sees the same post-robber
  // configuration; jumps are applied only after all have been collected.
  record.cop_jumps.reserve(cops.size());
  for (std::size_t i = 0; i < cops.size(); ++i) {
    const std::optional<Jump> cj =
        cops[i]->next(i, record.after_robber, shape, tick);
    if (!cj.has_value()) {
      throw InternalConsistencyError(
          "cop " + std::to_string(i) +
          " reported an already-terminating configuration that the engine did "
          "not detect");
    }
    if (!jump_in_bounds(state.cops[i], *cj, shape)) {
      throw IllegalMoveError("cop " + std::to_string(i),
                             "jump " + format_jump(*cj) + " from " +
                                 format_position(state.cops[i]) + " at tick " +
                                 std::to_string(tick));
    }
    record.cop_jumps.push_back(*cj);
  }

  record.after_cops = record.after_robber;
  for (std::size_t i = 0; i < cops.size(); ++i) {
    record.after_cops.cops[i] =
        apply_jump(state.cops[i], record.cop_jumps[i], shape);
  }

  if (const int idx = cop_on_robber(record.after_cops); idx >= 0) {
    record.capture = true;
    record.capture_half = HalfStep::CopMove;
    record.capturing_cop = idx;
  }
  return record;
}

GameTrace run(const Configuration& initial, RobberStrategy& robber,
              std::span<CopStrategy* const> cops, const GridShape& shape,
              std::int64_t tick_cap) {
  require_configuration(initial, shape);
  if (tick_cap < 1) {
    throw InvalidDimensionError("tick cap must be positive");
  }

  GameTrace trace{shape, initial, {}, {}};
  if (const int idx = cop_on_robber(initial); idx >= 0) {
    trace.outcome = Outcome{true, 0, idx, HalfStep::Initial};
    return trace;
  }

  Configuration state = initial;
  for (std::int64_t t = 0; t < tick_cap; ++t) {
    TickRecord record = step(state, robber, cops, shape, t);
    state = record.after_cops;
    const bool captured = record.capture;
    const HalfStep half = record.capture_half;
    const int by = record.capturing_cop;
    trace.ticks.push_back(std::move(record));
    if (captured) {
      trace.outcome = Outcome{true, t + 1, by, half};
      return trace;
    }
  }
  trace.outcome = Outcome{false, tick_cap, -1, HalfStep::None};
  return trace;
}

bool is_full_algorithm_one_set(const GridShape& shape,
                               std::span<CopStrategy* const> cops) {
  if (cops.size() != shape.n()) return false;
  std::vector<bool> seen(shape.n(), false);
  for (const CopStrategy* cop : cops) {
    const std::optional<int> idx = cop->algorithm_one_index();
    if (!idx.has_value() || *idx < 0 ||
        static_cast<std::size_t>(*idx) >= shape.n() ||
        seen[static_cast<std::size_t>(*idx)]) {
      return false;
    }
    seen[static_cast<std::size_t>(*idx)] = true;
  }
  return true;
}

std::int64_t default_tick_cap(const GridShape& shape,
                              std::span<CopStrategy* const> cops) {
  if (is_full_algorithm_one_set(shape, cops)) {
    return static_cast<std::int64_t>(shape.n()) * shape.sum_dims() + 8;
  }
  return 10 * shape.sum_dims();
}

}  // namespace gridpursuit
