#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gridpursuit/grid.hpp"
#include "gridpursuit/strategy.hpp"

namespace gridpursuit {

/// Which half of a tick a capture happened in. Initial covers configurations
/// that terminate before anyone moves.
enum class HalfStep { None, Initial, RobberMove, CopMove };

const char* half_step_name(HalfStep h);

struct Outcome {
  bool captured = false;
  std::int64_t robber_jumps = 0;
  int capturing_cop = -1;          // lowest index when several coincide
  HalfStep half_step = HalfStep::None;

  bool operator==(const Outcome&) const = default;
};

/// One full round: the robber's jump, then the simultaneous cop batch.
/// `tick` counts completed robber jumps before this round. When capture
/// happens at the robber half-step, cop_jumps is empty and after_cops equals
/// after_robber.
struct TickRecord {
  std::int64_t tick = 0;
  Jump robber_jump;
  std::vector<Jump> cop_jumps;
  Configuration after_robber;
  Configuration after_cops;
  bool capture = false;
  HalfStep capture_half = HalfStep::None;
  int capturing_cop = -1;

  bool operator==(const TickRecord&) const = default;
};

struct GameTrace {
  GridShape shape;
  Configuration initial;
  std::vector<TickRecord> ticks;
  Outcome outcome;

  bool operator==(const GameTrace&) const = default;
};

/// True iff some cop occupies the robber's node.
bool terminating(const Configuration& c);

/// Whether a robber jump taken from `config_before` (the time-t configuration)
/// is favorable to cop `cop_index`: the jump axis avoids the cyclic prefix
/// {i, i*1, ..., i*(j1-1)} of axes the cop has already matched, j1 being the
/// first cyclic offset where cop and robber coordinates differ. When they
/// differ at offset 0 the excluded set is empty and any jump is favorable.
/// Throws AlreadyTerminatedError if the cop shares the robber's node.
bool is_favorable(std::size_t cop_index, const Configuration& config_before,
                  const Jump& robber_jump, const GridShape& shape);

/// Runs one tick: queries the robber, applies its jump, checks capture, then
/// queries every cop against the same post-robber configuration and applies
/// all cop jumps as one batch. Throws IllegalMoveError naming the agent whose
/// strategy returned an out-of-bounds move.
TickRecord step(const Configuration& state, RobberStrategy& robber,
                std::span<CopStrategy* const> cops, const GridShape& shape,
                std::int64_t tick);

/// Iterates step() until capture or until `tick_cap` robber jumps have
/// elapsed. An already-terminating initial configuration returns a Captured
/// outcome with zero jumps and no tick records.
GameTrace run(const Configuration& initial, RobberStrategy& robber,
              std::span<CopStrategy* const> cops, const GridShape& shape,
              std::int64_t tick_cap);

/// n * sum(d_i) + 8 when the cop set is exactly the Algorithm-1 winning set
/// S_0..S_{n-1} (the Theorem-2 bound plus slack), 10 * sum(d_i) otherwise.
std::int64_t default_tick_cap(const GridShape& shape,
                              std::span<CopStrategy* const> cops);

/// True iff `cops` is the full winning set: n cops whose Algorithm-1 indices
/// are a permutation of 0..n-1. Such games must never reach the tick cap.
bool is_full_algorithm_one_set(const GridShape& shape,
                               std::span<CopStrategy* const> cops);

}  // namespace gridpursuit
