#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gridpursuit/grid.hpp"

namespace gridpursuit {

/// Robber side of the loop: sees the full configuration at time t (both sides
/// have taken t jumps) and must return a jump. Staying put is not a move.
class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;

  virtual Jump next(const Configuration& config, const GridShape& shape,
                    std::int64_t tick) = 0;

  virtual std::string name() const = 0;
};

/// Cop side. `config` holds all cops at their time-t positions and the robber
/// at its post-jump (t+1) position; every cop in a tick is queried against the
/// same configuration before any jump is applied. Returning nullopt means the
/// cop already shares the robber's node; the engine treats that as a contract
/// breach because it flags such captures before querying cops.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;

  virtual std::optional<Jump> next(std::size_t cop_index,
                                   const Configuration& config,
                                   const GridShape& shape,
                                   std::int64_t tick) = 0;

  virtual std::string name() const = 0;

  /// True iff the next jump is a pure function of the configuration alone.
  /// The adversarial oracle only accepts such strategies.
  virtual bool deterministic_memoryless() const { return false; }

  /// Set for Algorithm-1 instances; lets the engine recognize the full
  /// S_0..S_{n-1} winning set when choosing the default tick cap.
  virtual std::optional<int> algorithm_one_index() const { return std::nullopt; }
};

}  // namespace gridpursuit
