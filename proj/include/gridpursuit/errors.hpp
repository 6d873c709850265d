#pragma once

#include <stdexcept>
#include <string>

namespace gridpursuit {

/// Grid shape has zero axes, a non-positive dimension, or d_i < 2.
class InvalidDimensionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Position incompatible with a shape: wrong arity or out-of-range coordinate.
class InvalidPositionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A strategy produced a move that is not a legal jump. Carries the agent
/// ("robber" or "cop <k>") so batch runs can name the offender.
class IllegalMoveError : public std::runtime_error {
 public:
  IllegalMoveError(std::string agent, const std::string& detail)
      : std::runtime_error("illegal move by " + agent + ": " + detail),
        agent_(std::move(agent)) {}

  const std::string& agent() const noexcept { return agent_; }

 private:
  std::string agent_;
};

/// An operation that requires a live game was given a configuration where a
/// cop already shares the robber's node.
class AlreadyTerminatedError : public std::logic_error {
  using std::logic_error::logic_error;
};

/// Parity evader preconditions violated (m >= n, or a cop at even distance).
class EvaderInapplicableError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scripted robber ran past the end of its jump list.
class ScriptExhaustedError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adversarial search would exceed its node budget (or the state space is not
/// indexable). Never silently truncated.
class OracleInfeasibleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Trace file or in-memory trace fails structural validation.
class TraceFormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Engine/strategy contract breach that indicates a bug, not bad input.
class InternalConsistencyError : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gridpursuit
