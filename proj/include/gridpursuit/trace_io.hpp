#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gridpursuit/engine.hpp"

namespace gridpursuit {

/// Provenance carried in a trace file header alongside the initial
/// configuration: enough to reproduce the run exactly.
struct TraceMeta {
  std::vector<std::string> cop_strategy_names;
  std::string robber_strategy_name;
  std::string seed = "none";  // decimal, or "none" for explicit positions
  std::int64_t tick_cap = 0;
};

/// Newline-delimited text, one line per tick, versioned header. Bit-exact
/// for equal inputs. Layout:
///   gridpursuit-trace v1 shape=.. m=.. cops=..;.. robber=.. seed=..
///     cap=.. cop_strategies=a,b robber_strategy=<rest of line>
///   t=0 robber=axis:+1 cops=axis:+1,axis:-1 [capture=robber:<i>|cop:<i>]
///   outcome=captured|evaded jumps=<k> by=<i|-> half=initial|robber|cop|none
void write_trace(std::ostream& out, const GameTrace& trace,
                 const TraceMeta& meta);

std::string trace_to_string(const GameTrace& trace, const TraceMeta& meta);

struct ReadTraceResult {
  GameTrace trace;
  TraceMeta meta;
};

/// Parses and replays a trace file: configurations are rebuilt from the
/// recorded jumps and cross-checked against the capture markers and outcome.
/// Throws TraceFormatError on any structural or replay inconsistency.
ReadTraceResult read_trace(std::istream& in);

}  // namespace gridpursuit
