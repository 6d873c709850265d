#include "gridpursuit/trace_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "gridpursuit/errors.hpp"

namespace gridpursuit {

namespace {

constexpr std::string_view kMagic = "gridpursuit-trace";
constexpr std::string_view kVersion = "v1";

std::string join_positions(const std::vector<Position>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ';';
    out += format_position(ps[i]);
  }
  return out;
}

std::string join_jumps(const std::vector<Jump>& js) {
  if (js.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < js.size(); ++i) {
    if (i) out += ',';
    out += format_jump(js[i]);
  }
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

[[noreturn]] void bad(const std::string& detail) {
  throw TraceFormatError("trace format error: " + detail);
}

// key=value tokens separated by single spaces; the final key may absorb the
// rest of the line (used for strategy names that can contain spaces).
class FieldParser {
 public:
  explicit FieldParser(std::string_view line) : rest_(line) {}

  std::string_view take(std::string_view key, bool rest_of_line = false) {
    const std::string prefix = std::string(key) + "=";
    if (!rest_.starts_with(prefix)) {
      bad("expected field '" + std::string(key) + "' at '" +
          std::string(rest_.substr(0, 24)) + "'");
    }
    rest_.remove_prefix(prefix.size());
    if (rest_of_line) {
      std::string_view value = rest_;
      rest_ = {};
      return value;
    }
    const std::size_t pos = rest_.find(' ');
    std::string_view value = rest_.substr(0, pos);
    rest_ = pos == std::string_view::npos ? std::string_view{}
                                          : rest_.substr(pos + 1);
    return value;
  }

  bool starts_with(std::string_view key) const {
    return rest_.starts_with(std::string(key) + "=");
  }

  bool done() const { return rest_.empty(); }

 private:
  std::string_view rest_;
};

std::int64_t to_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    bad("bad integer for " + std::string(what) + ": '" + std::string(text) +
        "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

void write_trace(std::ostream& out, const GameTrace& trace,
                 const TraceMeta& meta) {
  out << kMagic << ' ' << kVersion << " shape=" << format_shape(trace.shape)
      << " m=" << trace.initial.num_cops()
      << " cops=" << join_positions(trace.initial.cops)
      << " robber=" << format_position(trace.initial.robber)
      << " seed=" << meta.seed << " cap=" << meta.tick_cap
      << " cop_strategies=" << join_names(meta.cop_strategy_names)
      << " robber_strategy=" << meta.robber_strategy_name << '\n';
  for (const TickRecord& tr : trace.ticks) {
    out << "t=" << tr.tick << " robber=" << format_jump(tr.robber_jump)
        << " cops=" << join_jumps(tr.cop_jumps);
    if (tr.capture) {
      out << " capture="
          << (tr.capture_half == HalfStep::RobberMove ? "robber" : "cop") << ':'
          << tr.capturing_cop;
    }
    out << '\n';
  }
  const Outcome& oc = trace.outcome;
  out << "outcome=" << (oc.captured ? "captured" : "evaded")
      << " jumps=" << oc.robber_jumps << " by=";
  if (oc.capturing_cop >= 0) {
    out << oc.capturing_cop;
  } else {
    out << '-';
  }
  out << " half=" << half_step_name(oc.half_step) << '\n';
}

std::string trace_to_string(const GameTrace& trace, const TraceMeta& meta) {
  std::ostringstream out;
  write_trace(out, trace, meta);
  return out.str();
}

ReadTraceResult read_trace(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) bad("empty input");

  FieldParser header(line);
  {
    const std::string expect = std::string(kMagic) + " " + std::string(kVersion);
    if (!line.starts_with(expect + " ")) {
      bad("missing '" + expect + "' header");
    }
    header = FieldParser(std::string_view(line).substr(expect.size() + 1));
  }

  const GridShape shape = parse_shape(header.take("shape"));
  const std::int64_t m = to_int(header.take("m"), "m");
  if (m < 1) bad("cop count must be positive");

  Configuration initial;
  for (std::string_view part : split(header.take("cops"), ';')) {
    initial.cops.push_back(parse_position(part, shape));
  }
  if (static_cast<std::int64_t>(initial.cops.size()) != m) {
    bad("cop count does not match m");
  }
  initial.robber = parse_position(header.take("robber"), shape);

  ReadTraceResult result{GameTrace{shape, initial, {}, {}}, TraceMeta{}};
  result.meta.seed = std::string(header.take("seed"));
  result.meta.tick_cap = to_int(header.take("cap"), "cap");
  for (std::string_view name : split(header.take("cop_strategies"), ',')) {
    result.meta.cop_strategy_names.emplace_back(name);
  }
  result.meta.robber_strategy_name =
      std::string(header.take("robber_strategy", /*rest_of_line=*/true));

  // Replay tick lines against the header configuration.
  Configuration state = initial;
  bool saw_outcome = false;
  std::int64_t expected_tick = 0;
  Outcome outcome;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    FieldParser fields(line);
    if (fields.starts_with("outcome")) {
      const std::string_view kind = fields.take("outcome");
      outcome.captured = kind == "captured";
      if (!outcome.captured && kind != "evaded") {
        bad("unknown outcome '" + std::string(kind) + "'");
      }
      outcome.robber_jumps = to_int(fields.take("jumps"), "jumps");
      const std::string_view by = fields.take("by");
      outcome.capturing_cop =
          by == "-" ? -1 : static_cast<int>(to_int(by, "by"));
      const std::string_view half = fields.take("half");
      if (half == "initial") {
        outcome.half_step = HalfStep::Initial;
      } else if (half == "robber") {
        outcome.half_step = HalfStep::RobberMove;
      } else if (half == "cop") {
        outcome.half_step = HalfStep::CopMove;
      } else if (half == "none") {
        outcome.half_step = HalfStep::None;
      } else {
        bad("unknown half-step '" + std::string(half) + "'");
      }
      saw_outcome = true;
      break;
    }

    if (terminating(state)) bad("tick recorded after a capture");

    TickRecord record;
    record.tick = to_int(fields.take("t"), "t");
    if (record.tick != expected_tick) {
      bad("tick " + std::to_string(record.tick) + " out of order");
    }
    ++expected_tick;

    record.robber_jump = parse_jump(fields.take("robber"), shape);
    if (!jump_in_bounds(state.robber, record.robber_jump, shape)) {
      bad("robber jump leaves the grid at tick " + std::to_string(record.tick));
    }
    record.after_robber = state;
    record.after_robber.robber =
        apply_jump(state.robber, record.robber_jump, shape);

    const std::string_view cop_field = fields.take("cops");
    if (cop_field != "-") {
      for (std::string_view part : split(cop_field, ',')) {
        record.cop_jumps.push_back(parse_jump(part, shape));
      }
      if (record.cop_jumps.size() != state.cops.size()) {
        bad("cop jump count mismatch at tick " + std::to_string(record.tick));
      }
    }

    record.after_cops = record.after_robber;
    for (std::size_t i = 0; i < record.cop_jumps.size(); ++i) {
      if (!jump_in_bounds(state.cops[i], record.cop_jumps[i], shape)) {
        bad("cop " + std::to_string(i) + " jump leaves the grid at tick " +
            std::to_string(record.tick));
      }
      record.after_cops.cops[i] =
          apply_jump(state.cops[i], record.cop_jumps[i], shape);
    }

    if (!fields.done()) {
      const std::string_view capture = fields.take("capture");
      const auto parts = split(capture, ':');
      if (parts.size() != 2) bad("bad capture marker");
      record.capture = true;
      record.capture_half =
          parts[0] == "robber" ? HalfStep::RobberMove : HalfStep::CopMove;
      record.capturing_cop = static_cast<int>(to_int(parts[1], "capture cop"));
    }

    // Cross-check the marker against the replayed configurations.
    const bool robber_half_capture = terminating(record.after_robber);
    if (robber_half_capture != (record.capture_half == HalfStep::RobberMove &&
                                record.capture)) {
      if (robber_half_capture || record.capture_half == HalfStep::RobberMove) {
        bad("capture marker disagrees with replay at tick " +
            std::to_string(record.tick));
      }
    }
    if (robber_half_capture && !record.cop_jumps.empty()) {
      bad("cop jumps recorded after a robber half-step capture");
    }
    if (!robber_half_capture &&
        terminating(record.after_cops) != record.capture) {
      bad("capture marker disagrees with replay at tick " +
          std::to_string(record.tick));
    }

    state = record.after_cops;
    result.trace.ticks.push_back(std::move(record));
  }
  if (!saw_outcome) bad("missing outcome footer");

  // Outcome must match the replayed tail.
  if (outcome.captured) {
    if (result.trace.ticks.empty()) {
      if (outcome.half_step != HalfStep::Initial || !terminating(initial)) {
        bad("captured outcome with no ticks requires a terminating initial "
            "configuration");
      }
      if (outcome.robber_jumps != 0) bad("initial capture must report 0 jumps");
    } else {
      const TickRecord& last = result.trace.ticks.back();
      if (!last.capture || last.capture_half != outcome.half_step ||
          last.capturing_cop != outcome.capturing_cop ||
          outcome.robber_jumps != last.tick + 1) {
        bad("outcome footer disagrees with final tick");
      }
    }
  } else {
    if (!result.trace.ticks.empty() && result.trace.ticks.back().capture) {
      bad("evaded outcome after a capture tick");
    }
    if (outcome.robber_jumps !=
        static_cast<std::int64_t>(result.trace.ticks.size())) {
      bad("evaded outcome jump count disagrees with tick count");
    }
  }
  result.trace.outcome = outcome;
  return result;
}

}  // namespace gridpursuit
