#include "gridpursuit/grid.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace gridpursuit {

GridShape::GridShape(std::vector<Coord> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw InvalidDimensionError("grid shape needs at least one axis");
  }
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 2) {
      throw InvalidDimensionError("grid dimension d_" + std::to_string(i) +
                                  " = " + std::to_string(dims_[i]) +
                                  " must be at least 2");
    }
  }
}

std::int64_t GridShape::sum_dims() const noexcept {
  std::int64_t s = 0;
  for (Coord d : dims_) s += d;
  return s;
}

std::uint64_t GridShape::num_nodes() const {
  std::uint64_t prod = 1;
  for (Coord d : dims_) {
    const auto ud = static_cast<std::uint64_t>(d);
    if (prod > std::numeric_limits<std::uint64_t>::max() / ud) {
      throw std::overflow_error("grid node count exceeds uint64");
    }
    prod *= ud;
  }
  return prod;
}

int wrap_index(std::int64_t a, std::int64_t b, int n) {
  if (n <= 0) {
    throw InvalidDimensionError("wrap_index requires a positive dimension count");
  }
  const std::int64_t m = (a + b) % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

bool position_valid(const Position& p, const GridShape& shape) noexcept {
  if (p.coords.size() != shape.n()) return false;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (p.coords[i] < 0 || p.coords[i] >= shape.dims()[i]) return false;
  }
  return true;
}

void require_position(const Position& p, const GridShape& shape,
                      std::string_view what) {
  if (!position_valid(p, shape)) {
    throw InvalidPositionError(std::string(what) + " " + format_position(p) +
                               " is not a node of the " + format_shape(shape) +
                               " grid");
  }
}

void require_configuration(const Configuration& c, const GridShape& shape) {
  if (c.cops.empty()) {
    throw InvalidPositionError("configuration needs at least one cop");
  }
  for (std::size_t i = 0; i < c.cops.size(); ++i) {
    require_position(c.cops[i], shape, "cop " + std::to_string(i) + " position");
  }
  require_position(c.robber, shape, "robber position");
}

bool is_adjacent(const Position& p, const Position& q, const GridShape& shape) {
  require_position(p, shape, "position");
  require_position(q, shape, "position");
  std::size_t diffs = 0;
  for (std::size_t i = 0; i < shape.n(); ++i) {
    const std::int64_t gap =
        std::llabs(static_cast<std::int64_t>(p.coords[i]) - q.coords[i]);
    if (gap == 0) continue;
    if (gap != 1) return false;
    ++diffs;
  }
  return diffs == 1;
}

std::vector<Jump> neighbor_jumps(const Position& p, const GridShape& shape) {
  require_position(p, shape, "position");
  std::vector<Jump> out;
  out.reserve(2 * shape.n());
  for (std::size_t axis = 0; axis < shape.n(); ++axis) {
    for (int dir : {-1, +1}) {
      const Jump j{static_cast<int>(axis), dir};
      if (jump_in_bounds(p, j, shape)) out.push_back(j);
    }
  }
  return out;
}

std::vector<Position> neighbors(const Position& p, const GridShape& shape) {
  std::vector<Position> out;
  for (const Jump& j : neighbor_jumps(p, shape)) {
    out.push_back(apply_jump(p, j, shape));
  }
  return out;
}

std::int64_t manhattan(const Position& p, const Position& q) {
  if (p.coords.size() != q.coords.size()) {
    throw InvalidPositionError("manhattan distance across different dimensions");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    total += std::llabs(static_cast<std::int64_t>(p.coords[i]) - q.coords[i]);
  }
  return total;
}

DistanceReport distance_report(const Configuration& c) {
  DistanceReport report;
  report.cops.reserve(c.cops.size());
  for (const Position& cop : c.cops) {
    if (cop.coords.size() != c.robber.coords.size()) {
      throw InvalidPositionError("configuration mixes dimensions");
    }
    CopDistance d;
    d.per_axis.reserve(cop.coords.size());
    for (std::size_t j = 0; j < cop.coords.size(); ++j) {
      d.per_axis.push_back(std::llabs(static_cast<std::int64_t>(cop.coords[j]) -
                                      c.robber.coords[j]));
      d.total += d.per_axis.back();
    }
    d.parity = static_cast<int>(d.total % 2);
    report.cops.push_back(std::move(d));
  }
  return report;
}

bool jump_well_formed(const Jump& j, const GridShape& shape) noexcept {
  return j.axis >= 0 && static_cast<std::size_t>(j.axis) < shape.n() &&
         (j.dir == 1 || j.dir == -1);
}

bool jump_in_bounds(const Position& p, const Jump& j,
                    const GridShape& shape) noexcept {
  if (!jump_well_formed(j, shape)) return false;
  const std::int64_t target =
      static_cast<std::int64_t>(p.coords[static_cast<std::size_t>(j.axis)]) +
      j.dir;
  return target >= 0 && target < shape.dims()[static_cast<std::size_t>(j.axis)];
}

Position apply_jump(const Position& p, const Jump& j, const GridShape& shape) {
  require_position(p, shape, "position");
  if (!jump_in_bounds(p, j, shape)) {
    throw InvalidPositionError("jump " + format_jump(j) + " from " +
                               format_position(p) + " leaves the grid");
  }
  Position out = p;
  out.coords[static_cast<std::size_t>(j.axis)] += static_cast<Coord>(j.dir);
  return out;
}

std::uint64_t node_index(const Position& p, const GridShape& shape) {
  require_position(p, shape, "position");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < shape.n(); ++i) {
    index = index * static_cast<std::uint64_t>(shape.dims()[i]) +
            static_cast<std::uint64_t>(p.coords[i]);
  }
  return index;
}

Position node_at(std::uint64_t index, const GridShape& shape) {
  Position p;
  p.coords.assign(shape.n(), 0);
  for (std::size_t i = shape.n(); i-- > 0;) {
    const auto d = static_cast<std::uint64_t>(shape.dims()[i]);
    p.coords[i] = static_cast<Coord>(index % d);
    index /= d;
  }
  if (index != 0) {
    throw InvalidPositionError("node index out of range for shape " +
                               format_shape(shape));
  }
  return p;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidPositionError("cannot parse " + std::string(what) + " from '" +
                               std::string(text) + "'");
  }
  return value;
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

GridShape parse_shape(std::string_view text) {
  std::vector<Coord> dims;
  for (std::string_view part : split(text, 'x')) {
    const std::int64_t d = parse_int(part, "grid dimension");
    if (d < 2 || d > std::numeric_limits<Coord>::max()) {
      throw InvalidDimensionError("grid dimension '" + std::string(part) +
                                  "' out of range");
    }
    dims.push_back(static_cast<Coord>(d));
  }
  return GridShape(std::move(dims));
}

std::string format_shape(const GridShape& shape) {
  std::string out;
  for (std::size_t i = 0; i < shape.n(); ++i) {
    if (i) out += 'x';
    out += std::to_string(shape.dims()[i]);
  }
  return out;
}

Position parse_position(std::string_view text, const GridShape& shape) {
  Position p;
  for (std::string_view part : split(text, ',')) {
    const std::int64_t c = parse_int(part, "coordinate");
    if (c < std::numeric_limits<Coord>::min() ||
        c > std::numeric_limits<Coord>::max()) {
      throw InvalidPositionError("coordinate '" + std::string(part) +
                                 "' out of range");
    }
    p.coords.push_back(static_cast<Coord>(c));
  }
  require_position(p, shape, "position");
  return p;
}

std::string format_position(const Position& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.coords[i]);
  }
  return out;
}

std::string format_jump(const Jump& j) {
  return std::to_string(j.axis) + (j.dir >= 0 ? ":+1" : ":-1");
}

Jump parse_jump(std::string_view text, const GridShape& shape) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) {
    throw InvalidPositionError("cannot parse jump from '" + std::string(text) +
                               "' (expected axis:+1 or axis:-1)");
  }
  Jump j;
  j.axis = static_cast<int>(parse_int(parts[0], "jump axis"));
  if (parts[1] == "+1" || parts[1] == "1") {
    j.dir = 1;
  } else if (parts[1] == "-1") {
    j.dir = -1;
  } else {
    throw InvalidPositionError("jump direction '" + std::string(parts[1]) +
                               "' must be +1 or -1");
  }
  if (!jump_well_formed(j, shape)) {
    throw InvalidPositionError("jump '" + std::string(text) +
                               "' is not valid for shape " +
                               format_shape(shape));
  }
  return j;
}

}  // namespace gridpursuit
