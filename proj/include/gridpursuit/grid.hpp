#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gridpursuit/errors.hpp"

namespace gridpursuit {

using Coord = std::int32_t;

/// The arena: a d_0 x d_1 x ... x d_{n-1} grid. Every d_i >= 2 and n >= 1;
/// anything else degenerates into a lower-dimensional grid and is rejected.
class GridShape {
 public:
  /// Defaults to the smallest valid shape (a single axis of two nodes) so
  /// aggregate carriers stay default-constructible; real uses overwrite it.
  GridShape() : dims_{2} {}
  explicit GridShape(std::vector<Coord> dims);

  std::size_t n() const noexcept { return dims_.size(); }
  const std::vector<Coord>& dims() const noexcept { return dims_; }
  Coord dim(std::size_t axis) const { return dims_.at(axis); }

  /// Sum of d_i, the quantity the capture bounds are stated in.
  std::int64_t sum_dims() const noexcept;

  /// Total node count. Throws std::overflow_error if it exceeds uint64.
  std::uint64_t num_nodes() const;

  bool operator==(const GridShape&) const = default;

 private:
  std::vector<Coord> dims_;
};

/// One grid node, as an n-tuple of coordinates.
struct Position {
  std::vector<Coord> coords;

  bool operator==(const Position&) const = default;
};

/// A unit move: one axis changes by exactly +1 or -1.
struct Jump {
  int axis = 0;
  int dir = 0;  // +1 or -1

  bool operator==(const Jump&) const = default;
};

/// All cop positions plus the robber position at one instant. m is
/// independent of n; under- and over-provisioned cop sets are representable.
struct Configuration {
  std::vector<Position> cops;
  Position robber;

  std::size_t num_cops() const noexcept { return cops.size(); }

  bool operator==(const Configuration&) const = default;
};

/// Per-cop distance breakdown: per-axis gaps, Manhattan total, parity bit.
struct CopDistance {
  std::vector<std::int64_t> per_axis;  // |C_{i,j} - R_j| for each axis j
  std::int64_t total = 0;              // sum over axes
  int parity = 0;                      // total mod 2
};

struct DistanceReport {
  std::vector<CopDistance> cops;
};

/// (a + b) mod n with a non-negative result for any integer inputs.
int wrap_index(std::int64_t a, std::int64_t b, int n);

bool position_valid(const Position& p, const GridShape& shape) noexcept;

/// Throws InvalidPositionError naming `what` if p is not a node of shape.
void require_position(const Position& p, const GridShape& shape,
                      std::string_view what);

void require_configuration(const Configuration& c, const GridShape& shape);

/// True iff exactly one coordinate differs by exactly 1. A node is never
/// adjacent to itself.
bool is_adjacent(const Position& p, const Position& q, const GridShape& shape);

/// In-bounds neighbors of p in the fixed order every deterministic tie-break
/// downstream depends on: ascending axis, -1 before +1.
std::vector<Position> neighbors(const Position& p, const GridShape& shape);

/// The jumps reaching neighbors(p), in the same fixed order.
std::vector<Jump> neighbor_jumps(const Position& p, const GridShape& shape);

std::int64_t manhattan(const Position& p, const Position& q);

DistanceReport distance_report(const Configuration& c);

bool jump_well_formed(const Jump& j, const GridShape& shape) noexcept;

/// True iff applying j to p stays inside the grid (and j is well formed).
bool jump_in_bounds(const Position& p, const Jump& j,
                    const GridShape& shape) noexcept;

/// Applies a jump; throws InvalidPositionError if the result leaves the grid.
Position apply_jump(const Position& p, const Jump& j, const GridShape& shape);

/// Mixed-radix node index (axis n-1 fastest). Inverse of node_at.
std::uint64_t node_index(const Position& p, const GridShape& shape);
Position node_at(std::uint64_t index, const GridShape& shape);

// Text forms used by the CLI and result files: "10x10" / "3x3x3" for shapes,
// "3,4,0" for positions.
GridShape parse_shape(std::string_view text);
std::string format_shape(const GridShape& shape);
Position parse_position(std::string_view text, const GridShape& shape);
std::string format_position(const Position& p);
std::string format_jump(const Jump& j);
Jump parse_jump(std::string_view text, const GridShape& shape);

}  // namespace gridpursuit
