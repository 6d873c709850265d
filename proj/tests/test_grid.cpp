#include "doctest.h"

#include "gridpursuit/errors.hpp"
#include "gridpursuit/grid.hpp"

using namespace gridpursuit;

namespace {

Position pos(std::vector<Coord> coords) { return Position{std::move(coords)}; }

}  // namespace

TEST_CASE("grid shape validation") {
  CHECK(GridShape({3, 3}).n() == 2);
  CHECK(GridShape({2}).sum_dims() == 2);
  CHECK(GridShape({10, 10}).num_nodes() == 100);
  CHECK(GridShape({2, 3, 4}).num_nodes() == 24);
  CHECK_THROWS_AS(GridShape(std::vector<Coord>{}), InvalidDimensionError);
  CHECK_THROWS_AS(GridShape({1, 3}), InvalidDimensionError);
  CHECK_THROWS_AS(GridShape({3, 0}), InvalidDimensionError);
}

TEST_CASE("shape parse and format") {
  CHECK(format_shape(parse_shape("10x10")) == "10x10");
  CHECK(format_shape(parse_shape("3x3x3")) == "3x3x3");
  CHECK(parse_shape("2x3x4").dims() == std::vector<Coord>{2, 3, 4});
  CHECK_THROWS_AS(parse_shape("3x"), InvalidPositionError);
  CHECK_THROWS_AS(parse_shape("1x3"), InvalidDimensionError);
  CHECK_THROWS_AS(parse_shape("abc"), InvalidPositionError);
}

TEST_CASE("position parse, format, validity") {
  const GridShape shape({3, 3});
  CHECK(parse_position("2,1", shape) == pos({2, 1}));
  CHECK(format_position(pos({3, 4, 0})) == "3,4,0");
  CHECK_THROWS_AS(parse_position("3,0", shape), InvalidPositionError);
  CHECK_THROWS_AS(parse_position("0", shape), InvalidPositionError);
  CHECK(position_valid(pos({0, 2}), shape));
  CHECK_FALSE(position_valid(pos({0, 3}), shape));
  CHECK_FALSE(position_valid(pos({0}), shape));
}

TEST_CASE("wrap_index") {
  CHECK(wrap_index(2, 2, 3) == 1);
  CHECK(wrap_index(0, 0, 5) == 0);
  CHECK(wrap_index(1, 4, 5) == 0);
  CHECK(wrap_index(1, -3, 2) == 0);
  CHECK(wrap_index(-7, 2, 3) == 1);
  CHECK_THROWS_AS(wrap_index(1, 1, 0), InvalidDimensionError);
  CHECK_THROWS_AS(wrap_index(1, 1, -2), InvalidDimensionError);
  // a * (n - a) wraps to zero for every a.
  for (int n : {1, 2, 3, 7}) {
    for (int a = 0; a < n; ++a) CHECK(wrap_index(a, n - a, n) == 0);
  }
}

TEST_CASE("adjacency basics") {
  const GridShape shape({3, 3});
  CHECK(is_adjacent(pos({0, 0}), pos({0, 1}), shape));
  CHECK_FALSE(is_adjacent(pos({0, 0}), pos({1, 1}), shape));
  CHECK_FALSE(is_adjacent(pos({2, 2}), pos({2, 2}), shape));
  CHECK_FALSE(is_adjacent(pos({0, 0}), pos({0, 2}), shape));
  CHECK_THROWS_AS(is_adjacent(pos({0, 0, 0}), pos({0, 1}), shape),
                  InvalidPositionError);
}

TEST_CASE("neighbor order is ascending axis, -1 before +1") {
  const GridShape shape({3, 3});
  CHECK(neighbors(pos({0, 0}), shape) ==
        std::vector<Position>{pos({1, 0}), pos({0, 1})});
  CHECK(neighbors(pos({1, 1}), shape) ==
        std::vector<Position>{pos({0, 1}), pos({2, 1}), pos({1, 0}),
                              pos({1, 2})});
  CHECK(neighbor_jumps(pos({1, 1}), shape) ==
        std::vector<Jump>{Jump{0, -1}, Jump{0, 1}, Jump{1, -1}, Jump{1, 1}});
}

TEST_CASE("neighbors agree with adjacency and manhattan, exhaustively") {
  for (const GridShape& shape :
       {GridShape({3, 3}), GridShape({4, 5}), GridShape({2, 2, 2}),
        GridShape({3, 2, 4})}) {
    const auto count = shape.num_nodes();
    for (std::uint64_t a = 0; a < count; ++a) {
      const Position p = node_at(a, shape);
      const std::vector<Position> nbrs = neighbors(p, shape);
      // Every node with all d_i >= 2 has between n and 2n neighbors.
      CHECK(nbrs.size() >= shape.n());
      CHECK(nbrs.size() <= 2 * shape.n());
      for (std::uint64_t b = 0; b < count; ++b) {
        const Position q = node_at(b, shape);
        const bool adjacent = is_adjacent(p, q, shape);
        const bool listed =
            std::find(nbrs.begin(), nbrs.end(), q) != nbrs.end();
        CHECK(adjacent == listed);
        CHECK(adjacent == (manhattan(p, q) == 1));
      }
    }
  }
}

TEST_CASE("manhattan") {
  CHECK(manhattan(pos({0, 0}), pos({3, 4})) == 7);
  CHECK(manhattan(pos({5, 5}), pos({5, 5})) == 0);
  CHECK(manhattan(pos({1, 2, 3}), pos({3, 2, 1})) == 4);
  CHECK_THROWS_AS(manhattan(pos({1}), pos({1, 2})), InvalidPositionError);
}

TEST_CASE("jump application and bounds") {
  const GridShape shape({3, 3});
  CHECK(apply_jump(pos({1, 1}), Jump{0, 1}, shape) == pos({2, 1}));
  CHECK(apply_jump(pos({1, 1}), Jump{1, -1}, shape) == pos({1, 0}));
  CHECK_THROWS_AS(apply_jump(pos({2, 1}), Jump{0, 1}, shape),
                  InvalidPositionError);
  CHECK_FALSE(jump_in_bounds(pos({0, 0}), Jump{0, -1}, shape));
  CHECK_FALSE(jump_in_bounds(pos({0, 0}), Jump{2, 1}, shape));
  CHECK_FALSE(jump_in_bounds(pos({0, 0}), Jump{0, 0}, shape));
}

TEST_CASE("any jump moves manhattan distance by exactly one") {
  for (const GridShape& shape : {GridShape({3, 3}), GridShape({2, 2, 2})}) {
    const auto count = shape.num_nodes();
    for (std::uint64_t a = 0; a < count; ++a) {
      const Position p = node_at(a, shape);
      for (std::uint64_t b = 0; b < count; ++b) {
        const Position q = node_at(b, shape);
        for (const Jump& j : neighbor_jumps(p, shape)) {
          const std::int64_t delta =
              manhattan(apply_jump(p, j, shape), q) - manhattan(p, q);
          CHECK(std::abs(delta) == 1);
        }
      }
    }
  }
}

TEST_CASE("distance report") {
  const GridShape shape({3, 3});
  SUBCASE("single cop, odd distance") {
    const Configuration c{{pos({0, 0})}, pos({1, 0})};
    const DistanceReport report = distance_report(c);
    REQUIRE(report.cops.size() == 1);
    CHECK(report.cops[0].total == 1);
    CHECK(report.cops[0].parity == 1);
    CHECK(report.cops[0].per_axis == std::vector<std::int64_t>{1, 0});
  }
  SUBCASE("cop on robber: terminating distance") {
    const Configuration c{{pos({2, 2})}, pos({2, 2})};
    const DistanceReport report = distance_report(c);
    CHECK(report.cops[0].total == 0);
    CHECK(report.cops[0].parity == 0);
  }
  SUBCASE("two cops") {
    const Configuration c{{pos({0, 0}), pos({2, 2})}, pos({1, 1})};
    const DistanceReport report = distance_report(c);
    CHECK(report.cops[0].total == 2);
    CHECK(report.cops[1].total == 2);
  }
  SUBCASE("per-axis gaps sum to the total") {
    const Configuration c{{pos({0, 2}), pos({1, 1})}, pos({2, 0})};
    for (const CopDistance& cd : distance_report(c).cops) {
      std::int64_t sum = 0;
      for (std::int64_t gap : cd.per_axis) {
        CHECK(gap >= 0);
        sum += gap;
      }
      CHECK(sum == cd.total);
    }
  }
}

TEST_CASE("node indexing round trip") {
  for (const GridShape& shape : {GridShape({3, 4}), GridShape({2, 3, 2})}) {
    for (std::uint64_t i = 0; i < shape.num_nodes(); ++i) {
      CHECK(node_index(node_at(i, shape), shape) == i);
    }
    CHECK_THROWS_AS(node_at(shape.num_nodes(), shape), InvalidPositionError);
  }
}

TEST_CASE("jump parse and format") {
  const GridShape shape({3, 3});
  CHECK(format_jump(Jump{0, 1}) == "0:+1");
  CHECK(format_jump(Jump{1, -1}) == "1:-1");
  CHECK(parse_jump("1:-1", shape) == Jump{1, -1});
  CHECK(parse_jump("0:+1", shape) == Jump{0, 1});
  CHECK_THROWS_AS(parse_jump("2:+1", shape), InvalidPositionError);
  CHECK_THROWS_AS(parse_jump("0:2", shape), InvalidPositionError);
  CHECK_THROWS_AS(parse_jump("argh", shape), InvalidPositionError);
}

TEST_CASE("configuration validation") {
  const GridShape shape({3, 3});
  CHECK_THROWS_AS(require_configuration(Configuration{{}, pos({0, 0})}, shape),
                  InvalidPositionError);
  CHECK_THROWS_AS(
      require_configuration(Configuration{{pos({0, 3})}, pos({0, 0})}, shape),
      InvalidPositionError);
  CHECK_NOTHROW(
      require_configuration(Configuration{{pos({0, 2})}, pos({0, 0})}, shape));
}
