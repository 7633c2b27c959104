#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gridreg/torus.hpp"

using namespace gridreg;

TEST_CASE("flat indices use row-major order with the last coordinate fastest") {
  Torus t({3, 4, 5});
  CHECK(t.cell_count() == 60);
  CHECK(t.index_of(std::vector<int>{0, 0, 1}) == 1);
  CHECK(t.index_of(std::vector<int>{0, 1, 0}) == 5);
  CHECK(t.index_of(std::vector<int>{1, 0, 0}) == 20);
  CHECK(t.index_of(std::vector<int>{2, 3, 4}) == 59);

  for (CellIndex i = 0; i < t.cell_count(); ++i) {
    const Cell c = t.coords_of(i);
    CHECK(t.index_of(c) == i);
    for (int j = 0; j < t.dim(); ++j) CHECK(c[static_cast<std::size_t>(j)] == t.coordinate(i, j));
  }
}

TEST_CASE("index_of wraps out-of-range coordinates") {
  Torus t({3, 4, 5});
  CHECK(t.index_of(std::vector<int>{3, 4, 5}) == 0);
  CHECK(t.index_of(std::vector<int>{-1, -1, -1}) == 59);
  CHECK_THROWS_AS(t.index_of(std::vector<int>{0, 0}), InvalidColoring);
}

TEST_CASE("torus construction rejects empty or non-positive periods") {
  CHECK_THROWS_AS(Torus({}), InvalidColoring);
  CHECK_THROWS_AS(Torus({4, 0}), InvalidColoring);
  CHECK_THROWS_AS(Torus({-2}), InvalidColoring);
}

TEST_CASE("step moves one unit and wraps both ways") {
  Torus t({4, 4});
  CHECK(t.step(0, Direction{0, +1}) == 4);
  CHECK(t.step(0, Direction{0, -1}) == 12);
  CHECK(t.step(0, Direction{1, +1}) == 1);
  CHECK(t.step(0, Direction{1, -1}) == 3);
  // step is inverted by the negated direction
  for (CellIndex i = 0; i < t.cell_count(); ++i) {
    for (const Direction& d : all_directions(t.dim())) {
      CHECK(t.step(t.step(i, d), d.negated()) == i);
    }
  }
}

TEST_CASE("all_directions lists axis-major, plus before minus") {
  const auto dirs = all_directions(2);
  REQUIRE(dirs.size() == 4);
  CHECK(dirs[0] == Direction{0, +1});
  CHECK(dirs[1] == Direction{0, -1});
  CHECK(dirs[2] == Direction{1, +1});
  CHECK(dirs[3] == Direction{1, -1});
}

TEST_CASE("neighbors form a multiset of size 2n even at small periods") {
  Torus plain({4, 4});
  CHECK(plain.neighbor_indices(0) == std::vector<CellIndex>{4, 12, 1, 3});

  Torus loop({1});
  CHECK(loop.neighbor_indices(0) == std::vector<CellIndex>{0, 0});

  Torus doubled({2});
  CHECK(doubled.neighbor_indices(0) == std::vector<CellIndex>{1, 1});

  Torus mixed({2, 3});
  for (CellIndex i = 0; i < mixed.cell_count(); ++i)
    CHECK(mixed.neighbor_indices(i).size() == 4);
}

TEST_CASE("distance_from_set runs a multi-source BFS") {
  Torus line({5});
  CHECK(distance_from_set(line, {0}) == std::vector<int>{0, 1, 2, 2, 1});
  CHECK(distance_from_set(line, {0, 2}) == std::vector<int>{0, 1, 0, 1, 1});
  CHECK(distance_from_set(line, {0, 0}) == std::vector<int>{0, 1, 2, 2, 1});

  Torus square({4, 4});
  const auto dist = distance_from_set(square, {0});
  CHECK(dist[static_cast<std::size_t>(square.index_of(std::vector<int>{2, 2}))] == 4);
  CHECK(dist[static_cast<std::size_t>(square.index_of(std::vector<int>{1, 3}))] == 2);

  CHECK_THROWS_AS(distance_from_set(line, {}), EmptySource);
}

TEST_CASE("coloring constructor validates its representation") {
  CHECK_THROWS_AS(PeriodicColoring({4}, 0, {}), InvalidColoring);
  CHECK_THROWS_AS(PeriodicColoring({4}, 2, {1, 2, 1}), InvalidColoring);       // wrong length
  CHECK_THROWS_AS(PeriodicColoring({4}, 2, {1, 2, 1, 3}), InvalidColoring);    // out of range
  CHECK_THROWS_AS(PeriodicColoring({4}, 2, {1, 0, 1, 2}), InvalidColoring);    // out of range
  CHECK_THROWS_AS(PeriodicColoring({4}, 3, {1, 2, 1, 2}), InvalidColoring);    // color 3 missing
  CHECK_NOTHROW(PeriodicColoring({4}, 2, {1, 2, 1, 2}));
}

TEST_CASE("color_class lists flat indices in ascending order") {
  PeriodicColoring c({2, 2}, 2, {1, 2, 2, 1});
  CHECK(c.color_class(1) == std::vector<CellIndex>{0, 3});
  CHECK(c.color_class(2) == std::vector<CellIndex>{1, 2});
}

TEST_CASE("small periods are the ones with coincident wrapped edges") {
  CHECK_FALSE(PeriodicColoring({4, 4}, 1, std::vector<int>(16, 1)).has_small_period());
  CHECK(PeriodicColoring({4, 2}, 1, std::vector<int>(8, 1)).has_small_period());
  CHECK(PeriodicColoring({1}, 1, {1}).has_small_period());
}

TEST_CASE("reverse_colors maps color i to k+1-i and is an involution") {
  PeriodicColoring c({4}, 3, {1, 2, 3, 2});
  CHECK(reverse_colors(c).cells() == std::vector<int>{3, 2, 1, 2});
  CHECK(reverse_colors(reverse_colors(c)) == c);
}

TEST_CASE("translate shifts the pattern so x receives the color of x - offset") {
  PeriodicColoring c({4}, 3, {1, 2, 3, 2});
  CHECK(translate(c, {1}).cells() == std::vector<int>{2, 1, 2, 3});
  CHECK(translate(c, {0}) == c);
  CHECK(translate(c, {4}) == c);
  CHECK(translate(translate(c, {3}), {1}) == c);
  CHECK_THROWS_AS(translate(c, {1, 0}), InvalidColoring);
}

TEST_CASE("color permutations must be bijections on [1..k]") {
  PeriodicColoring c({4}, 3, {1, 2, 3, 2});
  CHECK(apply_color_permutation(c, {3, 2, 1}).cells() == std::vector<int>{3, 2, 1, 2});
  CHECK_THROWS_AS(apply_color_permutation(c, {1, 1, 2}), InvalidColoring);
  CHECK_THROWS_AS(apply_color_permutation(c, {1, 2}), InvalidColoring);
}

TEST_CASE("neighbors helper reports coordinate tuples in direction order") {
  PeriodicColoring c({4, 4}, 1, std::vector<int>(16, 1));
  const auto nb = neighbors(c, {0, 0});
  REQUIRE(nb.size() == 4);
  CHECK(nb[0] == Cell{1, 0});
  CHECK(nb[1] == Cell{3, 0});
  CHECK(nb[2] == Cell{0, 1});
  CHECK(nb[3] == Cell{0, 3});
}
