#include "doctest.h"
#include "oracles.hpp"
#include "rookbij/enumeration.hpp"
#include "rookbij/error.hpp"

using namespace rookbij;

namespace {

std::vector<Vertex> vs(std::initializer_list<std::pair<int, int>> pts) {
  std::vector<Vertex> out;
  for (auto [x, y] : pts) out.push_back({x, y});
  return out;
}

}  // namespace

TEST_CASE("board construction rejects malformed heights") {
  CHECK_THROWS_AS(Board({}), InvalidBoard);
  CHECK_THROWS_AS(Board({2, 0}), InvalidBoard);
  CHECK_THROWS_AS(Board({1, 2}), InvalidBoard);
  const Board b({3, 3, 2});
  CHECK(b.n_cols() == 3);
  CHECK(b.n_rows() == 3);
  CHECK(b.cells() == 8);
  CHECK(b.square_bounded());
  CHECK_FALSE(Board({2, 2, 2}).square_bounded());
}

TEST_CASE("contains_square") {
  CHECK_FALSE(Board({2, 1}).contains_square(2, 2));
  CHECK(Board({2, 1}).contains_square(1, 2));
  CHECK_FALSE(Board({3, 3, 2}).contains_square(3, 3));
  CHECK_FALSE(Board({2, 1}).contains_square(0, 1));
  CHECK_FALSE(Board({2, 1}).contains_square(3, 1));
}

TEST_CASE("contains_vertex follows the membership rule") {
  const Board b({3, 1});
  CHECK(b.contains_vertex({0, 3}));
  CHECK(b.contains_vertex({2, 0}));
  CHECK(b.contains_vertex({1, 3}));
  CHECK(b.contains_vertex({2, 1}));
  CHECK_FALSE(b.contains_vertex({2, 2}));
  CHECK_FALSE(b.contains_vertex({3, 0}));
  CHECK_FALSE(b.contains_vertex({0, 4}));
}

TEST_CASE("border_path examples") {
  const auto R = Step::right, D = Step::down;
  auto sq = border_path(Board({2, 2}));
  CHECK(sq.vertices == vs({{0, 2}, {1, 2}, {2, 2}, {2, 1}, {2, 0}}));
  CHECK(sq.steps == std::vector<Step>{R, R, D, D});

  auto stair = border_path(Board({2, 1}));
  CHECK(stair.vertices == vs({{0, 2}, {1, 2}, {1, 1}, {2, 1}, {2, 0}}));
  CHECK(stair.steps == std::vector<Step>{R, D, R, D});

  auto three = border_path(Board({3, 2, 1}));
  CHECK(three.size() == 7);
  CHECK(three.steps == std::vector<Step>{R, D, R, D, R, D});
}

TEST_CASE("border_path matches the NE-square definition on every board within 6x6") {
  for (const Board& b : boards_within(6)) {
    const auto path = border_path(b);
    CHECK(path.vertices == oracle::border_vertices(b));
    CHECK(path.size() == static_cast<std::size_t>(b.n_cols() + b.n_rows() + 1));
  }
}

TEST_CASE("marker_count_profile examples") {
  CHECK(marker_count_profile(Board({2, 2})) == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(marker_count_profile(Board({2, 1})) == std::vector<int>{0, 1, 0, 1, 0});
  CHECK(marker_count_profile(Board({3, 2, 1})) == std::vector<int>{0, 1, 0, 1, 0, 1, 0});
}

TEST_CASE("marker_count_profile counts markers of every full placement within 5x5") {
  for (const Board& b : boards_within(5, false, true)) {
    const auto profile = marker_count_profile(b);
    const auto border = oracle::border_vertices(b);
    for (const auto& perm : oracle::full_perms(b)) {
      std::vector<Square> markers;
      for (std::size_t c = 0; c < perm.size(); ++c) markers.push_back({static_cast<int>(c) + 1, perm[c]});
      for (std::size_t i = 0; i < border.size(); ++i) REQUIRE(oracle::markers_in(markers, border[i]) == profile[i]);
    }
    for (int v : profile) CHECK(v >= 0);
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Board({2, 2})) == Board({2, 2}));
  CHECK(conjugate(Board({3, 1, 1})) == Board({3, 1, 1}));
  CHECK(conjugate(Board({2, 1})) == Board({2, 1}));
  CHECK(conjugate(Board({3})) == Board({1, 1, 1}));
  for (const Board& b : boards_within(6)) {
    CHECK(conjugate(b).heights().size() == oracle::conjugate_heights(b).size());
    CHECK(conjugate(b) == Board(oracle::conjugate_heights(b)));
    CHECK(conjugate(conjugate(b)) == b);
  }
}

TEST_CASE("border of the conjugate is the reflected reversal") {
  for (const Board& b : boards_within(6)) {
    const auto p = border_path(b);
    const auto q = border_path(conjugate(b));
    REQUIRE(p.size() == q.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(q.vertices[i] == reflect(p.vertices[p.size() - 1 - i]));
    for (std::size_t i = 0; i < p.steps.size(); ++i)
      CHECK(q.steps[i] != p.steps[p.steps.size() - 1 - i]);
  }
}

TEST_CASE("diagonal_pairs examples") {
  // The full diagonal from (0,2) to (2,0) passes through the border vertex
  // (1,1), so its two halves are diagonal pairs as well.
  const Board stair({2, 1});
  CHECK(diagonal_pairs(stair) == std::vector<DiagonalPair>{{0, 2}, {0, 4}, {2, 4}});
  const auto sp = border_path(stair);
  for (auto d : diagonal_pairs(stair))
    CHECK_FALSE((sp.vertices[d.left] == Vertex{1, 2} && sp.vertices[d.right] == Vertex{2, 1}));

  const Board sq({3, 3, 3});
  const auto path = border_path(sq);
  std::set<std::pair<Vertex, Vertex>> got;
  for (auto d : diagonal_pairs(sq)) got.insert({path.vertices[d.left], path.vertices[d.right]});
  CHECK(got == std::set<std::pair<Vertex, Vertex>>{{{0, 3}, {3, 0}}, {{1, 3}, {3, 1}}, {{2, 3}, {3, 2}}});

  const Board notch({3, 3, 2});
  const auto np = border_path(notch);
  std::set<std::pair<Vertex, Vertex>> ngot;
  for (auto d : diagonal_pairs(notch)) ngot.insert({np.vertices[d.left], np.vertices[d.right]});
  CHECK(ngot.count({{1, 3}, {3, 1}}) == 1);
  CHECK(ngot.count({{2, 3}, {3, 2}}) == 0);
}

TEST_CASE("diagonal_pairs agrees with walking oracle, N is constant on pairs, conjugation symmetry") {
  for (const Board& b : boards_within(6)) {
    const auto path = border_path(b);
    const auto profile = marker_count_profile(b);
    std::set<std::pair<Vertex, Vertex>> got;
    for (auto d : diagonal_pairs(b)) {
      CHECK(d.left < d.right);
      got.insert({path.vertices[d.left], path.vertices[d.right]});
      CHECK(profile[d.left] == profile[d.right]);
    }
    CHECK(got == oracle::diagonal_walk(b));

    const Board c = conjugate(b);
    const auto cpath = border_path(c);
    std::set<std::pair<Vertex, Vertex>> mirrored;
    for (auto d : diagonal_pairs(c)) mirrored.insert({reflect(cpath.vertices[d.right]), reflect(cpath.vertices[d.left])});
    CHECK(mirrored == got);
  }
}

TEST_CASE("admits_full_placement") {
  CHECK_FALSE(admits_full_placement(Board({3, 1, 1})));
  CHECK(admits_full_placement(Board({3, 2, 1})));
  CHECK(admits_full_placement(Board({2, 2})));
  CHECK_FALSE(admits_full_placement(Board({2, 2, 2})));
  for (const Board& b : boards_within(6)) CHECK(admits_full_placement(b) == oracle::has_full_placement(b));
}
