#pragma once

// Brute-force reference implementations used by the unit and acceptance
// tests. None of them call the code paths they are compared against.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rookbij/board.hpp"
#include "rookbij/placement.hpp"

namespace oracle {

using rookbij::Board;
using rookbij::Square;
using rookbij::Vertex;

inline bool in_board(const std::vector<int>& heights, int col, int row) {
  return col >= 1 && col <= static_cast<int>(heights.size()) && row >= 1 && row <= heights[col - 1];
}

inline std::vector<int> heights_of(const Board& b) { return {b.heights().begin(), b.heights().end()}; }

/// Border vertices by definition: vertices of F whose NE square is not in
/// F, listed left to right and top to bottom.
inline std::vector<Vertex> border_vertices(const Board& b) {
  const auto h = heights_of(b);
  const int cols = static_cast<int>(h.size());
  std::vector<Vertex> out;
  for (int x = 0; x <= cols; ++x) {
    const int top = x == 0 ? h[0] : h[x - 1];
    for (int y = top; y >= 0; --y)
      if (!in_board(h, x + 1, y + 1)) out.push_back({x, y});
  }
  return out;
}

/// Longest strictly increasing chain among the markers inside R(V), by
/// trying every subset.
inline int brute_lis(const std::vector<Square>& markers, Vertex v) {
  std::vector<Square> in;
  for (Square s : markers)
    if (s.col <= v.x && s.row <= v.y) in.push_back(s);
  std::sort(in.begin(), in.end());
  int best = 0;
  const std::uint32_t m = static_cast<std::uint32_t>(in.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int last = 0, len = 0;
    bool ok = true;
    for (std::uint32_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      ok = in[i].row > last;
      last = in[i].row;
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

inline int markers_in(const std::vector<Square>& markers, Vertex v) {
  int n = 0;
  for (Square s : markers)
    if (s.col <= v.x && s.row <= v.y) ++n;
  return n;
}

/// Classical containment: some k-subset (in column order) has rows
/// order-isomorphic to `word`.
inline bool contains_classically(std::vector<Square> markers, const std::vector<int>& word) {
  std::sort(markers.begin(), markers.end());
  const std::size_t m = markers.size(), k = word.size();
  if (m < k) return false;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<int> rows;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) rows.push_back(markers[i].row);
    std::vector<int> ranks(k);
    for (std::size_t i = 0; i < k; ++i)
      ranks[i] = 1 + static_cast<int>(std::count_if(rows.begin(), rows.end(), [&](int r) { return r < rows[i]; }));
    if (ranks == word) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

/// Avoidance as defined: the restriction to R(V) avoids the pattern for
/// every border vertex V.
inline bool avoids_per_border_vertex(const Board& b, const std::vector<Square>& markers, const std::vector<int>& word) {
  for (Vertex v : border_vertices(b)) {
    std::vector<Square> in;
    for (Square s : markers)
      if (s.col <= v.x && s.row <= v.y) in.push_back(s);
    if (contains_classically(in, word)) return false;
  }
  return true;
}

/// Full placements via next_permutation over all of S_n, filtered.
inline std::vector<std::vector<int>> full_perms(const Board& b) {
  std::vector<std::vector<int>> out;
  const auto h = heights_of(b);
  const int n = static_cast<int>(h.size());
  if (h[0] != n) return out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  do {
    bool ok = true;
    for (int c = 0; c < n && ok; ++c) ok = perm[static_cast<std::size_t>(c)] <= h[static_cast<std::size_t>(c)];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Rook placements by filtering all subsets of squares.
inline std::vector<std::vector<Square>> rook_subsets(const Board& b) {
  std::vector<Square> squares;
  const auto h = heights_of(b);
  for (int c = 1; c <= static_cast<int>(h.size()); ++c)
    for (int r = 1; r <= h[static_cast<std::size_t>(c - 1)]; ++r) squares.push_back({c, r});
  std::vector<std::vector<Square>> out;
  const std::uint32_t m = static_cast<std::uint32_t>(squares.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Square> pick;
    std::set<int> cols, rows;
    bool ok = true;
    for (std::uint32_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      ok = cols.insert(squares[i].col).second && rows.insert(squares[i].row).second;
      pick.push_back(squares[i]);
    }
    if (ok) out.push_back(pick);
  }
  return out;
}

/// Diagonal partners found by walking each border vertex down-right one
/// square at a time while the crossed square stays in the board.
inline std::set<std::pair<Vertex, Vertex>> diagonal_walk(const Board& b) {
  const auto h = heights_of(b);
  const auto border = border_vertices(b);
  const std::set<Vertex> on_border(border.begin(), border.end());
  std::set<std::pair<Vertex, Vertex>> out;
  for (Vertex v : border) {
    Vertex w = v;
    while (in_board(h, w.x + 1, w.y)) {
      w = {w.x + 1, w.y - 1};
      if (on_border.count(w)) out.insert({v, w});
    }
  }
  return out;
}

inline std::vector<int> conjugate_heights(const Board& b) {
  const auto h = heights_of(b);
  std::vector<int> out;
  for (int r = 1; r <= h[0]; ++r)
    out.push_back(static_cast<int>(std::count_if(h.begin(), h.end(), [&](int x) { return x >= r; })));
  return out;
}

/// Hall's condition checked directly: backtracking search for one full
/// placement.
inline bool has_full_placement(const Board& b) { return !full_perms(b).empty(); }

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  return c;
}

/// Random rook placement on a random board inside a max_n x max_n box.
struct RandomInstance {
  Board board;
  std::vector<Square> markers;
};

inline RandomInstance random_instance(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> dim(1, max_n);
  const int cols = dim(rng);
  std::vector<int> h(static_cast<std::size_t>(cols));
  int cap = max_n;
  for (auto& x : h) {
    x = std::uniform_int_distribution<int>(1, cap)(rng);
    cap = x;
  }
  std::vector<Square> markers;
  std::set<int> rows;
  std::bernoulli_distribution take(0.7);
  for (int c = 1; c <= cols; ++c) {
    if (!take(rng)) continue;
    std::vector<int> free;
    for (int r = 1; r <= h[static_cast<std::size_t>(c - 1)]; ++r)
      if (!rows.count(r)) free.push_back(r);
    if (free.empty()) continue;
    const int r = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    rows.insert(r);
    markers.push_back({c, r});
  }
  return {Board(h), markers};
}

}  // namespace oracle
