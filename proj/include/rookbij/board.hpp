#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace rookbij {

/// A unit square, 1-indexed: column `col` from the left, row `row` from
/// the bottom.
struct Square {
  int col = 0;
  int row = 0;
  auto operator<=>(const Square&) const = default;
};

/// A lattice point; the bottom-left corner of the board is (0,0).
struct Vertex {
  int x = 0;
  int y = 0;
  auto operator<=>(const Vertex&) const = default;
};

enum class Step { right, down };

/// Ferrers board stored as weakly decreasing column heights.
///
/// Columns are bottom-justified and the columns are left-justified, so
/// the board is determined by its heights. The constructor rejects empty
/// boards, zero heights and increasing steps with InvalidBoard.
class Board {
 public:
  explicit Board(std::vector<int> heights);

  std::span<const int> heights() const { return heights_; }
  int n_cols() const { return static_cast<int>(heights_.size()); }
  int n_rows() const { return heights_.front(); }
  /// Height of column `col` (1-indexed); 0 outside the board.
  int height(int col) const;
  int cells() const;

  /// Longest row and longest column have the same length.
  bool square_bounded() const { return n_rows() == n_cols(); }

  bool contains_square(int col, int row) const;
  bool contains_square(Square s) const { return contains_square(s.col, s.row); }
  bool contains_vertex(Vertex v) const;

  auto operator<=>(const Board&) const = default;

 private:
  std::vector<int> heights_;
};

/// The right/up border of a board: the lattice path from the top-left
/// corner (0, n_rows) to the bottom-right corner (n_cols, 0).
struct BorderPath {
  std::vector<Vertex> vertices;
  std::vector<Step> steps;  // steps[i] leads from vertices[i] to vertices[i+1]

  std::size_t size() const { return vertices.size(); }
};

/// Two border indices joined by a slope -1 segment inside the board;
/// `left` < `right`.
struct DiagonalPair {
  std::size_t left = 0;
  std::size_t right = 0;
  auto operator<=>(const DiagonalPair&) const = default;
};

BorderPath border_path(const Board& b);

/// Number of markers any full placement puts in R(V), for each border
/// vertex V in border order. Starts at 0, +1 per right step, -1 per down
/// step. Entries can be negative on boards without full placements.
std::vector<int> marker_count_profile(const Board& b);

/// Reflection across the main diagonal.
Board conjugate(const Board& b);

/// All F-diagonal vertex pairs, including pairs whose segment continues
/// past either end. Sorted by (left, right).
std::vector<DiagonalPair> diagonal_pairs(const Board& b);

/// Hall condition for full rook placements: square-bounded and column i
/// has height at least n+1-i.
bool admits_full_placement(const Board& b);

/// Mirror image of a vertex across the main diagonal.
constexpr Vertex reflect(Vertex v) { return {v.y, v.x}; }

}  // namespace rookbij
