#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rookbij/board.hpp"

namespace rookbij {

/// A rook placement: at most one marker per row and per column. Markers
/// are kept sorted by column.
class Placement {
 public:
  Placement() = default;
  /// Sorts the markers and checks that no row or column repeats and all
  /// coordinates are positive. Throws InvalidPlacement otherwise. Board
  /// membership is checked separately by validate().
  explicit Placement(std::vector<Square> markers);

  const std::vector<Square>& markers() const { return markers_; }
  std::size_t size() const { return markers_.size(); }
  bool empty() const { return markers_.empty(); }
  bool has_marker(Square s) const;

  auto operator<=>(const Placement&) const = default;

 private:
  std::vector<Square> markers_;
};

/// A full rook placement as a permutation: perm[i] is the row of the
/// marker in column i+1.
struct FullPlacement {
  std::vector<int> perm;
  auto operator<=>(const FullPlacement&) const = default;
};

/// Pattern word over {1..k}, e.g. 231.
class Pattern {
 public:
  /// Throws ParseError unless `word` is a permutation of {1..k}, k >= 1.
  explicit Pattern(std::vector<int> word);

  const std::vector<int>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  Pattern inverse() const;
  std::string str() const;

  auto operator<=>(const Pattern&) const = default;

 private:
  std::vector<int> word_;
};

Pattern pattern_231();
Pattern pattern_312();

/// Throws InvalidPlacement if a marker lies outside the board.
void validate(const Board& b, const Placement& p);
/// Throws InvalidPlacement unless `p` is a full placement on `b`.
void validate(const Board& b, const FullPlacement& p);

Placement to_placement(const FullPlacement& p);
/// The permutation form of `p` if it has exactly one marker in each row
/// and column of `b`.
std::optional<FullPlacement> as_full(const Board& b, const Placement& p);

/// Markers of an occurrence of `t` whose bounding vertex (largest column,
/// largest row) lies in the board, or nullopt if `p` avoids `t`.
/// Occurrences are searched in lexicographic order of marker indices.
std::optional<std::vector<Square>> find_occurrence(const Board& b, const Placement& p,
                                                   const Pattern& t);
bool avoids(const Board& b, const Placement& p, const Pattern& t);
bool avoids(const Board& b, const FullPlacement& p, const Pattern& t);

/// S(P,V) for every vertex V of the board.
class SGrid {
 public:
  SGrid(Board board, std::vector<std::vector<int>> columns);

  const Board& board() const { return board_; }
  /// Throws std::out_of_range if `v` is not a vertex of the board.
  int at(Vertex v) const;

 private:
  Board board_;
  // columns_[x][y] for 0 <= y <= top of vertex line x
  std::vector<std::vector<int>> columns_;
};

/// Longest increasing marker chain in each R(V), filled by the local
/// growth rule square by square.
SGrid s_grid(const Board& b, const Placement& p);
SGrid s_grid(const Board& b, const FullPlacement& p);

/// S(P,V) along the right/up border, top-left first.
std::vector<int> s_sequence(const Board& b, const Placement& p);
std::vector<int> s_sequence(const Board& b, const FullPlacement& p);

/// Reflect `p` across the main diagonal; the result lives on conjugate(b).
FullPlacement inverse_placement(const Board& b, const FullPlacement& p);

}  // namespace rookbij
