#include "rookbij/placement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rookbij/error.hpp"

namespace rookbij {

namespace {

std::string square_str(Square s) {
  return "(" + std::to_string(s.col) + "," + std::to_string(s.row) + ")";
}

// Extends `chosen` (indices into `markers`) by one marker at a time,
// keeping the rows of the chosen markers order-isomorphic to the same
// prefix of the pattern word.
bool search_occurrence(const Board& b, const std::vector<Square>& markers,
                       const std::vector<int>& word, std::size_t next,
                       std::vector<std::size_t>& chosen) {
  const std::size_t k = chosen.size();
  if (k == word.size()) {
    int top = 0;
    for (std::size_t i : chosen) top = std::max(top, markers[i].row);
    return b.contains_vertex({markers[chosen.back()].col, top});
  }
  for (std::size_t i = next; i < markers.size(); ++i) {
    bool consistent = true;
    for (std::size_t m = 0; m < k && consistent; ++m) {
      const bool rows_lt = markers[chosen[m]].row < markers[i].row;
      const bool word_lt = word[m] < word[k];
      consistent = rows_lt == word_lt;
    }
    if (!consistent) continue;
    chosen.push_back(i);
    if (search_occurrence(b, markers, word, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Placement::Placement(std::vector<Square> markers) : markers_(std::move(markers)) {
  std::sort(markers_.begin(), markers_.end());
  std::set<int> rows;
  for (std::size_t i = 0; i < markers_.size(); ++i) {
    const Square s = markers_[i];
    if (s.col < 1 || s.row < 1) throw InvalidPlacement("marker " + square_str(s) + " is off the board");
    if (i > 0 && markers_[i - 1].col == s.col)
      throw InvalidPlacement("two markers in column " + std::to_string(s.col));
    if (!rows.insert(s.row).second) throw InvalidPlacement("two markers in row " + std::to_string(s.row));
  }
}

bool Placement::has_marker(Square s) const {
  return std::binary_search(markers_.begin(), markers_.end(), s);
}

Pattern::Pattern(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw ParseError("empty pattern");
  std::vector<int> sorted = word_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) throw ParseError("pattern is not a permutation of 1..k");
}

Pattern Pattern::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
  return Pattern(std::move(inv));
}

std::string Pattern::str() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_.size() > 9 && i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

Pattern pattern_231() { return Pattern({2, 3, 1}); }
Pattern pattern_312() { return Pattern({3, 1, 2}); }

void validate(const Board& b, const Placement& p) {
  for (Square s : p.markers())
    if (!b.contains_square(s)) throw InvalidPlacement("marker " + square_str(s) + " is outside the board");
}

void validate(const Board& b, const FullPlacement& p) {
  const int n = b.n_cols();
  if (static_cast<int>(p.perm.size()) != n)
    throw InvalidPlacement("full placement needs " + std::to_string(n) + " entries, got " +
                           std::to_string(p.perm.size()));
  if (b.n_rows() != n) throw InvalidPlacement("board is not square-bounded, no full placement exists");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int c = 1; c <= n; ++c) {
    const int r = p.perm[static_cast<std::size_t>(c - 1)];
    if (r < 1 || r > n) throw InvalidPlacement("row " + std::to_string(r) + " out of range");
    if (seen[static_cast<std::size_t>(r)]) throw InvalidPlacement("two markers in row " + std::to_string(r));
    seen[static_cast<std::size_t>(r)] = true;
    if (!b.contains_square(c, r)) throw InvalidPlacement("marker " + square_str({c, r}) + " is outside the board");
  }
}

Placement to_placement(const FullPlacement& p) {
  std::vector<Square> markers;
  markers.reserve(p.perm.size());
  for (std::size_t i = 0; i < p.perm.size(); ++i) markers.push_back({static_cast<int>(i) + 1, p.perm[i]});
  return Placement(std::move(markers));
}

std::optional<FullPlacement> as_full(const Board& b, const Placement& p) {
  if (!b.square_bounded() || static_cast<int>(p.size()) != b.n_cols()) return std::nullopt;
  FullPlacement out;
  for (Square s : p.markers()) {
    if (!b.contains_square(s) || s.col != static_cast<int>(out.perm.size()) + 1) return std::nullopt;
    out.perm.push_back(s.row);
  }
  // Placement already guarantees distinct rows; n distinct rows in 1..n
  // fill every row.
  return out;
}

std::optional<std::vector<Square>> find_occurrence(const Board& b, const Placement& p,
                                                   const Pattern& t) {
  validate(b, p);
  std::vector<std::size_t> chosen;
  if (!search_occurrence(b, p.markers(), t.word(), 0, chosen)) return std::nullopt;
  std::vector<Square> out;
  for (std::size_t i : chosen) out.push_back(p.markers()[i]);
  return out;
}

bool avoids(const Board& b, const Placement& p, const Pattern& t) { return !find_occurrence(b, p, t); }

bool avoids(const Board& b, const FullPlacement& p, const Pattern& t) {
  validate(b, p);
  return avoids(b, to_placement(p), t);
}

SGrid::SGrid(Board board, std::vector<std::vector<int>> columns)
    : board_(std::move(board)), columns_(std::move(columns)) {}

int SGrid::at(Vertex v) const {
  if (!board_.contains_vertex(v))
    throw std::out_of_range("vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) + ") not in board");
  return columns_[static_cast<std::size_t>(v.x)][static_cast<std::size_t>(v.y)];
}

SGrid s_grid(const Board& b, const Placement& p) {
  validate(b, p);
  std::vector<int> marker_row(static_cast<std::size_t>(b.n_cols()) + 1, 0);
  for (Square s : p.markers()) marker_row[static_cast<std::size_t>(s.col)] = s.row;

  std::vector<std::vector<int>> cols(static_cast<std::size_t>(b.n_cols()) + 1);
  cols[0].assign(static_cast<std::size_t>(b.n_rows()) + 1, 0);
  for (int x = 1; x <= b.n_cols(); ++x) {
    const auto& left = cols[static_cast<std::size_t>(x - 1)];
    auto& cur = cols[static_cast<std::size_t>(x)];
    cur.assign(static_cast<std::size_t>(b.height(x)) + 1, 0);
    for (int y = 1; y <= b.height(x); ++y) {
      const auto uy = static_cast<std::size_t>(y);
      if (marker_row[static_cast<std::size_t>(x)] == y)
        cur[uy] = left[uy - 1] + 1;
      else
        cur[uy] = std::max(left[uy], cur[uy - 1]);
    }
  }
  return SGrid(b, std::move(cols));
}

SGrid s_grid(const Board& b, const FullPlacement& p) {
  validate(b, p);
  return s_grid(b, to_placement(p));
}

std::vector<int> s_sequence(const Board& b, const Placement& p) {
  const SGrid grid = s_grid(b, p);
  std::vector<int> out;
  for (Vertex v : border_path(b).vertices) out.push_back(grid.at(v));
  return out;
}

std::vector<int> s_sequence(const Board& b, const FullPlacement& p) {
  validate(b, p);
  return s_sequence(b, to_placement(p));
}

FullPlacement inverse_placement(const Board& b, const FullPlacement& p) {
  validate(b, p);
  FullPlacement inv;
  inv.perm.resize(p.perm.size());
  for (std::size_t c = 0; c < p.perm.size(); ++c)
    inv.perm[static_cast<std::size_t>(p.perm[c] - 1)] = static_cast<int>(c) + 1;
  return inv;
}

}  // namespace rookbij
