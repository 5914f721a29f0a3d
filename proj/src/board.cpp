#include "rookbij/board.hpp"

#include <numeric>
#include <string>

#include "rookbij/error.hpp"

namespace rookbij {

Board::Board(std::vector<int> heights) : heights_(std::move(heights)) {
  if (heights_.empty()) throw InvalidBoard("board has no columns");
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (heights_[i] < 1)
      throw InvalidBoard("column " + std::to_string(i + 1) + " has height < 1");
    if (i > 0 && heights_[i] > heights_[i - 1])
      throw InvalidBoard("column heights must be weakly decreasing (column " +
                         std::to_string(i + 1) + ")");
  }
}

int Board::height(int col) const {
  if (col < 1 || col > n_cols()) return 0;
  return heights_[col - 1];
}

int Board::cells() const { return std::accumulate(heights_.begin(), heights_.end(), 0); }

bool Board::contains_square(int col, int row) const {
  return col >= 1 && col <= n_cols() && row >= 1 && row <= heights_[col - 1];
}

bool Board::contains_vertex(Vertex v) const {
  if (v.x < 0 || v.x > n_cols() || v.y < 0 || v.y > n_rows()) return false;
  return v.x == 0 || v.y == 0 || v.y <= heights_[v.x - 1];
}

BorderPath border_path(const Board& b) {
  BorderPath path;
  const std::size_t len = static_cast<std::size_t>(b.n_cols() + b.n_rows() + 1);
  path.vertices.reserve(len);
  path.steps.reserve(len - 1);

  Vertex v{0, b.n_rows()};
  path.vertices.push_back(v);
  while (v.x < b.n_cols() || v.y > 0) {
    // Heights never exceed the current y, so column x+1 either tops out
    // here (go right) or lower down.
    if (v.x < b.n_cols() && b.height(v.x + 1) == v.y) {
      ++v.x;
      path.steps.push_back(Step::right);
    } else {
      --v.y;
      path.steps.push_back(Step::down);
    }
    path.vertices.push_back(v);
  }
  return path;
}

std::vector<int> marker_count_profile(const Board& b) {
  const BorderPath path = border_path(b);
  std::vector<int> out;
  out.reserve(path.size());
  int n = 0;
  out.push_back(n);
  for (Step s : path.steps) {
    n += (s == Step::right) ? 1 : -1;
    out.push_back(n);
  }
  return out;
}

Board conjugate(const Board& b) {
  std::vector<int> h(static_cast<std::size_t>(b.n_rows()), 0);
  for (int height : b.heights())
    for (int r = 0; r < height; ++r) ++h[static_cast<std::size_t>(r)];
  return Board(std::move(h));
}

std::vector<DiagonalPair> diagonal_pairs(const Board& b) {
  const BorderPath path = border_path(b);
  std::vector<DiagonalPair> out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v1 = path.vertices[i];
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      const Vertex v2 = path.vertices[j];
      const int d = v2.x - v1.x;
      if (d < 1 || v1.y - v2.y != d) continue;
      bool inside = true;
      for (int k = 0; k < d && inside; ++k) inside = b.contains_square(v1.x + k + 1, v1.y - k);
      if (inside) out.push_back({i, j});
    }
  }
  return out;
}

bool admits_full_placement(const Board& b) {
  if (!b.square_bounded()) return false;
  const int n = b.n_cols();
  for (int i = 1; i <= n; ++i)
    if (b.height(i) < n + 1 - i) return false;
  return true;
}

}  // namespace rookbij
