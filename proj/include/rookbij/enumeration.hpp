#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rookbij/board.hpp"
#include "rookbij/conditions.hpp"
#include "rookbij/placement.hpp"

namespace rookbij {

// Generators. Every visitor sees its objects in a fixed order so that
// reports are reproducible.

/// Full placements in lexicographic order of perm. Nothing is visited if
/// the board admits no full placement.
void for_each_full_placement(const Board& b, const std::function<void(const FullPlacement&)>& fn);
std::vector<FullPlacement> full_placements(const Board& b);

std::uint64_t count_avoiders(const Board& b, const Pattern& t);

/// Every rook placement, the empty one included. Columns are decided left
/// to right; "no marker" sorts before row 1, row 1 before row 2.
void for_each_rook_placement(const Board& b, const std::function<void(const Placement&)>& fn);
std::vector<Placement> rook_placements(const Board& b);

/// Nonempty Ferrers boards fitting in an n x n box, ordered by number of
/// squares, then by heights in decreasing lexicographic order.
std::vector<Board> boards_within(int n, bool square_bounded_only = false, bool full_only = false);

/// Every F-sequence passing the 231- or 312-conditions, in lexicographic
/// order. Candidates are grown along the border with monotonicity and
/// 0-condition pruning; entry i never exceeds the number of right steps
/// before vertex i, which monotonicity forces anyway.
std::vector<FSeq> valid_sequences(const Board& b, PatternClass which);

// Theorem sweeps.

enum class Theorem {
  t1,      // sequence map is injective on avoiders and reconstruct inverts it
  t2,      // realized sequences == sequences passing the conditions
  t4,      // alpha and beta are inverse bijections; S++ = S
  l1,      // marker counts in R(V) match marker_count_profile
  remark,  // partial placements: equal counts, alpha_general bijective per class
  counts,  // |S_F(231)| == |S_F(312)|
};

const char* theorem_name(Theorem t);

struct Failure {
  Board board;
  Theorem theorem;
  std::string witness;
};

struct SweepReport {
  Theorem theorem = Theorem::t1;
  int max_n = 0;  // 0 when run on an explicit board list
  std::size_t boards_checked = 0;
  std::size_t items_checked = 0;
  std::vector<Failure> failures;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return failures.empty(); }
};

struct SweepBounds {
  int placement = 5;  // t1, t2, t4, l1
  int count = 6;      // counts
  int rook = 4;       // remark
};

/// Boards a sweep of `t` runs over inside an n x n box.
std::vector<Board> sweep_domain(Theorem t, int n);

/// Runs `t` on each board. Boards outside the theorem's hypothesis are
/// skipped and not counted. With workers > 1 boards are split across
/// threads; failures are still reported in board order.
SweepReport verify_boards(std::span<const Board> boards, Theorem t, int workers = 1);
SweepReport verify_sweep(Theorem t, const SweepBounds& bounds, int workers = 1);
/// t1, t2, t4, l1, remark, counts in that order.
std::vector<SweepReport> verify_all(const SweepBounds& bounds, int workers = 1);

}  // namespace rookbij
