#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rookbij/board.hpp"
#include "rookbij/conditions.hpp"
#include "rookbij/placement.hpp"

namespace rookbij {

struct BijectionOptions {
  /// Run the condition checker (or avoidance test) on inputs before mapping.
  bool check_preconditions = true;
  /// Recompute s_sequence of every result and compare with the target.
#ifdef NDEBUG
  bool verify_result = false;
#else
  bool verify_result = true;
#endif
};

/// S+(V) = 0 if S(V) = 0, otherwise N(F,V) + 1 - S(V). Throws OutOfRange
/// unless 0 <= s[i] <= N(F,V_i), LengthMismatch on a wrong length.
FSeq plus_transform(const Board& b, const FSeq& s);

/// The unique 231-avoiding full placement with border sequence `s`,
/// rebuilt column by column from the right.
///
/// Throws ConditionViolation if `s` fails the 231-conditions (when
/// checked) or the board is not square-bounded, and ReconstructionFailure
/// if the sequence cannot be peeled.
FullPlacement reconstruct_231(const Board& b, const FSeq& s, const BijectionOptions& opt = {});
/// Through the conjugate board and the reversed sequence.
FullPlacement reconstruct_312(const Board& b, const FSeq& s, const BijectionOptions& opt = {});
FullPlacement reconstruct(const Board& b, const FSeq& s, PatternClass which,
                          const BijectionOptions& opt = {});

/// 231-avoider -> 312-avoider with sequence S+. Throws NotAvoider.
FullPlacement alpha(const Board& b, const FullPlacement& p, const BijectionOptions& opt = {});
/// 312-avoider -> 231-avoider with sequence S+. Inverse of alpha.
FullPlacement beta(const Board& b, const FullPlacement& p, const BijectionOptions& opt = {});

/// Occupied columns and rows of a rook placement and the Ferrers board
/// they cut out of the original board.
struct CompactionContext {
  std::vector<int> occupied_cols;       // sorted
  std::vector<int> occupied_rows;       // sorted
  std::optional<Board> compact_board;   // nullopt for the empty placement
};

/// Delete empty rows and columns and slide what is left down and left.
/// The markers become a full placement on the compact board (empty for
/// the empty placement).
std::pair<CompactionContext, FullPlacement> compact(const Board& b, const Placement& p);
/// Inverse of compact for any full placement on ctx.compact_board.
Placement expand(const CompactionContext& ctx, const FullPlacement& p);

/// alpha on the compaction, re-expanded through the same rows and columns.
Placement alpha_general(const Board& b, const Placement& p, const BijectionOptions& opt = {});
Placement beta_general(const Board& b, const Placement& p, const BijectionOptions& opt = {});

}  // namespace rookbij
