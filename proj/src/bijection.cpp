#include "rookbij/bijection.hpp"

#include <algorithm>
#include <string>

#include "rookbij/error.hpp"

namespace rookbij {

namespace {

void require_square_bounded(const Board& b) {
  if (!b.square_bounded())
    throw InvalidBoard("board is not square-bounded (" + std::to_string(b.n_rows()) + " rows, " +
                       std::to_string(b.n_cols()) + " columns)");
}

void require_length(const Board& b, const FSeq& s) {
  const auto expected = static_cast<std::size_t>(b.n_cols() + b.n_rows() + 1);
  if (s.size() != expected)
    throw LengthMismatch("sequence has " + std::to_string(s.size()) + " entries, expected " +
                         std::to_string(expected));
}

[[noreturn]] void fail(const std::string& why) { throw ReconstructionFailure("reconstruction failed: " + why); }

std::string perm_str(const FullPlacement& p) {
  std::string out;
  for (int r : p.perm) out += (out.empty() ? "" : ",") + std::to_string(r);
  return out;
}

void verify_sequence(const Board& b, const FullPlacement& p, const FSeq& expected) {
  if (s_sequence(b, p) != expected) fail("placement " + perm_str(p) + " does not reproduce the sequence");
}

Placement map_general(const Board& b, const Placement& p, PatternClass from, const BijectionOptions& opt) {
  const Pattern source = from == PatternClass::p231 ? pattern_231() : pattern_312();
  validate(b, p);
  if (opt.check_preconditions && !avoids(b, p, source))
    throw NotAvoider("placement contains " + source.str());
  if (p.empty()) return p;
  auto [ctx, full] = compact(b, p);
  BijectionOptions inner = opt;
  inner.check_preconditions = false;  // compaction preserves avoidance
  const FullPlacement image = from == PatternClass::p231 ? alpha(*ctx.compact_board, full, inner)
                                                         : beta(*ctx.compact_board, full, inner);
  return expand(ctx, image);
}

FullPlacement map_full(const Board& b, const FullPlacement& p, PatternClass from, const BijectionOptions& opt) {
  require_square_bounded(b);
  validate(b, p);
  const Pattern source = from == PatternClass::p231 ? pattern_231() : pattern_312();
  if (opt.check_preconditions && !avoids(b, p, source))
    throw NotAvoider("placement " + perm_str(p) + " contains " + source.str());
  const FSeq target = plus_transform(b, s_sequence(b, p));
  FullPlacement image = reconstruct(b, target, opposite(from), opt);
  if (opt.verify_result) verify_sequence(b, image, target);
  return image;
}

}  // namespace

FSeq plus_transform(const Board& b, const FSeq& s) {
  require_length(b, s);
  const std::vector<int> n = marker_count_profile(b);
  FSeq out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] > n[i])
      throw OutOfRange("entry " + std::to_string(s[i]) + " at border index " + std::to_string(i) +
                       " is outside [0," + std::to_string(n[i]) + "]");
    out[i] = s[i] == 0 ? 0 : n[i] + 1 - s[i];
  }
  return out;
}

FullPlacement reconstruct_231(const Board& b, const FSeq& s, const BijectionOptions& opt) {
  require_square_bounded(b);
  require_length(b, s);
  if (opt.check_preconditions) {
    ConditionReport report = check_231(b, s);
    if (!report.verdict) throw ConditionViolation(std::move(report));
  }

  FullPlacement out;
  out.perm.assign(static_cast<std::size_t>(b.n_cols()), 0);
  std::vector<int> heights(b.heights().begin(), b.heights().end());
  std::vector<int> row_labels;  // original row of each working row
  for (int r = 1; r <= b.n_rows(); ++r) row_labels.push_back(r);
  FSeq seq = s;

  while (!heights.empty()) {
    const int n = static_cast<int>(heights.size());
    const int r = heights.back();
    const BorderPath path = border_path(Board(heights));
    const std::size_t len = seq.size();
    if (path.size() != len || static_cast<int>(row_labels.size()) != heights.front())
      fail("working sequence does not match the working board");

    // b_k sits at (n, k), a_r at (n-1, r) just before the right column.
    auto rhs = [&](int k) { return seq[len - 1 - static_cast<std::size_t>(k)]; };
    const int a_top = seq[len - 2 - static_cast<std::size_t>(r)];

    int j = r;
    while (j >= 1 && rhs(j) <= rhs(j - 1)) --j;
    if (j < 1) fail("no rise on the line x=" + std::to_string(n));
    if (j == r && a_top != rhs(r - 1)) fail("value left of the top of column " + std::to_string(n) + " is inconsistent");

    out.perm[static_cast<std::size_t>(n - 1)] = row_labels[static_cast<std::size_t>(j - 1)];
    row_labels.erase(row_labels.begin() + (j - 1));

    // Values on the line x=n-1 after deleting row j, below the new top
    // (n-1, r-1) which is already the last prefix entry.
    FSeq next(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(len - 1 - static_cast<std::size_t>(r)));
    for (int y = r - 2; y >= 0; --y) {
      if (y >= j)
        next.push_back(a_top);
      else if (y == j - 1)
        next.push_back(rhs(j - 1));
      else
        next.push_back(rhs(y));
    }
    seq = std::move(next);

    heights.pop_back();
    for (int& h : heights)
      if (--h < 1) fail("deleting row " + std::to_string(j) + " empties a column");
  }
  if (!row_labels.empty()) fail("rows left over after the last column");

  if (opt.verify_result) {
    verify_sequence(b, out, s);
    if (!avoids(b, out, pattern_231())) fail("result contains 231");
  }
  return out;
}

FullPlacement reconstruct_312(const Board& b, const FSeq& s, const BijectionOptions& opt) {
  require_square_bounded(b);
  require_length(b, s);
  if (opt.check_preconditions) {
    ConditionReport report = check_312(b, s);
    if (!report.verdict) throw ConditionViolation(std::move(report));
  }
  const Board conj = conjugate(b);
  const FSeq reversed(s.rbegin(), s.rend());
  BijectionOptions inner = opt;
  inner.check_preconditions = false;
  const FullPlacement mirrored = reconstruct_231(conj, reversed, inner);
  FullPlacement out = inverse_placement(conj, mirrored);
  if (opt.verify_result) {
    verify_sequence(b, out, s);
    if (!avoids(b, out, pattern_312())) fail("result contains 312");
  }
  return out;
}

FullPlacement reconstruct(const Board& b, const FSeq& s, PatternClass which, const BijectionOptions& opt) {
  return which == PatternClass::p231 ? reconstruct_231(b, s, opt) : reconstruct_312(b, s, opt);
}

FullPlacement alpha(const Board& b, const FullPlacement& p, const BijectionOptions& opt) {
  return map_full(b, p, PatternClass::p231, opt);
}

FullPlacement beta(const Board& b, const FullPlacement& p, const BijectionOptions& opt) {
  return map_full(b, p, PatternClass::p312, opt);
}

std::pair<CompactionContext, FullPlacement> compact(const Board& b, const Placement& p) {
  validate(b, p);
  CompactionContext ctx;
  FullPlacement full;
  if (p.empty()) return {ctx, full};

  for (Square s : p.markers()) {
    ctx.occupied_cols.push_back(s.col);
    ctx.occupied_rows.push_back(s.row);
  }
  std::sort(ctx.occupied_rows.begin(), ctx.occupied_rows.end());

  std::vector<int> heights;
  const auto& rows = ctx.occupied_rows;
  for (int c : ctx.occupied_cols) {
    const auto fit = std::upper_bound(rows.begin(), rows.end(), b.height(c)) - rows.begin();
    heights.push_back(static_cast<int>(fit));
  }
  ctx.compact_board = Board(std::move(heights));

  for (Square s : p.markers()) {
    const auto idx = std::lower_bound(rows.begin(), rows.end(), s.row) - rows.begin();
    full.perm.push_back(static_cast<int>(idx) + 1);
  }
  return {ctx, full};
}

Placement expand(const CompactionContext& ctx, const FullPlacement& p) {
  if (!ctx.compact_board) {
    if (!p.perm.empty()) throw InvalidPlacement("empty compaction expects an empty placement");
    return Placement();
  }
  validate(*ctx.compact_board, p);
  std::vector<Square> markers;
  for (std::size_t i = 0; i < p.perm.size(); ++i)
    markers.push_back({ctx.occupied_cols[i], ctx.occupied_rows[static_cast<std::size_t>(p.perm[i] - 1)]});
  return Placement(std::move(markers));
}

Placement alpha_general(const Board& b, const Placement& p, const BijectionOptions& opt) {
  return map_general(b, p, PatternClass::p231, opt);
}

Placement beta_general(const Board& b, const Placement& p, const BijectionOptions& opt) {
  return map_general(b, p, PatternClass::p312, opt);
}

}  // namespace rookbij
