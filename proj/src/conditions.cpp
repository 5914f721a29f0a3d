#include "rookbij/conditions.hpp"

#include <algorithm>
#include <string>

namespace rookbij {

namespace {

std::string vertex_str(Vertex v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

std::string index_range(std::size_t i, std::size_t j) {
  return "border indices " + std::to_string(i) + "-" + std::to_string(j);
}

ConditionReport run_checks(const Board& b, const FSeq& s, PatternClass which) {
  const BorderPath path = border_path(b);
  if (s.size() != path.size())
    throw LengthMismatch("sequence has " + std::to_string(s.size()) + " entries, board border has " +
                         std::to_string(path.size()) + " vertices");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 0) throw OutOfRange("negative entry at border index " + std::to_string(i));

  ConditionReport report;
  report.which = which;
  auto& out = report.violations;

  // Monotonicity. A right step goes from V1 to V2, a down step from V2 to V1.
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const bool right = path.steps[i] == Step::right;
    const int lo = right ? s[i] : s[i + 1];
    const int hi = right ? s[i + 1] : s[i];
    if (hi < lo || hi > lo + 1) {
      out.push_back({ViolationKind::monotonicity, {i, i + 1}, index_range(i, i + 1),
                     std::string(right ? "right" : "down") + " step " + vertex_str(path.vertices[i]) + "->" +
                         vertex_str(path.vertices[i + 1]) + " has values " + std::to_string(s[i]) + "," +
                         std::to_string(s[i + 1])});
    }
  }

  // 0-conditions.
  const std::size_t last = s.size() - 1;
  if (s.front() != 0)
    out.push_back({ViolationKind::zero, {0}, "border index 0", "first value is " + std::to_string(s.front())});
  if (s.back() != 0)
    out.push_back({ViolationKind::zero, {last}, "border index " + std::to_string(last),
                   "last value is " + std::to_string(s.back())});
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == 0 && s[i + 1] == 0)
      out.push_back({ViolationKind::zero, {i, i + 1}, index_range(i, i + 1), "consecutive zeros"});

  // Diagonal condition.
  const bool le = which == PatternClass::p231;
  for (const DiagonalPair& d : diagonal_pairs(b)) {
    const int v1 = s[d.left];
    const int v2 = s[d.right];
    if (le ? v1 <= v2 : v1 >= v2) continue;
    const Vertex a = path.vertices[d.left];
    const Vertex c = path.vertices[d.right];
    out.push_back({ViolationKind::diagonal, {d.left, d.right},
                   vertex_str(a) + (le ? "<" : ">") + vertex_str(c),
                   "S" + vertex_str(a) + "=" + std::to_string(v1) + ", S" + vertex_str(c) + "=" +
                       std::to_string(v2)});
  }

  std::stable_sort(out.begin(), out.end(), [](const Violation& x, const Violation& y) {
    if (x.indices.front() != y.indices.front()) return x.indices.front() < y.indices.front();
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.indices.back() < y.indices.back();
  });
  report.verdict = out.empty();
  return report;
}

std::string summarize(const ConditionReport& r) {
  std::string msg = std::string("sequence fails the ") + (r.which == PatternClass::p231 ? "231" : "312") +
                    "-conditions";
  for (const Violation& v : r.violations) msg += "; " + violation_line(v);
  return msg;
}

}  // namespace

PatternClass opposite(PatternClass c) {
  return c == PatternClass::p231 ? PatternClass::p312 : PatternClass::p231;
}

const char* kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::monotonicity:
      return "MONOTONICITY";
    case ViolationKind::zero:
      return "ZERO";
    case ViolationKind::diagonal:
      return "DIAGONAL";
  }
  return "?";
}

std::string violation_line(const Violation& v) { return std::string(kind_name(v.kind)) + " at " + v.location; }

ConditionReport check_231(const Board& b, const FSeq& s) { return run_checks(b, s, PatternClass::p231); }

ConditionReport check_312(const Board& b, const FSeq& s) { return run_checks(b, s, PatternClass::p312); }

ConditionReport check(const Board& b, const FSeq& s, PatternClass which) { return run_checks(b, s, which); }

ConditionViolation::ConditionViolation(ConditionReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

}  // namespace rookbij
