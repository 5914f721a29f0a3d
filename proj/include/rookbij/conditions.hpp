#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rookbij/board.hpp"
#include "rookbij/error.hpp"

namespace rookbij {

/// Values of S on the right/up border of a board, top-left first.
using FSeq = std::vector<int>;

/// The two avoidance classes related by the bijection.
enum class PatternClass { p231, p312 };

PatternClass opposite(PatternClass c);

enum class ViolationKind { monotonicity, zero, diagonal };

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> indices;  // border indices involved
  std::string location;              // e.g. "border indices 0-1" or "(2,3)>(3,2)"
  std::string detail;
};

struct ConditionReport {
  PatternClass which = PatternClass::p231;
  bool verdict = true;
  std::vector<Violation> violations;  // ordered by border index
};

const char* kind_name(ViolationKind k);
/// One line per violation, e.g. "ZERO at border indices 0-1".
std::string violation_line(const Violation& v);

/// Monotonicity, 0-conditions and the S(V1) <= S(V2) diagonal condition.
/// Throws LengthMismatch if `s` does not have one entry per border vertex
/// and OutOfRange on negative entries.
ConditionReport check_231(const Board& b, const FSeq& s);
/// Same as check_231 with the diagonal inequality reversed.
ConditionReport check_312(const Board& b, const FSeq& s);
ConditionReport check(const Board& b, const FSeq& s, PatternClass which);

/// Thrown when a map's precondition on the input sequence fails.
class ConditionViolation : public Error {
 public:
  explicit ConditionViolation(ConditionReport report);
  const ConditionReport& report() const { return report_; }

 private:
  ConditionReport report_;
};

}  // namespace rookbij
