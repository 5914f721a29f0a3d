#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rookbij/board.hpp"
#include "rookbij/conditions.hpp"
#include "rookbij/placement.hpp"

// Text formats shared by the CLI and the tests. Parsers throw ParseError
// on malformed text and the domain errors (InvalidBoard, InvalidPlacement)
// on well-formed text describing an invalid object.
namespace rookbij {

/// "3,2,1"
Board parse_board(std::string_view text);
std::string format_board(const Board& b);

/// "(x,y)"
Vertex parse_vertex(std::string_view text);
std::string format_vertex(Vertex v);

/// Either a permutation word ("312", one digit per column, must be full)
/// or a comma-separated list of col:row pairs ("1:3,3:1", may be partial
/// or empty). Validated against `b`.
Placement parse_placement(const Board& b, std::string_view text);

/// Permutation word for n <= 9, col:row list otherwise.
std::string format_full(const FullPlacement& p);
/// Permutation word if `p` is full on `b` and n <= 9, col:row list otherwise.
std::string format_placement(const Board& b, const Placement& p);
std::string format_pairs(const Placement& p);

/// "0,1,2,1,0"; entries must be nonnegative.
FSeq parse_sequence(std::string_view text);
std::string format_sequence(const FSeq& s);

/// "231"
Pattern parse_pattern(std::string_view text);
/// Only 231 and 312.
PatternClass parse_pattern_class(std::string_view text);
const char* pattern_class_name(PatternClass c);

}  // namespace rookbij
