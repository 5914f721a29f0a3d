#include "rookbij/text.hpp"

#include <cctype>
#include <charconv>

#include "rookbij/error.hpp"

namespace rookbij {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  return value;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

Board parse_board(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty board");
  std::vector<int> heights;
  for (std::string_view part : split(text, ',')) heights.push_back(parse_int(part, "board height"));
  return Board(std::move(heights));
}

std::string format_board(const Board& b) { return join(std::vector<int>(b.heights().begin(), b.heights().end())); }

Vertex parse_vertex(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError("vertex must look like (x,y): '" + std::string(text) + "'");
  const auto parts = split(text.substr(1, text.size() - 2), ',');
  if (parts.size() != 2) throw ParseError("vertex must have two coordinates");
  return {parse_int(parts[0], "vertex coordinate"), parse_int(parts[1], "vertex coordinate")};
}

std::string format_vertex(Vertex v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

Placement parse_placement(const Board& b, std::string_view text) {
  text = trim(text);
  if (text.empty()) return Placement();
  if (text.find(':') != std::string_view::npos) {
    std::vector<Square> markers;
    for (std::string_view pair : split(text, ',')) {
      const auto cr = split(pair, ':');
      if (cr.size() != 2) throw ParseError("marker must look like col:row: '" + std::string(pair) + "'");
      markers.push_back({parse_int(cr[0], "column"), parse_int(cr[1], "row")});
    }
    Placement p(std::move(markers));
    validate(b, p);
    return p;
  }
  FullPlacement full;
  for (char ch : text) {
    if (ch < '1' || ch > '9') throw ParseError("permutation word may only contain digits 1-9: '" + std::string(text) + "'");
    full.perm.push_back(ch - '0');
  }
  validate(b, full);
  return to_placement(full);
}

std::string format_full(const FullPlacement& p) {
  if (p.perm.size() > 9) return format_pairs(to_placement(p));
  std::string out;
  for (int r : p.perm) out += std::to_string(r);
  return out;
}

std::string format_placement(const Board& b, const Placement& p) {
  if (auto full = as_full(b, p)) return format_full(*full);
  return format_pairs(p);
}

std::string format_pairs(const Placement& p) {
  std::string out;
  for (const Square& s : p.markers()) out += (out.empty() ? "" : ",") + std::to_string(s.col) + ":" + std::to_string(s.row);
  return out;
}

FSeq parse_sequence(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty sequence");
  FSeq out;
  for (std::string_view part : split(text, ',')) {
    const int v = parse_int(part, "sequence entry");
    if (v < 0) throw ParseError("sequence entries must be nonnegative");
    out.push_back(v);
  }
  return out;
}

std::string format_sequence(const FSeq& s) { return join(s); }

Pattern parse_pattern(std::string_view text) {
  text = trim(text);
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    for (std::string_view part : split(text, ',')) word.push_back(parse_int(part, "pattern letter"));
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ParseError("malformed pattern: '" + std::string(text) + "'");
      word.push_back(ch - '0');
    }
  }
  return Pattern(std::move(word));
}

PatternClass parse_pattern_class(std::string_view text) {
  text = trim(text);
  if (text == "231") return PatternClass::p231;
  if (text == "312") return PatternClass::p312;
  throw ParseError("pattern must be 231 or 312, got '" + std::string(text) + "'");
}

const char* pattern_class_name(PatternClass c) { return c == PatternClass::p231 ? "231" : "312"; }

}  // namespace rookbij
