#include "rookbij/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "rookbij/bijection.hpp"
#include "rookbij/error.hpp"
#include "rookbij/text.hpp"

namespace rookbij {

namespace {

void place_columns(const Board& b, int col, std::vector<int>& perm, std::vector<bool>& used,
                   const std::function<void(const FullPlacement&)>& fn) {
  if (col > b.n_cols()) {
    fn(FullPlacement{perm});
    return;
  }
  for (int r = 1; r <= b.height(col); ++r) {
    if (used[static_cast<std::size_t>(r)]) continue;
    used[static_cast<std::size_t>(r)] = true;
    perm.push_back(r);
    place_columns(b, col + 1, perm, used, fn);
    perm.pop_back();
    used[static_cast<std::size_t>(r)] = false;
  }
}

void place_rooks(const Board& b, int col, std::vector<Square>& markers, std::vector<bool>& used,
                 const std::function<void(const Placement&)>& fn) {
  if (col > b.n_cols()) {
    fn(Placement(markers));
    return;
  }
  place_rooks(b, col + 1, markers, used, fn);
  for (int r = 1; r <= b.height(col); ++r) {
    if (used[static_cast<std::size_t>(r)]) continue;
    used[static_cast<std::size_t>(r)] = true;
    markers.push_back({col, r});
    place_rooks(b, col + 1, markers, used, fn);
    markers.pop_back();
    used[static_cast<std::size_t>(r)] = false;
  }
}

void grow_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Board>& out) {
  if (!cur.empty()) out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == n) return;
  for (int h = 1; h <= max_part; ++h) {
    cur.push_back(h);
    grow_partitions(n, h, cur, out);
    cur.pop_back();
  }
}

struct SequenceSearch {
  const BorderPath& path;
  std::vector<int> max_value;                          // right steps before each vertex
  std::vector<std::vector<std::size_t>> diag_by_right;  // left ends keyed by right end
  bool le;
  FSeq cur;
  std::vector<FSeq> out;

  void extend(std::size_t i) {
    if (i == path.size()) {
      if (cur.back() == 0) out.push_back(cur);
      return;
    }
    const int prev = cur.back();
    const bool right = path.steps[i - 1] == Step::right;
    // right: prev <= v <= prev+1; down: v <= prev <= v+1
    const int lo = right ? prev : prev - 1;
    const int hi = right ? prev + 1 : prev;
    for (int v = std::max(lo, 0); v <= std::min(hi, max_value[i]); ++v) {
      if (v == 0 && prev == 0) continue;
      bool ok = true;
      for (std::size_t left : diag_by_right[i]) {
        if (le ? cur[left] > v : cur[left] < v) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur.push_back(v);
      extend(i + 1);
      cur.pop_back();
    }
  }
};

struct BoardResult {
  bool applicable = false;
  std::size_t items = 0;
  std::vector<std::string> witnesses;
};

std::string pl(const FullPlacement& p) { return format_full(p); }

const Pattern& pattern_of(PatternClass c) {
  static const Pattern p231 = pattern_231();
  static const Pattern p312 = pattern_312();
  return c == PatternClass::p231 ? p231 : p312;
}

std::vector<FullPlacement> avoiders(const std::vector<FullPlacement>& all, const Board& b, PatternClass c) {
  std::vector<FullPlacement> out;
  for (const auto& p : all)
    if (avoids(b, p, pattern_of(c))) out.push_back(p);
  return out;
}

BijectionOptions checked() {
  BijectionOptions opt;
  opt.check_preconditions = true;
  opt.verify_result = false;  // the sweeps compare results themselves
  return opt;
}

BoardResult check_t1(const Board& b) {
  BoardResult res;
  if (!b.square_bounded()) return res;
  res.applicable = true;
  const auto all = full_placements(b);
  res.items = all.size();
  for (PatternClass c : {PatternClass::p231, PatternClass::p312}) {
    std::map<FSeq, FullPlacement> seen;
    for (const auto& p : avoiders(all, b, c)) {
      const FSeq s = s_sequence(b, p);
      auto [it, fresh] = seen.emplace(s, p);
      if (!fresh)
        res.witnesses.push_back(std::string(pattern_class_name(c)) + "-avoiders " + pl(it->second) + " and " +
                                pl(p) + " share sequence " + format_sequence(s));
      try {
        const FullPlacement back = reconstruct(b, s, c, checked());
        if (back != p)
          res.witnesses.push_back("reconstruct_" + std::string(pattern_class_name(c)) + "(" + format_sequence(s) +
                                  ") = " + pl(back) + ", expected " + pl(p));
      } catch (const Error& e) {
        res.witnesses.push_back("reconstruct_" + std::string(pattern_class_name(c)) + "(" + format_sequence(s) +
                                ") for " + pl(p) + " threw: " + e.what());
      }
    }
  }
  return res;
}

BoardResult check_t2(const Board& b) {
  BoardResult res;
  if (!b.square_bounded()) return res;
  res.applicable = true;
  const auto all = full_placements(b);
  for (const auto& p : all) {
    const FSeq s = s_sequence(b, p);
    for (const Violation& v : check_231(b, s).violations)
      if (v.kind != ViolationKind::diagonal)
        res.witnesses.push_back("placement " + pl(p) + " with sequence " + format_sequence(s) + " fails " +
                                violation_line(v));
  }
  for (PatternClass c : {PatternClass::p231, PatternClass::p312}) {
    std::set<FSeq> realized;
    for (const auto& p : avoiders(all, b, c)) realized.insert(s_sequence(b, p));
    const auto valid_list = valid_sequences(b, c);
    const std::set<FSeq> valid(valid_list.begin(), valid_list.end());
    res.items += valid.size();
    for (const FSeq& s : valid)
      if (!realized.count(s))
        res.witnesses.push_back(format_sequence(s) + " passes the " + pattern_class_name(c) +
                                "-conditions but no avoider realizes it");
    for (const FSeq& s : realized)
      if (!valid.count(s))
        res.witnesses.push_back(format_sequence(s) + " is realized by a " + pattern_class_name(c) +
                                "-avoider but fails the conditions");
  }
  return res;
}

BoardResult check_t4(const Board& b) {
  BoardResult res;
  if (!b.square_bounded()) return res;
  res.applicable = true;
  const auto all = full_placements(b);
  for (const auto& p : all) {
    const FSeq s = s_sequence(b, p);
    if (plus_transform(b, plus_transform(b, s)) != s)
      res.witnesses.push_back("S++ != S for " + pl(p) + " with sequence " + format_sequence(s));
  }
  const auto a231 = avoiders(all, b, PatternClass::p231);
  const auto a312 = avoiders(all, b, PatternClass::p312);
  res.items = a231.size();
  std::set<FullPlacement> images;
  try {
    for (const auto& p : a231) {
      const FullPlacement q = alpha(b, p, checked());
      images.insert(q);
      if (!avoids(b, q, pattern_312())) res.witnesses.push_back("alpha(" + pl(p) + ") = " + pl(q) + " contains 312");
      const FSeq sp = plus_transform(b, s_sequence(b, p));
      if (s_sequence(b, q) != sp)
        res.witnesses.push_back("S(alpha(" + pl(p) + ")) = " + format_sequence(s_sequence(b, q)) + ", expected " +
                                format_sequence(sp));
      const FullPlacement back = beta(b, q, checked());
      if (back != p) res.witnesses.push_back("beta(alpha(" + pl(p) + ")) = " + pl(back));
    }
    for (const auto& q : a312) {
      const FullPlacement back = alpha(b, beta(b, q, checked()), checked());
      if (back != q) res.witnesses.push_back("alpha(beta(" + pl(q) + ")) = " + pl(back));
    }
  } catch (const Error& e) {
    res.witnesses.push_back(std::string("alpha/beta threw: ") + e.what());
  }
  if (images != std::set<FullPlacement>(a312.begin(), a312.end()))
    res.witnesses.push_back("alpha images (" + std::to_string(images.size()) + ") differ from the " +
                            std::to_string(a312.size()) + " 312-avoiders");
  return res;
}

BoardResult check_l1(const Board& b) {
  BoardResult res;
  if (!admits_full_placement(b)) return res;
  res.applicable = true;
  const BorderPath path = border_path(b);
  const auto profile = marker_count_profile(b);
  for (const DiagonalPair& d : diagonal_pairs(b))
    if (profile[d.left] != profile[d.right])
      res.witnesses.push_back("N differs on diagonal vertices " + format_vertex(path.vertices[d.left]) + " and " +
                              format_vertex(path.vertices[d.right]));
  for_each_full_placement(b, [&](const FullPlacement& p) {
    ++res.items;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Vertex v = path.vertices[i];
      int count = 0;
      for (std::size_t c = 0; c < p.perm.size(); ++c)
        if (static_cast<int>(c) + 1 <= v.x && p.perm[c] <= v.y) ++count;
      if (count != profile[i])
        res.witnesses.push_back("placement " + pl(p) + " has " + std::to_string(count) + " markers in R" +
                                format_vertex(v) + ", profile says " + std::to_string(profile[i]));
    }
  });
  return res;
}

BoardResult check_remark(const Board& b) {
  BoardResult res;
  res.applicable = true;
  using ClassKey = std::pair<std::vector<int>, std::vector<int>>;
  auto key_of = [&](const Placement& p) {
    auto ctx = compact(b, p).first;
    return ClassKey{ctx.occupied_cols, ctx.occupied_rows};
  };
  std::set<Placement> a231, a312, images;
  std::map<ClassKey, std::pair<std::size_t, std::size_t>> per_class;
  for_each_rook_placement(b, [&](const Placement& p) {
    ++res.items;
    if (avoids(b, p, pattern_231())) {
      a231.insert(p);
      ++per_class[key_of(p)].first;
    }
    if (avoids(b, p, pattern_312())) {
      a312.insert(p);
      ++per_class[key_of(p)].second;
    }
  });
  if (a231.size() != a312.size())
    res.witnesses.push_back(std::to_string(a231.size()) + " 231-avoiding rook placements vs " +
                            std::to_string(a312.size()) + " 312-avoiding");
  for (const auto& [key, counts] : per_class)
    if (counts.first != counts.second)
      res.witnesses.push_back("class with columns " + format_sequence(key.first) + " rows " +
                              format_sequence(key.second) + ": " + std::to_string(counts.first) + " vs " +
                              std::to_string(counts.second));
  try {
    for (const Placement& p : a231) {
      const Placement q = alpha_general(b, p, checked());
      images.insert(q);
      if (!avoids(b, q, pattern_312()))
        res.witnesses.push_back("alpha_general(" + format_pairs(p) + ") = " + format_pairs(q) + " contains 312");
      if (key_of(q) != key_of(p))
        res.witnesses.push_back("alpha_general(" + format_pairs(p) + ") = " + format_pairs(q) +
                                " changes the occupied rows or columns");
      const Placement back = beta_general(b, q, checked());
      if (back != p) res.witnesses.push_back("beta_general(alpha_general(" + format_pairs(p) + ")) = " + format_pairs(back));
    }
  } catch (const Error& e) {
    res.witnesses.push_back(std::string("alpha_general threw: ") + e.what());
  }
  if (images != a312) res.witnesses.push_back("alpha_general is not onto the 312-avoiding rook placements");
  return res;
}

BoardResult check_counts(const Board& b) {
  BoardResult res;
  res.applicable = true;
  std::uint64_t c231 = 0, c312 = 0;
  for_each_full_placement(b, [&](const FullPlacement& p) {
    ++res.items;
    const Placement q = to_placement(p);
    if (avoids(b, q, pattern_231())) ++c231;
    if (avoids(b, q, pattern_312())) ++c312;
  });
  if (c231 != c312)
    res.witnesses.push_back("|S_F(231)| = " + std::to_string(c231) + ", |S_F(312)| = " + std::to_string(c312));
  return res;
}

BoardResult check_board(const Board& b, Theorem t) {
  switch (t) {
    case Theorem::t1:
      return check_t1(b);
    case Theorem::t2:
      return check_t2(b);
    case Theorem::t4:
      return check_t4(b);
    case Theorem::l1:
      return check_l1(b);
    case Theorem::remark:
      return check_remark(b);
    case Theorem::counts:
      return check_counts(b);
  }
  return {};
}

}  // namespace

void for_each_full_placement(const Board& b, const std::function<void(const FullPlacement&)>& fn) {
  if (!b.square_bounded()) return;
  std::vector<int> perm;
  std::vector<bool> used(static_cast<std::size_t>(b.n_rows()) + 1, false);
  place_columns(b, 1, perm, used, fn);
}

std::vector<FullPlacement> full_placements(const Board& b) {
  std::vector<FullPlacement> out;
  for_each_full_placement(b, [&](const FullPlacement& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_avoiders(const Board& b, const Pattern& t) {
  std::uint64_t n = 0;
  for_each_full_placement(b, [&](const FullPlacement& p) {
    if (avoids(b, to_placement(p), t)) ++n;
  });
  return n;
}

void for_each_rook_placement(const Board& b, const std::function<void(const Placement&)>& fn) {
  std::vector<Square> markers;
  std::vector<bool> used(static_cast<std::size_t>(b.n_rows()) + 1, false);
  place_rooks(b, 1, markers, used, fn);
}

std::vector<Placement> rook_placements(const Board& b) {
  std::vector<Placement> out;
  for_each_rook_placement(b, [&](const Placement& p) { out.push_back(p); });
  return out;
}

std::vector<Board> boards_within(int n, bool square_bounded_only, bool full_only) {
  if (n < 1) throw OutOfRange("board sweep bound must be at least 1");
  std::vector<Board> all;
  std::vector<int> cur;
  grow_partitions(n, n, cur, all);
  std::vector<Board> out;
  for (Board& b : all) {
    if (square_bounded_only && !b.square_bounded()) continue;
    if (full_only && !admits_full_placement(b)) continue;
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Board& x, const Board& y) {
    if (x.cells() != y.cells()) return x.cells() < y.cells();
    return std::lexicographical_compare(y.heights().begin(), y.heights().end(), x.heights().begin(),
                                        x.heights().end());
  });
  return out;
}

std::vector<FSeq> valid_sequences(const Board& b, PatternClass which) {
  const BorderPath path = border_path(b);
  SequenceSearch search{path, {}, std::vector<std::vector<std::size_t>>(path.size()), which == PatternClass::p231,
                        {}, {}};
  int rights = 0;
  search.max_value.push_back(0);
  for (Step s : path.steps) {
    if (s == Step::right) ++rights;
    search.max_value.push_back(rights);
  }
  for (const DiagonalPair& d : diagonal_pairs(b)) search.diag_by_right[d.right].push_back(d.left);
  search.cur.push_back(0);
  search.extend(1);
  return std::move(search.out);
}

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::t1:
      return "T1";
    case Theorem::t2:
      return "T2";
    case Theorem::t4:
      return "T4";
    case Theorem::l1:
      return "L1";
    case Theorem::remark:
      return "Remark";
    case Theorem::counts:
      return "Counts";
  }
  return "?";
}

std::vector<Board> sweep_domain(Theorem t, int n) {
  switch (t) {
    case Theorem::t1:
    case Theorem::t2:
    case Theorem::t4:
      return boards_within(n, true, false);
    case Theorem::l1:
      return boards_within(n, false, true);
    case Theorem::remark:
    case Theorem::counts:
      return boards_within(n);
  }
  return {};
}

SweepReport verify_boards(std::span<const Board> boards, Theorem t, int workers) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<BoardResult> results(boards.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < boards.size(); i = next++) {
      try {
        results[i] = check_board(boards[i], t);
      } catch (const std::exception& e) {
        results[i].applicable = true;
        results[i].witnesses.push_back(std::string("unexpected error: ") + e.what());
      }
    }
  };
  const auto n_threads = static_cast<std::size_t>(std::max(1, workers));
  if (n_threads == 1 || boards.size() < 2) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < std::min(n_threads, boards.size()); ++i) pool.emplace_back(work);
  }

  SweepReport report;
  report.theorem = t;
  for (std::size_t i = 0; i < boards.size(); ++i) {
    if (!results[i].applicable) continue;
    ++report.boards_checked;
    report.items_checked += results[i].items;
    for (auto& w : results[i].witnesses) report.failures.push_back({boards[i], t, std::move(w)});
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

SweepReport verify_sweep(Theorem t, const SweepBounds& bounds, int workers) {
  const int n = t == Theorem::counts ? bounds.count : t == Theorem::remark ? bounds.rook : bounds.placement;
  const auto start = std::chrono::steady_clock::now();
  const auto boards = sweep_domain(t, n);
  SweepReport report = verify_boards(boards, t, workers);
  report.max_n = n;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<SweepReport> verify_all(const SweepBounds& bounds, int workers) {
  std::vector<SweepReport> out;
  for (Theorem t : {Theorem::t1, Theorem::t2, Theorem::t4, Theorem::l1, Theorem::remark, Theorem::counts})
    out.push_back(verify_sweep(t, bounds, workers));
  return out;
}

}  // namespace rookbij
