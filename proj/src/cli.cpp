#include "rookbij/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rookbij/bijection.hpp"
#include "rookbij/enumeration.hpp"
#include "rookbij/error.hpp"
#include "rookbij/text.hpp"

namespace rookbij {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string board;
  std::string placement;
  bool has_placement = false;
  std::string seq;
  std::string pattern;
  bool json = false;
  bool alpha = false;
  bool beta = false;
  bool annotate = false;
  int max_n = 0;
  std::string theorem = "all";
  int parallel = 1;
};

Json heights_json(const Board& b) { return Json(std::vector<int>(b.heights().begin(), b.heights().end())); }

Json placement_json(const Board& b, const Placement& p) {
  if (auto full = as_full(b, p)) return Json(full->perm);
  Json arr = Json::array();
  for (Square s : p.markers()) arr.push_back({s.col, s.row});
  return arr;
}

Json occurrence_json(const std::vector<Square>& occ) {
  Json arr = Json::array();
  for (Square s : occ) arr.push_back({s.col, s.row});
  return arr;
}

Json report_json(const Board& b, const FSeq& s, const ConditionReport& r) {
  Json j;
  j["board"] = heights_json(b);
  j["sequence"] = s;
  j["pattern"] = pattern_class_name(r.which);
  j["pass"] = r.verdict;
  Json vs = Json::array();
  for (const Violation& v : r.violations)
    vs.push_back({{"kind", kind_name(v.kind)}, {"indices", v.indices}, {"location", v.location}, {"detail", v.detail}});
  j["violations"] = vs;
  return j;
}

void print_report(std::ostream& out, const Board& b, const FSeq& s, const ConditionReport& r, bool json) {
  if (json) {
    out << report_json(b, s, r).dump() << '\n';
    return;
  }
  if (r.verdict) out << "PASS\n";
  for (const Violation& v : r.violations) out << violation_line(v) << '\n';
}

int cmd_sequence(const Options& o, std::ostream& out) {
  const Board b = parse_board(o.board);
  const Placement p = parse_placement(b, o.placement);
  const FSeq s = s_sequence(b, p);
  if (o.json)
    out << Json{{"board", heights_json(b)}, {"placement", placement_json(b, p)}, {"sequence", s}}.dump() << '\n';
  else
    out << format_sequence(s) << '\n';
  return exit_ok;
}

int cmd_map(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.alpha == o.beta) {
    err << "map: give exactly one of --alpha or --beta\n";
    return exit_input_error;
  }
  const Board b = parse_board(o.board);
  const Placement p = parse_placement(b, o.placement);
  const Pattern source = o.alpha ? pattern_231() : pattern_312();
  if (auto occ = find_occurrence(b, p, source)) {
    if (o.json) {
      out << Json{{"board", heights_json(b)}, {"placement", placement_json(b, p)},
                  {"direction", o.alpha ? "alpha" : "beta"}, {"contains", source.str()},
                  {"occurrence", occurrence_json(*occ)}}
                 .dump()
          << '\n';
    } else {
      out << "CONTAINS " << source.str() << " at " << format_pairs(Placement(*occ)) << '\n';
    }
    return exit_domain_failure;
  }
  Placement image;
  if (auto full = as_full(b, p))
    image = to_placement(o.alpha ? alpha(b, *full) : beta(b, *full));
  else
    image = o.alpha ? alpha_general(b, p) : beta_general(b, p);
  if (o.json)
    out << Json{{"board", heights_json(b)}, {"placement", placement_json(b, p)},
                {"direction", o.alpha ? "alpha" : "beta"}, {"image", placement_json(b, image)}}
               .dump()
        << '\n';
  else
    out << format_placement(b, image) << '\n';
  return exit_ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Board b = parse_board(o.board);
  const FSeq s = parse_sequence(o.seq);
  const ConditionReport r = check(b, s, parse_pattern_class(o.pattern));
  print_report(out, b, s, r, o.json);
  return r.verdict ? exit_ok : exit_domain_failure;
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  const Board b = parse_board(o.board);
  const FSeq s = parse_sequence(o.seq);
  const PatternClass which = parse_pattern_class(o.pattern);
  try {
    const FullPlacement p = reconstruct(b, s, which);
    if (o.json)
      out << Json{{"board", heights_json(b)}, {"sequence", s}, {"pattern", pattern_class_name(which)},
                  {"placement", p.perm}}
                 .dump()
          << '\n';
    else
      out << format_full(p) << '\n';
    return exit_ok;
  } catch (const ConditionViolation& e) {
    print_report(out, b, s, e.report(), o.json);
    return exit_domain_failure;
  }
}

int cmd_count(const Options& o, std::ostream& out) {
  const Board b = parse_board(o.board);
  const Pattern t = parse_pattern(o.pattern);
  const auto n = count_avoiders(b, t);
  if (o.json)
    out << Json{{"board", heights_json(b)}, {"pattern", t.str()}, {"count", n}}.dump() << '\n';
  else
    out << n << '\n';
  return exit_ok;
}

std::vector<Theorem> parse_theorems(const std::string& name) {
  if (name == "t1") return {Theorem::t1};
  if (name == "t2") return {Theorem::t2};
  if (name == "t4") return {Theorem::t4};
  if (name == "l1") return {Theorem::l1};
  if (name == "remark") return {Theorem::remark};
  if (name == "counts") return {Theorem::counts};
  if (name == "all") return {Theorem::t1, Theorem::t2, Theorem::t4, Theorem::l1, Theorem::remark, Theorem::counts};
  throw ParseError("unknown theorem '" + name + "' (t1|t2|t4|l1|remark|counts|all)");
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto theorems = parse_theorems(o.theorem);
  SweepBounds bounds;
  if (o.max_n != 0) {
    if (o.max_n < 1) throw ParseError("--max-n must be at least 1");
    bounds = {o.max_n, o.max_n, o.max_n};
  }
  std::vector<SweepReport> reports;
  for (Theorem t : theorems) {
    if (!o.board.empty()) {
      const std::vector<Board> one{parse_board(o.board)};
      reports.push_back(verify_boards(one, t, o.parallel));
    } else {
      reports.push_back(verify_sweep(t, bounds, o.parallel));
    }
  }

  bool ok = true;
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : reports) {
      Json fails = Json::array();
      for (const auto& f : r.failures) fails.push_back({{"board", heights_json(f.board)}, {"witness", f.witness}});
      arr.push_back({{"theorem", theorem_name(r.theorem)}, {"max_n", r.max_n}, {"boards", r.boards_checked},
                     {"items", r.items_checked}, {"failures", fails}, {"seconds", r.elapsed.count()}});
      ok = ok && r.passed();
    }
    out << arr.dump() << '\n';
  } else {
    out << std::left << std::setw(8) << "theorem" << std::setw(7) << "max_n" << std::setw(9) << "boards"
        << std::setw(10) << "items" << std::setw(10) << "failures" << "seconds\n";
    for (const auto& r : reports) {
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(3) << r.elapsed.count();
      out << std::left << std::setw(8) << theorem_name(r.theorem) << std::setw(7)
          << (r.max_n ? std::to_string(r.max_n) : "-") << std::setw(9) << r.boards_checked << std::setw(10)
          << r.items_checked << std::setw(10) << r.failures.size() << secs.str() << '\n';
      ok = ok && r.passed();
    }
    for (const auto& r : reports)
      for (const auto& f : r.failures)
        out << "FAIL " << theorem_name(r.theorem) << " board " << format_board(f.board) << ": " << f.witness << '\n';
  }
  return ok ? exit_ok : exit_domain_failure;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Board b = parse_board(o.board);
  const Placement p = o.has_placement ? parse_placement(b, o.placement) : Placement();
  for (int row = b.n_rows(); row >= 1; --row) {
    std::string line;
    for (int col = 1; col <= b.n_cols(); ++col) {
      if (!b.contains_square(col, row))
        line += ' ';
      else
        line += p.has_marker({col, row}) ? 'X' : '.';
    }
    out << line << '\n';
  }
  if (o.annotate) {
    const BorderPath path = border_path(b);
    const FSeq s = s_sequence(b, p);
    out << "border";
    for (std::size_t i = 0; i < path.size(); ++i) out << ' ' << format_vertex(path.vertices[i]) << '=' << s[i];
    out << '\n';
  }
  return exit_ok;
}

int cmd_compact(const Options& o, std::ostream& out) {
  const Board b = parse_board(o.board);
  const Placement p = parse_placement(b, o.placement);
  const auto [ctx, full] = compact(b, p);
  if (o.json) {
    out << Json{{"board", heights_json(b)},
                {"placement", placement_json(b, p)},
                {"columns", ctx.occupied_cols},
                {"rows", ctx.occupied_rows},
                {"compact_board", ctx.compact_board ? heights_json(*ctx.compact_board) : Json::array()},
                {"compact_placement", full.perm}}
               .dump()
        << '\n';
    return exit_ok;
  }
  if (!ctx.compact_board) {
    out << "empty\n";
    return exit_ok;
  }
  out << "board " << format_board(*ctx.compact_board) << '\n'
      << "columns " << format_sequence(ctx.occupied_cols) << '\n'
      << "rows " << format_sequence(ctx.occupied_rows) << '\n'
      << "placement " << format_full(full) << '\n';
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bijection between 231- and 312-avoiding rook placements on Ferrers boards", "rookbij"};
  app.require_subcommand(1, 1);

  auto board_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--board", o.board, "column heights, e.g. 3,2,1");
    if (required) opt->required();
  };
  auto placement_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--placement", o.placement, "permutation word (312) or col:row list (1:3,3:1)");
    if (required) opt->required();
  };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };

  auto* sequence = app.add_subcommand("sequence", "border sequence S(P,F) of a placement");
  board_opt(sequence, true);
  placement_opt(sequence, true);
  json_flag(sequence);

  auto* map = app.add_subcommand("map", "apply alpha (231 -> 312) or beta (312 -> 231)");
  board_opt(map, true);
  placement_opt(map, true);
  map->add_flag("--alpha", o.alpha, "map a 231-avoider to a 312-avoider");
  map->add_flag("--beta", o.beta, "map a 312-avoider to a 231-avoider");
  json_flag(map);

  auto* check_cmd = app.add_subcommand("check", "test a sequence against the 231- or 312-conditions");
  board_opt(check_cmd, true);
  check_cmd->add_option("--seq", o.seq, "border sequence, e.g. 0,1,2,1,0")->required();
  check_cmd->add_option("--pattern", o.pattern, "231 or 312")->required();
  json_flag(check_cmd);

  auto* recon = app.add_subcommand("reconstruct", "rebuild the avoider with a given border sequence");
  board_opt(recon, true);
  recon->add_option("--seq", o.seq, "border sequence")->required();
  recon->add_option("--pattern", o.pattern, "231 or 312")->required();
  json_flag(recon);

  auto* count = app.add_subcommand("count", "number of full placements avoiding a pattern");
  board_opt(count, true);
  count->add_option("--pattern", o.pattern, "pattern word, e.g. 231")->required();
  json_flag(count);

  auto* verify = app.add_subcommand("verify", "exhaustive theorem sweeps");
  board_opt(verify, false);
  verify->add_option("--max-n", o.max_n, "box size for every sweep (defaults 5/6/4)");
  verify->add_option("--theorem", o.theorem, "t1|t2|t4|l1|remark|counts|all");
  verify->add_option("--parallel", o.parallel, "worker threads")->check(CLI::PositiveNumber);
  json_flag(verify);

  auto* render = app.add_subcommand("render", "ASCII picture of a board and placement");
  board_opt(render, true);
  auto* render_placement = render->add_option("--placement", o.placement, "placement to draw");
  render->add_flag("--annotate", o.annotate, "also list S at each border vertex");

  auto* compact_cmd = app.add_subcommand("compact", "delete empty rows and columns of a placement");
  board_opt(compact_cmd, true);
  placement_opt(compact_cmd, true);
  json_flag(compact_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }
  o.has_placement = render_placement->count() > 0;

  try {
    if (sequence->parsed()) return cmd_sequence(o, out);
    if (map->parsed()) return cmd_map(o, out, err);
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (recon->parsed()) return cmd_reconstruct(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (compact_cmd->parsed()) return cmd_compact(o, out);
  } catch (const NotAvoider& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain_failure;
  } catch (const ReconstructionFailure& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain_failure;
  } catch (const ConditionViolation& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace rookbij
