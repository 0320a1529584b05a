// fcalc: exact calculator for Thompson's group F over {x0, x1}, built on
// forest diagrams. Elements are given either as words ("x0^-2 x1 x0^3
// x1^-2") or as diagram text ("^(..) / ^. ."); arguments containing '.'
// are treated as diagrams.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "thompson/ball_cache.hpp"
#include "thompson/cayley.hpp"
#include "thompson/errors.hpp"
#include "thompson/json_io.hpp"
#include "thompson/metric.hpp"
#include "thompson/plmap.hpp"
#include "thompson/render.hpp"
#include "thompson/version.hpp"

using namespace thompson;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResourceCap = 3;

struct GlobalOpts {
  bool json_output = false;
  std::string cache_dir;
  SearchLimits limits;
  std::uint64_t seed = 0;
};

ForestDiagram parse_element(const std::string& text) {
  if (text.find('.') != std::string::npos) return parse_diagram(text);
  return from_word(parse_word(text));
}

void emit(const GlobalOpts& g, const json& j, const std::string& human) {
  if (g.json_output)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human;
}

std::string weights_str(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i)
    s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

int cmd_len(const GlobalOpts& g, const std::string& arg) {
  ForestDiagram v = parse_element(arg);
  LengthBreakdown b = length(v);
  SpaceLabeling s = label_spaces(v);
  std::string human =
      "l1 (carets)  = " + std::to_string(b.caret_count) + "  (top " +
      std::to_string(b.top_carets) + ", bottom " +
      std::to_string(b.bottom_carets) + ")\n" +
      "l0 (weights) = " + std::to_string(b.x0_count) + "\n" +
      "length       = " + std::to_string(b.total) + "\n" +
      "top labels    " + s.top_string() + "\n" +
      "bottom labels " + s.bottom_string() + "\n" +
      "weights       " + weights_str(s.weights) + "\n";
  emit(g, length_json(b, s), human);
  return kExitOk;
}

int cmd_normalize(const GlobalOpts& g, const std::string& arg, bool raw) {
  ForestDiagram d = parse_diagram(arg, /*require_canonical=*/!raw);
  d = canonicalize(d);
  emit(g, json{{"diagram", format_diagram(d)}}, format_diagram(d) + "\n");
  return kExitOk;
}

int cmd_mul(const GlobalOpts& g, const std::string& a, const std::string& b) {
  ForestDiagram p = multiply(parse_element(a), parse_element(b));
  emit(g, json{{"diagram", format_diagram(p)}}, format_diagram(p) + "\n");
  return kExitOk;
}

int cmd_inv(const GlobalOpts& g, const std::string& a) {
  ForestDiagram v = inverse(parse_element(a));
  emit(g, json{{"diagram", format_diagram(v)}}, format_diagram(v) + "\n");
  return kExitOk;
}

int cmd_geodesic(const GlobalOpts& g, const std::string& a) {
  ForestDiagram v = parse_element(a);
  GroupWord w = geodesic_word(v);
  emit(g,
       json{{"word", format_word(w)},
            {"length", static_cast<int>(w.size())}},
       format_word(w) + "\n(length " + std::to_string(w.size()) + ")\n");
  return kExitOk;
}

int cmd_ball(const GlobalOpts& g, int radius) {
  Ball b = ball_cache::load_or_compute(g.cache_dir, radius, g.limits);
  std::string human = "|B_" + std::to_string(radius) +
                      "| = " + std::to_string(b.size()) + "\nlayers:";
  for (std::size_t d = 0; d < b.layers.size(); ++d)
    human += " " + std::to_string(b.layers[d].size());
  human += "\n";
  if (!g.cache_dir.empty())
    human += "cache: " + g.cache_dir + "/" + ball_cache::file_name(radius) + "\n";
  emit(g, ball_stats_json(b), human);
  return kExitOk;
}

int cmd_convexity(const GlobalOpts& g, int n, bool all) {
  json table = json::array();
  std::string human;
  for (int k = all ? 1 : n; k <= n; ++k) {
    ConvexityResult c = convexity_c(k, g.limits);
    table.push_back(convexity_json(c));
    human += "c(" + std::to_string(k) + ") = " + std::to_string(c.c) +
             "   (pair " + c.witness_g + "  |  " + c.witness_h + ")\n";
  }
  emit(g, all ? table : table.back(), human);
  return kExitOk;
}

int cmd_plmap(const GlobalOpts& g, const std::string& arg) {
  PLMap m = to_plmap(parse_element(arg));
  std::string human;
  for (const auto& p : m.points)
    human += "(" + p.x.str() + ", " + p.y.str() + ")\n";
  human += "t + " + std::to_string(m.k_minus) + " as t -> -inf, t + " +
           std::to_string(m.k_plus) + " as t -> +inf\n";
  emit(g, plmap_json(m), human);
  return kExitOk;
}

int cmd_pl_eval(const GlobalOpts& g, const std::string& arg,
                const std::string& at) {
  PLMap m = to_plmap(parse_element(arg));
  Dyadic t = Dyadic::parse(at);
  Dyadic y = evaluate(m, t);
  emit(g, json{{"t", t.str()}, {"value", y.str()}}, y.str() + "\n");
  return kExitOk;
}

int cmd_render(const GlobalOpts& g, const std::string& arg, bool dot) {
  (void)g;
  ForestDiagram v = parse_element(arg);
  std::cout << (dot ? render_dot(v) : render_ascii(v));
  return kExitOk;
}

int cmd_analyze(const GlobalOpts& g, const std::string& start_arg,
                const std::string& word_arg, int radius) {
  ForestDiagram start = parse_element(start_arg);
  GroupWord w = parse_word(word_arg);
  if (radius < 0) {
    ForestDiagram end = start;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      end = apply_generator(*it, end);
    radius = std::max(norm(start), norm(end));
  }
  PathTrace t = analyze_path(start, w, radius);
  std::string human = "radius " + std::to_string(radius) + "\n";
  human += "step letter  len in  foot crit on jump element\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%4zu %-6s %4d %-3s %4d %4d %-2s %-4s ", i,
                  s.letter.c_str(), s.len, s.in_ball ? "yes" : "NO",
                  s.right_foot, s.critical_leaf, s.foot_on_critical ? "*" : "",
                  s.foot_jump ? "jump" : "");
    human += buf + s.key + "\n";
  }
  if (t.first_on_critical)
    human += "first foot-on-critical at step " +
             std::to_string(*t.first_on_critical) + ", last at " +
             std::to_string(*t.last_on_critical) + "\n";
  emit(g, path_trace_json(t), human);
  return kExitOk;
}

GroupWord random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 3);
  GroupWord w(len_dist(rng));
  for (Letter& g : w) g = kLetters[letter_dist(rng)];
  return w;
}

int cmd_verify(const GlobalOpts& g, int n, bool full, bool examples_only,
               int sweeps) {
  bool with_bfs = full || (!examples_only && n <= 2);
  json checks = json::array();
  bool failed = false;
  bool incomplete = false;
  std::string human;

  auto add_check = [&](const std::string& name, bool pass, json detail,
                       const std::string& note = "") {
    checks.push_back(
        {{"name", name}, {"status", pass ? "pass" : "fail"}, {"detail", detail}});
    failed = failed || !pass;
    human += std::string(pass ? "  pass  " : "  FAIL  ") + name +
             (note.empty() ? "" : "  (" + note + ")") + "\n";
  };

  if (!examples_only) {
    WitnessReport wr = verify_witnesses(n, with_bfs, g.limits);
    if (wr.restricted_ran && !wr.restricted_complete) incomplete = true;
    std::string note = "l(l)=l(r)=" + std::to_string(wr.len_l) +
                       ", d(l,r)=" + std::to_string(wr.dist_lr);
    if (wr.restricted)
      note += ", in-ball distance " + std::to_string(*wr.restricted);
    else if (!with_bfs)
      note += ", in-ball BFS skipped";
    add_check("witness_pair", wr.passed(), witness_report_json(wr), note);
  }
  {
    DetourReport dr = verify_detour_paths(n, g.limits);
    add_check("detour_paths", dr.passed(), detour_report_json(dr),
              std::to_string(dr.paths.size()) + " paths of length " +
                  std::to_string(4 * n + 4));
  }
  if (!examples_only) {
    TailReport tr = verify_forced_tail(n);
    add_check("forced_tail", tr.passed(), tail_report_json(tr),
              std::to_string(tr.visits) + " visit, " +
                  std::to_string(tr.leaves) + " leave, " +
                  std::to_string(tr.backtracks) + " backtrack");
  }
  if (!examples_only && sweeps > 0) {
    std::mt19937_64 rng(g.seed);
    bool ok = true;
    for (int i = 0; i < sweeps && ok; ++i) {
      GroupWord wa = random_word(rng, 10), wb = random_word(rng, 10);
      ForestDiagram a = from_word(wa), b = from_word(wb);
      GroupWord ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      ok = ok && from_word(ab) == multiply(a, b);
      ok = ok && pl_equal(to_plmap(multiply(a, b)),
                          compose(to_plmap(a), to_plmap(b)));
      ok = ok && multiply(a, inverse(a)) == ForestDiagram::identity();
    }
    add_check("random_sweeps", ok, json{{"samples", sweeps}},
              std::to_string(sweeps) + " samples, seed " +
                  std::to_string(g.seed));
  }

  json out{{"n", n},
           {"scope", examples_only ? "examples-only" : (with_bfs ? "full" : "partial")},
           {"engine", kEngineVersion},
           {"checks", checks},
           {"incomplete", incomplete},
           {"passed", !failed}};
  emit(g, out,
       "verify n=" + std::to_string(n) + "\n" + human +
           (failed ? "FAILED\n" : (incomplete ? "PARTIAL (resource cap)\n"
                                              : "all checks passed\n")));
  if (failed) return kExitVerifyFailed;
  if (incomplete) return kExitResourceCap;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in Thompson's group F over {x0, x1}"};
  app.set_version_flag("--version", std::string(kEngineVersion));
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json_output, "machine-readable output");
  app.add_option("--cache-dir", g.cache_dir, "ball cache directory");
  app.add_option("--max-elements", g.limits.max_elements,
                 "search element budget (default 1e7)");
  app.add_option("--max-seconds", g.limits.max_seconds,
                 "search time budget (0 = unlimited)");
  app.add_option("--seed", g.seed, "seed for randomized sweeps");

  std::string arg_a, arg_b;
  int radius = 1;
  bool raw = false, dot = false, all = false;
  int verify_n = 1, sweeps = 25;
  bool full = false, examples_only = false;
  int trace_radius = -1;

  auto* len = app.add_subcommand("len", "length breakdown of an element");
  len->add_option("element", arg_a)->required();

  auto* normalize = app.add_subcommand("normalize", "canonicalize a diagram");
  normalize->add_option("diagram", arg_a)->required();
  normalize->add_flag("--raw", raw, "admit non-canonical input");

  auto* mul = app.add_subcommand("mul", "product of two elements");
  mul->add_option("left", arg_a)->required();
  mul->add_option("right", arg_b)->required();

  auto* inv = app.add_subcommand("inv", "inverse of an element");
  inv->add_option("element", arg_a)->required();

  auto* geo = app.add_subcommand("geodesic", "minimum-length word for an element");
  geo->add_option("element", arg_a)->required();

  auto* ball_cmd = app.add_subcommand("ball", "enumerate a ball around the identity");
  ball_cmd->add_option("radius", radius)->required()->check(CLI::NonNegativeNumber);

  auto* conv = app.add_subcommand("convexity", "convexity function c(n)");
  conv->add_option("n", radius)->required()->check(CLI::PositiveNumber);
  conv->add_flag("--all", all, "table for 1..n");

  auto* verify = app.add_subcommand("verify", "check the witness-pair facts");
  verify->add_option("--n", verify_n)->check(CLI::PositiveNumber);
  verify->add_flag("--full", full, "force the in-ball BFS check");
  verify->add_flag("--examples-only", examples_only, "path checks only");
  verify->add_option("--sweeps", sweeps, "random property samples");

  auto* analyze = app.add_subcommand("analyze-path", "per-vertex trace of a word");
  analyze->add_option("start", arg_a)->required();
  analyze->add_option("word", arg_b)->required();
  analyze->add_option("--radius", trace_radius, "ball radius for in/out flags");

  auto* plm = app.add_subcommand("plmap", "piecewise-linear map of an element");
  plm->add_option("element", arg_a)->required();

  auto* pleval = app.add_subcommand("pl-eval", "evaluate the PL map at a dyadic");
  pleval->add_option("element", arg_a)->required();
  pleval->add_option("t", arg_b)->required();

  auto* render = app.add_subcommand("render", "draw a diagram");
  render->add_option("element", arg_a)->required();
  render->add_flag("--dot", dot, "emit Graphviz instead of ASCII");

  for (CLI::App* sub : app.get_subcommands({}))
    sub->fallthrough();  // accept global flags after the subcommand too

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(len)) return cmd_len(g, arg_a);
    if (app.got_subcommand(normalize)) return cmd_normalize(g, arg_a, raw);
    if (app.got_subcommand(mul)) return cmd_mul(g, arg_a, arg_b);
    if (app.got_subcommand(inv)) return cmd_inv(g, arg_a);
    if (app.got_subcommand(geo)) return cmd_geodesic(g, arg_a);
    if (app.got_subcommand(ball_cmd)) return cmd_ball(g, radius);
    if (app.got_subcommand(conv)) return cmd_convexity(g, radius, all);
    if (app.got_subcommand(verify))
      return cmd_verify(g, verify_n, full, examples_only, sweeps);
    if (app.got_subcommand(analyze))
      return cmd_analyze(g, arg_a, arg_b, trace_radius);
    if (app.got_subcommand(plm)) return cmd_plmap(g, arg_a);
    if (app.got_subcommand(pleval)) return cmd_pl_eval(g, arg_a, arg_b);
    if (app.got_subcommand(render)) return cmd_render(g, arg_a, dot);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << " (explored "
              << e.explored << ")\n";
    return kExitResourceCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
