#include "thompson/cayley.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

#include "thompson/errors.hpp"

namespace thompson {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  const SearchLimits& limits;
  Clock::time_point start = Clock::now();

  void check(std::size_t elements, const char* what) const {
    if (elements > limits.max_elements)
      throw ResourceLimitError(std::string(what) + ": element budget exceeded",
                               elements);
    if (limits.max_seconds > 0) {
      double s = std::chrono::duration<double>(Clock::now() - start).count();
      if (s > limits.max_seconds)
        throw ResourceLimitError(std::string(what) + ": time budget exceeded",
                                 elements);
    }
  }
};

GroupWord concat(std::initializer_list<GroupWord> parts) {
  GroupWord out;
  for (const GroupWord& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

GroupWord rep(Letter g, int k) { return GroupWord(static_cast<std::size_t>(k), g); }

}  // namespace

std::array<ForestDiagram, 4> neighbors(const ForestDiagram& v) {
  return {apply_generator(Letter::X0, v), apply_generator(Letter::X0Inv, v),
          apply_generator(Letter::X1, v), apply_generator(Letter::X1Inv, v)};
}

std::size_t Ball::size() const {
  std::size_t n = 0;
  for (const auto& layer : layers) n += layer.size();
  return n;
}

std::optional<int> Ball::depth_of(const ForestDiagram& v) const {
  auto it = depth.find(format_diagram(v));
  if (it == depth.end()) return std::nullopt;
  return it->second;
}

Ball ball(int n, const SearchLimits& limits) {
  Budget budget{limits};
  Ball b;
  b.radius = n;
  b.layers.assign(1, {ForestDiagram::identity()});
  b.depth.emplace(format_diagram(ForestDiagram::identity()), 0);
  for (int d = 0; d < n; ++d) {
    std::vector<ForestDiagram> next;
    for (const ForestDiagram& v : b.layers[d]) {
      for (Letter g : kLetters) {
        ForestDiagram u = apply_generator(g, v);
        std::string key = format_diagram(u);
        if (b.depth.emplace(std::move(key), d + 1).second) {
          next.push_back(std::move(u));
          budget.check(b.depth.size(), "ball");
        }
      }
    }
    std::sort(next.begin(), next.end(),
              [](const ForestDiagram& a, const ForestDiagram& b) {
                return format_diagram(a) < format_diagram(b);
              });
    b.layers.push_back(std::move(next));
  }
  return b;
}

int distance(const ForestDiagram& u, const ForestDiagram& v) {
  return norm(multiply(v, inverse(u)));
}

int distance_bfs(const ForestDiagram& u, const ForestDiagram& v,
                 const SearchLimits& limits) {
  if (u == v) return 0;
  Budget budget{limits};
  std::unordered_map<std::string, int> side_a{{format_diagram(u), 0}};
  std::unordered_map<std::string, int> side_b{{format_diagram(v), 0}};
  std::vector<ForestDiagram> frontier_a{u}, frontier_b{v};
  int depth_a = 0, depth_b = 0;
  while (!frontier_a.empty() && !frontier_b.empty()) {
    // Expand the smaller frontier. Both directions expand by the same
    // letter set since the generating set is symmetric.
    bool expand_a = frontier_a.size() <= frontier_b.size();
    auto& frontier = expand_a ? frontier_a : frontier_b;
    auto& mine = expand_a ? side_a : side_b;
    auto& theirs = expand_a ? side_b : side_a;
    int depth = (expand_a ? ++depth_a : ++depth_b);
    std::vector<ForestDiagram> next;
    for (const ForestDiagram& w : frontier) {
      for (Letter g : kLetters) {
        ForestDiagram x = apply_generator(g, w);
        std::string key = format_diagram(x);
        auto hit = theirs.find(key);
        if (hit != theirs.end()) return depth + hit->second;
        if (mine.emplace(std::move(key), depth).second) {
          next.push_back(std::move(x));
          budget.check(side_a.size() + side_b.size(), "distance_bfs");
        }
      }
    }
    frontier = std::move(next);
  }
  throw std::logic_error("distance_bfs: frontiers exhausted in a connected graph");
}

RestrictedDistance restricted_distance(const ForestDiagram& u,
                                       const ForestDiagram& v, int radius,
                                       const SearchLimits& limits) {
  if (norm(u) > radius || norm(v) > radius)
    throw std::invalid_argument("restricted_distance: endpoint outside the ball");
  Budget budget{limits};
  RestrictedDistance out;
  if (u == v) {
    out.dist = 0;
    out.explored = 1;
    return out;
  }
  std::string target = format_diagram(v);
  std::unordered_map<std::string, int> seen{{format_diagram(u), 0}};
  std::vector<ForestDiagram> frontier{u};
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<ForestDiagram> next;
    for (const ForestDiagram& w : frontier) {
      for (Letter g : kLetters) {
        ForestDiagram x = apply_generator(g, w);
        if (norm(x) > radius) continue;  // membership by formula, no ball
        std::string key = format_diagram(x);
        if (key == target) {
          out.dist = depth;
          out.explored = seen.size();
          return out;
        }
        if (seen.emplace(std::move(key), depth).second) {
          next.push_back(std::move(x));
          budget.check(seen.size(), "restricted_distance");
        }
      }
    }
    frontier = std::move(next);
  }
  out.explored = seen.size();
  return out;  // disconnected inside the ball
}

namespace {

// Single-source shortest paths inside the ball graph, by index.
std::vector<int> in_ball_bfs(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  dist[src] = 0;
  std::deque<int> queue{src};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int x : adj[w]) {
      if (x >= 0 && dist[x] < 0) {
        dist[x] = dist[w] + 1;
        queue.push_back(x);
      }
    }
  }
  return dist;
}

}  // namespace

ConvexityResult convexity_c(int n, const SearchLimits& limits) {
  Ball b = ball(n, limits);
  ConvexityResult out;
  out.n = n;

  std::vector<ForestDiagram> elements;
  elements.reserve(b.size());
  for (const auto& layer : b.layers)
    for (const ForestDiagram& v : layer) elements.push_back(v);
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(format_diagram(elements[i]), static_cast<int>(i));

  std::vector<std::vector<int>> adj(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (Letter g : kLetters) {
      auto it = index.find(format_diagram(apply_generator(g, elements[i])));
      adj[i].push_back(it == index.end() ? -1 : it->second);
    }
  }

  // Sphere of radius 2 in the ambient group (independent of n);
  // h = g*s gives l(g^-1 h) = 2, h = s*g gives l(h g^-1) = 2.
  std::vector<ForestDiagram> sphere2 = ball(2, limits).layers[2];

  for (std::size_t gi = 0; gi < elements.size(); ++gi) {
    std::vector<int> dist = in_ball_bfs(adj, static_cast<int>(gi));
    auto consider = [&](const ForestDiagram& h, int& c, bool record) {
      auto it = index.find(format_diagram(h));
      if (it == index.end()) return;  // h outside the ball
      ++out.pairs_checked;
      int d = dist[it->second];
      if (d < 0) return;  // unreachable; cannot happen (path through id)
      if (d > c) {
        c = d;
        if (record) {
          out.witness_g = format_diagram(elements[gi]);
          out.witness_h = format_diagram(h);
        }
      }
    };
    for (const ForestDiagram& s : sphere2) {
      consider(multiply(elements[gi], s), out.c_left_convention, true);
      consider(multiply(s, elements[gi]), out.c_right_convention, false);
    }
  }
  out.c = out.c_left_convention;
  return out;
}

std::pair<ForestDiagram, ForestDiagram> witnesses(int n) {
  if (n < 1) throw std::domain_error("witnesses requires n >= 1");
  GroupWord word = concat({rep(Letter::X0Inv, 2),
                           {Letter::X1},
                           rep(Letter::X0, n + 1),
                           rep(Letter::X1Inv, n)});
  ForestDiagram l = from_word(word);
  ForestDiagram r = apply_generator(Letter::X0, apply_generator(Letter::X0, l));
  return {std::move(l), std::move(r)};
}

namespace {

std::vector<int> expected_weights(int n, int a, int b, int c) {
  std::vector<int> w(static_cast<std::size_t>(n - 1), 1);
  w.push_back(a);
  w.push_back(b);
  w.push_back(c);
  return w;
}

void expect(std::vector<std::string>& failures, bool ok, const std::string& msg) {
  if (!ok) failures.push_back(msg);
}

}  // namespace

WitnessReport verify_witnesses(int n, bool with_restricted_bfs,
                               const SearchLimits& limits) {
  WitnessReport rep;
  rep.n = n;
  auto [l, r] = witnesses(n);
  rep.l_key = format_diagram(l);
  rep.r_key = format_diagram(r);

  LengthBreakdown bl = length(l), br = length(r);
  rep.len_l = bl.total;
  rep.len_r = br.total;
  rep.carets_l = bl.caret_count;
  rep.carets_r = br.caret_count;
  rep.dist_lr = distance(l, r);
  ForestDiagram x0l = apply_generator(Letter::X0, l);
  rep.len_x0l = norm(x0l);
  rep.same_forests_pointer_shift =
      l.top.trees == r.top.trees && l.bottom == r.bottom &&
      r.top.pointer == l.top.pointer + 2;
  rep.weights_l = label_spaces(l).weights;
  rep.weights_r = label_spaces(r).weights;
  rep.weights_x0l = label_spaces(x0l).weights;

  expect(rep.failures, rep.len_l == 2 * n + 2, "l(l) != 2n+2");
  expect(rep.failures, rep.len_r == 2 * n + 2, "l(r) != 2n+2");
  expect(rep.failures, rep.carets_l == n + 1, "l has wrong caret count");
  expect(rep.failures, rep.carets_r == n + 1, "r has wrong caret count");
  expect(rep.failures, rep.dist_lr == 2, "d(l, r) != 2");
  expect(rep.failures, rep.len_x0l == 2 * n + 3, "l(x0 l) != 2n+3");
  expect(rep.failures, rep.same_forests_pointer_shift,
         "l and r do not differ by a top-pointer shift of 2");
  expect(rep.failures, rep.weights_l == expected_weights(n, 0, 2, 0),
         "weights of l do not match (1^{n-1}, 0, 2, 0)");
  expect(rep.failures, rep.weights_r == expected_weights(n, 1, 1, 0),
         "weights of r do not match (1^{n-1}, 1, 1, 0)");
  expect(rep.failures, rep.weights_x0l == expected_weights(n, 1, 2, 0),
         "weights of x0 l do not match (1^{n-1}, 1, 2, 0)");

  if (with_restricted_bfs) {
    rep.restricted_ran = true;
    try {
      RestrictedDistance rd = restricted_distance(l, r, 2 * n + 2, limits);
      rep.restricted = rd.dist;
      rep.restricted_explored = rd.explored;
      rep.restricted_complete = true;
      expect(rep.failures, rd.dist && *rd.dist == 4 * n + 4,
             "in-ball distance from l to r != 4n+4");
    } catch (const ResourceLimitError& e) {
      rep.restricted_complete = false;
      rep.restricted_explored = e.explored;
    }
  }
  return rep;
}

namespace {

PathCheck check_path(const std::string& name, const GroupWord& word,
                     const ForestDiagram& l, const ForestDiagram& r,
                     int radius) {
  PathCheck pc;
  pc.name = name;
  pc.word = format_word(word);
  pc.letters = static_cast<int>(word.size());
  ForestDiagram cur = l;
  pc.max_length_seen = norm(cur);
  pc.stays_in_ball = pc.max_length_seen <= radius;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    cur = apply_generator(*it, cur);
    int len = norm(cur);
    pc.max_length_seen = std::max(pc.max_length_seen, len);
    if (len > radius) pc.stays_in_ball = false;
    if (cur == ForestDiagram::identity()) pc.visits_identity = true;
  }
  pc.reaches_r = cur == r;
  return pc;
}

}  // namespace

DetourReport verify_detour_paths(int n, const SearchLimits& limits) {
  DetourReport out;
  out.n = n;
  auto [l, r] = witnesses(n);
  int radius = 2 * n + 2;

  // (x1 x0^{n+1}) (x1^-1 x0^-n) (x1^-1 x0^n) (x1 x0^{1-n}): keeps the bulk
  // of the bottom tree intact; avoids the identity for n >= 2.
  GroupWord keep_bottom = concat({{Letter::X1},
                                  rep(Letter::X0, n + 1),
                                  {Letter::X1Inv},
                                  rep(Letter::X0Inv, n),
                                  {Letter::X1Inv},
                                  rep(Letter::X0, n),
                                  {Letter::X1},
                                  rep(Letter::X0Inv, n - 1)});
  // (x1 x0^{n+1}) (x1^-n x0^-1) (x1^-1 x0 x1^{n-1}) (x1 x0^{1-n}): travels
  // by destroying and rebuilding the bottom tree; passes the identity.
  GroupWord through_identity = concat({{Letter::X1},
                                       rep(Letter::X0, n + 1),
                                       rep(Letter::X1Inv, n),
                                       {Letter::X0Inv},
                                       {Letter::X1Inv},
                                       {Letter::X0},
                                       rep(Letter::X1, n - 1),
                                       {Letter::X1},
                                       rep(Letter::X0Inv, n - 1)});

  PathCheck a = check_path("keep_bottom", keep_bottom, l, r, radius);
  PathCheck b = check_path("through_identity", through_identity, l, r, radius);

  auto expect = [&out](bool ok, const std::string& msg) {
    if (!ok) out.failures.push_back(msg);
  };
  for (const PathCheck* pc : {&a, &b}) {
    expect(pc->letters == 4 * n + 4, pc->name + ": word is not 4n+4 letters");
    expect(pc->reaches_r, pc->name + ": path does not end at r");
    expect(pc->stays_in_ball, pc->name + ": path leaves the (2n+2)-ball");
  }
  expect(b.visits_identity, "through_identity: identity not visited");
  if (n >= 2) {
    expect(!a.visits_identity, "keep_bottom: identity visited");
  } else {
    // Degenerate case: at n = 1 the two words coincide letter for letter,
    // so the bottom-keeping path passes the identity too.
    expect(keep_bottom == through_identity,
           "n=1: the two detour words should coincide");
    expect(a.visits_identity, "n=1: degenerate path should visit the identity");
  }
  out.paths.push_back(std::move(a));
  out.paths.push_back(std::move(b));

  if (n == 8) {
    // (x1 x0^7 x1^-4 x0^2) (x1^-1 x0^-4) (x1^-1 x0^4) (x1 x0^-2 x1^4 x0^-5):
    // builds a caret bridge while moving left and demolishes it at the end.
    GroupWord bridge = concat({{Letter::X1},
                               rep(Letter::X0, 7),
                               rep(Letter::X1Inv, 4),
                               rep(Letter::X0, 2),
                               {Letter::X1Inv},
                               rep(Letter::X0Inv, 4),
                               {Letter::X1Inv},
                               rep(Letter::X0, 4),
                               {Letter::X1},
                               rep(Letter::X0Inv, 2),
                               rep(Letter::X1, 4),
                               rep(Letter::X0Inv, 5)});
    PathCheck c = check_path("caret_bridge", bridge, l, r, radius);
    expect(c.letters == 4 * n + 4, "caret_bridge: word is not 4n+4 letters");
    expect(c.reaches_r, "caret_bridge: path does not end at r");
    expect(c.stays_in_ball, "caret_bridge: path leaves the (2n+2)-ball");
    out.paths.push_back(std::move(c));
  }

  // Right-handed mirror pair, reported as computed (its defining word has
  // 2n+1 letters, so it cannot reach length 2n+2).
  {
    GroupWord wl = concat({{Letter::X1Inv},
                           rep(Letter::X0Inv, n),
                           {Letter::X1},
                           rep(Letter::X0, n - 1)});
    ForestDiagram lp = from_word(wl);
    ForestDiagram rp =
        apply_generator(Letter::X0, apply_generator(Letter::X0, lp));
    out.mirror.l_key = format_diagram(lp);
    out.mirror.r_key = format_diagram(rp);
    out.mirror.len_l = norm(lp);
    out.mirror.len_r = norm(rp);
    out.mirror.len_x0l = norm(apply_generator(Letter::X0, lp));
    out.mirror.dist = distance(lp, rp);
    if (norm(lp) <= radius && norm(rp) <= radius) {
      try {
        out.mirror.restricted = restricted_distance(lp, rp, radius, limits).dist;
      } catch (const ResourceLimitError&) {
      }
    }
    expect(out.mirror.dist == 2, "mirror pair: d(l', r') != 2");
  }
  return out;
}

TailReport verify_forced_tail(int n) {
  TailReport out;
  out.n = n;
  auto [l, r] = witnesses(n);
  (void)l;
  int radius = 2 * n + 2;
  ForestDiagram funnel =
      apply_generator(Letter::X0Inv, apply_generator(Letter::X1Inv, r));
  out.funnel_key = format_diagram(funnel);
  out.funnel_tail_in_ball =
      norm(r) <= radius &&
      norm(apply_generator(Letter::X1Inv, r)) <= radius && norm(funnel) <= radius;

  for (Letter g1 : kLetters) {
    ForestDiagram v1 = apply_generator(g1, r);
    for (Letter g2 : kLetters) {
      ForestDiagram v2 = apply_generator(g2, v1);
      for (Letter g3 : kLetters) {
        ForestDiagram v3 = apply_generator(g3, v2);
        TailTriple t;
        t.letters = format_word({g1, g2, g3});
        bool visits = v1 == funnel || v2 == funnel || v3 == funnel;
        bool leaves =
            norm(v1) > radius || norm(v2) > radius || norm(v3) > radius;
        bool simple = v1 != r && v2 != r && v3 != r && v2 != v1 && v3 != v1 &&
                      v3 != v2;
        if (visits) {
          t.status = TailTriple::Status::VisitsFunnel;
          ++out.visits;
        } else if (leaves) {
          t.status = TailTriple::Status::LeavesBall;
          ++out.leaves;
        } else if (!simple) {
          t.status = TailTriple::Status::Backtracks;
          ++out.backtracks;
        } else {
          t.status = TailTriple::Status::Violation;
          ++out.violations;
        }
        out.triples.push_back(std::move(t));
      }
    }
  }
  return out;
}

int right_foot(const ForestDiagram& v) {
  return v.top.leaf_starts()[v.top.pointer + 1] - 1;
}

int critical_leaf(const ForestDiagram& v) {
  return v.bottom.leaf_starts()[v.bottom.pointer + 1] - 1;
}

PathTrace analyze_path(const ForestDiagram& start, const GroupWord& word,
                       int radius) {
  PathTrace trace;
  trace.radius = radius;
  ForestDiagram cur = start;
  int prev_offset = 0;
  auto push = [&](const std::string& letter, bool first) {
    PathTrace::Step s;
    s.letter = letter;
    s.key = format_diagram(cur);
    s.len = norm(cur);
    s.in_ball = s.len <= radius;
    s.right_foot = right_foot(cur);
    s.critical_leaf = critical_leaf(cur);
    s.foot_on_critical = s.right_foot == s.critical_leaf;
    // Window-leaf indices are only comparable within one diagram, so the
    // jump check uses the foot's offset from the critical leaf, which is
    // invariant under window shifts. One edge can move it by more than 1.
    int offset = s.right_foot - s.critical_leaf;
    s.foot_jump = !first && std::abs(offset - prev_offset) > 1;
    prev_offset = offset;
    if (s.foot_on_critical) {
      if (!trace.first_on_critical)
        trace.first_on_critical = static_cast<int>(trace.steps.size());
      trace.last_on_critical = static_cast<int>(trace.steps.size());
    }
    trace.steps.push_back(std::move(s));
  };
  push("", true);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    cur = apply_generator(*it, cur);
    push(format_word({*it}), false);
  }
  return trace;
}

}  // namespace thompson
