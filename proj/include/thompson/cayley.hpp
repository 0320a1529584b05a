#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "thompson/forest_diagram.hpp"
#include "thompson/metric.hpp"

namespace thompson {

// Budget for graph searches. Exceeding a budget raises ResourceLimitError;
// callers that want partial reports catch it. max_seconds == 0 disables
// the time check.
struct SearchLimits {
  std::size_t max_elements = 10'000'000;
  double max_seconds = 0;
};

// Generators in the fixed iteration order used everywhere, so dedup and
// reports are reproducible byte for byte.
inline constexpr std::array<Letter, 4> kLetters = {
    Letter::X0, Letter::X0Inv, Letter::X1, Letter::X1Inv};

// Neighbours of v under left multiplication: x0 v, x0^-1 v, x1 v, x1^-1 v.
std::array<ForestDiagram, 4> neighbors(const ForestDiagram& v);

// The ball of radius n around the identity, enumerated by breadth-first
// search with canonical-form dedup. Layer k holds the elements first
// discovered at depth k, sorted by their canonical serialization.
struct Ball {
  int radius = 0;
  std::vector<std::vector<ForestDiagram>> layers;
  std::unordered_map<std::string, int> depth;  // canonical key -> BFS depth

  std::size_t size() const;
  std::optional<int> depth_of(const ForestDiagram& v) const;
  bool contains(const ForestDiagram& v) const { return depth_of(v).has_value(); }
};

Ball ball(int n, const SearchLimits& limits = {});

// Graph distance d(u, v) computed through the length formula. A path
// u -> g1 u -> ... -> (gk...g1) u = v spells an element w = v u^-1 of
// length <= k, so d(u, v) = l(v u^-1).
int distance(const ForestDiagram& u, const ForestDiagram& v);

// The same distance by bidirectional BFS; the convention check for the
// formula above.
int distance_bfs(const ForestDiagram& u, const ForestDiagram& v,
                 const SearchLimits& limits = {});

// Shortest path from u to v through vertices of length <= radius only.
// Ball membership is decided by the length formula on the fly; the ball
// is never pre-enumerated. nullopt: u and v lie in different components
// of the ball.
struct RestrictedDistance {
  std::optional<int> dist;
  std::size_t explored = 0;
};
RestrictedDistance restricted_distance(const ForestDiagram& u,
                                       const ForestDiagram& v, int radius,
                                       const SearchLimits& limits = {});

// c(n) = max over pairs g, h in B_n with g^-1 h of word length 2 of the
// in-ball distance d_{B_n}(g, h). Always 2 <= c(n) <= 2n (a path through
// the identity stays in the ball). Both readings of the pair condition
// are computed: l(g^-1 h) = 2 (c, the primary value) and l(h g^-1) = 2
// (pairs at graph distance 2 under left-multiplication edges). They can
// differ at small radii and agree at the radii the witness pair governs.
struct ConvexityResult {
  int n = 0;
  int c = 0;
  int c_left_convention = 0;   // pairs with l(g^-1 h) = 2
  int c_right_convention = 0;  // pairs with l(h g^-1) = 2
  std::string witness_g;
  std::string witness_h;
  std::size_t pairs_checked = 0;
};
ConvexityResult convexity_c(int n, const SearchLimits& limits = {});

// The witness pair l = x0^-2 x1 x0^{n+1} x1^-n and r = x0^2 l. Their
// diagrams carry the same forests and differ only in the top pointer.
std::pair<ForestDiagram, ForestDiagram> witnesses(int n);

// Checks, for the witness pair: l(l) = l(r) = 2n+2 with n+1 carets each,
// the published label/weight sequences, d(l, r) = 2, l(x0 l) = 2n+3, and
// (when with_restricted_bfs) that the shortest path from l to r inside
// the (2n+2)-ball has length exactly 4n+4.
struct WitnessReport {
  int n = 0;
  std::string l_key, r_key;
  int len_l = 0, len_r = 0;
  int carets_l = 0, carets_r = 0;
  int dist_lr = 0;
  int len_x0l = 0;
  bool same_forests_pointer_shift = false;
  std::vector<int> weights_l, weights_r, weights_x0l;
  bool restricted_ran = false;
  bool restricted_complete = false;
  std::optional<int> restricted;
  std::size_t restricted_explored = 0;
  std::vector<std::string> failures;  // empty iff all checks passed
  bool passed() const { return failures.empty(); }
};
WitnessReport verify_witnesses(int n, bool with_restricted_bfs,
                               const SearchLimits& limits = {});

// The two known minimum-length in-ball detours from l to r (plus, at
// n = 8, a third with a caret bridge), traced vertex by vertex:
// each has 4n+4 letters, ends at r, and stays inside the (2n+2)-ball.
// One of them passes through the identity; the other avoids it for
// n >= 2 and degenerates to the same word at n = 1.
struct PathCheck {
  std::string name;
  std::string word;
  int letters = 0;
  bool reaches_r = false;
  bool stays_in_ball = false;
  int max_length_seen = 0;
  bool visits_identity = false;
};
struct MirrorPairReport {
  // The right-handed pair l' = x1^-1 x0^-n x1 x0^{n-1}, r' = x0^2 l'.
  // Reported as computed; the defining word has only 2n+1 letters, so
  // l(l') < 2n+2 necessarily.
  std::string l_key, r_key;
  int len_l = 0, len_r = 0, len_x0l = 0;
  int dist = 0;
  std::optional<int> restricted;  // within the (2n+2)-ball
};
struct DetourReport {
  int n = 0;
  std::vector<PathCheck> paths;
  MirrorPairReport mirror;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};
DetourReport verify_detour_paths(int n, const SearchLimits& limits = {});

// Every 3-step path leaving r either passes through x0^-1 x1^-1 r or
// leaves the (2n+2)-ball. All 64 letter triples are enumerated; walks
// that revisit a vertex are not paths and are reported separately.
struct TailTriple {
  std::string letters;
  enum class Status { VisitsFunnel, LeavesBall, Backtracks, Violation } status;
};
struct TailReport {
  int n = 0;
  std::string funnel_key;  // x0^-1 x1^-1 r
  std::vector<TailTriple> triples;
  int visits = 0, leaves = 0, backtracks = 0, violations = 0;
  bool funnel_tail_in_ball = false;  // r, x1^-1 r, x0^-1 x1^-1 r all inside
  bool passed() const { return violations == 0 && funnel_tail_in_ball; }
};
TailReport verify_forced_tail(int n);

// Per-vertex trace of a word applied to `start`, letters applied right to
// left. The right foot is the rightmost leaf of the pointed top tree, the
// critical leaf the rightmost leaf of the pointed bottom tree, both in
// window-leaf indices of that vertex's own diagram; "on" means the two
// are matched by the leaf bijection. Foot moves of more than one unit
// between steps are flagged as jumps.
struct PathTrace {
  struct Step {
    std::string letter;  // empty for the start vertex
    std::string key;
    int len = 0;
    bool in_ball = false;
    int right_foot = 0;
    int critical_leaf = 0;
    bool foot_on_critical = false;
    bool foot_jump = false;
  };
  int radius = 0;
  std::vector<Step> steps;
  std::optional<int> first_on_critical;  // h_l when tracing l -> r
  std::optional<int> last_on_critical;   // h_r
};
PathTrace analyze_path(const ForestDiagram& start, const GroupWord& word,
                       int radius);

int right_foot(const ForestDiagram& v);
int critical_leaf(const ForestDiagram& v);

}  // namespace thompson
