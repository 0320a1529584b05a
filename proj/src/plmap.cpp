#include "thompson/plmap.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "thompson/errors.hpp"

namespace thompson {

namespace {

constexpr long long kMagnitudeCap = 1LL << 58;

void check_magnitude(long long n) {
  if (n >= kMagnitudeCap || n <= -kMagnitudeCap)
    throw std::overflow_error("dyadic numerator overflow");
}

long long shifted(long long n, int k) {
  while (k-- > 0) {
    check_magnitude(n);
    n <<= 1;
  }
  return n;
}

}  // namespace

Dyadic::Dyadic(long long num, int exp) : num_(num), exp_(exp) {
  if (exp < 0) throw std::invalid_argument("dyadic exponent must be >= 0");
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  int e = std::max(exp_, o.exp_);
  long long a = shifted(num_, e - exp_);
  long long b = shifted(o.num_, e - o.exp_);
  check_magnitude(a);
  check_magnitude(b);
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator-() const {
  Dyadic d;
  d.num_ = -num_;
  d.exp_ = exp_;
  return d;
}

Dyadic Dyadic::times_pow2(int k) const {
  if (num_ == 0) return Dyadic();
  if (k >= 0) {
    if (k >= exp_) return Dyadic(shifted(num_, k - exp_), 0);
    return Dyadic(num_, exp_ - k);
  }
  return Dyadic(num_, exp_ - k);  // exp grows; num stays odd
}

bool Dyadic::operator<(const Dyadic& o) const {
  int e = std::max(exp_, o.exp_);
  return shifted(num_, e - exp_) < shifted(o.num_, e - o.exp_);
}

std::string Dyadic::str() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(1LL << exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  auto to_ll = [&](std::string_view s, std::size_t base) {
    if (s.empty()) throw ParseError("empty number", base);
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) throw ParseError("expected digits", base + i);
    long long v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw ParseError("expected digits", base + i);
      v = v * 10 + (s[i] - '0');
      if (v >= kMagnitudeCap) throw ParseError("number too large", base);
    }
    return s[0] == '-' ? -v : v;
  };
  if (slash == std::string_view::npos) return from_int(to_ll(text, 0));
  long long num = to_ll(text.substr(0, slash), 0);
  long long den = to_ll(text.substr(slash + 1), slash + 1);
  if (den <= 0 || (den & (den - 1)) != 0)
    throw ParseError("denominator must be a positive power of two", slash + 1);
  int e = 0;
  while ((1LL << e) != den) ++e;
  return Dyadic(num, e);
}

bool slope_is_pow2(const Dyadic& dx, const Dyadic& dy, int* s) {
  if (dx.num() <= 0 || dy.num() <= 0) return false;
  // Integers may carry even numerators (the exponent stops at 0), so
  // compare odd parts: dy/dx = 2^s iff the odd parts agree.
  long long nx = dx.num(), ny = dy.num();
  int ax = 0, ay = 0;
  while ((nx & 1) == 0) {
    nx >>= 1;
    ++ax;
  }
  while ((ny & 1) == 0) {
    ny >>= 1;
    ++ay;
  }
  if (nx != ny) return false;
  if (s) *s = (ay + dx.exp()) - (ax + dy.exp());
  return true;
}

namespace {

// Slope exponent of the segment from p to q; throws if not a power of 2.
int segment_slope(const PLMap::Breakpoint& p, const PLMap::Breakpoint& q) {
  int s;
  if (!slope_is_pow2(q.x - p.x, q.y - p.y, &s))
    throw StructuralError("PL segment slope is not a power of two");
  return s;
}

}  // namespace

PLMap normalize(PLMap m) {
  if (m.points.empty()) {
    if (m.k_minus != m.k_plus)
      throw StructuralError("translation tails disagree with no breakpoints");
    return m;
  }
  for (std::size_t i = 0; i + 1 < m.points.size(); ++i) {
    if (!(m.points[i].x < m.points[i + 1].x) ||
        !(m.points[i].y < m.points[i + 1].y))
      throw StructuralError("PL breakpoints must increase in both coordinates");
    segment_slope(m.points[i], m.points[i + 1]);
  }
  // Tail continuity: the extreme breakpoints lie on the translation lines.
  const auto& first = m.points.front();
  const auto& last = m.points.back();
  if (first.y - first.x != Dyadic::from_int(m.k_minus) ||
      last.y - last.x != Dyadic::from_int(m.k_plus))
    throw StructuralError("PL tail offset mismatch at extreme breakpoints");

  // Drop interior points collinear with both neighbours, then extreme
  // points collinear with their tail (slope-1) lines.
  std::vector<PLMap::Breakpoint> kept;
  kept.reserve(m.points.size());
  for (const auto& p : m.points) {
    while (kept.size() >= 2) {
      const auto& a = kept[kept.size() - 2];
      const auto& b = kept.back();
      if (segment_slope(a, b) == segment_slope(b, p))
        kept.pop_back();
      else
        break;
    }
    kept.push_back(p);
  }
  while (kept.size() >= 2 && segment_slope(kept[0], kept[1]) == 0)
    kept.erase(kept.begin());
  while (kept.size() >= 2 &&
         segment_slope(kept[kept.size() - 2], kept.back()) == 0)
    kept.pop_back();
  if (kept.size() == 1) kept.clear();  // a single point on both tail lines
  if (kept.empty() && m.k_minus != m.k_plus)
    throw StructuralError("removable breakpoints but mismatched tails");
  m.points = std::move(kept);
  return m;
}

namespace {

void tree_cuts(const Tree& t, const Dyadic& lo, const Dyadic& hi,
               std::vector<Dyadic>& out) {
  if (t.is_leaf()) return;
  Dyadic mid = (lo + hi).times_pow2(-1);
  tree_cuts(t.left(), lo, mid, out);
  out.push_back(mid);
  tree_cuts(t.right(), mid, hi, out);
}

// All leaf-interval endpoints of the window, left to right. Tree j spans
// [j - pointer, j + 1 - pointer).
std::vector<Dyadic> forest_cuts(const PointedForest& f) {
  std::vector<Dyadic> out;
  out.push_back(Dyadic::from_int(-f.pointer));
  for (int j = 0; j < f.tree_count(); ++j) {
    Dyadic lo = Dyadic::from_int(j - f.pointer);
    Dyadic hi = Dyadic::from_int(j + 1 - f.pointer);
    tree_cuts(f.trees[j], lo, hi, out);
    out.push_back(hi);
  }
  return out;
}

}  // namespace

PLMap to_plmap(const ForestDiagram& v) {
  std::vector<Dyadic> domain = forest_cuts(v.bottom);
  std::vector<Dyadic> range = forest_cuts(v.top);
  // Equal leaf counts give equal endpoint counts.
  PLMap m;
  m.points.reserve(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i)
    m.points.push_back({domain[i], range[i]});
  Dyadic km = range.front() - domain.front();
  Dyadic kp = range.back() - domain.back();
  m.k_minus = km.num();  // window edges are integers
  m.k_plus = kp.num();
  return normalize(std::move(m));
}

Dyadic evaluate(const PLMap& a, const Dyadic& t) {
  if (a.points.empty() || t <= a.points.front().x)
    return t + Dyadic::from_int(a.k_minus);
  if (t >= a.points.back().x) return t + Dyadic::from_int(a.k_plus);
  // Find the segment [points[i], points[i+1]] containing t.
  std::size_t lo = 0, hi = a.points.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (a.points[mid].x <= t)
      lo = mid;
    else
      hi = mid;
  }
  int s = segment_slope(a.points[lo], a.points[lo + 1]);
  return a.points[lo].y + (t - a.points[lo].x).times_pow2(s);
}

PLMap compose(const PLMap& a, const PLMap& b) {
  PLMap binv = pl_inverse(b);
  std::vector<Dyadic> xs;
  xs.reserve(a.points.size() + b.points.size());
  for (const auto& p : b.points) xs.push_back(p.x);
  for (const auto& p : a.points) xs.push_back(evaluate(binv, p.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  PLMap m;
  m.points.reserve(xs.size());
  for (const Dyadic& x : xs) m.points.push_back({x, evaluate(a, evaluate(b, x))});
  m.k_minus = a.k_minus + b.k_minus;
  m.k_plus = a.k_plus + b.k_plus;
  return normalize(std::move(m));
}

PLMap pl_inverse(const PLMap& a) {
  PLMap m;
  m.points.reserve(a.points.size());
  for (const auto& p : a.points) m.points.push_back({p.y, p.x});
  m.k_minus = -a.k_minus;
  m.k_plus = -a.k_plus;
  return normalize(std::move(m));
}

bool pl_equal(const PLMap& a, const PLMap& b) {
  return a.k_minus == b.k_minus && a.k_plus == b.k_plus && a.points == b.points;
}

}  // namespace thompson
