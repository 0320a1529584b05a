#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/forest_diagram.hpp"

namespace thompson {

// Exact dyadic rational num / 2^exp, kept in lowest terms (num odd or
// exp == 0). Closed under +, -, comparison and scaling by powers of two,
// which is all the PL calculus needs. No floating point anywhere.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long num, int exp);  // normalizes; pre: exp >= 0
  static Dyadic from_int(long long n) { return Dyadic(n, 0); }

  long long num() const { return num_; }
  int exp() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator-() const;
  // value * 2^k for any integer k; exact.
  Dyadic times_pow2(int k) const;

  bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
  bool operator!=(const Dyadic& o) const { return !(*this == o); }
  bool operator<(const Dyadic& o) const;
  bool operator<=(const Dyadic& o) const { return *this < o || *this == o; }
  bool operator>(const Dyadic& o) const { return o < *this; }
  bool operator>=(const Dyadic& o) const { return o <= *this; }

  // "3", "-7/8" (denominator always a power of two).
  std::string str() const;
  static Dyadic parse(std::string_view text);

 private:
  long long num_ = 0;
  int exp_ = 0;
};

// Piecewise-linear homeomorphism of the line with power-of-two slopes,
// finitely many dyadic breakpoints, and translation tails t + k_minus /
// t + k_plus. Normal form: no breakpoint collinear with its neighbours
// (the tails count as slope-1 segments), so structural equality is map
// equality.
struct PLMap {
  struct Breakpoint {
    Dyadic x, y;
    bool operator==(const Breakpoint& o) const { return x == o.x && y == o.y; }
  };
  std::vector<Breakpoint> points;
  long long k_minus = 0;
  long long k_plus = 0;

  static PLMap identity() { return PLMap{}; }
  bool is_identity() const {
    return points.empty() && k_minus == 0 && k_plus == 0;
  }
};

// dy = dx * 2^s for some integer s? Both must be positive.
// In lowest terms this holds exactly when the numerators agree.
bool slope_is_pow2(const Dyadic& dx, const Dyadic& dy, int* s = nullptr);

// Validates monotonicity, power-of-two slopes and tail continuity, then
// removes every removable breakpoint. Idempotent.
PLMap normalize(PLMap m);

// The PL map of a diagram: the pointed bottom/top trees sit over [0,1),
// window tree j over [j - pointer, j + 1 - pointer); each tree splits its
// unit interval into standard dyadic subintervals (a caret halves, left
// child first), and the i-th bottom (domain) leaf interval maps affinely
// onto the i-th top (range) leaf interval. Outside the window the map is
// a translation.
PLMap to_plmap(const ForestDiagram& v);

// a after b, i.e. t -> a(b(t)). to_plmap is a homomorphism onto
// composition: to_plmap(multiply(f, g)) == compose(to_plmap(f), to_plmap(g)).
PLMap compose(const PLMap& a, const PLMap& b);

PLMap pl_inverse(const PLMap& a);

Dyadic evaluate(const PLMap& a, const Dyadic& t);

// Structural equality of normal forms.
bool pl_equal(const PLMap& a, const PLMap& b);

}  // namespace thompson
