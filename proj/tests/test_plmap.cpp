#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "thompson/errors.hpp"
#include "thompson/plmap.hpp"
#include "test_util.hpp"

using namespace thompson;
using test_util::elements_up_to;
using test_util::random_element;
using test_util::random_word;
using test_util::shared_ball;

namespace {

ForestDiagram elem(const std::string& word) { return from_word(parse_word(word)); }

PLMap pl(const std::string& word) { return to_plmap(elem(word)); }

std::string pl_key(const PLMap& m) {
  std::string s = std::to_string(m.k_minus) + ";" + std::to_string(m.k_plus);
  for (const auto& p : m.points) s += ";" + p.x.str() + "," + p.y.str();
  return s;
}

}  // namespace

TEST_CASE("dyadic arithmetic is exact and normalized") {
  CHECK(Dyadic(4, 2) == Dyadic::from_int(1));   // 4/4
  CHECK(Dyadic(6, 1) == Dyadic::from_int(3));   // 6/2
  CHECK(Dyadic(3, 2).str() == "3/4");
  CHECK((Dyadic(1, 1) + Dyadic(1, 2)).str() == "3/4");
  CHECK((Dyadic(1, 0) - Dyadic(1, 3)).str() == "7/8");
  CHECK((Dyadic(3, 2).times_pow2(2)) == Dyadic::from_int(3));
  CHECK((Dyadic(3, 0).times_pow2(-1)).str() == "3/2");
  CHECK(Dyadic(1, 2) < Dyadic(1, 1));
  CHECK(Dyadic(-3, 1) < Dyadic(-1, 1));
  CHECK(Dyadic::parse("7/8") == Dyadic(7, 3));
  CHECK(Dyadic::parse("-5") == Dyadic::from_int(-5));
  CHECK_THROWS_AS(Dyadic::parse("1/3"), ParseError);
  CHECK_THROWS_AS(Dyadic::parse("x"), ParseError);
}

TEST_CASE("slope_is_pow2 handles even integer numerators") {
  int s = 99;
  CHECK(slope_is_pow2(Dyadic::from_int(2), Dyadic::from_int(1), &s));
  CHECK(s == -1);
  CHECK(slope_is_pow2(Dyadic::from_int(1), Dyadic::from_int(8), &s));
  CHECK(s == 3);
  CHECK(slope_is_pow2(Dyadic(1, 1), Dyadic(1, 3), &s));
  CHECK(s == -2);
  CHECK_FALSE(slope_is_pow2(Dyadic::from_int(3), Dyadic::from_int(1), nullptr));
  CHECK_FALSE(slope_is_pow2(Dyadic::from_int(-1), Dyadic::from_int(1), nullptr));
}

TEST_CASE("maps of the generators") {
  CHECK(pl("").is_identity());
  // x0 acts as the unit left translation under this anchoring.
  PLMap x0 = pl("x0");
  CHECK(x0.points.empty());
  CHECK(x0.k_minus == -1);
  CHECK(x0.k_plus == -1);
  PLMap x1 = pl("x1");
  REQUIRE(x1.points.size() == 2);
  CHECK(x1.points[0].x == Dyadic::from_int(0));
  CHECK(x1.points[0].y == Dyadic::from_int(0));
  CHECK(x1.points[1].x == Dyadic::from_int(2));
  CHECK(x1.points[1].y == Dyadic::from_int(1));
  CHECK(x1.k_minus == 0);
  CHECK(x1.k_plus == -1);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(PLMap::identity(), Dyadic(7, 3)) == Dyadic(7, 3));
  PLMap x1 = pl("x1");
  CHECK(evaluate(x1, Dyadic(7, 3)) == Dyadic(7, 4));      // halved on [0,2)
  CHECK(evaluate(x1, Dyadic::from_int(5)) == Dyadic::from_int(4));  // t + k_plus
  CHECK(evaluate(x1, Dyadic::from_int(-3)) == Dyadic::from_int(-3));

  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long long> num(-64, 64);
  std::uniform_int_distribution<int> ex(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    ForestDiagram v = random_element(rng, 10);
    PLMap m = to_plmap(v);
    Dyadic t(num(rng), ex(rng));
    CHECK(evaluate(pl_inverse(m), evaluate(m, t)) == t);
  }
}

TEST_CASE("compose and invert") {
  CHECK(pl_equal(compose(pl("x1"), PLMap::identity()), pl("x1")));
  CHECK(pl_equal(compose(PLMap::identity(), pl("x1")), pl("x1")));
  CHECK(compose(pl("x0"), pl("x0^-1")).is_identity());
  CHECK(pl_equal(pl_inverse(PLMap::identity()), PLMap::identity()));
  CHECK(pl_inverse(pl("x0")).k_minus == 1);
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    ForestDiagram v = random_element(rng, 12);
    CHECK(pl_equal(pl_inverse(pl_inverse(to_plmap(v))), to_plmap(v)));
    CHECK(pl_equal(pl_inverse(to_plmap(v)), to_plmap(inverse(v))));
    CHECK(compose(to_plmap(v), to_plmap(inverse(v))).is_identity());
  }
}

TEST_CASE("to_plmap turns left multiplication into composition, not the reverse") {
  ForestDiagram f = elem("x0"), g = elem("x1");
  PLMap fg = to_plmap(multiply(f, g));
  CHECK(pl_equal(fg, compose(to_plmap(f), to_plmap(g))));
  CHECK_FALSE(pl_equal(fg, compose(to_plmap(g), to_plmap(f))));
}

TEST_CASE("homomorphism on random word pairs") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 200; ++trial) {
    ForestDiagram a = random_element(rng, 12);
    ForestDiagram b = random_element(rng, 12);
    CHECK(pl_equal(to_plmap(multiply(a, b)),
                   compose(to_plmap(a), to_plmap(b))));
  }
}

TEST_CASE("injective on B_5") {
  std::vector<ForestDiagram> pool = elements_up_to(shared_ball(5), 5);
  REQUIRE(pool.size() == 475);
  std::map<std::string, std::string> seen;
  for (const ForestDiagram& v : pool) {
    auto [it, inserted] = seen.emplace(pl_key(to_plmap(v)), format_diagram(v));
    INFO("collision between " << it->second << " and " << format_diagram(v));
    CHECK(inserted);
  }
}

TEST_CASE("structural conditions hold over B_5") {
  for (const ForestDiagram& v : elements_up_to(shared_ball(5), 5)) {
    PLMap m = to_plmap(v);
    for (std::size_t i = 0; i + 1 < m.points.size(); ++i) {
      CHECK(m.points[i].x < m.points[i + 1].x);
      CHECK(m.points[i].y < m.points[i + 1].y);
      CHECK(slope_is_pow2(m.points[i + 1].x - m.points[i].x,
                          m.points[i + 1].y - m.points[i].y, nullptr));
    }
    if (!m.points.empty()) {
      CHECK(m.points.front().y - m.points.front().x ==
            Dyadic::from_int(m.k_minus));
      CHECK(m.points.back().y - m.points.back().x ==
            Dyadic::from_int(m.k_plus));
    }
  }
}

TEST_CASE("defining relations map to equal homeomorphisms") {
  auto gen_word = [](int i) {
    return i <= 1 ? GroupWord{i == 0 ? Letter::X0 : Letter::X1}
                  : expand_higher_generator(i);
  };
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      GroupWord conj = inverse_word(gen_word(i));
      GroupWord xj = gen_word(j), xi = gen_word(i);
      conj.insert(conj.end(), xj.begin(), xj.end());
      conj.insert(conj.end(), xi.begin(), xi.end());
      CHECK(pl_equal(to_plmap(from_word(gen_word(j + 1))),
                     to_plmap(from_word(conj))));
    }
  }
}

TEST_CASE("normalization is idempotent and drops removable points") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    PLMap m = to_plmap(random_element(rng, 12));
    PLMap again = normalize(m);
    CHECK(pl_equal(m, again));
  }
  // A handmade map with a removable midpoint.
  PLMap padded;
  padded.points = {{Dyadic::from_int(0), Dyadic::from_int(0)},
                   {Dyadic::from_int(1), Dyadic(1, 1)},
                   {Dyadic::from_int(2), Dyadic::from_int(1)}};
  padded.k_minus = 0;
  padded.k_plus = -1;
  CHECK(normalize(padded).points.size() == 2);

  PLMap translation;
  translation.points = {{Dyadic::from_int(0), Dyadic::from_int(2)},
                        {Dyadic::from_int(1), Dyadic::from_int(3)}};
  translation.k_minus = 2;
  translation.k_plus = 2;
  CHECK(normalize(translation).points.empty());

  PLMap bad;
  bad.points = {{Dyadic::from_int(0), Dyadic::from_int(0)},
                {Dyadic::from_int(3), Dyadic::from_int(1)}};
  bad.k_minus = 0;
  bad.k_plus = -2;
  CHECK_THROWS_AS(normalize(bad), StructuralError);
}
