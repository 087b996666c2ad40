#include <doctest.h>

#include <random>

#include "qfree/equations.hpp"

using namespace qfree;

namespace {

  Alphabet const ab("ab");

  StandardFormEquation standard(std::string const& text) {
    return normalize(parse_equation(text, ab)).standard;
  }

  // Random quadratic body: every variable twice, constants sprinkled in.
  RawQuadraticEquation random_equation(std::mt19937& rng) {
    int const                                vars = 1 + rng() % 3;
    std::vector<std::pair<std::string, int>> body;
    for (int v = 0; v < vars; ++v) {
      for (int t = 0; t < 2; ++t) {
        body.emplace_back("x" + std::to_string(v), rng() % 2 ? 1 : -1);
      }
    }
    for (int c = rng() % 4; c > 0; --c) {
      body.emplace_back(rng() % 2 ? "a" : "b", rng() % 2 ? 1 : -1);
    }
    std::shuffle(body.begin(), body.end(), rng);
    return make_raw_equation(ab, body);
  }

}  // namespace

TEST_CASE("parser") {
  auto eq = parse_equation("x a x^-1 b = 1", ab);
  CHECK(eq.body.size() == 4);
  CHECK(eq.body[0] == Token::var("x"));
  CHECK(eq.body[2] == Token::var("x", -1));
  CHECK_THROWS_AS(parse_equation("x a = 1", ab), Error);      // x once
  CHECK_THROWS_AS(parse_equation("x x x = 1", ab), Error);    // x thrice
  CHECK_THROWS_AS(parse_equation("x c x = 1", ab), Error);    // c not in alphabet
  CHECK_THROWS_AS(parse_equation("x ^ x = 1", ab), Error);
  CHECK_NOTHROW(parse_equation("x x A b = 1", ab));
}

TEST_CASE("classification") {
  struct Row {
    char const* text;
    bool        orientable;
    int         genus;
    int         m;
    int         chi_bar;
  };
  Row const rows[] = {
      {"x y x^-1 y^-1 = 1", true, 1, 0, 0},
      {"x y x^-1 y^-1 a b a^-1 b^-1 = 1", true, 1, 1, 0},
      {"x x = 1", false, 1, 0, 1},
      {"x x y y a = 1", false, 2, 1, 0},
      {"x a x^-1 b = 1", true, 0, 2, 2},
      {"x a x^-1 y b y^-1 a b = 1", true, 0, 3, 2},
      {"x y x y^-1 = 1", false, 2, 0, 0},
      {"x y z x^-1 y^-1 z^-1 = 1", true, 1, 0, 0},
      {"a b = 1", true, 0, 1, 2},
  };
  for (auto const& r : rows) {
    CAPTURE(r.text);
    auto sf = standard(r.text);
    CHECK(sf.orientable == r.orientable);
    CHECK(sf.genus == r.genus);
    CHECK(sf.m() == r.m);
    CHECK(reduced_euler_characteristic(sf) == r.chi_bar);
  }
}

TEST_CASE("standard form printing") {
  CHECK(standard("x a x^-1 b = 1").str() == "z1^-1 a z1 b = 1");
  auto sf = standard("x x y y = 1");
  CHECK(sf.body().size() == 4);
}

TEST_CASE("maps transport solutions both ways") {
  std::mt19937 rng(3);
  auto const   words = reduced_words_up_to(ab, 2);
  int          checked = 0;
  for (int t = 0; t < 400; ++t) {
    auto raw = random_equation(rng);
    auto nf  = normalize(raw);
    nf.standard.validate();
    // Any raw assignment maps to one with the same value up to conjugacy,
    // so raw solutions become standard ones and back.
    Assignment a;
    for (auto const& tok : raw.body) {
      if (tok.variable) {
        a[tok.name] = words[rng() % words.size()];
      }
    }
    Word lhs = evaluate(raw.body, a);
    Word rhs = evaluate(nf.standard.body(), nf.forward.transport(a));
    CHECK(cyclic_reduce(lhs).core.size() == cyclic_reduce(rhs).core.size());
    CHECK(CyclicWord(cyclic_reduce(lhs).core) == CyclicWord(cyclic_reduce(rhs).core));
    Assignment back = nf.back.transport(nf.forward.transport(a));
    Word       again = evaluate(raw.body, back);
    CHECK(CyclicWord(cyclic_reduce(again).core) == CyclicWord(cyclic_reduce(lhs).core));
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("check_solution") {
  auto eq = parse_equation("x a x^-1 b = 1", ab);
  CHECK_FALSE(check_solution(eq, {{"x", Word::parse("b")}}));
  auto eq2 = parse_equation("x a x^-1 A = 1", ab);
  CHECK(check_solution(eq2, {{"x", Word{}}}));
  CHECK(check_solution(eq2, {{"x", Word::parse("aa")}}));
}
