#include <doctest.h>

#include "oracles.hpp"
#include "qfree/certificates.hpp"

using namespace qfree;
using oracle::symbols;

namespace {

  Alphabet const ab("ab");

  StandardFormEquation sf(bool orientable, int genus, std::vector<std::string> ws,
                          std::optional<std::string> d) {
    StandardFormEquation e;
    e.alphabet   = ab;
    e.orientable = orientable;
    e.genus      = genus;
    for (auto const& w : ws) {
      e.coefficients.push_back(CyclicWord::parse(w, &ab));
    }
    if (d) {
      e.d = CyclicWord::parse(*d, &ab);
    }
    e.validate();
    return e;
  }

  // z^-1 (ab) z (BA) = 1 on a sphere: two discs glued along p, q.
  Certificate sphere_cert() {
    Certificate c;
    c.variables  = 2;
    c.images     = {{"p", Word::parse("a")}, {"q", Word::parse("b")}};
    c.boundaries = {symbols("pq"), symbols("QP")};
    return c;
  }

}  // namespace

TEST_CASE("bounds") {
  auto e = sf(true, 0, {"ab"}, "BA");
  CHECK(reduced_euler_characteristic(e) == 2);
  CHECK(literal_edge_bound(e) == 0);
  CHECK(edge_bound(e) == 1);
  auto t = sf(true, 1, {}, "abAB");
  CHECK(edge_bound(t) == 3);
}

TEST_CASE("a valid certificate") {
  auto e = sf(true, 0, {"ab"}, "BA");
  auto c = sphere_cert();
  auto v = verify(e, c);
  CHECK_FALSE(v.accepted);  // two labels exceed the bound of one edge
  CHECK(v.failed == Condition::bound_n);
  auto k = consolidated_certificate(c.boundaries, c.images);
  CHECK(k.variables == 1);
  auto w = verify(e, k);
  CHECK(w.accepted);
  CHECK(w.failures.empty());
  REQUIRE(w.surfaces);
  CHECK(w.surfaces->components[0].euler_characteristic == 2);
  CHECK(certificate_size(k) > 0);
}

TEST_CASE("each condition can fail on its own") {
  auto e = sf(true, 0, {"ab"}, "BA");
  auto k = consolidated_certificate(sphere_cert().boundaries, sphere_cert().images);

  auto wrong_label = k;
  wrong_label.images["p1"] = Word::parse("aa");  // reading no longer matches
  CHECK(verify(e, wrong_label).failed == Condition::iv);

  auto same_sign = k;
  same_sign.boundaries[1] = symbols("p");  // p1 p1 in both discs
  same_sign.boundaries[1][0].name = "p1";
  same_sign.boundaries[0][0].sign = 1;
  auto sv = verify(e, same_sign);
  CHECK(std::find(sv.failures.begin(), sv.failures.end(), Condition::v) != sv.failures.end());

  auto missing = k;
  missing.boundaries.pop_back();
  CHECK(verify(e, missing).failed == Condition::ii);

  auto torus = sf(true, 1, {}, "abAB");
  Certificate on_sphere;  // glue d along itself with a sphere pattern
  on_sphere.variables  = 2;
  on_sphere.images     = {{"p", Word::parse("ab")}, {"q", Word::parse("AB")}};
  on_sphere.boundaries = {{{"p", 1}, {"q", 1}}};
  // pq cannot close up: labels occur once.
  CHECK(verify(torus, on_sphere).failed == Condition::ii);
}

TEST_CASE("verdicts match the oracle under mutation") {
  auto e = sf(true, 0, {"ab"}, "BA");
  auto base = consolidated_certificate(sphere_cert().boundaries, sphere_cert().images);
  std::mt19937 rng(9);
  for (int t = 0; t < 200; ++t) {
    auto c = base;
    switch (rng() % 4) {
      case 0: c.images.begin()->second = Word::parse(rng() % 2 ? "abba" : "B"); break;
      case 1: c.boundaries[rng() % 2][0].sign *= -1; break;
      case 2: c.variables += 1 + rng() % 3; break;
      case 3: c.boundaries[0].push_back(c.boundaries[0][0]); break;
    }
    auto v     = verify(e, c);
    auto fails = oracle::failing_conditions(e, c);
    CHECK(v.accepted == fails.empty());
    CHECK(std::set<Condition>(v.failures.begin(), v.failures.end()) == fails);
  }
}

TEST_CASE("direct search finds short solutions") {
  auto eq = parse_equation("x a x^-1 b a^-1 b^-1 = 1", ab);
  auto r  = direct_search(eq, 2);
  REQUIRE(r.decision == Decision::sat);
  CHECK(check_solution(eq, *r.assignment));
  auto none = direct_search(parse_equation("x x a = 1", ab), 2);
  CHECK(none.decision == Decision::unknown);
}
