#include <doctest.h>

#include "oracles.hpp"
#include "qfree/surfaces.hpp"

using namespace qfree;
using oracle::symbols;

namespace {

  GluedComplex cx(std::vector<std::string> const& discs) {
    std::vector<std::vector<SignedSymbol>> b;
    for (auto const& d : discs) {
      b.push_back(symbols(d));
    }
    return GluedComplex::build(b);
  }

}  // namespace

TEST_CASE("corner angles") {
  CHECK(corner_angle(1) == Rational(-1));
  CHECK(corner_angle(2) == Rational(0));
  CHECK(corner_angle(3) == Rational(1, 3));
  CHECK(corner_angle(4) == Rational(1, 2));
}

TEST_CASE("closed surfaces from one polygon") {
  struct Row {
    char const* word;
    int         chi;
    bool        orientable;
  };
  Row const rows[] = {
      {"pP", 2, true},     {"pqPQ", 0, true}, {"pp", 1, false},
      {"ppqq", 0, false},  {"pqpQ", 0, false}, {"pqPQrsRS", -2, true},
      {"ppqqrr", -1, false},
  };
  for (auto const& r : rows) {
    CAPTURE(r.word);
    auto c = cx({r.word});
    REQUIRE(c.components().size() == 1);
    CHECK(euler_characteristic_gb(c, 0) == r.chi);
    CHECK(euler_characteristic_vef(c, 0) == r.chi);
    CHECK(orientability(c, 0).orientable == r.orientable);
  }
}

TEST_CASE("several discs and components") {
  auto c = cx({"pq", "QP", "rr"});
  REQUIRE(c.components().size() == 2);
  auto s = summarize(c);
  CHECK(s.components[0].euler_characteristic == 2);
  CHECK(s.components[0].orientable);
  CHECK(s.components[1].euler_characteristic == 1);
  CHECK_FALSE(s.components[1].orientable);
  CHECK(c.component_of(2) == 1);
  auto bad = orientability(c, 1);
  CHECK(bad.violating_label == std::optional<std::string>("r"));
}

TEST_CASE("malformed gluings are rejected") {
  CHECK_THROWS(cx({"p"}));
  CHECK_THROWS(cx({"ppp"}));
}

TEST_CASE("invariants agree with the oracles on random complexes") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 500; ++t) {
    auto b  = oracle::random_complex(rng, 4, 6);
    auto c  = GluedComplex::build(b);
    auto ps = oracle::vef(b);
    REQUIRE(ps.size() == c.components().size());
    for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
      CHECK(ps[i].discs == c.components()[i]);
      CHECK(euler_characteristic_gb(c, i) == ps[i].chi);
      CHECK(euler_characteristic_vef(c, i) == ps[i].chi);
      CHECK(orientability(c, i).orientable == oracle::tree_orientable(b, ps[i].discs));
    }
  }
}

TEST_CASE("consolidation merges through degree-two vertices") {
  auto c = cx({"pq", "QP"});
  auto k = consolidate(c);
  CHECK(k.complex.labels().size() == 1);
  auto comp = k.composition.at("p1");  // some rotation of pq
  CHECK((comp == symbols("pq") || comp == symbols("qp")));

  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    auto b  = oracle::random_complex(rng, 3, 5);
    auto c0 = GluedComplex::build(b);
    auto k0 = consolidate(c0);
    auto s0 = summarize(c0);
    auto s1 = summarize(k0.complex);
    REQUIRE(s0.component_count() == s1.component_count());
    for (int i = 0; i < s0.component_count(); ++i) {
      CHECK(s0.components[i].euler_characteristic == s1.components[i].euler_characteristic);
      CHECK(s0.components[i].orientable == s1.components[i].orientable);
    }
    // Expanding every new label recovers the old boundaries up to rotation.
    for (std::size_t d = 0; d < b.size(); ++d) {
      std::vector<SignedSymbol> expanded;
      for (auto const& s : k0.complex.discs()[d].boundary) {
        auto part = k0.composition.at(s.name);
        if (s.sign < 0) {
          std::reverse(part.begin(), part.end());
          for (auto& x : part) {
            x.sign = -x.sign;
          }
        }
        expanded.insert(expanded.end(), part.begin(), part.end());
      }
      REQUIRE(expanded.size() == b[d].size());
      bool found = false;
      for (std::size_t r = 0; r < expanded.size() && !found; ++r) {
        std::rotate(expanded.begin(), expanded.begin() + 1, expanded.end());
        found = expanded == b[d];
      }
      CHECK(found);
    }
  }
}
