#include <doctest.h>

#include "oracles.hpp"
#include "qfree/reduction.hpp"

using namespace qfree;

TEST_CASE("exact packing") {
  BinPackingInstance yes{{2, 2, 1, 1}, 3, 2, true};
  auto               p = solve_exact(yes);
  REQUIRE(p);
  CHECK(is_valid_partition(yes, *p));
  BinPackingInstance no{{2, 2, 2}, 3, 2, true};
  CHECK_FALSE(solve_exact(no));
  for (auto const& inst : oracle::all_instances(3, 3, 3, 2)) {
    CHECK(solve_exact(inst).has_value() == oracle::brute_force_packable(inst));
  }
}

TEST_CASE("padding to an exact instance") {
  BinPackingInstance loose{{2, 1}, 3, 2, false};
  auto               conv = to_exact(loose);
  CHECK(conv.feasible);
  CHECK(conv.padding == 3);
  CHECK(conv.instance.exact);
  CHECK(solve(loose).has_value());
  BinPackingInstance over{{3, 3, 3}, 4, 2, false};
  CHECK_FALSE(to_exact(over).feasible);
  CHECK_FALSE(solve(over));
}

TEST_CASE("equation shape") {
  BinPackingInstance inst{{2, 1}, 3, 1, true};
  auto               sf = to_equation(inst);
  CHECK(sf.orientable);
  CHECK(sf.genus == 0);
  CHECK(sf.m() == 3);
  CHECK(sf.coefficient(0) == CyclicWord::parse("ABBabb"));
  CHECK(sf.coefficient(1) == CyclicWord::parse("ABab"));
  CHECK(*sf.d == CyclicWord::parse("BBBAbbba"));
}

TEST_CASE("ribbons stack and peel back") {
  std::vector<Ribbon> rows{build_ribbon({2, 1}, {1, 2}), build_ribbon({3}, {3})};
  auto                td = stack_ribbons(rows);
  td.validate();
  auto letters = td.boundary_word();
  CHECK(letters.size() == 2 * 2 + 2 * 3);
  CHECK(find_circular_tracks(a_pattern(td)).empty());
  CHECK(peel_decomposition(td) == rows);
}

TEST_CASE("circular tracks are detected") {
  // a 3-cycle plus a path.
  auto found = find_circular_tracks(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  REQUIRE(found.size() == 1);
  CHECK(found[0].circular);
  CHECK(found[0].vertices.size() == 3);
}

TEST_CASE("packings and certificates correspond") {
  for (auto const& inst : oracle::all_instances(3, 3, 3, 2)) {
    auto part = solve_exact(inst);
    if (!part) {
      continue;
    }
    CAPTURE(inst.items.size());
    auto cert = packing_to_certificate(inst, *part);
    auto v    = verify(to_equation(inst), cert);
    CHECK(v.accepted);
    auto back = certificate_to_packing(inst, cert);
    CHECK(is_valid_partition(inst, back));
  }
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS(BinPackingInstance({{0}, 1, 1, true}).validate());
  CHECK_THROWS(BinPackingInstance({{1}, 0, 1, true}).validate());
  BinPackingInstance inst{{1, 1}, 1, 2, true};
  CHECK_FALSE(is_valid_partition(inst, Partition{{{1, 2}}}));
  CHECK_FALSE(is_valid_partition(inst, Partition{{{1}, {1}}}));
  CHECK(is_valid_partition(inst, Partition{{{2}, {1}}}));
}
