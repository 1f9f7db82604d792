#include "test_support.hpp"

#include "charpoly/expansions.hpp"
#include "charpoly/io.hpp"
#include "charpoly/lattice.hpp"
#include "oracles.hpp"

using namespace charpoly;
using testing::poly;

TEST_CASE("empty arrangement") {
  const auto p = build_poset(build_custom(2, {}));
  CHECK(p.size() == 1);
  CHECK(p.mobius() == std::vector<Integer>{1});
  CHECK(char_poly(p) == poly({0, 0, 1}));
}

TEST_CASE("B2 poset") {
  const auto p = build_poset(build_type_B(2));
  REQUIRE(p.size() == 6);
  CHECK(p.element(0) == Subspace::full(2));
  CHECK(p.element(p.top()).dim() == 0);
  CHECK(p.atoms().size() == 4);
  CHECK(p.mobius()[0] == 1);
  for (auto i : p.atoms()) CHECK(p.mobius()[i] == -1);
  CHECK(p.mobius()[p.top()] == 3);
  CHECK(char_poly(p) == poly({3, -4, 1}));
  // covers: 0 -> 4 atoms -> origin
  CHECK(p.covers().size() == 8);
}

TEST_CASE("A3 poset is the partition lattice of a 3-set") {
  const auto p = build_poset(build_type_A(3));
  CHECK(p.size() == 5);
  CHECK(p.element(p.top()).dim() == 1);
  CHECK(p.mobius()[p.top()] == 2);
}

TEST_CASE("order and index lookups") {
  const auto p = build_poset(build_type_B(3));
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p.leq(0, i));
    CHECK(p.leq(i, p.top()));
    CHECK(p.index_of(p.element(i)) == i);
  }
  CHECK_FALSE(p.index_of(canonicalize({3, {row({1, 2, 3})}})).has_value());
}

TEST_CASE("closed forms") {
  for (std::size_t n = 2; n <= 5; ++n) {
    CHECK(char_poly(build_type_A(n)) == closed_form_A(n));
    CHECK(char_poly(build_type_B(n)) == closed_form_B(n));
    CHECK(char_poly(build_type_D(n)) == closed_form_D(n));
  }
  CHECK(char_poly(build_type_D(3)) == poly({-1, 1}) * poly({-2, 1}) * poly({-3, 1}));
}

TEST_CASE("worklist closure equals the all-pairs closure") {
  std::vector<Arrangement> cases{build_type_A(3), build_type_B(3), build_type_D(3), build_k_equal(3, 3),
                                 build_Dnk(3, 3), build_Bnkh(3, 3, 2), build_Bnkh(3, 2, 2),
                                 build_custom(3, {{row({1, 2, 0})}, {row({0, 1, 1}), row({1, 0, 1})}, {row({3, 0, -1})}})};
  for (const auto& a : cases) {
    const auto p = build_poset(a);
    CHECK(p.elements() == oracle::all_pairs_closure(a));
  }
}

TEST_CASE("Mobius recurrence on every constructed poset (property)") {
  std::mt19937 rng(testing::kSeed + 20);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<std::vector<IntVector>> systems;
    for (int s = 0; s < 2 + trial % 4; ++s) {
      std::vector<IntVector> sys;
      for (int r = 0; r < 1 + s % 2; ++r) {
        IntVector v(n);
        do {
          for (auto& x : v) x = entry(rng);
        } while (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; }));
        sys.push_back(v);
      }
      systems.push_back(sys);
    }
    const auto a = build_custom(n, systems);
    const auto p = build_poset(a);
    REQUIRE(mobius_recurrence_holds(p));
    REQUIRE(p.elements() == oracle::all_pairs_closure(a));
    // the whole space contributes the leading term t^n
    REQUIRE(char_poly(p).degree() == static_cast<int>(n));
  }
}

TEST_CASE("poset JSON") {
  const auto j = poset_to_json(build_poset(build_type_B(2)));
  CHECK(j["ambient_dim"] == 2);
  CHECK(j["elements"].size() == 6);
  CHECK(j["elements"][5]["mobius"] == "3");
  CHECK(j["covers"].size() == 8);
}
