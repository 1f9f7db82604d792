#include "test_support.hpp"

#include <map>

#include "charpoly/counting.hpp"
#include "charpoly/expansions.hpp"
#include "charpoly/lattice.hpp"
#include "oracles.hpp"

using namespace charpoly;
using testing::throws_kind;

TEST_SUITE("cube") {
  TEST_CASE("worked examples") {
    CHECK(count_cube(build_type_B(2), {2}) == 8);
    CHECK(count_cube(build_type_A(2), {1}) == 6);
    for (std::uint64_t s = 0; s <= 3; ++s)
      for (std::size_t n = 1; n <= 3; ++n) {
        Integer side(static_cast<unsigned long>(2 * s + 1)), expect = 1;
        for (std::size_t i = 0; i < n; ++i) expect *= side;
        CHECK(count_cube(build_custom(n, {}), {s}) == expect);
      }
  }

  TEST_CASE("agrees with the characteristic polynomial at t = 2s + 1") {
    for (const auto& a : {build_type_B(3), build_type_D(3), build_Dnk(4, 3), build_Bnkh(4, 3, 2)}) {
      const auto chi = char_poly(a);
      for (std::uint64_t s = 0; s <= 3; ++s)
        CHECK(count_cube(a, {s}) == chi(Integer(static_cast<unsigned long>(2 * s + 1))));
    }
  }

  TEST_CASE("agrees with a row-by-row scan of the raw systems") {
    const std::vector<std::vector<std::vector<long>>> raw{{{1, -1, 0}, {0, 1, -1}}, {{1, 1, 0}}, {{0, 0, 2}}};
    std::vector<std::vector<IntVector>> systems;
    for (const auto& sys : raw) {
      std::vector<IntVector> rows;
      for (const auto& r : sys) rows.push_back(IntVector(r.begin(), r.end()));
      systems.push_back(rows);
    }
    const auto a = build_custom(3, systems);
    for (long s = 0; s <= 4; ++s)
      CHECK(count_cube(a, {static_cast<std::uint64_t>(s)}) == oracle::cube_count_raw(3, raw, s));
  }

  TEST_CASE("adding members never increases the count (property)") {
    std::mt19937 rng(testing::kSeed + 30);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + trial % 2;
      const auto host = build_type_B(n);
      std::vector<std::vector<IntVector>> systems;
      Integer previous = -1;
      std::vector<Subspace> pool = host.members();
      std::shuffle(pool.begin(), pool.end(), rng);
      for (const auto& h : pool) {
        systems.push_back(h.canon());
        const auto count = count_cube(build_custom(n, systems), {2});
        if (previous >= 0) REQUIRE(count <= previous);
        previous = count;
      }
      REQUIRE(previous == char_poly(host)(Integer(5)));
    }
  }

  TEST_CASE("guardrail") {
    CHECK(throws_kind([] { count_cube(build_type_A(6), {3}, 1000); }, ErrorKind::scale));
    CHECK(checked_grid_size(7, 3, 1000) == 343);
    CHECK(throws_kind([] { checked_grid_size(10, 10, kDefaultPointLimit); }, ErrorKind::scale));
  }
}

TEST_SUITE("finite field") {
  TEST_CASE("examples") {
    CHECK(count_ffield(build_type_A(2), 5) == 20);
    CHECK(count_ffield(build_type_B(2), 5) == 8);
    CHECK(count_ffield(build_custom(2, {}), 3) == 9);
  }

  TEST_CASE("agrees with the characteristic polynomial") {
    for (const auto& a : {build_type_B(3), build_k_equal(4, 3), build_Dnk(3, 2), build_Bnkh(3, 3, 1)}) {
      const auto chi = char_poly(a);
      for (std::uint64_t p : {5, 7, 11, 13}) CHECK(count_ffield(a, p) == chi(Integer(static_cast<unsigned long>(p))));
    }
  }

  TEST_CASE("bad reductions are refused") {
    // B_2 has the flats x = y and x = -y, which coincide mod 2
    CHECK(throws_kind([] { count_ffield(build_type_B(2), 2); }, ErrorKind::prime_too_small));
    CHECK(throws_kind([] { count_ffield(build_type_B(2), 6); }, ErrorKind::not_prime));
    CHECK(throws_kind([] { count_ffield(build_type_B(2), 4294967311ULL); }, ErrorKind::scale));
  }
}

TEST_SUITE("cube decomposition") {
  TEST_CASE("A2 in the plane") {
    const auto parts = decompose_cube(build_type_A(2), {1}, EmbeddingFamily::type_A);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == Subspace::full(2));
    CHECK(parts[0].second == 6);
  }

  TEST_CASE("the same points split further under B2") {
    const auto parts = decompose_cube(build_type_A(2), {1}, EmbeddingFamily::type_B);
    Integer total = 0;
    for (const auto& [x, c] : parts) total += c;
    CHECK(total == 6);
    CHECK(parts.size() == 3);  // the two axes and x = -y; no point is off every B_2 line
  }

  TEST_CASE("class sizes are the Weyl counts of each flat (property)") {
    // a flat of dimension d of B_n is a copy of R^d cut by B_d, so it holds
    // <t-1>_d points of the cube off smaller flats; for A_n it holds (t)_d
    std::vector<std::pair<Arrangement, EmbeddingFamily>> cases{
        {build_k_equal(4, 3), EmbeddingFamily::type_A}, {build_k_equal(3, 2), EmbeddingFamily::type_A},
        {build_Dnk(3, 2), EmbeddingFamily::type_B},     {build_Bnkh(3, 2, 2), EmbeddingFamily::type_B},
        {build_k_equal(3, 3), EmbeddingFamily::type_B}, {build_Dnk(4, 4), EmbeddingFamily::type_B}};
    for (const auto& [a, fam] : cases)
      for (std::uint64_t s = 0; s <= 3; ++s) {
        const auto parts = decompose_cube(a, {s}, fam);
        const Integer t(static_cast<unsigned long>(2 * s + 1));
        Integer total = 0;
        for (const auto& [x, c] : parts) {
          total += c;
          const auto d = static_cast<unsigned>(x.dim());
          const Integer expect =
              fam == EmbeddingFamily::type_A ? oracle::falling_value(t, d) : oracle::double_falling_value(t, d);
          REQUIRE(c == expect);
          for (const auto& m : a.members()) REQUIRE_FALSE(contains(m, x));
        }
        REQUIRE(total == count_cube(a, {s}));
      }
  }

  TEST_CASE("refuses arrangements outside the host") {
    CHECK(throws_kind([] { decompose_cube(build_type_B(2), {1}, EmbeddingFamily::type_A); }, ErrorKind::not_embedded));
    CHECK(throws_kind([] { decompose_cube(build_custom(2, {{row({1, 2})}}), {1}); }, ErrorKind::not_embedded));
  }
}
