#include "test_support.hpp"

#include "charpoly/arrangement.hpp"
#include "charpoly/io.hpp"

using namespace charpoly;
using testing::throws_kind;

namespace {
Subspace sub(std::size_t n, std::vector<IntVector> rows) { return canonicalize(ConstraintMatrix{n, std::move(rows)}); }
}  // namespace

TEST_CASE("type A") {
  CHECK(build_type_A(2).size() == 1);
  CHECK(build_type_A(4).size() == 6);
  const auto a3 = build_type_A(3);
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    IntVector r(3, Integer(0));
    r[i] = 1;
    r[j] = -1;
    CHECK(std::find(a3.members().begin(), a3.members().end(), sub(3, {r})) != a3.members().end());
  }
  CHECK(a3.is_hyperplane_arrangement());
}

TEST_CASE("types B and D") {
  const auto b2 = build_type_B(2);
  CHECK(b2.size() == 4);
  for (auto r : {row({1, 0}), row({0, 1}), row({1, -1}), row({1, 1})})
    CHECK(std::find(b2.members().begin(), b2.members().end(), sub(2, {r})) != b2.members().end());
  CHECK(build_type_D(2).size() == 2);
  CHECK(build_type_B(3).size() == 9);
  CHECK(build_type_D(4).size() == 12);
}

TEST_CASE("rank below two is rejected") {
  CHECK(throws_kind([] { build_type_A(1); }, ErrorKind::bad_rank));
  CHECK(throws_kind([] { build_type_B(0); }, ErrorKind::bad_rank));
  CHECK(throws_kind([] { build_type_D(1); }, ErrorKind::bad_rank));
}

TEST_CASE("k-equal and signed variants") {
  const auto a33 = build_k_equal(3, 3);
  REQUIRE(a33.size() == 1);
  CHECK(a33.members()[0].dim() == 1);

  const auto a43 = build_k_equal(4, 3);
  CHECK(a43.size() == 4);
  for (const auto& m : a43.members()) CHECK(m.dim() == 2);

  const auto d22 = build_Dnk(2, 2);
  CHECK(d22.size() == 2);
  CHECK(std::is_permutation(d22.members().begin(), d22.members().end(), build_type_D(2).members().begin()));

  // each k-subset carries 2^{k-1} sign classes
  CHECK(build_Dnk(4, 3).size() == 4 * 4);
  CHECK(build_Dnk(3, 2).size() == build_type_D(3).size());

  CHECK(throws_kind([] { build_k_equal(3, 4); }, ErrorKind::bad_params));
  CHECK(throws_kind([] { build_k_equal(3, 1); }, ErrorKind::bad_params));
}

TEST_CASE("B_{n,k,h} members") {
  const auto b = build_Bnkh(3, 2, 1);
  // D_3 together with the coordinate hyperplanes is B_3
  CHECK(b.size() == 9);
  CHECK(std::is_permutation(b.members().begin(), b.members().end(), build_type_B(3).members().begin()));

  // h > k is accepted; here every x_J = 0 lies inside some x_i = x_j and is pruned
  const auto wide = build_Bnkh(3, 2, 3);
  REQUIRE(wide.size() == build_type_D(3).size());
  CHECK(std::is_permutation(wide.members().begin(), wide.members().end(), build_type_D(3).members().begin()));

  CHECK(throws_kind([] { build_Bnkh(3, 2, 0); }, ErrorKind::bad_params));
  CHECK(throws_kind([] { build_Bnkh(3, 4, 1); }, ErrorKind::bad_params));
  CHECK(throws_kind([] { build_Bnkh(3, 2, 4); }, ErrorKind::bad_params));
}

TEST_CASE("custom arrangements") {
  const auto a = build_custom(2, {{row({1, -1})}});
  CHECK(a.size() == 1);
  CHECK(a.members()[0] == build_type_A(2).members()[0]);

  // the origin lies on the line x_1 = 0 and is dropped
  const auto pruned = build_custom(2, {{row({1, 0}), row({0, 1})}, {row({1, 0})}});
  REQUIRE(pruned.size() == 1);
  CHECK(pruned.members()[0] == sub(2, {row({1, 0})}));

  CHECK(build_custom(2, {}).empty());

  const auto dup = build_custom(2, {{row({1, 1})}, {row({-2, -2})}});
  CHECK(dup.size() == 1);

  CHECK(throws_kind([] { build_custom(2, {{}}); }, ErrorKind::not_proper));
  CHECK(throws_kind([] { build_custom(2, {{row({1, 0, 0})}}); }, ErrorKind::dimension_mismatch));
}

TEST_CASE("embedding in the Weyl arrangements") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 2; k <= n; ++k) {
      CHECK(embedded_in_B(build_k_equal(n, k)));
      CHECK(embedded_in_A(build_k_equal(n, k)));
      CHECK(embedded_in_B(build_Dnk(n, k)));
    }
  CHECK(embedded_in_B(build_type_B(3)));
  CHECK_FALSE(embedded_in_A(build_type_B(3)));
  CHECK_FALSE(embedded_in_B(build_custom(2, {{row({1, -2})}})));
  CHECK(embedded_in_B(build_custom(1, {{row({1})}})));
  CHECK(embedded_in_A(build_custom(3, {})));
}

TEST_CASE("subsets are lexicographic") {
  const auto s = subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == std::vector<std::size_t>{0, 1});
  CHECK(s.back() == std::vector<std::size_t>{2, 3});
  CHECK(subsets(3, 0).size() == 1);
}

TEST_CASE("JSON arrangements") {
  using nlohmann::json;
  const auto named = arrangement_from_json(json::parse(R"({"ambient_dim": 4, "named": "Ank", "params": {"k": 3}})"));
  CHECK(named.size() == 4);

  const auto explicit_rows = arrangement_from_json(
      json::parse(R"({"ambient_dim": 2, "subspaces": [[[1, -1]], [["1", "1"]], [[1, 0], [0, 1]]]})"));
  CHECK(explicit_rows.size() == 2);

  const auto empty = arrangement_from_json(json::parse(R"({"ambient_dim": 2, "subspaces": []})"));
  CHECK(empty.empty());

  const auto back = arrangement_from_json(arrangement_to_json(build_type_B(3)));
  CHECK(std::is_permutation(back.members().begin(), back.members().end(), build_type_B(3).members().begin()));

  CHECK(throws_kind([] { arrangement_from_json(json::parse(R"({"subspaces": []})")); }, ErrorKind::bad_params));
  CHECK(throws_kind([] { arrangement_from_json(json::parse(R"({"ambient_dim": 2, "named": "Q"})")); },
                    ErrorKind::bad_params));
  CHECK(throws_kind([] { arrangement_from_json(json::parse(R"({"ambient_dim": 2, "subspaces": [[["x", 1]]]})")); },
                    ErrorKind::bad_params));
}
