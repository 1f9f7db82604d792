#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "charpoly/arrangement.hpp"

namespace charpoly {

/// Enumerations larger than this many candidate points are refused.
inline constexpr std::uint64_t kDefaultPointLimit = 1'000'000'000;

/// The cube [-s, s]^n, which has t = 2s + 1 points on a side.
struct CubeSpec {
  std::uint64_t s = 0;
  std::uint64_t t() const noexcept { return 2 * s + 1; }
};

/// Integer points of [-s, s]^n on no member of `a`, by exhaustive enumeration.
Integer count_cube(const Arrangement& a, CubeSpec spec, std::uint64_t point_limit = kDefaultPointLimit);

/// Points of F_p^n on no member of `a`, by exhaustive enumeration.
///
/// Rejects p with prime_too_small when reduction mod p changes the rank of
/// some set of members, which is exactly when the mod-p lattice differs.
Integer count_ffield(const Arrangement& a, std::uint64_t p, std::uint64_t point_limit = kDefaultPointLimit);

/// The cube points off the arrangement, grouped by the smallest flat of the
/// host Weyl arrangement (A_n or B_n) through them. Every flat that appears is
/// contained in no member. Throws not_embedded when `a` is not embedded in
/// the host.
std::vector<std::pair<Subspace, Integer>> decompose_cube(const Arrangement& a, CubeSpec spec,
                                                         EmbeddingFamily family = EmbeddingFamily::type_B,
                                                         std::uint64_t point_limit = kDefaultPointLimit);

/// side^n, or throws scale if it exceeds the limit.
std::uint64_t checked_grid_size(std::uint64_t side, std::size_t n, std::uint64_t point_limit);

}  // namespace charpoly
