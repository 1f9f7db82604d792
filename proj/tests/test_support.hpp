#pragma once

#include <doctest.h>

#include <random>

#include "charpoly/error.hpp"
#include "charpoly/polynomial.hpp"

namespace testing {

inline constexpr std::uint32_t kSeed = 20240611;

/// Runs `fn` and reports whether it threw a charpoly::Error of `kind`.
template <typename Fn>
bool throws_kind(Fn&& fn, charpoly::ErrorKind kind) {
  try {
    fn();
  } catch (const charpoly::Error& e) {
    return e.kind() == kind;
  }
  return false;
}

inline charpoly::IntPolynomial poly(std::initializer_list<long> low_first) {
  std::vector<charpoly::Integer> c;
  for (long x : low_first) c.emplace_back(x);
  return charpoly::IntPolynomial(std::move(c));
}

inline charpoly::IntPolynomial random_poly(std::mt19937& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<charpoly::Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return charpoly::IntPolynomial(std::move(c));
}

}  // namespace testing
