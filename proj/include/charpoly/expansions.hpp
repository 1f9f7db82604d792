#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "charpoly/arith.hpp"
#include "charpoly/arrangement.hpp"

namespace charpoly {

/// Number of partitions of an n-set into j blocks, each of size at most k.
/// Memoized; safe to call concurrently.
Integer stirling_bounded(unsigned k, unsigned n, unsigned j);

/// sum_j S_{k-1}(n, j) (t)_j, the characteristic polynomial of the k-equal
/// arrangement. Requires 2 <= k <= n.
IntPolynomial keq_charpoly_expansion(unsigned n, unsigned k);

/// Exact division over Q; true iff d divides p. d must be nonzero.
bool check_divisibility(const IntPolynomial& p, const IntPolynomial& d);

// Characteristic polynomials of the Weyl arrangements in ambient R^n.
IntPolynomial closed_form_A(std::size_t n);  // t(t-1)...(t-n+1)
IntPolynomial closed_form_B(std::size_t n);  // (t-1)(t-3)...(t-2n+1)
IntPolynomial closed_form_D(std::size_t n);  // (t-1)(t-3)...(t-2n+3)(t-n+1)

/// Expansion of chi(A, t) in the factorial basis attached to the host family,
/// with the divisibility consequence of its trailing zeros.
struct CorollaryWitness {
  EmbeddingFamily family = EmbeddingFamily::type_A;
  IntPolynomial chi;
  std::vector<Integer> coeffs;  // index j multiplies basis element j, j = 0..n
  std::size_t first_index = 0;  // coefficients from here on are asserted nonnegative
  /// Largest j >= first_index with coeffs[j] == 0; empty when there is none
  /// and the divisibility clause is vacuous.
  std::optional<std::size_t> largest_zero;
  IntPolynomial divisor;  // basis element largest_zero + 1, or 1 when vacuous
  bool zeros_form_prefix = true;
};

/// Throws not_embedded, or negative_coefficient / verification_failure when
/// the expansion is not a nonnegative integer combination or the divisor
/// does not divide.
CorollaryWitness corollary_expansion(const Arrangement& a, EmbeddingFamily family);

}  // namespace charpoly
