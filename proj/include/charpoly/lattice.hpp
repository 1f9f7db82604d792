#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "charpoly/polynomial.hpp"
#include "charpoly/arrangement.hpp"

namespace charpoly {

/// L(A): every intersection of members, ordered by reverse inclusion
/// (X <= Y iff Y is a subset of X), with its Mobius function mu(0^, X).
///
/// Elements are stored in a linear extension: decreasing dimension, ties
/// broken by canonical form. Element 0 is the whole space.
class IntersectionPoset {
 public:
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Subspace>& elements() const noexcept { return elements_; }
  const Subspace& element(std::size_t i) const { return elements_.at(i); }

  /// Indices of the arrangement members.
  const std::vector<std::size_t>& atoms() const noexcept { return atoms_; }
  /// Index of the intersection of all members.
  std::size_t top() const noexcept { return top_; }

  bool leq(std::size_t i, std::size_t j) const { return order_[i * elements_.size() + j] != 0; }
  const std::vector<Integer>& mobius() const noexcept { return mobius_; }

  std::optional<std::size_t> index_of(const Subspace& x) const;

  /// Pairs (i, j) with i < j in the order and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  friend IntersectionPoset build_poset(const Arrangement& a);

  std::size_t ambient_dim_ = 0;
  std::vector<Subspace> elements_;
  std::vector<std::size_t> atoms_;
  std::size_t top_ = 0;
  std::vector<unsigned char> order_;
  std::vector<Integer> mobius_;
};

/// Closure of {R^n} and the members under intersection. The worklist only
/// intersects newly found elements with atoms, which reaches every
/// intersection because each element is a meet of atoms.
IntersectionPoset build_poset(const Arrangement& a);

/// mu(0^, X) indexed like P.elements().
const std::vector<Integer>& mobius(const IntersectionPoset& p);

/// sum over Y <= X of mu(Y) equals [X == 0^] for every X.
bool mobius_recurrence_holds(const IntersectionPoset& p);

IntPolynomial char_poly(const IntersectionPoset& p);
IntPolynomial char_poly(const Arrangement& a);

}  // namespace charpoly
