#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "charpoly/polynomial.hpp"

namespace charpoly {

using IntVector = std::vector<Integer>;

/// Rows are linear functionals on Q^n that must vanish on the subspace.
struct ConstraintMatrix {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> rows;
};

/// Make a constraint row from small integers, e.g. row({1, -1, 0}).
IntVector row(std::initializer_list<long> entries);

/// A linear subspace of Q^n held in canonical constraint form: reduced row
/// echelon over Q with every row scaled to a primitive integer vector whose
/// pivot is positive. Two subspaces are equal iff their canonical rows are.
class Subspace {
 public:
  /// The whole ambient space (no constraints).
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return ambient_dim_ - canon_.size(); }
  std::size_t codim() const noexcept { return canon_.size(); }
  const std::vector<IntVector>& canon() const noexcept { return canon_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  friend bool operator==(const Subspace& a, const Subspace& b);
  /// Total order: larger dimension first, then lexicographic on canon rows.
  friend bool operator<(const Subspace& a, const Subspace& b);

  std::size_t hash() const noexcept { return hash_; }

 private:
  friend Subspace canonicalize(const ConstraintMatrix& raw);
  Subspace(std::size_t ambient_dim, std::vector<IntVector> canon, std::vector<std::size_t> pivots);

  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> canon_;
  std::vector<std::size_t> pivots_;
  std::size_t hash_ = 0;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept { return s.hash(); }
};

/// Throws zero_row for an all-zero row, dimension_mismatch for a row of the
/// wrong length, bad_params when ambient_dim is 0.
Subspace canonicalize(const ConstraintMatrix& raw);

Subspace intersect(const Subspace& u, const Subspace& v);

/// True iff v is a subset of u.
bool contains(const Subspace& u, const Subspace& v);

bool point_in(const Subspace& u, std::span<const Integer> v);
bool point_in(const Subspace& u, std::span<const std::int64_t> v);

bool is_prime(std::uint64_t p);

/// Rank of the canonical constraint rows over F_p (fresh elimination mod p).
/// Throws not_prime.
std::size_t reduce_mod_p(const Subspace& u, std::uint64_t p);

/// Rank over F_p of arbitrary integer rows of length ambient_dim.
std::size_t rank_mod_p(std::span<const IntVector> rows, std::size_t ambient_dim, std::uint64_t p);

/// Membership of v (entries taken mod p) in the F_p-reduction of u.
bool point_in_mod_p(const Subspace& u, std::span<const std::int64_t> v, std::uint64_t p);

}  // namespace charpoly
