#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "charpoly/linear.hpp"

namespace charpoly {

/// A finite set of proper linear subspaces of a common R^n.
///
/// Construction canonicalizes, deduplicates, and drops every member that is
/// strictly contained in another member, so no member contains another.
class Arrangement {
 public:
  Arrangement(std::size_t ambient_dim, std::vector<Subspace> members, std::string name = {});

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<Subspace>& members() const noexcept { return members_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool is_hyperplane_arrangement() const;

 private:
  std::size_t ambient_dim_;
  std::vector<Subspace> members_;
  std::string name_;
};

/// Which Weyl hyperplane arrangement an arrangement is embedded in.
enum class EmbeddingFamily { type_A, type_B };

// Named builders in ambient R^n. x_i = x_j for A; adds x_i = -x_j for D;
// adds x_i = 0 for B. Throw bad_rank for n < 2.
Arrangement build_type_A(std::size_t n);
Arrangement build_type_B(std::size_t n);
Arrangement build_type_D(std::size_t n);

/// k-equal arrangement: x_I for every k-subset I. Requires 2 <= k <= n.
Arrangement build_k_equal(std::size_t n, std::size_t k);
/// All signed versions eps_i x_i = ... = eps_l x_l of x_I, |I| = k.
Arrangement build_Dnk(std::size_t n, std::size_t k);
/// build_Dnk(n, k) together with x_J = 0 for every h-subset J.
Arrangement build_Bnkh(std::size_t n, std::size_t k, std::size_t h);

/// Throws not_proper if a system cuts out all of R^n.
Arrangement build_custom(std::size_t n, const std::vector<std::vector<IntVector>>& systems,
                         std::string name = "custom");

/// True iff every member of `a` is an intersection of hyperplanes of `host`.
bool embedded_in(const Arrangement& a, const Arrangement& host);
bool embedded_in_A(const Arrangement& a);
bool embedded_in_B(const Arrangement& a);

/// The Weyl hyperplane arrangement of the family in R^n.
Arrangement family_host(EmbeddingFamily family, std::size_t n);

/// Every k-subset of {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace charpoly
