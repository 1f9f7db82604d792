#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charpoly/arith.hpp"
#include "charpoly/counting.hpp"
#include "charpoly/report.hpp"

namespace charpoly {

using RatVector = std::vector<Rational>;

/// Explicit coordinates of a (possibly reducible) root system.
struct RootData {
  std::size_t ambient_dim = 0;
  std::vector<RatVector> simple_roots;
  std::vector<RatVector> roots;

  std::size_t rank() const noexcept { return simple_roots.size(); }
};

/// Orthogonal direct sum; coordinates of `b` follow those of `a`.
RootData direct_sum(const RootData& a, const RootData& b);

enum class WeylFamily { A, B, C, D, E, F, G };

/// An irreducible crystallographic root system in its standard coordinate
/// model, together with the constants attached to its highest root.
///
/// Construction recomputes the highest-root coefficients from the explicit
/// roots and refuses to build if they disagree with the tabulated ones.
class RootSystem {
 public:
  WeylFamily family() const noexcept { return family_; }
  std::size_t rank() const noexcept { return data_.rank(); }
  std::string label() const;

  const RootData& data() const noexcept { return data_; }
  /// c_i(lambda) for every root, in the order of data().roots.
  const std::vector<std::vector<Integer>>& root_coeffs() const noexcept { return root_coeffs_; }
  /// c_i of the highest root, in simple-root order.
  const std::vector<unsigned>& highest_coeffs() const noexcept { return highest_; }
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }
  const Integer& weyl_order() const noexcept { return weyl_order_; }
  /// |W| / (n! c_1 ... c_n)
  const Integer& index_f() const noexcept { return index_f_; }
  /// lcm(1, c_1, ..., c_n)
  unsigned quasi_period() const noexcept { return period_; }

  bool coprime_to_coeffs(std::uint64_t t) const;

 private:
  friend RootSystem root_system(std::string_view type_label, std::size_t n);

  WeylFamily family_ = WeylFamily::A;
  RootData data_;
  std::vector<std::vector<Integer>> root_coeffs_;
  std::vector<unsigned> highest_;
  std::vector<unsigned> exponents_;
  Integer weyl_order_;
  Integer index_f_;
  unsigned period_ = 1;
};

/// Accepts "A".."D" with n, or a full label such as "B3", "E7", "F4", "G2".
/// Throws bad_type for an unknown type or invalid rank.
RootSystem root_system(std::string_view type_label, std::size_t n = 0);

/// z/(1-z) * prod_i z^{c_i}/(1-z^{c_i})
RationalGF gamma_gf(const RootSystem& r);

/// Number of positive integer vectors y with sum_i c_i y_i < t, as a
/// quasi-polynomial of period lcm(c_i).
QuasiPolynomial ehrhart_psi(const RootSystem& r);

/// prod_i (t - e_i) over the exponents.
IntPolynomial known_charpoly(const RootSystem& r);

/// For each t <= t_max prime to every c_i: n! (prod c_i) psi(t) against
/// known_charpoly(t), plus agreement of the quasi-polynomial with the series
/// at every t. Requires t_max >= m (n + 2).
VerificationReport weyl_checks(const RootSystem& r, std::uint64_t t_max);

/// weyl_checks, throwing verification_failure at the first mismatch.
VerificationReport verify_thm_weyl(const RootSystem& r, std::uint64_t t_max);

/// 2^{n-1} n! psi_{B_n}(t) == chi(D_n, t - 1) for even t.
bool coincidence_Dn(std::size_t n, std::uint64_t t_even);

/// The two sides compared by coincidence_Dn, in that order.
std::pair<Integer, Integer> coincidence_sides(std::size_t n, std::uint64_t t_even);

struct AlcoveCount {
  std::uint64_t t = 0;
  Integer count;
};

/// Coweight-lattice points x with (alpha, x) < t for every root and
/// (alpha, x) != 0 for every root, by direct enumeration. Rank <= 3.
AlcoveCount alcove_count(const RootSystem& r, std::uint64_t t);

/// Same enumeration for arbitrary root data (e.g. reducible systems).
Integer count_alcove_points(const RootData& data, std::uint64_t t,
                            std::uint64_t point_limit = kDefaultPointLimit);

}  // namespace charpoly
