#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "charpoly/polynomial.hpp"

namespace charpoly {

/// A family of polynomials indexed by residue class: the value at u is
/// parts()[u mod period()](u).
class QuasiPolynomial {
 public:
  explicit QuasiPolynomial(std::vector<RatPolynomial> parts);

  std::size_t period() const noexcept { return parts_.size(); }
  int degree() const noexcept { return degree_; }
  const std::vector<RatPolynomial>& parts() const noexcept { return parts_; }
  const RatPolynomial& part(std::size_t residue) const { return parts_.at(residue); }

  Rational operator()(const Integer& u) const;

 private:
  std::vector<RatPolynomial> parts_;
  int degree_ = -1;
};

/// numerator / prod_c (1 - z^c)^mult, never expanded to floating point.
struct RationalGF {
  IntPolynomial numerator;
  std::map<unsigned, unsigned> denominator;  // c -> multiplicity, c >= 1

  RationalGF& divide_by(unsigned c, unsigned multiplicity = 1);
};

/// Coefficients of z^0..z^n of the Maclaurin expansion of g.
std::vector<Integer> gf_series(const RationalGF& g, std::size_t n);

/// Interpolates one polynomial of degree <= `degree` per residue class mod m
/// from values[i] = f(offset + i). Values beyond the first degree+1 in a class
/// are checked against the interpolant (surplus_mismatch on disagreement).
QuasiPolynomial quasi_interpolate(std::span<const Integer> values, std::size_t m, std::size_t degree,
                                  std::int64_t offset);

enum class FactorialBasis {
  falling,                 // (t)_j = t(t-1)...(t-j+1)
  shifted_double_falling,  // <t-1>_j = (t-1)(t-3)...(t-2j+1)
};

IntPolynomial falling_factorial(std::size_t j);
IntPolynomial shifted_double_falling(std::size_t j);
IntPolynomial basis_element(FactorialBasis basis, std::size_t j);

/// Coefficients c_0..c_deg with p = sum c_j basis_j.
std::vector<Rational> to_basis(const RatPolynomial& p, FactorialBasis basis);
std::vector<Rational> to_basis(const IntPolynomial& p, FactorialBasis basis);

RatPolynomial from_basis(std::span<const Rational> coeffs, FactorialBasis basis);

Integer binomial(const Integer& n, unsigned long k);

}  // namespace charpoly
