#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace charpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial in `t`; coeffs()[i] multiplies t^i.
///
/// The coefficient vector never carries a zero at the top, so the zero
/// polynomial is the empty vector and degree() == -1 for it.
template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

  static Polynomial monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  /// t - root
  static Polynomial linear(const Scalar& root) {
    return Polynomial(std::vector<Scalar>{Scalar(-root), Scalar(1)});
  }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const Scalar& leading() const { return coeffs_.back(); }

  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

  /// Horner evaluation, exact.
  Scalar operator()(const Scalar& u) const {
    Scalar acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return std::equal(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
                      [](const Scalar& x, const Scalar& y) { return x == y; });
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

/// nullopt when some coefficient is not an integer.
std::optional<IntPolynomial> to_integer(const RatPolynomial& p);

Rational evaluate(const RatPolynomial& p, const Integer& u);

/// Quotient and remainder over Q. Throws bad_params for a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// Highest degree first with explicit signs, e.g. "t^2 - 4t + 3".
std::string to_string(const IntPolynomial& p, const std::string& var = "t");
std::string to_string(const RatPolynomial& p, const std::string& var = "t");

/// Unique polynomial of degree < points.size() through the given nodes
/// (Lagrange form, exact). Nodes must be distinct.
RatPolynomial interpolate(const std::vector<std::pair<Integer, Rational>>& points);

}  // namespace charpoly
