#include "charpoly/arith.hpp"

#include <sstream>

#include "charpoly/error.hpp"

namespace charpoly {

// ---------------------------------------------------------------------------
// Polynomial helpers

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

std::optional<IntPolynomial> to_integer(const RatPolynomial& p) {
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) return std::nullopt;
    v.push_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

Rational evaluate(const RatPolynomial& p, const Integer& u) { return p(Rational(u)); }

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::bad_params, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(a.coeffs().size() - b.coeffs().size() + 1, Rational(0));
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational q = rem[i + db] / b.leading();
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeffs()[j];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

namespace {

template <typename Scalar>
std::string format_poly(const Polynomial<Scalar>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Scalar& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    Scalar mag = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      if constexpr (std::is_same_v<Scalar, Rational>) {
        if (mag.get_den() != 1 && i > 0)
          os << '(' << mag.get_str() << ')';
        else
          os << mag.get_str();
      } else {
        os << mag.get_str();
      }
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, const std::string& var) { return format_poly(p, var); }
std::string to_string(const RatPolynomial& p, const std::string& var) { return format_poly(p, var); }

RatPolynomial interpolate(const std::vector<std::pair<Integer, Rational>>& points) {
  RatPolynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatPolynomial basis = RatPolynomial::constant(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      if (points[i].first == points[j].first)
        throw Error(ErrorKind::bad_params, "interpolation nodes must be distinct");
      basis *= RatPolynomial::linear(Rational(points[j].first));
      denom *= Rational(points[i].first - points[j].first);
    }
    result += basis * Rational(points[i].second / denom);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Quasi-polynomials and generating functions

QuasiPolynomial::QuasiPolynomial(std::vector<RatPolynomial> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorKind::bad_params, "quasi-polynomial needs a positive period");
  for (const auto& p : parts_) degree_ = std::max(degree_, p.degree());
}

Rational QuasiPolynomial::operator()(const Integer& u) const {
  Integer r = u % static_cast<unsigned long>(period());
  if (r < 0) r += static_cast<unsigned long>(period());
  return evaluate(parts_[r.get_ui()], u);
}

RationalGF& RationalGF::divide_by(unsigned c, unsigned multiplicity) {
  if (c == 0) throw Error(ErrorKind::bad_params, "denominator factor (1 - z^0) vanishes");
  if (multiplicity > 0) denominator[c] += multiplicity;
  return *this;
}

std::vector<Integer> gf_series(const RationalGF& g, std::size_t n) {
  std::vector<Integer> a(n + 1, Integer(0));
  for (std::size_t i = 0; i < g.numerator.coeffs().size() && i <= n; ++i) a[i] = g.numerator.coeffs()[i];
  // Multiplying by 1/(1 - z^c) is the running sum a[i] += a[i - c].
  for (const auto& [c, mult] : g.denominator) {
    if (c == 0) throw Error(ErrorKind::bad_params, "denominator factor (1 - z^0) vanishes");
    for (unsigned rep = 0; rep < mult; ++rep)
      for (std::size_t i = c; i <= n; ++i) a[i] += a[i - c];
  }
  return a;
}

QuasiPolynomial quasi_interpolate(std::span<const Integer> values, std::size_t m, std::size_t degree,
                                  std::int64_t offset) {
  if (m == 0) throw Error(ErrorKind::bad_params, "quasi-period must be positive");
  const auto period = static_cast<std::int64_t>(m);
  std::vector<std::vector<std::pair<Integer, Rational>>> classes(m);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::int64_t u = offset + static_cast<std::int64_t>(i);
    const auto r = static_cast<std::size_t>(((u % period) + period) % period);
    classes[r].emplace_back(Integer(static_cast<long>(u)), Rational(values[i]));
  }
  std::vector<RatPolynomial> parts;
  parts.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& pts = classes[r];
    if (pts.size() < degree + 1)
      throw Error(ErrorKind::bad_params, "residue class " + std::to_string(r) + " has only " +
                                             std::to_string(pts.size()) + " values, need " +
                                             std::to_string(degree + 1));
    std::vector<std::pair<Integer, Rational>> nodes(pts.begin(), pts.begin() + static_cast<long>(degree + 1));
    RatPolynomial part = interpolate(nodes);
    for (std::size_t k = degree + 1; k < pts.size(); ++k) {
      if (evaluate(part, pts[k].first) != pts[k].second)
        throw Error(ErrorKind::surplus_mismatch, "value at " + pts[k].first.get_str() +
                                                     " disagrees with the class " + std::to_string(r) +
                                                     " interpolant");
    }
    parts.push_back(std::move(part));
  }
  return QuasiPolynomial(std::move(parts));
}

// ---------------------------------------------------------------------------
// Factorial bases

IntPolynomial falling_factorial(std::size_t j) {
  IntPolynomial p = IntPolynomial::constant(Integer(1));
  for (std::size_t i = 0; i < j; ++i) p *= IntPolynomial::linear(Integer(static_cast<unsigned long>(i)));
  return p;
}

IntPolynomial shifted_double_falling(std::size_t j) {
  IntPolynomial p = IntPolynomial::constant(Integer(1));
  for (std::size_t i = 0; i < j; ++i) p *= IntPolynomial::linear(Integer(static_cast<unsigned long>(2 * i + 1)));
  return p;
}

IntPolynomial basis_element(FactorialBasis basis, std::size_t j) {
  return basis == FactorialBasis::falling ? falling_factorial(j) : shifted_double_falling(j);
}

std::vector<Rational> to_basis(const RatPolynomial& p, FactorialBasis basis) {
  if (p.is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
  RatPolynomial rest = p;
  // Basis elements are monic of matching degree, so peel from the top.
  while (!rest.is_zero()) {
    const auto d = static_cast<std::size_t>(rest.degree());
    const Rational c = rest.leading();
    out[d] = c;
    rest -= to_rational(basis_element(basis, d)) * c;
  }
  return out;
}

std::vector<Rational> to_basis(const IntPolynomial& p, FactorialBasis basis) {
  return to_basis(to_rational(p), basis);
}

RatPolynomial from_basis(std::span<const Rational> coeffs, FactorialBasis basis) {
  RatPolynomial out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    out += to_rational(basis_element(basis, j)) * coeffs[j];
  }
  return out;
}

Integer binomial(const Integer& n, unsigned long k) {
  if (n < 0) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

}  // namespace charpoly
