#include "charpoly/expansions.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "charpoly/error.hpp"
#include "charpoly/lattice.hpp"

namespace charpoly {

namespace {

struct StirlingMemo {
  std::mutex lock;
  std::map<std::tuple<unsigned, unsigned, unsigned>, Integer> values;
};

StirlingMemo& memo() {
  static StirlingMemo m;
  return m;
}

// Classify by the block holding the last element: it has size i and its
// other i - 1 elements come from the remaining n - 1.
Integer stirling_locked(StirlingMemo& m, unsigned k, unsigned n, unsigned j) {
  if (n == 0) return j == 0 ? 1 : 0;
  if (j == 0 || j > n) return 0;
  const auto key = std::make_tuple(k, n, j);
  if (auto it = m.values.find(key); it != m.values.end()) return it->second;
  Integer total = 0;
  for (unsigned i = 1; i <= std::min(k, n); ++i)
    total += binomial(Integer(n - 1), i - 1) * stirling_locked(m, k, n - i, j - 1);
  m.values.emplace(key, total);
  return total;
}

}  // namespace

Integer stirling_bounded(unsigned k, unsigned n, unsigned j) {
  if (k == 0) return n == 0 && j == 0 ? 1 : 0;
  auto& m = memo();
  std::lock_guard guard(m.lock);
  return stirling_locked(m, k, n, j);
}

IntPolynomial keq_charpoly_expansion(unsigned n, unsigned k) {
  if (k < 2 || k > n)
    throw Error(ErrorKind::bad_params, "need 2 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned j = 0; j <= n; ++j) coeffs[j] = stirling_bounded(k - 1, n, j);
  return *to_integer(from_basis(coeffs, FactorialBasis::falling));
}

bool check_divisibility(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw Error(ErrorKind::bad_params, "divisor must be nonzero");
  return divmod(to_rational(p), to_rational(d)).second.is_zero();
}

IntPolynomial closed_form_A(std::size_t n) { return falling_factorial(n); }

IntPolynomial closed_form_B(std::size_t n) { return shifted_double_falling(n); }

IntPolynomial closed_form_D(std::size_t n) {
  if (n == 0) return IntPolynomial::constant(Integer(1));
  return shifted_double_falling(n - 1) * IntPolynomial::linear(Integer(static_cast<unsigned long>(n - 1)));
}

CorollaryWitness corollary_expansion(const Arrangement& a, EmbeddingFamily family) {
  const std::size_t n = a.ambient_dim();
  const bool is_a = family == EmbeddingFamily::type_A;
  if (!embedded_in(a, family_host(family, n)))
    throw Error(ErrorKind::not_embedded,
                "arrangement " + a.name() + " is not embedded in type " + (is_a ? "A" : "B"));

  CorollaryWitness w;
  w.family = family;
  w.chi = char_poly(a);
  const FactorialBasis basis = is_a ? FactorialBasis::falling : FactorialBasis::shifted_double_falling;
  const auto rational = to_basis(w.chi, basis);
  w.coeffs.assign(n + 1, Integer(0));
  for (std::size_t j = 0; j < rational.size(); ++j) {
    if (rational[j].get_den() != 1)
      throw Error(ErrorKind::negative_coefficient, "coefficient " + std::to_string(j) + " is not an integer");
    w.coeffs[j] = rational[j].get_num();
  }
  // For type B the constant term is outside the asserted range.
  w.first_index = is_a ? 0 : 1;
  for (std::size_t j = w.first_index; j <= n; ++j) {
    if (w.coeffs[j] < 0)
      throw Error(ErrorKind::negative_coefficient,
                  "coefficient " + std::to_string(j) + " = " + w.coeffs[j].get_str() + " for " + a.name());
    if (w.coeffs[j] == 0) w.largest_zero = j;
  }
  for (std::size_t j = w.first_index; w.largest_zero && j <= *w.largest_zero; ++j)
    if (w.coeffs[j] != 0) w.zeros_form_prefix = false;

  if (w.largest_zero) {
    w.divisor = basis_element(basis, *w.largest_zero + 1);
    if (*w.largest_zero + 1 > n || !check_divisibility(w.chi, w.divisor))
      throw Error(ErrorKind::verification_failure,
                  "basis element " + std::to_string(*w.largest_zero + 1) + " does not divide chi of " + a.name());
  } else {
    w.divisor = IntPolynomial::constant(Integer(1));
  }
  return w;
}

}  // namespace charpoly
