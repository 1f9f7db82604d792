#include "charpoly/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>

#include "charpoly/error.hpp"
#include "charpoly/expansions.hpp"

namespace charpoly {

namespace {

using RatMatrix = std::vector<RatVector>;

Rational dot(const RatVector& a, const RatVector& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVector unit(std::size_t n, std::size_t i, long scale = 1) {
  RatVector v(n, Rational(0));
  v[i] = scale;
  return v;
}

RatVector combo(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> terms) {
  RatVector v(n, Rational(0));
  for (auto [i, c] : terms) v[i] += c;
  return v;
}

RatVector negate(RatVector v) {
  for (auto& x : v) x = -x;
  return v;
}

RatMatrix inverse(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, RatVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) throw Error(ErrorKind::bad_type, "simple roots are linearly dependent");
    std::swap(a[col], a[sel]);
    std::swap(inv[col], inv[sel]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RatMatrix gram(const std::vector<RatVector>& basis) {
  RatMatrix g(basis.size(), RatVector(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = dot(basis[i], basis[j]);
  return g;
}

// --- coordinate models --------------------------------------------------

// +-e_i +- e_j for i < j, optionally +-scale*e_i.
std::vector<RatVector> classical_roots(std::size_t n, long short_scale) {
  std::vector<RatVector> roots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (long a : {1L, -1L})
        for (long b : {1L, -1L}) roots.push_back(combo(n, {{i, a}, {j, b}}));
  if (short_scale != 0)
    for (std::size_t i = 0; i < n; ++i) {
      roots.push_back(unit(n, i, short_scale));
      roots.push_back(unit(n, i, -short_scale));
    }
  return roots;
}

RootData model_A(std::size_t n) {
  RootData d{n + 1, {}, {}};
  for (std::size_t i = 0; i < n; ++i) d.simple_roots.push_back(combo(n + 1, {{i, 1}, {i + 1, -1}}));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (i != j) d.roots.push_back(combo(n + 1, {{i, 1}, {j, -1}}));
  return d;
}

RootData model_BCD(WeylFamily family, std::size_t n) {
  RootData d{n, {}, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) d.simple_roots.push_back(combo(n, {{i, 1}, {i + 1, -1}}));
  switch (family) {
    case WeylFamily::B:
      d.simple_roots.push_back(unit(n, n - 1));
      d.roots = classical_roots(n, 1);
      break;
    case WeylFamily::C:
      d.simple_roots.push_back(unit(n, n - 1, 2));
      d.roots = classical_roots(n, 2);
      break;
    default:
      d.simple_roots.push_back(combo(n, {{n - 2, 1}, {n - 1, 1}}));
      d.roots = classical_roots(n, 0);
      break;
  }
  return d;
}

// E8 in R^8: +-e_i +- e_j, and (1/2) sum +-e_i with an even number of minus
// signs. E7 and E6 are the roots lying in the subspaces x7 = -x8 and
// x6 = x7 = -x8, with the first 7 resp. 6 simple roots.
RootData model_E(std::size_t n) {
  RootData d{8, {}, {}};
  const Rational half(1, 2);
  std::vector<RatVector> all = classical_roots(8, 0);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    RatVector v(8);
    for (std::size_t i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? Rational(-half) : half;
    all.push_back(v);
  }
  RatVector a1(8, Rational(-half));
  a1[0] = half;
  a1[7] = half;
  std::vector<RatVector> simple{a1, combo(8, {{0, 1}, {1, 1}}), combo(8, {{1, 1}, {0, -1}}),
                                combo(8, {{2, 1}, {1, -1}}), combo(8, {{3, 1}, {2, -1}}),
                                combo(8, {{4, 1}, {3, -1}}), combo(8, {{5, 1}, {4, -1}}),
                                combo(8, {{6, 1}, {5, -1}})};
  simple.resize(n);
  d.simple_roots = simple;
  for (auto& v : all) {
    const bool in7 = v[6] + v[7] == 0;
    const bool in6 = in7 && v[5] == v[6];
    if (n == 8 || (n == 7 && in7) || (n == 6 && in6)) d.roots.push_back(v);
  }
  return d;
}

RootData model_F4() {
  RootData d{4, {}, classical_roots(4, 1)};
  const Rational half(1, 2);
  for (unsigned mask = 0; mask < 16; ++mask) {
    RatVector v(4);
    for (std::size_t i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? Rational(-half) : half;
    d.roots.push_back(v);
  }
  d.simple_roots = {combo(4, {{1, 1}, {2, -1}}), combo(4, {{2, 1}, {3, -1}}), unit(4, 3),
                    RatVector{half, -half, -half, -half}};
  return d;
}

// G2 in the plane x1 + x2 + x3 = 0.
RootData model_G2() {
  RootData d{3, {}, {}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      d.roots.push_back(combo(3, {{i, 1}, {j, -1}}));
    }
  for (std::size_t i = 0; i < 3; ++i) {
    RatVector v(3, Rational(-1));
    v[i] = 2;
    d.roots.push_back(v);
    d.roots.push_back(negate(v));
  }
  d.simple_roots = {combo(3, {{0, 1}, {1, -1}}), combo(3, {{0, -2}, {1, 1}, {2, 1}})};
  return d;
}

// --- tabulated data --------------------------------------------------------

struct TableRow {
  std::vector<unsigned> coeff_multiset;  // sorted
  std::vector<unsigned> exponents;
};

std::vector<unsigned> repeat(unsigned value, std::size_t times) { return std::vector<unsigned>(times, value); }

std::vector<unsigned> concat(std::vector<unsigned> a, const std::vector<unsigned>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

TableRow table_row(WeylFamily family, std::size_t n) {
  std::vector<unsigned> odd;
  for (std::size_t i = 0; i < n; ++i) odd.push_back(static_cast<unsigned>(2 * i + 1));
  switch (family) {
    case WeylFamily::A: {
      std::vector<unsigned> e(n);
      std::iota(e.begin(), e.end(), 1u);
      return {repeat(1, n), e};
    }
    case WeylFamily::B:
    case WeylFamily::C:
      return {concat({1}, repeat(2, n - 1)), odd};
    case WeylFamily::D: {
      std::vector<unsigned> e(odd.begin(), odd.end() - 1);
      e.push_back(static_cast<unsigned>(n - 1));
      std::sort(e.begin(), e.end());
      return {concat(repeat(1, 3), repeat(2, n - 3)), e};
    }
    case WeylFamily::E:
      if (n == 6) return {{1, 1, 2, 2, 2, 3}, {1, 4, 5, 7, 8, 11}};
      if (n == 7) return {{1, 2, 2, 2, 3, 3, 4}, {1, 5, 7, 9, 11, 13, 17}};
      return {{2, 2, 3, 3, 4, 4, 5, 6}, {1, 7, 11, 13, 17, 19, 23, 29}};
    case WeylFamily::F:
      return {{2, 2, 3, 4}, {1, 5, 7, 11}};
    case WeylFamily::G:
      return {{2, 3}, {1, 5}};
  }
  return {};
}

[[noreturn]] void bad_type(std::string_view label, std::size_t n) {
  throw Error(ErrorKind::bad_type, "no root system " + std::string(label) + (n ? " of rank " + std::to_string(n) : ""));
}

Integer factorial(std::size_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

void require_root_system(const RootData& d, const std::string& label) {
  std::set<RatVector> lookup(d.roots.begin(), d.roots.end());
  if (lookup.size() != d.roots.size()) throw Error(ErrorKind::bad_type, label + ": duplicate roots");
  for (const auto& s : d.simple_roots) {
    if (!lookup.count(s)) throw Error(ErrorKind::bad_type, label + ": a simple root is not a root");
    const Rational ss = dot(s, s);
    for (const auto& r : d.roots) {
      const Rational k = 2 * dot(r, s) / ss;
      if (k.get_den() != 1) throw Error(ErrorKind::bad_type, label + ": non-integral Cartan number");
      RatVector img = r;
      for (std::size_t i = 0; i < img.size(); ++i) img[i] -= k * s[i];
      if (!lookup.count(img)) throw Error(ErrorKind::bad_type, label + ": roots not closed under reflections");
    }
  }
}

}  // namespace

RootData direct_sum(const RootData& a, const RootData& b) {
  RootData out{a.ambient_dim + b.ambient_dim, {}, {}};
  auto lift = [&](const RatVector& v, std::size_t shift) {
    RatVector w(out.ambient_dim, Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) w[shift + i] = v[i];
    return w;
  };
  for (const auto& s : a.simple_roots) out.simple_roots.push_back(lift(s, 0));
  for (const auto& s : b.simple_roots) out.simple_roots.push_back(lift(s, a.ambient_dim));
  for (const auto& r : a.roots) out.roots.push_back(lift(r, 0));
  for (const auto& r : b.roots) out.roots.push_back(lift(r, a.ambient_dim));
  return out;
}

std::string RootSystem::label() const {
  static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return std::string(1, letters[static_cast<int>(family_)]) + std::to_string(rank());
}

bool RootSystem::coprime_to_coeffs(std::uint64_t t) const {
  return std::all_of(highest_.begin(), highest_.end(), [t](unsigned c) { return std::gcd<std::uint64_t>(t, c) == 1; });
}

RootSystem root_system(std::string_view type_label, std::size_t n) {
  if (type_label.empty()) bad_type(type_label, n);
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(type_label.front())));
  std::string_view digits = type_label.substr(1);
  if (!digits.empty()) {
    std::size_t parsed = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) bad_type(type_label, n);
      parsed = parsed * 10 + static_cast<std::size_t>(c - '0');
    }
    if (n != 0 && n != parsed) bad_type(type_label, n);
    n = parsed;
  }

  RootSystem r;
  switch (letter) {
    case 'A':
      if (n < 1) bad_type(type_label, n);
      r.family_ = WeylFamily::A;
      r.data_ = model_A(n);
      break;
    case 'B':
    case 'C':
      if (n < 2) bad_type(type_label, n);
      r.family_ = letter == 'B' ? WeylFamily::B : WeylFamily::C;
      r.data_ = model_BCD(r.family_, n);
      break;
    case 'D':
      if (n < 3) bad_type(type_label, n);
      r.family_ = WeylFamily::D;
      r.data_ = model_BCD(WeylFamily::D, n);
      break;
    case 'E':
      if (n < 6 || n > 8) bad_type(type_label, n);
      r.family_ = WeylFamily::E;
      r.data_ = model_E(n);
      break;
    case 'F':
      if (n != 4) bad_type(type_label, n);
      r.family_ = WeylFamily::F;
      r.data_ = model_F4();
      break;
    case 'G':
      if (n != 2) bad_type(type_label, n);
      r.family_ = WeylFamily::G;
      r.data_ = model_G2();
      break;
    default:
      bad_type(type_label, n);
  }

  const std::string label = r.label();
  require_root_system(r.data_, label);

  // c_i(lambda) = sum_j (G^{-1})_{ij} (sigma_j, lambda)
  const RatMatrix ginv = inverse(gram(r.data_.simple_roots));
  std::size_t highest = 0;
  Integer best_height = -1;
  for (std::size_t k = 0; k < r.data_.roots.size(); ++k) {
    const auto& lambda = r.data_.roots[k];
    RatVector b(n);
    for (std::size_t j = 0; j < n; ++j) b[j] = dot(r.data_.simple_roots[j], lambda);
    std::vector<Integer> c(n);
    bool nonneg = true, nonpos = true;
    Integer height = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Rational ci = 0;
      for (std::size_t j = 0; j < n; ++j) ci += ginv[i][j] * b[j];
      if (ci.get_den() != 1) throw Error(ErrorKind::bad_type, label + ": non-integral simple-root coordinate");
      c[i] = ci.get_num();
      nonneg = nonneg && c[i] >= 0;
      nonpos = nonpos && c[i] <= 0;
      height += c[i];
    }
    if (!nonneg && !nonpos) throw Error(ErrorKind::bad_type, label + ": root with mixed-sign coordinates");
    if (height > best_height) {
      best_height = height;
      highest = k;
    }
    r.root_coeffs_.push_back(std::move(c));
  }
  const auto& top = r.root_coeffs_[highest];
  for (const auto& c : r.root_coeffs_)
    for (std::size_t i = 0; i < n; ++i)
      if (c[i] > top[i]) throw Error(ErrorKind::bad_type, label + ": no root dominates all others");
  for (const auto& c : top) r.highest_.push_back(static_cast<unsigned>(c.get_ui()));

  const TableRow row = table_row(r.family_, n);
  auto sorted = r.highest_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != row.coeff_multiset) throw Error(ErrorKind::bad_type, label + ": highest root disagrees with table");
  r.exponents_ = row.exponents;

  unsigned exponent_sum = 0;
  r.weyl_order_ = 1;
  for (unsigned e : r.exponents_) {
    r.weyl_order_ *= e + 1;
    exponent_sum += e;
  }
  if (r.data_.roots.size() != 2 * exponent_sum)
    throw Error(ErrorKind::bad_type, label + ": root count disagrees with exponents");

  Integer denom = factorial(n);
  for (unsigned c : r.highest_) {
    denom *= c;
    r.period_ = std::lcm(r.period_, c);
  }
  if (r.weyl_order_ % denom != 0) throw Error(ErrorKind::bad_type, label + ": index of connection not integral");
  r.index_f_ = r.weyl_order_ / denom;
  return r;
}

RationalGF gamma_gf(const RootSystem& r) {
  RationalGF g;
  unsigned shift = 1;
  g.divide_by(1);
  for (unsigned c : r.highest_coeffs()) {
    shift += c;
    g.divide_by(c);
  }
  g.numerator = IntPolynomial::monomial(Integer(1), shift);
  return g;
}

QuasiPolynomial ehrhart_psi(const RootSystem& r) {
  const std::size_t m = r.quasi_period();
  const std::size_t n = r.rank();
  const std::size_t last = 1 + m * (n + 2);
  const auto series = gf_series(gamma_gf(r), last);
  std::span<const Integer> values(series.data() + 1, last);
  QuasiPolynomial psi = quasi_interpolate(values, m, n, 1);
  if (psi.degree() != static_cast<int>(n))
    throw Error(ErrorKind::verification_failure, r.label() + ": Ehrhart quasi-polynomial has wrong degree");
  return psi;
}

IntPolynomial known_charpoly(const RootSystem& r) {
  IntPolynomial p = IntPolynomial::constant(Integer(1));
  for (unsigned e : r.exponents()) p *= IntPolynomial::linear(Integer(e));
  return p;
}

VerificationReport weyl_checks(const RootSystem& r, std::uint64_t t_max) {
  const std::size_t n = r.rank();
  const std::uint64_t needed = static_cast<std::uint64_t>(r.quasi_period()) * (n + 2);
  if (t_max < needed)
    throw Error(ErrorKind::bad_params, "t_max must be at least " + std::to_string(needed) + " for " + r.label());

  const auto series = gf_series(gamma_gf(r), t_max);
  const QuasiPolynomial psi = ehrhart_psi(r);
  const IntPolynomial chi = known_charpoly(r);
  Integer scale = factorial(n);
  for (unsigned c : r.highest_coeffs()) scale *= c;

  VerificationReport report;
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    const Integer tz(static_cast<unsigned long>(t));
    const Rational quasi = psi(tz);
    report.add(r.label() + " psi(" + std::to_string(t) + ")",
               quasi.get_den() == 1 ? Integer(quasi.get_num()) : Integer(-1), series[t]);
    if (!r.coprime_to_coeffs(t)) continue;
    report.add(r.label() + " t=" + std::to_string(t), scale * series[t], chi(tz));
  }
  return report;
}

VerificationReport verify_thm_weyl(const RootSystem& r, std::uint64_t t_max) {
  VerificationReport report = weyl_checks(r, t_max);
  if (const Check* bad = report.first_failure())
    throw Error(ErrorKind::verification_failure,
                bad->instance + ": " + bad->lhs + " != " + bad->rhs);
  return report;
}

std::pair<Integer, Integer> coincidence_sides(std::size_t n, std::uint64_t t_even) {
  if (n < 2) throw Error(ErrorKind::bad_params, "coincidence needs n >= 2");
  if (t_even == 0 || t_even % 2 != 0)
    throw Error(ErrorKind::bad_params, "coincidence needs a positive even t, got " + std::to_string(t_even));
  const RootSystem b = root_system("B", n);
  const auto series = gf_series(gamma_gf(b), t_even);
  Integer lhs = factorial(n) * series[t_even];
  lhs <<= static_cast<mp_bitcnt_t>(n - 1);
  Integer rhs = closed_form_D(n)(Integer(static_cast<unsigned long>(t_even - 1)));
  return {std::move(lhs), std::move(rhs)};
}

bool coincidence_Dn(std::size_t n, std::uint64_t t_even) {
  const auto [lhs, rhs] = coincidence_sides(n, t_even);
  return lhs == rhs;
}

Integer count_alcove_points(const RootData& data, std::uint64_t t, std::uint64_t point_limit) {
  if (t == 0) throw Error(ErrorKind::bad_params, "t must be positive");
  const std::size_t n = data.rank();
  // Simple roots are roots, so |(sigma_i, x)| < t bounds the search box.
  checked_grid_size(2 * t - 1, n, point_limit);

  // Fundamental coweights: (sigma_j, omega_i) = delta_ij, inside the span of
  // the simple roots.
  const RatMatrix ginv = inverse(gram(data.simple_roots));
  std::vector<RatVector> coweights(n, RatVector(data.ambient_dim, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < data.ambient_dim; ++a) coweights[i][a] += ginv[i][k] * data.simple_roots[k][a];

  const Rational bound(static_cast<unsigned long>(t));
  const auto lim = static_cast<long>(t) - 1;
  std::vector<long> xs(n, -lim);
  Integer count = 0;
  RatVector x(data.ambient_dim);
  while (true) {
    std::fill(x.begin(), x.end(), Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      if (xs[i] != 0)
        for (std::size_t a = 0; a < data.ambient_dim; ++a) x[a] += xs[i] * coweights[i][a];
    bool inside = true;
    for (const auto& alpha : data.roots) {
      const Rational v = dot(alpha, x);
      if (v == 0 || v >= bound) {
        inside = false;
        break;
      }
    }
    if (inside) ++count;

    std::size_t i = n;
    while (i > 0 && xs[i - 1] == lim) xs[--i] = -lim;
    if (i == 0) break;
    ++xs[i - 1];
  }
  return count;
}

AlcoveCount alcove_count(const RootSystem& r, std::uint64_t t) {
  if (r.rank() > 3) throw Error(ErrorKind::rank_too_large, r.label() + ": alcove enumeration limited to rank 3");
  return AlcoveCount{t, count_alcove_points(r.data(), t)};
}

}  // namespace charpoly
