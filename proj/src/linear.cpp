#include "charpoly/linear.hpp"

#include <functional>
#include <utility>

#include "charpoly/error.hpp"

namespace charpoly {

namespace {

bool is_zero_row(const IntVector& r) {
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

// Divide by the content; sign is left alone.
void make_primitive(IntVector& r) {
  Integer g = 0;
  for (const auto& x : r) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void require_same_ambient(const Subspace& u, std::size_t n) {
  if (u.ambient_dim() != n)
    throw Error(ErrorKind::dimension_mismatch,
                "ambient dimensions " + std::to_string(u.ambient_dim()) + " and " + std::to_string(n));
}

std::uint64_t mod_p(const Integer& x, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

IntVector row(std::initializer_list<long> entries) {
  IntVector r;
  r.reserve(entries.size());
  for (long x : entries) r.emplace_back(x);
  return r;
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<IntVector> canon, std::vector<std::size_t> pivots)
    : ambient_dim_(ambient_dim), canon_(std::move(canon)), pivots_(std::move(pivots)) {
  std::size_t h = std::hash<std::size_t>{}(ambient_dim_);
  for (const auto& r : canon_)
    for (const auto& x : r) {
      const std::size_t v = mpz_fits_slong_p(x.get_mpz_t()) ? static_cast<std::size_t>(x.get_si())
                                                             : mpz_size(x.get_mpz_t()) * 0x9e3779b9u;
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
  hash_ = h;
}

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(ambient_dim, {}, {}); }

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_ || a.hash_ != b.hash_ || a.canon_.size() != b.canon_.size())
    return false;
  for (std::size_t i = 0; i < a.canon_.size(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim_; ++j)
      if (a.canon_[i][j] != b.canon_[i][j]) return false;
  return true;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
  if (a.dim() != b.dim()) return a.dim() > b.dim();
  for (std::size_t i = 0; i < a.canon_.size(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim_; ++j) {
      const int c = cmp(a.canon_[i][j], b.canon_[i][j]);
      if (c != 0) return c < 0;
    }
  return false;
}

Subspace canonicalize(const ConstraintMatrix& raw) {
  const std::size_t n = raw.ambient_dim;
  if (n == 0) throw Error(ErrorKind::bad_params, "ambient dimension must be at least 1");
  std::vector<IntVector> rows = raw.rows;
  for (const auto& r : rows) {
    if (r.size() != n)
      throw Error(ErrorKind::dimension_mismatch,
                  "constraint row of length " + std::to_string(r.size()) + " in R^" + std::to_string(n));
    if (is_zero_row(r)) throw Error(ErrorKind::zero_row, "constraint row is identically zero");
  }

  // Fraction-free Gauss-Jordan: every row is kept primitive, and each pivot
  // column is cleared above and below its pivot.
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  Integer g, a, b;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t sel = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (sel == rows.size() || mpz_cmpabs(rows[i][col].get_mpz_t(), rows[sel][col].get_mpz_t()) < 0) sel = i;
    }
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    IntVector& piv = rows[rank];
    make_primitive(piv);
    if (piv[col] < 0)
      for (auto& x : piv) x = -x;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      mpz_gcd(g.get_mpz_t(), piv[col].get_mpz_t(), rows[i][col].get_mpz_t());
      a = piv[col] / g;  // > 0, so earlier pivots keep their sign
      b = rows[i][col] / g;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = a * rows[i][j] - b * piv[j];
      make_primitive(rows[i]);
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return Subspace(n, std::move(rows), std::move(pivots));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(v, u.ambient_dim());
  if (v.codim() == 0) return u;
  if (u.codim() == 0) return v;
  ConstraintMatrix m{u.ambient_dim(), u.canon()};
  m.rows.insert(m.rows.end(), v.canon().begin(), v.canon().end());
  return canonicalize(m);
}

bool contains(const Subspace& u, const Subspace& v) {
  require_same_ambient(v, u.ambient_dim());
  if (u.codim() > v.codim()) return false;
  if (u.codim() == v.codim()) return u == v;
  // Each row of u must lie in the row space of v. Since v is reduced, one
  // elimination step per pivot of v decides it.
  const std::size_t n = u.ambient_dim();
  Integer g, a, b;
  for (const auto& ur : u.canon()) {
    IntVector r = ur;
    for (std::size_t k = 0; k < v.codim(); ++k) {
      const std::size_t col = v.pivots()[k];
      if (r[col] == 0) continue;
      const IntVector& vr = v.canon()[k];
      mpz_gcd(g.get_mpz_t(), vr[col].get_mpz_t(), r[col].get_mpz_t());
      a = vr[col] / g;
      b = r[col] / g;
      for (std::size_t j = 0; j < n; ++j) r[j] = a * r[j] - b * vr[j];
    }
    if (!is_zero_row(r)) return false;
  }
  return true;
}

bool point_in(const Subspace& u, std::span<const Integer> v) {
  require_same_ambient(u, v.size());
  Integer acc;
  for (const auto& r : u.canon()) {
    acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += r[j] * v[j];
    if (acc != 0) return false;
  }
  return true;
}

bool point_in(const Subspace& u, std::span<const std::int64_t> v) {
  IntVector big;
  big.reserve(v.size());
  for (auto x : v) big.emplace_back(static_cast<long>(x));
  return point_in(u, std::span<const Integer>(big));
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t rank_mod_p(std::span<const IntVector> rows, std::size_t ambient_dim, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::not_prime, std::to_string(p) + " is not prime");
  const std::size_t n = ambient_dim;
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != n)
      throw Error(ErrorKind::dimension_mismatch,
                  "row of length " + std::to_string(r.size()) + " in R^" + std::to_string(n));
    std::vector<std::uint64_t> rr(n);
    for (std::size_t j = 0; j < n; ++j) rr[j] = mod_p(r[j], p);
    m.push_back(std::move(rr));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    const std::uint64_t inv = powmod(m[rank][col], p - 2, p);
    for (auto& x : m[rank]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const std::uint64_t f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) m[i][j] = (m[i][j] + p - mulmod(f, m[rank][j], p)) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t reduce_mod_p(const Subspace& u, std::uint64_t p) { return rank_mod_p(u.canon(), u.ambient_dim(), p); }

bool point_in_mod_p(const Subspace& u, std::span<const std::int64_t> v, std::uint64_t p) {
  require_same_ambient(u, v.size());
  for (const auto& r : u.canon()) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      const auto x = static_cast<std::uint64_t>(((v[j] % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                                static_cast<std::int64_t>(p));
      acc = (acc + mulmod(mod_p(r[j], p), x, p)) % p;
    }
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace charpoly
