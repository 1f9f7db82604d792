#include "charpoly/counting.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "charpoly/error.hpp"
#include "charpoly/lattice.hpp"

namespace charpoly {

namespace {

// Canonical rows narrowed to machine integers for the hot enumeration loops.
// Entries are bounded by 2^31 and coordinates by 2^24, so dot products over
// up to 64 coordinates stay inside int64.
struct NarrowRows {
  std::vector<std::vector<std::int64_t>> rows;
};

constexpr std::int64_t kEntryBound = std::int64_t{1} << 31;
constexpr std::int64_t kCoordBound = std::int64_t{1} << 24;

NarrowRows narrow(const Subspace& u) {
  NarrowRows out;
  for (const auto& r : u.canon()) {
    std::vector<std::int64_t> rr;
    rr.reserve(r.size());
    for (const auto& x : r) {
      if (!mpz_fits_slong_p(x.get_mpz_t()) || abs(x) >= kEntryBound)
        throw Error(ErrorKind::scale, "constraint entry " + x.get_str() + " too large for enumeration");
      rr.push_back(x.get_si());
    }
    out.rows.push_back(std::move(rr));
  }
  return out;
}

bool on_member(const NarrowRows& m, const std::vector<std::int64_t>& x) {
  for (const auto& r : m.rows) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += r[j] * x[j];
    if (acc != 0) return false;
  }
  return true;
}

bool on_member_mod_p(const std::vector<std::vector<std::uint64_t>>& rows, const std::vector<std::int64_t>& x,
                     std::uint64_t p) {
  for (const auto& r : rows) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc = (acc + r[j] * static_cast<std::uint64_t>(x[j])) % p;
    if (acc != 0) return false;
  }
  return true;
}

// Row-major odometer over [lo, hi]^n.
template <typename Fn>
void for_each_point(std::size_t n, std::int64_t lo, std::int64_t hi, Fn&& fn) {
  std::vector<std::int64_t> x(n, lo);
  while (true) {
    fn(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi) {
        ++x[i];
        break;
      }
      x[i] = lo;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

bool off_arrangement(const std::vector<NarrowRows>& members, const std::vector<std::int64_t>& x) {
  return std::none_of(members.begin(), members.end(), [&](const NarrowRows& m) { return on_member(m, x); });
}

std::vector<NarrowRows> narrow_members(const Arrangement& a) {
  std::vector<NarrowRows> out;
  out.reserve(a.size());
  for (const auto& m : a.members()) out.push_back(narrow(m));
  return out;
}

void require_cube_range(CubeSpec spec) {
  if (spec.s >= static_cast<std::uint64_t>(kCoordBound))
    throw Error(ErrorKind::scale, "half-side " + std::to_string(spec.s) + " too large");
}

// The mod-p count equals chi(p) when every set S of members keeps its rank
// mod p. Checking, for each flat X of L(a) and each member m, that the rows
// of all members through X (alone, and together with m) keep their rank
// suffices: by induction on |S| the F_p span of S equals that of the members
// through the intersection of S.
void require_good_reduction(const Arrangement& a, std::uint64_t p) {
  const IntersectionPoset poset = build_poset(a);
  const auto& atoms = poset.atoms();
  const std::size_t n = a.ambient_dim();
  for (std::size_t x = 0; x < poset.size(); ++x) {
    std::vector<IntVector> rows;
    for (auto m : atoms)
      if (poset.leq(m, x)) rows.insert(rows.end(), poset.element(m).canon().begin(), poset.element(m).canon().end());
    const std::size_t codim = poset.element(x).codim();
    if (rank_mod_p(rows, n, p) != codim)
      throw Error(ErrorKind::prime_too_small,
                  "an intersection of codimension " + std::to_string(codim) + " drops rank mod " + std::to_string(p));
    for (auto m : atoms) {
      if (poset.leq(m, x)) continue;
      std::vector<IntVector> joined = rows;
      joined.insert(joined.end(), poset.element(m).canon().begin(), poset.element(m).canon().end());
      const std::size_t want = intersect(poset.element(x), poset.element(m)).codim();
      if (rank_mod_p(joined, n, p) != want)
        throw Error(ErrorKind::prime_too_small,
                    "two flats of the arrangement merge mod " + std::to_string(p));
    }
  }
}

}  // namespace

std::uint64_t checked_grid_size(std::uint64_t side, std::size_t n, std::uint64_t point_limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (side != 0 && total > point_limit / side)
      throw Error(ErrorKind::scale, std::to_string(side) + "^" + std::to_string(n) + " points exceeds the limit of " +
                                        std::to_string(point_limit));
    total *= side;
  }
  if (total > point_limit)
    throw Error(ErrorKind::scale, std::to_string(total) + " points exceeds the limit of " + std::to_string(point_limit));
  return total;
}

Integer count_cube(const Arrangement& a, CubeSpec spec, std::uint64_t point_limit) {
  require_cube_range(spec);
  checked_grid_size(spec.t(), a.ambient_dim(), point_limit);
  const auto members = narrow_members(a);
  const auto s = static_cast<std::int64_t>(spec.s);
  std::uint64_t count = 0;
  for_each_point(a.ambient_dim(), -s, s, [&](const std::vector<std::int64_t>& x) {
    if (off_arrangement(members, x)) ++count;
  });
  return Integer(static_cast<unsigned long>(count));
}

Integer count_ffield(const Arrangement& a, std::uint64_t p, std::uint64_t point_limit) {
  if (!is_prime(p)) throw Error(ErrorKind::not_prime, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) throw Error(ErrorKind::scale, "prime too large for enumeration");
  checked_grid_size(p, a.ambient_dim(), point_limit);

  require_good_reduction(a, p);

  std::vector<std::vector<std::vector<std::uint64_t>>> members;
  for (const auto& m : a.members()) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& r : m.canon()) {
      std::vector<std::uint64_t> rr;
      for (const auto& e : r) {
        Integer red;
        mpz_fdiv_r_ui(red.get_mpz_t(), e.get_mpz_t(), p);
        rr.push_back(red.get_ui());
      }
      rows.push_back(std::move(rr));
    }
    members.push_back(std::move(rows));
  }

  std::uint64_t count = 0;
  for_each_point(a.ambient_dim(), 0, static_cast<std::int64_t>(p) - 1, [&](const std::vector<std::int64_t>& x) {
    for (const auto& m : members)
      if (on_member_mod_p(m, x, p)) return;
    ++count;
  });
  return Integer(static_cast<unsigned long>(count));
}

std::vector<std::pair<Subspace, Integer>> decompose_cube(const Arrangement& a, CubeSpec spec, EmbeddingFamily family,
                                                         std::uint64_t point_limit) {
  require_cube_range(spec);
  checked_grid_size(spec.t(), a.ambient_dim(), point_limit);
  const std::size_t n = a.ambient_dim();
  const Arrangement host = family_host(family, n);
  if (!embedded_in(a, host))
    throw Error(ErrorKind::not_embedded, "arrangement is not embedded in the type " +
                                             std::string(family == EmbeddingFamily::type_A ? "A" : "B") +
                                             " arrangement");

  const auto members = narrow_members(a);
  const auto hyperplanes = narrow_members(host);
  const std::size_t words = (hyperplanes.size() + 63) / 64;

  std::map<std::vector<std::uint64_t>, Subspace> flats;
  std::map<Subspace, std::uint64_t> sizes;
  const auto s = static_cast<std::int64_t>(spec.s);
  for_each_point(n, -s, s, [&](const std::vector<std::int64_t>& x) {
    if (!off_arrangement(members, x)) return;
    std::vector<std::uint64_t> mask(words, 0);
    for (std::size_t h = 0; h < hyperplanes.size(); ++h)
      if (on_member(hyperplanes[h], x)) mask[h / 64] |= std::uint64_t{1} << (h % 64);
    auto it = flats.find(mask);
    if (it == flats.end()) {
      Subspace flat = Subspace::full(n);
      for (std::size_t h = 0; h < hyperplanes.size(); ++h)
        if ((mask[h / 64] >> (h % 64)) & 1) flat = intersect(flat, host.members()[h]);
      it = flats.emplace(std::move(mask), std::move(flat)).first;
    }
    ++sizes[it->second];
  });

  std::vector<std::pair<Subspace, Integer>> out;
  out.reserve(sizes.size());
  for (const auto& [flat, count] : sizes) out.emplace_back(flat, Integer(static_cast<unsigned long>(count)));
  return out;
}

}  // namespace charpoly
