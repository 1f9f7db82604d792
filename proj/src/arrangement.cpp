#include "charpoly/arrangement.hpp"

#include <unordered_set>

#include "charpoly/error.hpp"

namespace charpoly {

namespace {

IntVector unit_row(std::size_t n, std::size_t i) {
  IntVector r(n, Integer(0));
  r[i] = 1;
  return r;
}

// eps_i x_i - eps_j x_j
IntVector signed_difference(std::size_t n, std::size_t i, std::size_t j, int eps_i, int eps_j) {
  IntVector r(n, Integer(0));
  r[i] = eps_i;
  r[j] = -eps_j;
  return r;
}

Subspace subspace_from(std::size_t n, std::vector<IntVector> rows) {
  return canonicalize(ConstraintMatrix{n, std::move(rows)});
}

void require_rank(std::size_t n, const char* what) {
  if (n < 2) throw Error(ErrorKind::bad_rank, std::string(what) + " needs n >= 2, got " + std::to_string(n));
}

void require_k(std::size_t n, std::size_t k) {
  if (k < 2 || k > n)
    throw Error(ErrorKind::bad_params, "need 2 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

std::vector<Subspace> signed_equal_members(std::size_t n, std::size_t k) {
  std::vector<Subspace> out;
  for (const auto& idx : subsets(n, k)) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<IntVector> rows;
      auto eps = [&](std::size_t b) { return (mask >> b) & 1 ? -1 : 1; };
      for (std::size_t l = 1; l < k; ++l) rows.push_back(signed_difference(n, idx[0], idx[l], eps(0), eps(l)));
      out.push_back(subspace_from(n, std::move(rows)));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Arrangement::Arrangement(std::size_t ambient_dim, std::vector<Subspace> members, std::string name)
    : ambient_dim_(ambient_dim), name_(std::move(name)) {
  if (ambient_dim_ == 0) throw Error(ErrorKind::bad_params, "ambient dimension must be at least 1");
  std::unordered_set<Subspace, SubspaceHash> seen;
  std::vector<Subspace> unique;
  for (auto& m : members) {
    if (m.ambient_dim() != ambient_dim_)
      throw Error(ErrorKind::dimension_mismatch, "member lives in R^" + std::to_string(m.ambient_dim()) +
                                                     ", arrangement in R^" + std::to_string(ambient_dim_));
    if (m.codim() == 0) throw Error(ErrorKind::not_proper, "member is the whole space");
    if (seen.insert(m).second) unique.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < unique.size() && !covered; ++j)
      covered = j != i && unique[j].dim() > unique[i].dim() && contains(unique[j], unique[i]);
    if (!covered) members_.push_back(unique[i]);
  }
}

bool Arrangement::is_hyperplane_arrangement() const {
  for (const auto& m : members_)
    if (m.codim() != 1) return false;
  return true;
}

Arrangement build_type_A(std::size_t n) {
  require_rank(n, "type A");
  std::vector<Subspace> members;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) members.push_back(subspace_from(n, {signed_difference(n, i, j, 1, 1)}));
  return Arrangement(n, std::move(members), "A" + std::to_string(n));
}

Arrangement build_type_D(std::size_t n) {
  require_rank(n, "type D");
  std::vector<Subspace> members = build_type_A(n).members();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) members.push_back(subspace_from(n, {signed_difference(n, i, j, 1, -1)}));
  return Arrangement(n, std::move(members), "D" + std::to_string(n));
}

Arrangement build_type_B(std::size_t n) {
  require_rank(n, "type B");
  std::vector<Subspace> members = build_type_D(n).members();
  for (std::size_t i = 0; i < n; ++i) members.push_back(subspace_from(n, {unit_row(n, i)}));
  return Arrangement(n, std::move(members), "B" + std::to_string(n));
}

Arrangement build_k_equal(std::size_t n, std::size_t k) {
  require_k(n, k);
  std::vector<Subspace> members;
  for (const auto& idx : subsets(n, k)) {
    std::vector<IntVector> rows;
    for (std::size_t l = 1; l < k; ++l) rows.push_back(signed_difference(n, idx[0], idx[l], 1, 1));
    members.push_back(subspace_from(n, std::move(rows)));
  }
  return Arrangement(n, std::move(members), "A" + std::to_string(n) + "," + std::to_string(k));
}

Arrangement build_Dnk(std::size_t n, std::size_t k) {
  require_k(n, k);
  return Arrangement(n, signed_equal_members(n, k), "D" + std::to_string(n) + "," + std::to_string(k));
}

Arrangement build_Bnkh(std::size_t n, std::size_t k, std::size_t h) {
  require_k(n, k);
  if (h < 1 || h > n)
    throw Error(ErrorKind::bad_params, "need 1 <= h <= n, got n=" + std::to_string(n) + " h=" + std::to_string(h));
  std::vector<Subspace> members = signed_equal_members(n, k);
  for (const auto& idx : subsets(n, h)) {
    std::vector<IntVector> rows;
    for (auto i : idx) rows.push_back(unit_row(n, i));
    members.push_back(subspace_from(n, std::move(rows)));
  }
  return Arrangement(n, std::move(members),
                     "B" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(h));
}

Arrangement build_custom(std::size_t n, const std::vector<std::vector<IntVector>>& systems, std::string name) {
  std::vector<Subspace> members;
  members.reserve(systems.size());
  for (const auto& rows : systems) {
    if (rows.empty()) throw Error(ErrorKind::not_proper, "empty constraint system is the whole space");
    members.push_back(subspace_from(n, rows));
  }
  return Arrangement(n, std::move(members), std::move(name));
}

bool embedded_in(const Arrangement& a, const Arrangement& host) {
  if (a.ambient_dim() != host.ambient_dim())
    throw Error(ErrorKind::dimension_mismatch, "arrangement and host live in different spaces");
  for (const auto& x : a.members()) {
    Subspace meet = Subspace::full(a.ambient_dim());
    for (const auto& h : host.members())
      if (contains(h, x)) meet = intersect(meet, h);
    if (!(meet == x)) return false;
  }
  return true;
}

Arrangement family_host(EmbeddingFamily family, std::size_t n) {
  // Unlike the named builders this also accepts n = 1.
  std::vector<Subspace> members;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      members.push_back(subspace_from(n, {signed_difference(n, i, j, 1, 1)}));
      if (family == EmbeddingFamily::type_B) members.push_back(subspace_from(n, {signed_difference(n, i, j, 1, -1)}));
    }
  if (family == EmbeddingFamily::type_B)
    for (std::size_t i = 0; i < n; ++i) members.push_back(subspace_from(n, {unit_row(n, i)}));
  return Arrangement(n, std::move(members), family == EmbeddingFamily::type_A ? "A" : "B");
}

bool embedded_in_A(const Arrangement& a) { return embedded_in(a, family_host(EmbeddingFamily::type_A, a.ambient_dim())); }
bool embedded_in_B(const Arrangement& a) { return embedded_in(a, family_host(EmbeddingFamily::type_B, a.ambient_dim())); }

}  // namespace charpoly
