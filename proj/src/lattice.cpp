#include "charpoly/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace charpoly {

std::optional<std::size_t> IntersectionPoset::index_of(const Subspace& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!leq(i, j)) continue;
      bool between = false;
      for (std::size_t k = i + 1; k < j && !between; ++k) between = leq(i, k) && leq(k, j);
      if (!between) out.emplace_back(i, j);
    }
  return out;
}

IntersectionPoset build_poset(const Arrangement& a) {
  const std::size_t n = a.ambient_dim();
  std::vector<Subspace> found{Subspace::full(n)};
  std::unordered_map<Subspace, std::size_t, SubspaceHash> seen{{found.front(), 0}};

  auto insert = [&](const Subspace& x) {
    if (seen.emplace(x, found.size()).second) {
      found.push_back(x);
      return true;
    }
    return false;
  };

  std::vector<Subspace> frontier;
  for (const auto& m : a.members())
    if (insert(m)) frontier.push_back(m);
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& x : frontier)
      for (const auto& k : a.members()) {
        Subspace y = intersect(x, k);
        if (insert(y)) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }

  IntersectionPoset p;
  p.ambient_dim_ = n;
  std::sort(found.begin(), found.end());
  p.elements_ = std::move(found);

  const std::size_t sz = p.elements_.size();
  p.order_.assign(sz * sz, 0);
  for (std::size_t i = 0; i < sz; ++i) {
    p.order_[i * sz + i] = 1;
    for (std::size_t j = i + 1; j < sz; ++j)
      if (p.elements_[j].dim() < p.elements_[i].dim() && contains(p.elements_[i], p.elements_[j]))
        p.order_[i * sz + j] = 1;
  }

  for (const auto& m : a.members()) p.atoms_.push_back(*p.index_of(m));
  // The meet of everything is the unique element of least dimension.
  p.top_ = sz - 1;

  p.mobius_.assign(sz, Integer(0));
  p.mobius_[0] = 1;
  for (std::size_t j = 1; j < sz; ++j) {
    Integer acc = 0;
    for (std::size_t i = 0; i < j; ++i)
      if (p.leq(i, j)) acc += p.mobius_[i];
    p.mobius_[j] = -acc;
  }
  return p;
}

const std::vector<Integer>& mobius(const IntersectionPoset& p) { return p.mobius(); }

bool mobius_recurrence_holds(const IntersectionPoset& p) {
  if (p.size() == 0 || p.mobius()[0] != 1) return false;
  for (std::size_t j = 0; j < p.size(); ++j) {
    Integer acc = 0;
    for (std::size_t i = 0; i <= j; ++i)
      if (p.leq(i, j)) acc += p.mobius()[i];
    if (acc != (j == 0 ? 1 : 0)) return false;
    // Anything later in the linear extension must not sit below j.
    for (std::size_t i = j + 1; i < p.size(); ++i)
      if (p.leq(i, j)) return false;
  }
  return true;
}

IntPolynomial char_poly(const IntersectionPoset& p) {
  std::vector<Integer> coeffs(p.ambient_dim() + 1, Integer(0));
  for (std::size_t i = 0; i < p.size(); ++i) coeffs[p.element(i).dim()] += p.mobius()[i];
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly(const Arrangement& a) { return char_poly(build_poset(a)); }

}  // namespace charpoly
