#include "ellft/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ellft {

Perm perm_identity(int points) {
  Perm p(points);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t p = 0; p < b.size(); ++p) r[p] = a[b[p]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t p = 0; p < a.size(); ++p) r[a[p]] = static_cast<int>(p);
  return r;
}

int FinGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p) return -1;
  return static_cast<int>(it - elements.begin());
}

int FinGroup::mul(int a, int b) const {
  int idx = index_of(perm_compose(elements[a], elements[b]));
  if (idx < 0) throw std::logic_error("FinGroup::mul: product not in group");
  return idx;
}

int FinGroup::power(int a, long k) const {
  long n = element_order(a);
  long m = k % n;
  if (m < 0) m += n;
  int r = 0;  // identity
  for (long i = 0; i < m; ++i) r = mul(r, a);
  return r;
}

int FinGroup::element_order(int a) const {
  int ord = 1;
  int cur = a;
  while (cur != 0) {
    cur = mul(cur, a);
    ++ord;
  }
  return ord;
}

long FinGroup::exponent() const {
  long e = 1;
  for (int c = 0; c < num_classes(); ++c)
    e = std::lcm(e, static_cast<long>(element_order(class_rep(c))));
  return e;
}

int FinGroup::class_power(int c, long k) const {
  return class_of[power(class_rep(c), k)];
}

int FinGroup::centralizer_order(int c) const { return order() / class_size(c); }

int FinGroup::labeled_class(const std::string& name) const {
  auto it = class_labels.find(name);
  if (it == class_labels.end())
    throw std::runtime_error("unknown class label: " + name);
  return it->second;
}

void FinGroup::label_class(const std::string& name, const Perm& rep) {
  int e = index_of(rep);
  if (e < 0) throw std::runtime_error("class label '" + name +
                                      "': representative not in group");
  class_labels[name] = class_of[e];
  rep_override.emplace(class_of[e], e);  // first label wins
}

int FinGroup::preferred_rep(int c) const {
  auto it = rep_override.find(c);
  return it != rep_override.end() ? it->second : class_rep(c);
}

std::string FinGroup::class_name(int c) const {
  for (const auto& [name, idx] : class_labels)
    if (idx == c) return name;
  return "class" + std::to_string(c);
}

namespace {

// Shared finishing step: elements must already be the full closure.
FinGroup finish(int points, std::set<Perm> closure) {
  FinGroup g;
  g.points = points;
  g.elements.assign(closure.begin(), closure.end());
  const int n = g.order();
  g.inverse.resize(n);
  for (int i = 0; i < n; ++i) {
    g.inverse[i] = g.index_of(perm_inverse(g.elements[i]));
    if (g.inverse[i] < 0) throw std::logic_error("closure not inverse-closed");
  }
  // Conjugacy classes by orbit of conjugation; scanning elements in index
  // order makes each class's minimal member discovered first, so classes come
  // out ordered by minimal member.
  g.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (g.class_of[i] >= 0) continue;
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      Perm conj = perm_compose(perm_compose(g.elements[h], g.elements[i]),
                               g.elements[g.inverse[h]]);
      int j = g.index_of(conj);
      if (g.class_of[j] < 0) {
        g.class_of[j] = static_cast<int>(g.classes.size());
        cls.push_back(j);
      }
    }
    std::sort(cls.begin(), cls.end());
    g.classes.push_back(std::move(cls));
  }
  return g;
}

std::set<Perm> close_under_product(int points, const std::vector<Perm>& gens,
                                   size_t cap) {
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != points)
      throw std::invalid_argument("generator has wrong degree");
    Perm sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != perm_identity(points))
      throw std::invalid_argument("generator is not a permutation");
  }
  std::set<Perm> closure{perm_identity(points)};
  std::vector<Perm> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier) {
      for (const auto& gen : gens) {
        Perm prod = perm_compose(e, gen);
        if (closure.insert(prod).second) {
          if (closure.size() > cap)
            throw std::runtime_error("group closure exceeds cap of " +
                                     std::to_string(cap));
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  return closure;
}

}  // namespace

FinGroup make_group(int points, const std::vector<Perm>& generators, size_t cap) {
  return finish(points, close_under_product(points, generators, cap));
}

FinGroup make_subgroup(const FinGroup& g, const std::vector<int>& generator_indices) {
  std::vector<Perm> gens;
  for (int i : generator_indices) gens.push_back(g.elements[i]);
  return make_group(g.points, gens, g.elements.size());
}

FinGroup centralizer(const FinGroup& g, int e) {
  std::set<Perm> members;
  for (int h = 0; h < g.order(); ++h)
    if (g.mul(h, e) == g.mul(e, h)) members.insert(g.elements[h]);
  return finish(g.points, std::move(members));
}

FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
  std::vector<Perm> gens;
  auto lift_a = [&](const Perm& p) {
    Perm q = perm_identity(a.points + b.points);
    for (int i = 0; i < a.points; ++i) q[i] = p[i];
    return q;
  };
  auto lift_b = [&](const Perm& p) {
    Perm q = perm_identity(a.points + b.points);
    for (int i = 0; i < b.points; ++i) q[a.points + i] = a.points + p[i];
    return q;
  };
  for (const auto& p : a.elements) gens.push_back(lift_a(p));
  for (const auto& p : b.elements) gens.push_back(lift_b(p));
  return make_group(a.points + b.points,
                    gens.empty() ? std::vector<Perm>{perm_identity(0)} : gens,
                    a.elements.size() * b.elements.size());
}

std::vector<PairOrbit> commuting_pair_orbits(const FinGroup& g) {
  const int n = g.order();
  std::set<std::pair<int, int>> seen;
  std::vector<PairOrbit> orbits;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.mul(x, y) != g.mul(y, x)) continue;
      if (seen.count({x, y})) continue;
      PairOrbit orb;
      std::set<std::pair<int, int>> members;
      for (int h = 0; h < n; ++h) {
        int hi = g.inverse[h];
        members.insert({g.mul(g.mul(h, x), hi), g.mul(g.mul(h, y), hi)});
      }
      orb.members.assign(members.begin(), members.end());
      orb.rep = orb.members.front();
      seen.insert(members.begin(), members.end());
      orbits.push_back(std::move(orb));
    }
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const PairOrbit& a, const PairOrbit& b) { return a.rep < b.rep; });
  return orbits;
}

int orbit_of_pair(const std::vector<PairOrbit>& orbits, int a, int b) {
  for (size_t i = 0; i < orbits.size(); ++i) {
    const auto& m = orbits[i].members;
    if (std::binary_search(m.begin(), m.end(), std::make_pair(a, b)))
      return static_cast<int>(i);
  }
  throw std::runtime_error("pair not found in any commuting-pair orbit");
}

}  // namespace ellft
