#include "flagtrans/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace flagtrans {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x]) throw std::invalid_argument("images do not form a bijection");
    hit[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> id(degree);
  std::iota(id.begin(), id.end(), Point{0});
  Perm p;
  p.images_ = std::move(id);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in product");
  Perm r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[a.images_[i]] = static_cast<Point>(i);
  return r;
}

Perm conjugate(const Perm& h, const Perm& g) { return inverse(g) * h * g; }

PermGroup closure(std::size_t degree, std::vector<Perm> gens, std::size_t cap) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generator degree differs from group degree");
  return PermGroup(degree, EnumeratedGroup<Perm>::generate(std::move(gens), Perm::identity(degree), cap));
}

PermGroup subgroup_from_elements(std::size_t degree, std::vector<Perm> elements) {
  if (elements.empty()) elements.push_back(Perm::identity(degree));
  return PermGroup(degree, EnumeratedGroup<Perm>::from_elements(std::move(elements)));
}

Orbit orbit_of(std::span<const Perm> perms, std::size_t degree, Point x) {
  std::vector<bool> seen(degree, false);
  Orbit orb{x};
  seen[x] = true;
  for (std::size_t head = 0; head < orb.size(); ++head)
    for (const auto& g : perms) {
      Point y = g[orb[head]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<Orbit> orbits(std::span<const Perm> perms, std::size_t degree) {
  std::vector<bool> done(degree, false);
  std::vector<Orbit> result;
  for (Point x = 0; x < degree; ++x) {
    if (done[x]) continue;
    auto orb = orbit_of(perms, degree, x);
    for (auto y : orb) done[y] = true;
    result.push_back(std::move(orb));
  }
  return result;
}

bool is_transitive(const PermGroup& g) { return g.degree() == 0 || orbits(g).size() == 1; }

PermGroup stabilizer(const PermGroup& g, Point x) {
  if (x >= g.degree()) throw std::out_of_range("point outside the group's degree");
  std::vector<Perm> fix;
  for (const auto& e : g.elements())
    if (e[x] == x) fix.push_back(e);
  return subgroup_from_elements(g.degree(), std::move(fix));
}

PermGroup set_stabilizer(const PermGroup& g, std::span<const Point> set) {
  std::vector<bool> in(g.degree(), false);
  for (auto x : set) in.at(x) = true;
  std::vector<Perm> fix;
  for (const auto& e : g.elements())
    if (std::all_of(set.begin(), set.end(), [&](Point x) { return in[e[x]]; })) fix.push_back(e);
  return subgroup_from_elements(g.degree(), std::move(fix));
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("normalizer: H is not contained in G");
  std::vector<Perm> norm;
  // Conjugation is a bijection, so mapping H's generators into H suffices.
  for (const auto& x : g.elements()) {
    bool ok = std::all_of(h.generators().begin(), h.generators().end(),
                          [&](const Perm& s) { return h.contains(conjugate(s, x)); });
    if (ok) norm.push_back(x);
  }
  return subgroup_from_elements(g.degree(), std::move(norm));
}

namespace {
ElementSet sorted_unique(std::unordered_set<Perm>&& s) {
  ElementSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

ElementSet double_coset(std::span<const Perm> h, const Perm& g, std::span<const Perm> k) {
  std::unordered_set<Perm> out;
  for (const auto& a : h) {
    Perm ag = a * g;
    for (const auto& b : k) out.insert(ag * b);
  }
  return sorted_unique(std::move(out));
}

ElementSet product_set(std::span<const Perm> h, std::span<const Perm> k) {
  std::unordered_set<Perm> out;
  out.reserve(h.size() * k.size());
  for (const auto& a : h)
    for (const auto& b : k) out.insert(a * b);
  return sorted_unique(std::move(out));
}

std::vector<std::vector<Point>> minimal_block_system(std::span<const Perm> gens, std::size_t degree, Point a, Point b) {
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Point, Point>> queue;
  auto unite = [&](Point x, Point y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    queue.emplace_back(x, y);
  };
  unite(a, b);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    for (const auto& g : gens) unite(g[x], g[y]);
  }
  std::vector<std::vector<Point>> classes(degree);
  for (Point x = 0; x < degree; ++x) classes[find(x)].push_back(x);
  std::vector<std::vector<Point>> blocks;
  for (auto& c : classes)
    if (!c.empty()) blocks.push_back(std::move(c));
  return blocks;
}

PrimitivityResult is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) throw std::invalid_argument("is_primitive: group is not transitive");
  for (Point b = 1; b < g.degree(); ++b) {
    auto sys = minimal_block_system(g.generators(), g.degree(), 0, b);
    if (sys.size() > 1) return {false, std::move(sys)};
  }
  return {true, {}};
}

bool recognize_frobenius(const PermGroup& g, const PermGroup& k, const PermGroup& h) {
  if (!k.is_subgroup_of(g) || !h.is_subgroup_of(g)) throw std::invalid_argument("K and H must lie in G");
  for (const auto& x : g.generators())
    for (const auto& s : k.generators())
      if (!k.contains(conjugate(s, x))) throw std::invalid_argument("K is not normal in G");
  std::size_t meet = std::count_if(h.elements().begin(), h.elements().end(), [&](const Perm& x) { return k.contains(x); });
  if (meet != 1 || k.order() * h.order() != g.order()) throw std::invalid_argument("H is not a complement to K in G");
  if (k.order() == 1 || h.order() == 1) return false;
  for (const auto& x : h.elements()) {
    if (x.is_identity()) continue;
    for (const auto& y : k.elements())
      if (!y.is_identity() && conjugate(y, x) == y) return false;
  }
  return true;
}

bool recognize_a4(const PermGroup& g) {
  if (g.order() != 12) return false;
  std::size_t involutions = 0, threes = 0;
  for (const auto& x : g.elements()) {
    auto o = x.order();
    involutions += o == 2;
    threes += o == 3;
  }
  return involutions == 3 && threes == 8;
}

}  // namespace flagtrans
