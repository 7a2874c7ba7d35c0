#include "flagtrans/coset_geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace flagtrans::geometry {

namespace {

using gf::mat_mul;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation("construction check failed: " + what);
}

ProjMatrix conj(const ProjMatrix& x, const ProjMatrix& g) { return mat_mul(mat_mul(gf::inverse(g), x), g); }

std::vector<ProjMatrix> span_of(std::vector<ProjMatrix> gens) {
  return EnumeratedGroup<ProjMatrix>::generate(std::move(gens), ProjMatrix::identity(), 10000).elements();
}

}  // namespace

bool DoubleCosetReport::all_match() const {
  return partition && std::all_of(rows.begin(), rows.end(), [](const DoubleCosetRow& r) {
           return r.matches && r.tactical_matches;
         });
}

const Perm& GeometryBundle::perm_of(const ProjMatrix& m) const {
  auto idx = g_mat.index_of(m);
  if (!idx) throw std::invalid_argument("matrix is not an element of PSL(3,3)");
  return g_perm_of[*idx];
}

ProjMatrix beta() { return conj(gf::generators::alpha(), gf::generators::gamma()); }

GeometryBundle build_psl33() {
  using namespace gf::generators;
  GeometryBundle b;
  const std::vector<ProjMatrix> gens{eta(), psi(), alpha(), gamma()};
  b.g_mat = EnumeratedGroup<ProjMatrix>::generate(gens, ProjMatrix::identity(), 10000);
  require(b.g_mat.order() == 5616, "|<eta, psi, alpha, gamma>| = 5616");
  b.p_mat = span_of({eta(), psi()});
  b.l_mat = span_of({alpha(), gamma()});
  b.eta_mat = span_of({eta()});
  b.psi_mat = span_of({psi()});
  require(b.p_mat.size() == 39, "|P| = 39");
  require(b.l_mat.size() == 12, "|L| = 12");

  b.points_g = CosetSpace<ProjMatrix>(b.g_mat, b.p_mat);
  b.blocks_g = CosetSpace<ProjMatrix>(b.g_mat, b.l_mat);
  require(b.points_g.size() == 144, "144 cosets of P");
  require(b.blocks_g.size() == 468, "468 cosets of L");
  b.base = b.points_g.coset_of(ProjMatrix::identity());

  b.g_perm_of = parallel_map<Perm>(b.g_mat.order(), [&](std::size_t i) { return b.points_g.action(b.g_mat[i]); });
  auto perms = [&](const std::vector<ProjMatrix>& ms) {
    std::vector<Perm> out;
    for (const auto& m : ms) out.push_back(b.perm_of(m));
    return out;
  };
  b.g = closure(144, perms(gens));
  require(b.g.order() == 5616, "the action on 144 points is faithful");
  b.p = closure(144, perms({eta(), psi()}));
  b.l = closure(144, perms({alpha(), gamma()}));
  b.eta = closure(144, perms({eta()}));
  b.psi = closure(144, perms({psi()}));
  b.psi_normalizer = normalizer(b.g, b.psi);
  require(b.p.order() == 39 && b.eta.order() == 13 && b.psi.order() == 3, "P = <eta>:<psi> of order 13*3");
  require(recognize_frobenius(b.p, b.eta, b.psi), "P is a Frobenius group with kernel <eta>");
  require(recognize_a4(b.l), "L is isomorphic to A4");

  const ProjMatrix a = alpha(), be = beta();
  require(!(a == be) && (a * a).is_identity() && (be * be).is_identity() && a * be == be * a,
          "<alpha, beta> is elementary abelian of order 4");

  b.d = build_design(b.points_g, b.blocks_g, product_lookup(b.p_mat, b.l_mat));
  return b;
}

void build_extension(GeometryBundle& b) {
  using namespace gf::generators;
  const GroupElement sigma = GroupElement::sigma();
  auto lift = [](const std::vector<ProjMatrix>& ms) {
    std::vector<GroupElement> out;
    for (const auto& m : ms) out.push_back({m, false});
    return out;
  };
  const std::vector<GroupElement> gens{{eta(), false}, {psi(), false}, {alpha(), false}, {gamma(), false}, sigma};
  b.a_mat = EnumeratedGroup<GroupElement>::generate(gens, GroupElement::identity(), 20000);
  require(b.a_mat.order() == 11232, "|PSL(3,3):<sigma>| = 11232");

  const auto p_ext = lift(b.p_mat);
  const EnumeratedGroup<GroupElement> p_group = EnumeratedGroup<GroupElement>::from_elements(p_ext);
  auto normalizes_p = [&](const GroupElement& t) {
    const GroupElement ti = gf::inverse(t);
    return p_group.contains(ti * GroupElement{eta(), false} * t) && p_group.contains(ti * GroupElement{psi(), false} * t);
  };
  b.sigma_normalizes_p = normalizes_p(sigma);

  // First involution outside G, in element order, that normalizes P.
  bool found = false;
  for (const auto& t : b.a_mat.elements()) {
    if (!t.twist || !(t * t).is_identity() || !normalizes_p(t)) continue;
    b.normalizing_involution = t;
    found = true;
    break;
  }
  require(found, "some involution of A outside G normalizes P");

  b.nap_mat = p_ext;
  for (const auto& x : p_ext) b.nap_mat.push_back(x * b.normalizing_involution);
  std::sort(b.nap_mat.begin(), b.nap_mat.end());
  EnumeratedGroup<GroupElement>::from_elements(b.nap_mat);  // throws unless closed
  require(b.nap_mat.size() == 78, "|N_A(P)| = 78");
  b.l_ext = lift(b.l_mat);

  b.points_a = CosetSpace<GroupElement>(b.a_mat, b.nap_mat);
  b.blocks_a = CosetSpace<GroupElement>(b.a_mat, b.l_ext);
  require(b.points_a.size() == 144, "144 cosets of N_A(P)");
  require(b.blocks_a.size() == 936, "936 cosets of L in A");
  for (std::size_t i = 0; i < 144; ++i)
    require(b.points_a.representative(i) == GroupElement{b.points_g.representative(i), false},
            "point labels of G and A agree (label " + std::to_string(i) + ")");
  for (const auto& m : {eta(), psi(), alpha(), gamma()})
    require(b.points_a.action({m, false}) == b.perm_of(m), "G acts identically on both point spaces");

  b.involution_perm = b.points_a.action(b.normalizing_involution);
  std::vector<Perm> a_gens = b.g.generators();
  a_gens.push_back(b.involution_perm);
  b.a = closure(144, a_gens);
  require(b.a.order() == 11232, "the action of A on 144 points is faithful");
  b.nap = stabilizer(b.a, b.base);
  require(b.nap.order() == 78, "the point stabilizer in A has order 78");

  b.d_prime = build_design(b.points_a, b.blocks_a, product_lookup(b.nap_mat, b.l_ext));
  b.d_twisted = b.d.image(b.involution_perm);
  b.has_extension = true;
}

const GeometryBundle& standard_bundle() {
  static const GeometryBundle bundle = [] {
    GeometryBundle b = build_psl33();
    build_extension(b);
    return b;
  }();
  return bundle;
}

bool extension_is_union(const GeometryBundle& b) {
  if (!b.has_extension) throw std::logic_error("extension not built");
  std::vector<design::Block> both = b.d.blocks();
  both.insert(both.end(), b.d_twisted.blocks().begin(), b.d_twisted.blocks().end());
  return design::IncidenceStructure(144, std::move(both)) == b.d_prime;
}

std::vector<std::size_t> block_orbit_sizes(const PermGroup& g, const design::IncidenceStructure& d) {
  std::map<design::Block, std::size_t> index;
  for (std::size_t i = d.b(); i-- > 0;) index[d.block(i)] = i;
  std::vector<std::size_t> parent(d.b());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : g.generators())
    for (std::size_t i = 0; i < d.b(); ++i) {
      design::Block img;
      for (auto x : d.block(i)) img.push_back(s[x]);
      std::sort(img.begin(), img.end());
      auto it = index.find(img);
      if (it == index.end()) throw std::invalid_argument("the group does not preserve the block set");
      std::size_t a = find(i), c = find(it->second);
      if (a != c) parent[std::max(a, c)] = std::min(a, c);
    }
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t i = 0; i < d.b(); ++i) ++sizes[find(i)];
  std::vector<std::size_t> out;
  for (auto [root, n] : sizes) out.push_back(n);
  std::sort(out.rbegin(), out.rend());
  return out;
}

DoubleCosetReport double_coset_audit(const GeometryBundle& b) {
  using namespace gf::generators;
  const ProjMatrix one = ProjMatrix::identity(), al = alpha(), be = beta(), ga = gamma();
  const ProjMatrix ab = al * be;
  const ProjMatrix ga_ab = conj(ga, ab), ga_b = conj(ga, be), ga_a = conj(ga, al);
  auto inv = [](const ProjMatrix& m) { return gf::inverse(m); };

  struct Expectation {
    const char* label;
    ProjMatrix y;
    std::vector<ProjMatrix> expected;
    design::TacticalParams tactical;
  };
  const design::TacticalParams t39{39, 39, 3, 3}, t13{13, 39, 1, 3}, t1{1, 39, 1, 39};
  const std::vector<Expectation> expectations{
      {"1", one, {one}, t1},
      {"alpha", al, {al, ga_b, inv(ga_b)}, t39},
      {"beta", be, {be, ga_a, inv(ga_a)}, t39},
      {"alpha*beta", ab, {ab}, t13},
      {"gamma", ga, {ga}, t13},
      {"gamma^-1", inv(ga), {inv(ga)}, t13},
      {"gamma^(alpha*beta)", ga_ab, {ga_ab}, t13},
      {"(gamma^(alpha*beta))^-1", inv(ga_ab), {inv(ga_ab)}, t13},
  };

  std::unordered_map<Perm, std::size_t> back;
  for (std::size_t i = 0; i < b.g_perm_of.size(); ++i) back.emplace(b.g_perm_of[i], i);
  const auto& p = b.p.elements();
  const auto through = b.d.block_indices_through(b.base);

  DoubleCosetReport report;
  std::unordered_set<Perm> covered;
  std::size_t total = 0;
  for (const auto& s : expectations) {
    DoubleCosetRow row;
    row.label = s.label;
    row.y = s.y;
    const auto dc = double_coset(p, b.perm_of(s.y), p);
    row.size = dc.size();
    row.orbit_size = dc.size() / p.size();
    total += dc.size();
    covered.insert(dc.begin(), dc.end());
    std::vector<Point> pts;
    for (const auto& x : dc) {
      if (b.l.contains(x)) row.meet_l.push_back(b.g_mat[back.at(x)]);
      pts.push_back(x[b.base]);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::sort(row.meet_l.begin(), row.meet_l.end());
    row.expected = s.expected;
    std::sort(row.expected.begin(), row.expected.end());
    row.matches = row.meet_l == row.expected;
    row.expected_tactical = s.tactical;
    auto tac = design::tactical_params(b.d, pts, through);
    if (auto* t = std::get_if<design::TacticalParams>(&tac)) row.tactical = *t;
    row.tactical_matches = std::holds_alternative<design::TacticalParams>(tac) && row.tactical == s.tactical;
    report.rows.push_back(std::move(row));
  }
  report.partition = total == b.g.order() && covered.size() == b.g.order();
  return report;
}

}  // namespace flagtrans::geometry
