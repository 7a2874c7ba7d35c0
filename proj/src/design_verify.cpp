#include "flagtrans/design_verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "flagtrans/parallel.hpp"

namespace flagtrans::design {

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

PointSet to_set(std::span<const Point> pts, std::size_t v) {
  PointSet s(v);
  for (auto x : pts) s.set(x);
  return s;
}

}  // namespace

Classification classify_design(const IncidenceStructure& d) {
  if (d.b() == 0 || d.v() == 0) return Diagnostic{"degenerate", "no blocks or no points"};
  const std::size_t k = d.block(0).size();
  for (std::size_t i = 1; i < d.b(); ++i)
    if (d.block(i).size() != k)
      return Diagnostic{"block-size", "block " + std::to_string(i) + " has " + std::to_string(d.block(i).size()) +
                                          " points, block 0 has " + std::to_string(k)};
  const std::size_t r = d.blocks_through(0).count();
  for (Point x = 1; x < d.v(); ++x)
    if (auto rx = d.blocks_through(x).count(); rx != r)
      return Diagnostic{"replication", "point " + std::to_string(x) + " lies on " + std::to_string(rx) +
                                           " blocks, point 0 on " + std::to_string(r)};
  std::size_t lambda = 0;
  if (d.v() >= 2) {
    lambda = d.blocks_through(0).count_and(d.blocks_through(1));
    struct Bad {
      bool found = false;
      Point y = 0;
      std::size_t count = 0;
    };
    auto rows = parallel_map<Bad>(d.v(), [&](std::size_t x) {
      for (std::size_t y = x + 1; y < d.v(); ++y) {
        auto c = d.blocks_through(static_cast<Point>(x)).count_and(d.blocks_through(static_cast<Point>(y)));
        if (c != lambda) return Bad{true, static_cast<Point>(y), c};
      }
      return Bad{};
    });
    for (std::size_t x = 0; x < rows.size(); ++x)
      if (rows[x].found)
        return Diagnostic{"pair-count", "points " + std::to_string(x) + "," + std::to_string(rows[x].y) + " share " +
                                            std::to_string(rows[x].count) + " blocks, points 0,1 share " +
                                            std::to_string(lambda)};
  }
  return DesignParams{d.v(), d.b(), k, r, lambda};
}

DesdesResult desdes_identities(const DesignParams& p) {
  DesdesResult out;
  out.r_identity = p.r == p.lambda * (p.k + 1);
  out.b_identity = p.b == p.lambda * p.k * (p.k + 1);
  // (r/lambda)^2 > k^2 without division: r^2 > lambda^2 k^2
  out.ratio_inequality = p.lambda > 0 && p.r * p.r > p.lambda * p.lambda * p.k * p.k;
  out.square_family = p.v == p.k * p.k && p.lambda > 0 && p.k % p.lambda == 0;
  return out;
}

FlagResult flag_transitive(const PermGroup& g, const IncidenceStructure& d) {
  if (g.degree() != d.v()) throw std::invalid_argument("group degree differs from the number of points");
  FlagResult out;
  for (const auto& blk : d.blocks()) out.flag_count += blk.size();
  out.preserves_blocks = std::all_of(g.generators().begin(), g.generators().end(),
                                     [&](const Perm& s) { return d.image(s) == d; });
  if (!out.preserves_blocks) return out;

  std::map<Block, std::size_t> first_index;
  for (std::size_t i = d.b(); i-- > 0;) first_index[d.block(i)] = i;
  std::vector<std::size_t> offset(d.b() + 1, 0);
  for (std::size_t i = 0; i < d.b(); ++i) offset[i + 1] = offset[i] + d.block(i).size();

  UnionFind uf(out.flag_count);
  for (const auto& s : g.generators()) {
    for (std::size_t i = 0; i < d.b(); ++i) {
      const auto& blk = d.block(i);
      Block img;
      for (auto x : blk) img.push_back(s[x]);
      std::sort(img.begin(), img.end());
      const std::size_t j = first_index.at(img);
      for (std::size_t pos = 0; pos < blk.size(); ++pos) {
        auto at = std::lower_bound(img.begin(), img.end(), s[blk[pos]]) - img.begin();
        uf.unite(offset[i] + pos, offset[j] + at);
      }
    }
  }
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t f = 0; f < out.flag_count; ++f) ++sizes[uf.find(f)];
  for (auto [root, size] : sizes) out.orbit_sizes.push_back(size);
  std::sort(out.orbit_sizes.rbegin(), out.orbit_sizes.rend());
  out.transitive = out.orbit_sizes.size() == 1;
  return out;
}

TacticalResult tactical_params(const IncidenceStructure& d, std::span<const Point> points,
                               std::span<const std::size_t> block_indices) {
  if (points.empty() || block_indices.empty()) return Diagnostic{"degenerate", "empty point or block list"};
  const PointSet sub = to_set(points, d.v());
  const std::size_t k0 = d.block_set(block_indices[0]).count_and(sub);
  for (auto i : block_indices)
    if (auto c = d.block_set(i).count_and(sub); c != k0)
      return Diagnostic{"block-size", "block " + std::to_string(i) + " meets the subset in " + std::to_string(c) +
                                          " points, block " + std::to_string(block_indices[0]) + " in " +
                                          std::to_string(k0)};
  auto degree = [&](Point x) {
    return static_cast<std::size_t>(
        std::count_if(block_indices.begin(), block_indices.end(), [&](std::size_t i) { return d.block_set(i).test(x); }));
  };
  const std::size_t r0 = degree(points[0]);
  for (auto x : points)
    if (auto c = degree(x); c != r0)
      return Diagnostic{"replication", "point " + std::to_string(x) + " lies on " + std::to_string(c) +
                                           " listed blocks, point " + std::to_string(points[0]) + " on " +
                                           std::to_string(r0)};
  TacticalParams t{points.size(), block_indices.size(), k0, r0};
  if (t.v0 * t.r0 != t.b0 * t.k0) throw std::logic_error("double counting failed for a uniform configuration");
  return t;
}

Pp3Result pp3_orbit_check(const PermGroup& gx, bool flag_transitive, const IncidenceStructure& d, Point x) {
  Pp3Result out;
  const auto through = d.block_indices_through(x);
  if (through.empty()) {
    out.verdict = flag_transitive ? Verdict::fail : Verdict::hypothesis_unmet;
    return out;
  }
  const std::size_t k = d.block(through[0]).size();
  out.identity_holds = true;
  for (const auto& orb : orbits(gx)) {
    if (orb.size() == 1 && orb[0] == x) continue;
    Pp3Orbit row;
    row.orbit_size = orb.size();
    row.holds = true;
    const PointSet o = to_set(orb, d.v());
    for (auto i : through) {
      const std::size_t c = d.block_set(i).count_and(o);
      row.intersections.push_back(c);
      if (orb.size() != (k + 1) * c) row.holds = false;
    }
    std::sort(row.intersections.begin(), row.intersections.end());
    row.intersections.erase(std::unique(row.intersections.begin(), row.intersections.end()), row.intersections.end());
    out.identity_holds = out.identity_holds && row.holds;
    out.orbits.push_back(std::move(row));
  }
  if (!flag_transitive)
    out.verdict = Verdict::hypothesis_unmet;
  else
    out.verdict = out.identity_holds ? Verdict::pass : Verdict::fail;
  return out;
}

Pp3Result pp3_orbit_check(const PermGroup& g, const IncidenceStructure& d, Point x) {
  return pp3_orbit_check(stabilizer(g, x), flag_transitive(g, d).transitive, d, x);
}

bool largeness_check(const BigInt& order_g, const BigInt& order_gx) {
  if (order_gx < 1 || order_g % order_gx != 0)
    throw std::invalid_argument("stabilizer order " + order_gx.str() + " does not divide " + order_g.str());
  return order_g < order_gx * order_gx * order_gx;
}

TripleFactorization triple_factorization(const PermGroup& g, std::span<const Perm> n, std::span<const Perm> l) {
  TripleFactorization out;
  const auto nl = product_set(n, l);
  const auto nln = product_set(nl, n);
  out.g_order = g.order();
  out.nl_size = nl.size();
  out.nln_size = nln.size();
  auto in_g = [&](const ElementSet& s) { return std::all_of(s.begin(), s.end(), [&](const Perm& p) { return g.contains(p); }); };
  if (!in_g(nln)) throw std::invalid_argument("N and L are not contained in G");
  out.covers = nln.size() == g.order();
  out.degenerate = nl.size() == g.order();
  return out;
}

std::string describe(const TacticalParams& t) {
  return "(" + std::to_string(t.v0) + "," + std::to_string(t.b0) + "," + std::to_string(t.k0) + "," +
         std::to_string(t.r0) + ")";
}

std::string describe(const DesignParams& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.b) + "," + std::to_string(p.k) + "," +
         std::to_string(p.r) + "," + std::to_string(p.lambda) + ")";
}

std::vector<SubCheck> extension_uniqueness_audit(const IncidenceStructure& d, const PermGroup& g, const PermGroup& a,
                                                 Point x) {
  if (!g.is_subgroup_of(a)) throw std::invalid_argument("G must be a subgroup of A");
  std::vector<SubCheck> checks;
  const PermGroup gx = stabilizer(g, x);
  const PermGroup ax = stabilizer(a, x);
  const auto a_orbits = orbits(ax);
  const auto g_orbits = orbits(gx);

  std::vector<std::size_t> a_sizes;
  for (const auto& o : a_orbits) a_sizes.push_back(o.size());
  std::sort(a_sizes.begin(), a_sizes.end());
  const std::vector<std::size_t> want_sizes{1, 13, 13, 13, 26, 39, 39};
  checks.push_back({"a", "A_x orbit lengths", a_sizes == want_sizes, join(want_sizes), join(a_sizes)});

  // Length-26 A_x-orbits, and which of them split into two G_x-orbits of 13.
  std::vector<const Orbit*> long26, unions;
  for (const auto& o : a_orbits) {
    if (o.size() != 26) continue;
    long26.push_back(&o);
    std::size_t pieces = 0;
    bool only13 = true;
    for (const auto& go : g_orbits)
      if (std::binary_search(o.begin(), o.end(), go[0])) {
        ++pieces;
        only13 = only13 && go.size() == 13;
      }
    if (pieces == 2 && only13) unions.push_back(&o);
  }
  checks.push_back({"b", "one length-26 A_x-orbit O, a union of two G_x-orbits of length 13",
                    long26.size() == 1 && unions.size() == 1, "1 orbit of length 26, 1 such union",
                    std::to_string(long26.size()) + " orbits of length 26, " + std::to_string(unions.size()) +
                        " such unions"});

  const Orbit* o = !unions.empty() ? unions.front() : (!long26.empty() ? long26.front() : nullptr);
  const auto through = d.block_indices_through(x);
  std::vector<std::size_t> meets;
  if (o) {
    const PointSet os = to_set(*o, d.v());
    for (auto i : through) meets.push_back(d.block_set(i).count_and(os));
    std::sort(meets.begin(), meets.end());
    meets.erase(std::unique(meets.begin(), meets.end()), meets.end());
  }
  checks.push_back({"c", "every block through x meets O in 4 points", o && meets == std::vector<std::size_t>{4}, "{4}",
                    o ? join(meets) : "no orbit of length 26"});

  std::optional<TacticalParams> tac;
  std::string tac_text = "no orbit of length 26";
  if (o) {
    auto res = tactical_params(d, *o, through);
    if (auto* t = std::get_if<TacticalParams>(&res)) {
      tac = *t;
      tac_text = describe(*t);
    } else {
      tac_text = "not tactical: " + std::get<Diagnostic>(res).witness;
    }
  }
  const TacticalParams want_tac{26, 39, 4, 6};
  checks.push_back({"d", "tactical parameters of (O, blocks through x)", tac && *tac == want_tac, describe(want_tac),
                    tac_text});

  std::string lambda_text = "not a 2-design";
  std::optional<std::size_t> lambda;
  if (auto cls = classify_design(d); auto* p = std::get_if<DesignParams>(&cls)) {
    lambda = p->lambda;
    lambda_text = std::to_string(p->lambda);
  }
  const bool contradiction = tac && lambda && tac->r0 == 6 && *lambda == 3;
  checks.push_back({"e", "r0 = 6 differs from lambda = 3", contradiction, "r0=6, lambda=3",
                    "r0=" + (tac ? std::to_string(tac->r0) : std::string("n/a")) + ", lambda=" + lambda_text});

  const Perm* outside = nullptr;
  for (const auto& e : a.elements())
    if (!g.contains(e)) {
      outside = &e;
      break;
    }
  const bool moved = outside && !(d.image(*outside) == d);
  checks.push_back({"f", "an element of A outside G moves the block set", moved, "image differs",
                    outside ? (moved ? "image differs" : "image equal") : "A equals G"});
  return checks;
}

}  // namespace flagtrans::design
