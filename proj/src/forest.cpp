#include "hilfor/forest.hpp"

#include <algorithm>
#include <unordered_set>

#include "hilfor/caps.hpp"
#include "hilfor/error.hpp"

namespace hilfor {

namespace {

std::string set_to_string(const HForest& fs, const Bitset& s) {
  std::string r = "{";
  bool first = true;
  for (int i = s.next(0); i >= 0; i = s.next(i + 1)) {
    if (!first) r += ",";
    r += fs.label(i);
    first = false;
  }
  return r + "}";
}

}  // namespace

void canonicalize_family(std::vector<Bitset>& fam) {
  std::sort(fam.begin(), fam.end(), size_value_less);
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

ValidationReport validate_forest_space(const HForest& fs) {
  if (!fs.order.is_valid()) throw InputError("forest order is not a poset");
  const Poset& p = fs.order;
  ValidationReport rep;

  if (p.is_forest())
    rep.pass("forest-order");
  else {
    for (int i = 0; i < p.n; ++i)
      if (!p.is_chain(p.down[i])) {
        rep.fail("forest-order", "principal downset of " + fs.label(i) +
                                     " is not a chain");
        break;
      }
  }

  {
    std::vector<Bitset> canon = fs.base;
    canonicalize_family(canon);
    if (canon == fs.base)
      rep.pass("base-canonical");
    else
      rep.fail("base-canonical",
               "family is not deduplicated and (size, bitmask)-sorted");
  }

  bool upsets_ok = true;
  for (const Bitset& b : fs.base) {
    if (b.universe() != p.n) {
      rep.fail("base-upsets", "set over the wrong universe");
      upsets_ok = false;
      break;
    }
    if (!p.is_upset(b)) {
      rep.fail("base-upsets", set_to_string(fs, b) + " is not an upset");
      upsets_ok = false;
      break;
    }
  }
  if (upsets_ok) rep.pass("base-upsets");

  std::unordered_set<Bitset, BitsetHash> members(fs.base.begin(),
                                                 fs.base.end());

  if (members.count(p.carrier()))
    rep.pass("base-carrier");
  else
    rep.fail("base-carrier", "carrier missing from the base");

  bool principals_ok = true;
  for (int x = 0; x < p.n; ++x)
    if (!members.count(p.up[x])) {
      rep.fail("base-principals",
               "principal upset of " + fs.label(x) + " missing");
      principals_ok = false;
      break;
    }
  if (principals_ok) rep.pass("base-principals");

  // Closure under [M) for M a subset of a member's minimals. Single-element
  // removals reach every subset by induction, and each [M) is again a base
  // member with minimal set M, so only they need checking.
  bool minimal_ok = true;
  for (const Bitset& b : fs.base) {
    if (!upsets_ok) break;
    Bitset mins = p.minimals_in(b);
    for (int x = mins.next(0); x >= 0 && minimal_ok; x = mins.next(x + 1)) {
      Bitset m = mins;
      m.reset(x);
      if (!members.count(p.upset_of(m))) {
        rep.fail("base-minimal-closure",
                 "dropping " + fs.label(x) + " from the minimals of " +
                     set_to_string(fs, b) + " leaves the base");
        minimal_ok = false;
      }
    }
    if (!minimal_ok) break;
  }
  if (minimal_ok) rep.pass("base-minimal-closure");

  bool diff_ok = true;
  for (const Bitset& b1 : fs.base) {
    if (!upsets_ok) break;
    for (const Bitset& b2 : fs.base) {
      if (!members.count(p.upset_of(b1.minus(b2)))) {
        rep.fail("base-difference-closure",
                 "[" + set_to_string(fs, b1) + " minus " +
                     set_to_string(fs, b2) + ") leaves the base");
        diff_ok = false;
        break;
      }
    }
    if (!diff_ok) break;
  }
  if (diff_ok) rep.pass("base-difference-closure");

  return rep;
}

void require_valid(const HForest& fs) {
  if (fs.trusted) return;
  ValidationReport rep = validate_forest_space(fs);
  if (!rep.valid) throw InputError("invalid forest space: " + rep.failure);
}

DualSpace dual_space(const Algebra& h, int cap) {
  require_valid(h);
  if (!h.bounded())
    throw InputError("dual space needs an algebra with a designated bottom");
  if (auto w = check_prelinear(h))
    throw DomainError(
        "algebra is not prelinear (fails at a=" + h.label((*w)[0]) +
        ", b=" + h.label((*w)[1]) + ", c=" + h.label((*w)[2]) +
        "), so the reversed spectrum is not a forest and carries no dual "
        "space");

  Spectrum spec = spectrum(h, cap);
  int m = (int)spec.points.size();

  DualSpace ds;
  ds.point_filters = spec.points;
  ds.forest.order = Poset(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && spec.points[j].subset_of(spec.points[i]))
        ds.forest.order.add_leq(i, j);
  ds.forest.order.finish();
  if (!ds.forest.order.is_forest())
    throw InternalError("reversed spectrum of a prelinear algebra must be "
                        "a forest");

  for (int a = 0; a < h.n; ++a) {
    Bitset image(m);
    for (int i = 0; i < m; ++i)
      if (spec.points[i].test(a)) image.set(i);
    ds.forest.base.push_back(image.complement());
  }
  canonicalize_family(ds.forest.base);
  for (int i = 0; i < m; ++i)
    ds.forest.labels.push_back("P" + std::to_string(i));
  ds.forest.trusted = true;
  return ds;
}

int DownsetAlgebra::index_of(const Bitset& downset) const {
  auto it = index_.find(downset);
  return it == index_.end() ? -1 : it->second;
}

int DownsetAlgebra::imp(int u, int v) const {
  Bitset d = universe[u].minus(universe[v]);
  int r = index_of(order.upset_of(d).complement());
  if (r < 0)
    throw InputError("base family is not closed under implication");
  return r;
}

Algebra DownsetAlgebra::materialize(int cap) const {
  int limit = effective_cap(cap);
  if (n() > limit)
    throw ResourceError("downset algebra with " + std::to_string(n()) +
                        " elements exceeds the materialization cap " +
                        std::to_string(limit));
  Algebra a;
  a.n = n();
  a.one = one;
  a.zero = zero;
  a.imp.assign(a.n, std::vector<int>(a.n, 0));
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < a.n; ++v) a.imp[u][v] = imp(u, v);
  a.trusted = true;
  return a;
}

DownsetAlgebra downset_algebra(const HForest& fs) {
  require_valid(fs);
  DownsetAlgebra da;
  da.order = fs.order;
  da.universe.reserve(fs.base.size());
  for (const Bitset& b : fs.base) da.universe.push_back(b.complement());
  canonicalize_family(da.universe);
  for (int i = 0; i < (int)da.universe.size(); ++i)
    da.index_.emplace(da.universe[i], i);
  da.zero = da.index_of(Bitset(fs.order.n));
  da.one = da.index_of(fs.order.carrier());
  if (da.zero < 0 || da.one < 0)
    throw InputError("base must contain the carrier and the empty set");
  return da;
}

Algebra algebra_of(const HForest& fs) {
  return downset_algebra(fs).materialize();
}

ValidationReport validate_forest_map(const HForest& src, const HForest& dst,
                                     const ForestMap& f) {
  require_valid(src);
  require_valid(dst);
  if ((int)f.map.size() != src.order.n)
    throw InputError("map length does not match the source forest");
  for (int v : f.map)
    if (v < 0 || v >= dst.order.n)
      throw InputError("map value out of range");

  ValidationReport rep;

  bool mono = true;
  for (auto [a, b] : src.order.cover_pairs())
    if (!dst.order.leq(f.map[a], f.map[b])) {
      rep.fail("order-preserving", src.label(a) + " <= " + src.label(b) +
                                       " is not preserved");
      mono = false;
      break;
    }
  if (mono) rep.pass("order-preserving");

  bool open = true;
  for (int x = 0; x < src.order.n && open; ++x) {
    Bitset image(dst.order.n);
    for (int z = src.order.down[x].next(0); z >= 0;
         z = src.order.down[x].next(z + 1))
      image.set(f.map[z]);
    if (image != dst.order.down[f.map[x]]) {
      rep.fail("open", "image of the downset of " + src.label(x) +
                           " is not the downset of its image");
      open = false;
    }
  }
  if (open) rep.pass("open");

  std::unordered_set<Bitset, BitsetHash> src_base(src.base.begin(),
                                                  src.base.end());
  bool pre = true;
  for (const Bitset& u : dst.base) {
    Bitset preimage(src.order.n);
    for (int x = 0; x < src.order.n; ++x)
      if (u.test(f.map[x])) preimage.set(x);
    if (!src_base.count(preimage)) {
      rep.fail("base-preimages", "preimage of " + set_to_string(dst, u) +
                                     " is not a source base set");
      pre = false;
      break;
    }
  }
  if (pre) rep.pass("base-preimages");

  return rep;
}

bool is_forest_map(const HForest& src, const HForest& dst,
                   const ForestMap& f) {
  return validate_forest_map(src, dst, f).valid;
}

ValidationReport validate_forest_relation(const HForest& src,
                                          const HForest& dst,
                                          const ForestRelation& r) {
  require_valid(src);
  require_valid(dst);
  if ((int)r.rows.size() != src.order.n)
    throw InputError("relation row count does not match the source forest");
  for (const Bitset& row : r.rows)
    if (row.universe() != dst.order.n)
      throw InputError("relation row over the wrong universe");

  ValidationReport rep;

  bool rows_ok = true;
  for (int x = 0; x < src.order.n && rows_ok; ++x) {
    if (r.rows[x].none()) {
      rep.fail("rows-nonempty-downsets", "row of " + src.label(x) +
                                             " is empty");
      rows_ok = false;
    } else if (!dst.order.is_downset(r.rows[x])) {
      rep.fail("rows-nonempty-downsets", "row of " + src.label(x) +
                                             " is not a downset");
      rows_ok = false;
    }
  }
  if (rows_ok) rep.pass("rows-nonempty-downsets");

  bool wit = true;
  for (int x = 0; x < src.order.n && wit; ++x)
    for (int y = r.rows[x].next(0); y >= 0 && wit;
         y = r.rows[x].next(y + 1)) {
      bool found = false;
      for (int z = src.order.down[x].next(0); z >= 0 && !found;
           z = src.order.down[x].next(z + 1))
        if (r.rows[z] == dst.order.down[y]) found = true;
      if (!found) {
        rep.fail("principal-witness",
                 "no z <= " + src.label(x) + " with row equal to the "
                 "downset of " + dst.label(y));
        wit = false;
      }
    }
  if (wit) rep.pass("principal-witness");

  std::unordered_set<Bitset, BitsetHash> src_base(src.base.begin(),
                                                  src.base.end());
  bool pre = true;
  for (const Bitset& u : dst.base) {
    Bitset preimage(src.order.n);
    for (int x = 0; x < src.order.n; ++x)
      if (r.rows[x].intersects(u)) preimage.set(x);
    if (!src_base.count(preimage)) {
      rep.fail("base-preimages", "preimage of " + set_to_string(dst, u) +
                                     " is not a source base set");
      pre = false;
      break;
    }
  }
  if (pre) rep.pass("base-preimages");

  return rep;
}

bool is_forest_relation(const HForest& src, const HForest& dst,
                        const ForestRelation& r) {
  return validate_forest_relation(src, dst, r).valid;
}

ForestRelation relation_of_map(const HForest& src, const HForest& dst,
                               const ForestMap& f) {
  ForestRelation r;
  r.rows.reserve(src.order.n);
  for (int x = 0; x < src.order.n; ++x)
    r.rows.push_back(dst.order.down[f.map[x]]);
  return r;
}

ForestMap map_of_relation(const HForest& src, const HForest& dst,
                          const ForestRelation& r) {
  ForestMap f;
  f.map.reserve(src.order.n);
  for (int x = 0; x < src.order.n; ++x) {
    int best = -1;
    for (int y = r.rows[x].next(0); y >= 0; y = r.rows[x].next(y + 1))
      if (r.rows[x].subset_of(dst.order.down[y])) {
        best = y;
        break;
      }
    if (best < 0)
      throw InputError("relation row of " + src.label(x) +
                       " has no maximum");
    f.map.push_back(best);
  }
  return f;
}

namespace {

struct MapSearch {
  const HForest& src;
  const HForest& dst;
  std::vector<int> topo;                     // src nodes, parents first
  std::vector<std::vector<int>> dst_covers;  // upper covers per dst node
  std::vector<int> dst_minimals;
  std::unordered_set<Bitset, BitsetHash> src_base;
  std::vector<int> map;
  std::vector<ForestMap> out;

  MapSearch(const HForest& s, const HForest& d)
      : src(s),
        dst(d),
        topo(s.order.topo_order()),
        dst_covers(d.order.n),
        src_base(s.base.begin(), s.base.end()),
        map(s.order.n, -1) {
    for (auto [a, b] : d.order.cover_pairs()) dst_covers[a].push_back(b);
    for (int y = d.order.minimals().next(0); y >= 0;
         y = d.order.minimals().next(y + 1))
      dst_minimals.push_back(y);
  }

  bool base_ok() const {
    for (const Bitset& u : dst.base) {
      Bitset preimage(src.order.n);
      for (int x = 0; x < src.order.n; ++x)
        if (u.test(map[x])) preimage.set(x);
      if (!src_base.count(preimage)) return false;
    }
    return true;
  }

  void dfs(std::size_t k) {
    if (k == topo.size()) {
      if (base_ok()) out.push_back(ForestMap{map});
      return;
    }
    int x = topo[k];
    int p = src.order.parent(x);
    if (p < 0) {
      for (int y : dst_minimals) {
        map[x] = y;
        dfs(k + 1);
      }
    } else {
      map[x] = map[p];
      dfs(k + 1);
      for (int y : dst_covers[map[p]]) {
        map[x] = y;
        dfs(k + 1);
      }
    }
    map[x] = -1;
  }
};

}  // namespace

std::vector<ForestMap> enumerate_forest_maps(const HForest& src,
                                             const HForest& dst) {
  require_valid(src);
  require_valid(dst);
  MapSearch search(src, dst);
  if (src.order.n == 0) {
    // The empty source admits exactly the empty map; its base preimages
    // are all empty, and the empty set is in every base.
    return {ForestMap{{}}};
  }
  search.dfs(0);
  std::sort(search.out.begin(), search.out.end(),
            [](const ForestMap& a, const ForestMap& b) {
              return a.map < b.map;
            });
  return search.out;
}

std::vector<ForestRelation> enumerate_forest_relations(const HForest& src,
                                                       const HForest& dst,
                                                       long long cap) {
  require_valid(src);
  require_valid(dst);

  // Row candidates: every nonempty downset of dst.
  std::vector<Bitset> rows;
  if (dst.order.n > 20)
    throw ResourceError("relation enumeration needs a small target forest");
  for (long long m = 1; m < (1LL << dst.order.n); ++m) {
    Bitset s(dst.order.n);
    for (int i = 0; i < dst.order.n; ++i)
      if ((m >> i) & 1) s.set(i);
    if (dst.order.is_downset(s)) rows.push_back(s);
  }
  canonicalize_family(rows);

  double total = 1;
  for (int x = 0; x < src.order.n; ++x) total *= (double)rows.size();
  if (total > (double)cap)
    throw ResourceError("relation candidate space exceeds the cap");

  std::vector<ForestRelation> out;
  ForestRelation r;
  r.rows.assign(src.order.n, Bitset(dst.order.n));
  std::function<void(int)> dfs = [&](int x) {
    if (x == src.order.n) {
      if (is_forest_relation(src, dst, r)) out.push_back(r);
      return;
    }
    for (const Bitset& row : rows) {
      r.rows[x] = row;
      dfs(x + 1);
    }
  };
  if (src.order.n == 0) {
    out.push_back(ForestRelation{{}});
    return out;
  }
  dfs(0);
  return out;
}

ForestMap dual_of_hom(const std::vector<int>& f, const DualSpace& dual_h,
                      const DualSpace& dual_k) {
  ForestMap m;
  int nh = dual_h.point_filters.empty()
               ? 0
               : dual_h.point_filters[0].universe();
  m.map.reserve(dual_k.point_filters.size());
  for (const Bitset& q : dual_k.point_filters) {
    Bitset pre(nh);
    for (int a = 0; a < nh; ++a)
      if (q.test(f[a])) pre.set(a);
    int idx = -1;
    for (int i = 0; i < (int)dual_h.point_filters.size(); ++i)
      if (dual_h.point_filters[i] == pre) {
        idx = i;
        break;
      }
    if (idx < 0)
      throw InternalError(
          "preimage of an irreducible filter under a homomorphism must be "
          "irreducible");
    m.map.push_back(idx);
  }
  return m;
}

std::vector<int> hom_of_map(const ForestMap& m, const DownsetAlgebra& ax,
                            const DownsetAlgebra& ay) {
  std::vector<int> h;
  h.reserve(ax.universe.size());
  for (const Bitset& u : ax.universe) {
    Bitset pre(ay.order.n);
    for (int y = 0; y < ay.order.n; ++y)
      if (u.test(m.map[y])) pre.set(y);
    int idx = ay.index_of(pre);
    if (idx < 0)
      throw InputError("map preimage of a downset fell outside the target "
                       "universe; the map is not a forest morphism");
    h.push_back(idx);
  }
  return h;
}

std::vector<int> duality_iso(const Algebra& h, const DualSpace& ds,
                             const DownsetAlgebra& dd) {
  int m = (int)ds.point_filters.size();
  std::vector<int> iso;
  iso.reserve(h.n);
  for (int a = 0; a < h.n; ++a) {
    Bitset image(m);
    for (int i = 0; i < m; ++i)
      if (ds.point_filters[i].test(a)) image.set(i);
    int idx = dd.index_of(image);
    if (idx < 0)
      throw InternalError("phi image of " + h.label(a) +
                          " is missing from the algebra of the dual");
    iso.push_back(idx);
  }
  if (h.n != dd.n())
    throw InternalError("algebra and its double dual differ in size");
  std::vector<char> hit(h.n, 0);
  for (int v : iso) hit[v] = 1;
  for (char c : hit)
    if (!c) throw InternalError("phi is not surjective onto the double dual");
  Algebra dd_alg = dd.materialize();
  if (!is_homomorphism(h, dd_alg, iso, true))
    throw InternalError("phi is not a bounded homomorphism");
  return iso;
}

std::vector<int> forest_round_trip_iso(const HForest& fs,
                                       const DownsetAlgebra& da,
                                       const DualSpace& ds2) {
  int n = fs.order.n;
  if ((int)ds2.point_filters.size() != n)
    throw InternalError("dual of the downset algebra has the wrong size");
  std::vector<int> iso(n, -1);
  for (int x = 0; x < n; ++x) {
    Bitset eps(da.n());
    for (int u = 0; u < da.n(); ++u)
      if (da.universe[u].test(x)) eps.set(u);
    for (int i = 0; i < (int)ds2.point_filters.size(); ++i)
      if (ds2.point_filters[i] == eps) {
        iso[x] = i;
        break;
      }
    if (iso[x] < 0)
      throw InternalError("membership filter of node " + fs.label(x) +
                          " is not an irreducible filter of the downset "
                          "algebra");
  }
  std::vector<char> hit(n, 0);
  for (int v : iso) hit[v] = 1;
  for (char c : hit)
    if (!c) throw InternalError("round-trip node map is not a bijection");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (fs.order.leq(x, y) != ds2.forest.order.leq(iso[x], iso[y]))
        throw InternalError("round-trip node map is not an order "
                            "isomorphism");
  std::vector<Bitset> mapped;
  mapped.reserve(fs.base.size());
  for (const Bitset& b : fs.base) {
    Bitset img(n);
    for (int x = b.next(0); x >= 0; x = b.next(x + 1)) img.set(iso[x]);
    mapped.push_back(img);
  }
  canonicalize_family(mapped);
  if (mapped != ds2.forest.base)
    throw InternalError("round-trip node map does not carry the base onto "
                        "the dual base");
  return iso;
}

namespace {

bool forest_iso_leaf(const HForest& a, const HForest& b,
                     const std::vector<int>& perm) {
  for (int x = 0; x < a.order.n; ++x)
    for (int y = 0; y < a.order.n; ++y)
      if (a.order.leq(x, y) != b.order.leq(perm[x], perm[y])) return false;
  std::vector<Bitset> mapped;
  mapped.reserve(a.base.size());
  for (const Bitset& s : a.base) {
    Bitset img(b.order.n);
    for (int x = s.next(0); x >= 0; x = s.next(x + 1)) img.set(perm[x]);
    mapped.push_back(img);
  }
  canonicalize_family(mapped);
  return mapped == b.base;
}

bool forest_iso_dfs(const HForest& a, const HForest& b,
                    std::vector<int>& perm, std::vector<char>& used, int x) {
  if (x == a.order.n) return forest_iso_leaf(a, b, perm);
  for (int y = 0; y < b.order.n; ++y) {
    if (used[y]) continue;
    if (a.order.down[x].count() != b.order.down[y].count()) continue;
    if (a.order.up[x].count() != b.order.up[y].count()) continue;
    bool consistent = true;
    for (int z = 0; z < x && consistent; ++z) {
      if (a.order.leq(z, x) != b.order.leq(perm[z], y)) consistent = false;
      if (a.order.leq(x, z) != b.order.leq(y, perm[z])) consistent = false;
    }
    if (!consistent) continue;
    perm[x] = y;
    used[y] = 1;
    if (forest_iso_dfs(a, b, perm, used, x + 1)) return true;
    used[y] = 0;
    perm[x] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_forest_isomorphism(const HForest& a,
                                                        const HForest& b) {
  if (a.order.n != b.order.n || a.base.size() != b.base.size())
    return std::nullopt;
  std::vector<int> perm(a.order.n, -1);
  std::vector<char> used(a.order.n, 0);
  if (a.order.n == 0) return perm;
  if (forest_iso_dfs(a, b, perm, used, 0)) return perm;
  return std::nullopt;
}

}  // namespace hilfor
