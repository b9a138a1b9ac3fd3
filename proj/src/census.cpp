#include "hilfor/census.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

#include "hilfor/caps.hpp"
#include "hilfor/coproduct.hpp"
#include "hilfor/error.hpp"
#include "hilfor/product.hpp"

namespace hilfor {

namespace {

std::string key_for_perm(const Poset& p, const std::vector<int>& perm) {
  std::string s((std::size_t)p.n * p.n, '0');
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (p.leq(perm[i], perm[j])) s[(std::size_t)i * p.n + j] = '1';
  return s;
}

}  // namespace

std::string poset_canonical_key(const Poset& p) {
  if (p.n == 0) return "";

  // Node invariants: anything an order isomorphism must preserve.
  std::vector<int> depth(p.n, 0);
  std::vector<int> by_down(p.n);
  for (int i = 0; i < p.n; ++i) by_down[i] = i;
  std::sort(by_down.begin(), by_down.end(), [&](int a, int b) {
    return p.down[a].count() < p.down[b].count();
  });
  for (int i : by_down)
    for (int j = 0; j < p.n; ++j)
      if (j != i && p.leq(j, i)) depth[i] = std::max(depth[i], depth[j] + 1);

  std::vector<std::array<long long, 5>> inv(p.n);
  auto covers_below = [&](int i) {
    int c = 0;
    for (int j = 0; j < p.n; ++j)
      if (p.covers(j, i)) ++c;
    return c;
  };
  auto covers_above = [&](int i) {
    int c = 0;
    for (int j = 0; j < p.n; ++j)
      if (p.covers(i, j)) ++c;
    return c;
  };
  for (int i = 0; i < p.n; ++i)
    inv[i] = {(long long)p.down[i].count(), (long long)p.up[i].count(),
              depth[i], covers_below(i), covers_above(i)};

  std::vector<int> order(p.n);
  for (int i = 0; i < p.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (inv[a] != inv[b]) return inv[a] < inv[b];
    return a < b;
  });

  std::vector<std::pair<int, int>> blocks;  // [first, last) over `order`
  for (int i = 0; i < p.n;) {
    int j = i;
    while (j < p.n && inv[order[j]] == inv[order[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }

  std::string best;
  std::vector<int> perm = order;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == blocks.size()) {
      std::string key = key_for_perm(p, perm);
      if (best.empty() || key < best) best = key;
      return;
    }
    auto [lo, hi] = blocks[k];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      self(self, k + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  rec(rec, 0);
  return best;
}

std::vector<Poset> enumerate_forests(int n) {
  if (n < 0) throw InputError("forest enumeration needs n >= 0");
  if (n > effective_cap(7))
    throw ResourceError("forest enumeration is capped at 7 nodes");
  if (n == 0) return {Poset(0)};

  std::vector<Poset> out;
  std::unordered_set<std::string> seen;
  std::vector<int> parent(n, -1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      Poset p(n);
      for (int v = 0; v < n; ++v)
        if (parent[v] >= 0) p.add_leq(parent[v], v);
      p.finish();
      if (seen.insert(poset_canonical_key(p)).second) out.push_back(p);
      return;
    }
    for (int par = -1; par < i; ++par) {
      parent[i] = par;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

std::vector<Bitset> all_upsets(const Poset& f) {
  std::vector<Bitset> ups;
  for (long long m = 0; m < (1LL << f.n); ++m) {
    Bitset s(f.n);
    for (int i = 0; i < f.n; ++i)
      if ((m >> i) & 1) s.set(i);
    if (f.is_upset(s)) ups.push_back(s);
  }
  canonicalize_family(ups);
  return ups;
}

// Least superfamily containing the principal upsets, the carrier, the
// empty set, and every upset generated by a subset of a member's minimals.
void close_hbase(const Poset& f, std::vector<Bitset>& fam) {
  std::unordered_set<Bitset, BitsetHash> present(fam.begin(), fam.end());
  auto add = [&](const Bitset& s) {
    if (present.insert(s).second) fam.push_back(s);
  };
  add(Bitset(f.n));
  add(f.carrier());
  for (int i = 0; i < f.n; ++i) add(f.up[i]);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    auto mins = f.minimals_in(fam[i]).members();
    for (unsigned mask = 0; mask < (1u << mins.size()); ++mask) {
      Bitset seed(f.n);
      for (std::size_t j = 0; j < mins.size(); ++j)
        if ((mask >> j) & 1) seed.set((int)mins[j]);
      add(f.upset_of(seed));
    }
  }
  canonicalize_family(fam);
}

std::vector<std::vector<Bitset>> hbases_impl(const Poset& f, int max_sets) {
  if (!f.is_forest()) throw InputError("h-bases are defined over forests");
  std::vector<Bitset> ups = all_upsets(f);
  std::unordered_map<Bitset, int, BitsetHash> up_index;
  for (int i = 0; i < (int)ups.size(); ++i) up_index.emplace(ups[i], i);
  auto key_of = [&](const std::vector<Bitset>& fam) {
    std::string k;
    for (const Bitset& s : fam) k.push_back((char)up_index.at(s));
    return k;
  };

  std::vector<std::vector<Bitset>> out;
  std::vector<Bitset> b0;
  close_hbase(f, b0);
  if (max_sets >= 0 && (int)b0.size() > max_sets) return out;

  std::unordered_set<std::string> seen{key_of(b0)};
  std::vector<std::vector<Bitset>> queue{b0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<Bitset> fam = queue[qi];
    out.push_back(fam);
    for (const Bitset& u : ups) {
      if (std::find(fam.begin(), fam.end(), u) != fam.end()) continue;
      std::vector<Bitset> grown = fam;
      grown.push_back(u);
      close_hbase(f, grown);
      if (max_sets >= 0 && (int)grown.size() > max_sets) continue;
      if (seen.insert(key_of(grown)).second) queue.push_back(grown);
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const std::vector<Bitset>& a, const std::vector<Bitset>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return key_of(a) < key_of(b);
            });
  return out;
}

}  // namespace

std::vector<std::vector<Bitset>> enumerate_hbases(const Poset& f,
                                                  int max_sets) {
  if (f.n > effective_cap(5))
    throw ResourceError("h-base enumeration is capped at 5 nodes");
  return hbases_impl(f, max_sets);
}

std::vector<Algebra> enumerate_bph_algebras(int n) {
  if (n < 1) throw InputError("algebra census needs n >= 1");
  if (n > effective_cap(8))
    throw ResourceError("algebra census is capped at 8 elements");
  std::vector<Algebra> out;
  int max_nodes = std::min(n - 1, 7);
  for (int m = 0; m <= max_nodes; ++m)
    for (const Poset& f : enumerate_forests(m))
      for (const std::vector<Bitset>& base : hbases_impl(f, n)) {
        HForest fs;
        fs.order = f;
        fs.base = base;
        fs.trusted = true;
        Algebra a = algebra_of(fs);
        if (a.n > n) continue;
        bool fresh = true;
        for (const Algebra& b : out)
          if (b.n == a.n && find_isomorphism(a, b)) {
            fresh = false;
            break;
          }
        if (fresh) out.push_back(a);
      }
  std::stable_sort(out.begin(), out.end(),
                   [](const Algebra& a, const Algebra& b) { return a.n < b.n; });
  return out;
}

std::vector<Algebra> enumerate_phil_algebras(int n) {
  if (n < 1) throw InputError("algebra census needs n >= 1");
  std::vector<Algebra> out;
  for (const Algebra& k : enumerate_bph_algebras(n + 1)) {
    if (k.n < 2) continue;
    bool strippable = true;
    for (int a = 0; a < k.n && strippable; ++a) {
      if (a == k.zero) continue;
      for (int b = 0; b < k.n; ++b) {
        if (b == k.zero) continue;
        if (k.imp[a][b] == k.zero) {
          strippable = false;
          break;
        }
      }
    }
    if (!strippable) continue;

    std::vector<int> newid(k.n, -1);
    int c = 0;
    for (int a = 0; a < k.n; ++a)
      if (a != k.zero) newid[a] = c++;
    Algebra s;
    s.n = k.n - 1;
    s.one = newid[k.one];
    s.zero = -1;
    s.imp.assign(s.n, std::vector<int>(s.n, -1));
    for (int a = 0; a < k.n; ++a) {
      if (a == k.zero) continue;
      for (int b = 0; b < k.n; ++b) {
        if (b == k.zero) continue;
        s.imp[newid[a]][newid[b]] = newid[k.imp[a][b]];
      }
    }
    bool fresh = true;
    for (const Algebra& b : out)
      if (b.n == s.n && find_isomorphism(s, b)) {
        fresh = false;
        break;
      }
    if (fresh) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Algebra& a, const Algebra& b) { return a.n < b.n; });
  return out;
}

std::vector<GodelAlgebra> enumerate_godel_algebras(int n) {
  if (n < 1) throw InputError("algebra census needs n >= 1");
  if (n > effective_cap(8))
    throw ResourceError("Heyting census is capped at 8 elements");
  std::vector<GodelAlgebra> out;
  int max_nodes = std::min(n - 1, 7);
  for (int m = 0; m <= max_nodes; ++m)
    for (const Poset& f : enumerate_forests(m)) {
      std::vector<Bitset> ups = all_upsets(f);
      if ((int)ups.size() > n) continue;
      HForest fs;
      fs.order = f;
      fs.base = ups;
      fs.trusted = true;
      DownsetAlgebra da = downset_algebra(fs);
      GodelAlgebra ga;
      ga.alg = da.materialize();
      int sz = ga.alg.n;
      ga.meet.assign(sz, std::vector<int>(sz, -1));
      ga.join.assign(sz, std::vector<int>(sz, -1));
      for (int u = 0; u < sz; ++u)
        for (int v = 0; v < sz; ++v) {
          ga.meet[u][v] = da.index_of(da.universe[u] & da.universe[v]);
          ga.join[u][v] = da.index_of(da.universe[u] | da.universe[v]);
          if (ga.meet[u][v] < 0 || ga.join[u][v] < 0)
            throw InternalError("downsets are not closed under union or "
                                "intersection");
        }
      ga.trusted = true;
      bool fresh = true;
      for (const GodelAlgebra& b : out)
        if (b.alg.n == ga.alg.n && find_isomorphism(ga.alg, b.alg)) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(ga);
    }
  std::stable_sort(out.begin(), out.end(),
                   [](const GodelAlgebra& a, const GodelAlgebra& b) {
                     return a.alg.n < b.alg.n;
                   });
  return out;
}

namespace {

// Order preservation plus openness: the image of a principal downset is
// exactly the principal downset of the image.
bool open_order_preserving(const Poset& src, const Poset& dst,
                           const std::vector<int>& f) {
  for (auto [a, b] : src.cover_pairs())
    if (!dst.leq(f[a], f[b])) return false;
  for (int i = 0; i < src.n; ++i) {
    Bitset img(dst.n);
    for (int j = src.down[i].next(0); j >= 0; j = src.down[i].next(j + 1))
      img.set(f[j]);
    if (!(img == dst.down[f[i]])) return false;
  }
  return true;
}

// Counts the open order-preserving maps z -> product that commute with
// both projections, walking candidates fiber by fiber. Provably always 1
// for valid cones; the count is the uniqueness certificate.
struct CommutingCount {
  const Poset& z;
  const ProductForest& pf;
  const std::vector<std::vector<int>>& above;   // covers above each walk
  const std::vector<std::vector<int>>& fiber;   // walks by endpoint pair
  const std::vector<int>& alpha;
  const std::vector<int>& beta;
  Bitset pf_min;
  std::vector<int> topo;
  std::vector<int> assign;
  long long count = 0;
  std::vector<int> survivor;

  CommutingCount(const Poset& z_, const ProductForest& pf_,
                 const std::vector<std::vector<int>>& above_,
                 const std::vector<std::vector<int>>& fiber_,
                 const std::vector<int>& alpha_,
                 const std::vector<int>& beta_)
      : z(z_), pf(pf_), above(above_), fiber(fiber_), alpha(alpha_),
        beta(beta_), pf_min(pf_.order.minimals()), topo(z_.topo_order()),
        assign(z_.n, -1) {}

  int endpoint(int w) const { return pf.pair_index(pf.proj1[w], pf.proj2[w]); }

  void dfs(std::size_t k) {
    if (k == topo.size()) {
      if (++count == 1) survivor = assign;
      return;
    }
    int zi = topo[k];
    int target = pf.pair_index(alpha[zi], beta[zi]);
    int par = z.parent(zi);
    if (par < 0) {
      for (int w : fiber[target])
        if (pf_min.test(w)) {
          assign[zi] = w;
          dfs(k + 1);
        }
    } else {
      int pw = assign[par];
      if (endpoint(pw) == target) {
        assign[zi] = pw;
        dfs(k + 1);
      }
      for (int w : above[pw])
        if (endpoint(w) == target) {
          assign[zi] = w;
          dfs(k + 1);
        }
    }
    assign[zi] = -1;
  }
};

}  // namespace

Certification certify_product_universal(
    const HForest& x, const HForest& y, int cone_cap,
    const std::vector<Bitset>* base_override) {
  require_valid(x);
  require_valid(y);
  Certification cert;
  ProductForest pf = forest_product(x.order, y.order);
  LazyTensorBase lt = lazy_base_tensor(x, y, pf);
  int nodes = (int)pf.carrier.size();
  cert.log.push_back("product carrier: " + std::to_string(nodes) + " nodes");

  std::unordered_set<Bitset, BitsetHash> override_set;
  if (base_override)
    override_set.insert(base_override->begin(), base_override->end());
  auto in_product_base = [&](const Bitset& s) {
    return base_override ? override_set.count(s) > 0 : lt.contains(s);
  };

  // The projections must be morphisms for the checked family.
  for (int side = 0; side < 2; ++side) {
    const std::vector<int>& pr = side == 0 ? pf.proj1 : pf.proj2;
    const HForest& fac = side == 0 ? x : y;
    if (!open_order_preserving(pf.order, fac.order, pr)) {
      cert.fail("projection is not an open order-preserving map");
      continue;
    }
    for (const Bitset& v : fac.base) {
      Bitset pre(nodes);
      for (int i = 0; i < nodes; ++i)
        if (v.test(pr[i])) pre.set(i);
      if (!in_product_base(pre)) {
        cert.fail("projection preimage of a factor base set escapes the "
                  "product family");
        break;
      }
    }
  }

  // Walk fibers over endpoint pairs, and cover lists, for the uniqueness
  // counts.
  std::vector<std::vector<int>> fiber(std::max(pf.s_n * pf.t_n, 1));
  for (int w = 0; w < nodes; ++w)
    fiber[pf.pair_index(pf.proj1[w], pf.proj2[w])].push_back(w);
  std::vector<std::vector<int>> above(nodes);
  for (auto [a, b] : pf.order.cover_pairs()) above[a].push_back(b);

  for (int m = 0; m <= cone_cap; ++m)
    for (const Poset& fz : enumerate_forests(m))
      for (const std::vector<Bitset>& bz : hbases_impl(fz, -1)) {
        HForest z;
        z.order = fz;
        z.base = bz;
        z.trusted = true;
        std::vector<ForestMap> maps_x = enumerate_forest_maps(z, x);
        if (maps_x.empty()) continue;
        std::vector<ForestMap> maps_y = enumerate_forest_maps(z, y);
        if (maps_y.empty()) continue;
        std::unordered_set<Bitset, BitsetHash> bz_set(bz.begin(), bz.end());

        for (const ForestMap& alpha : maps_x)
          for (const ForestMap& beta : maps_y) {
            ++cert.cones;
            ForestMap h = product_mediator(pf, fz, alpha.map, beta.map);
            ++cert.mediators;

            bool commutes = true;
            for (int i = 0; i < fz.n; ++i)
              if (pf.proj1[h.map[i]] != alpha.map[i] ||
                  pf.proj2[h.map[i]] != beta.map[i])
                commutes = false;
            if (!commutes) {
              cert.fail("mediator fails to commute with the projections");
              continue;
            }
            if (!open_order_preserving(fz, pf.order, h.map)) {
              cert.fail("mediator is not an open order-preserving map");
              continue;
            }

            // Preimages of the product family must land in the cone base.
            bool preimages_ok = true;
            if (base_override) {
              for (const Bitset& u : *base_override) {
                Bitset mask(fz.n);
                for (int i = 0; i < fz.n; ++i)
                  if (u.test(h.map[i])) mask.set(i);
                if (!bz_set.count(mask)) {
                  preimages_ok = false;
                  break;
                }
              }
            } else {
              std::vector<Bitset> pre(nodes, Bitset(fz.n));
              for (int w = 0; w < nodes; ++w)
                for (int i = 0; i < fz.n; ++i)
                  if (pf.order.leq(w, h.map[i])) pre[w].set(i);
              for (int w = 0; w < nodes && preimages_ok; ++w)
                if (!bz_set.count(pre[w])) preimages_ok = false;

              // Non-principal family members are generated by subsets of
              // a projection-preimage minimal family, so they pull back to
              // unions of principal pullbacks. Shortcut: when the union
              // closure of all principal pullbacks stays inside the cone
              // base, so does every per-family union.
              auto union_closed = [&](const std::vector<Bitset>& gens) {
                std::vector<Bitset> closure{Bitset(fz.n)};
                for (const Bitset& mask : gens) {
                  std::size_t sz = closure.size();
                  for (std::size_t c = 0; c < sz; ++c) {
                    Bitset u = closure[c] | mask;
                    if (std::find(closure.begin(), closure.end(), u) ==
                        closure.end())
                      closure.push_back(u);
                  }
                }
                for (const Bitset& u : closure)
                  if (!bz_set.count(u)) return false;
                return true;
              };
              auto distinct_masks = [&](const Bitset& walks) {
                std::vector<Bitset> gens;
                for (int t = walks.next(0); t >= 0; t = walks.next(t + 1))
                  if (std::find(gens.begin(), gens.end(), pre[t]) ==
                      gens.end())
                    gens.push_back(pre[t]);
                return gens;
              };
              if (preimages_ok) {
                std::vector<Bitset> all;
                for (int w = 0; w < nodes; ++w)
                  if (std::find(all.begin(), all.end(), pre[w]) == all.end())
                    all.push_back(pre[w]);
                if (!union_closed(all)) {
                  for (const Bitset& mset : lt.minimal_sets)
                    if (!union_closed(distinct_masks(mset))) {
                      preimages_ok = false;
                      break;
                    }
                }
              }
            }
            if (!preimages_ok) {
              cert.fail("mediator preimage of a product family set escapes "
                        "the cone base");
              continue;
            }

            CommutingCount cc(fz, pf, above, fiber, alpha.map, beta.map);
            cc.dfs(0);
            if (cc.count != 1) {
              cert.fail("found " + std::to_string(cc.count) +
                        " commuting open maps instead of exactly one");
              continue;
            }
            if (cc.survivor != h.map)
              cert.fail("the unique commuting open map differs from the "
                        "mediator");
          }
      }
  cert.log.push_back("cones checked: " + std::to_string(cert.cones));
  return cert;
}

namespace {

// Shared per-(f,g) verification: commutation against the (possibly
// overridden) injections, bound preservation, hom identities on the
// generation trace and sampled pairs, and uniqueness.
struct CoconeCheck {
  Certification& cert;
  const Algebra& k;

  void check_commutes(const std::vector<int>& m, const std::vector<int>& inj,
                      const std::vector<int>& leg, const char* side) {
    for (std::size_t a = 0; a < leg.size(); ++a)
      if (m[inj[a]] != leg[a]) {
        cert.fail(std::string("mediator fails to commute with the ") + side +
                  " injection");
        return;
      }
  }

  template <typename Imp>
  void check_hom(const std::vector<int>& m, int n,
                 const std::vector<std::array<int, 3>>& steps, Imp&& imp) {
    for (const auto& st : steps)
      if (m[st[2]] != k.imp[m[st[0]]][m[st[1]]]) {
        cert.fail("mediator breaks a generation-step identity");
        return;
      }
    if (n <= 64) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (m[imp(u, v)] != k.imp[m[u]][m[v]]) {
            cert.fail("mediator is not a homomorphism");
            return;
          }
    } else {
      unsigned long long s = 0x9e3779b97f4a7c15ull;
      for (int trial = 0; trial < 20000; ++trial) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        int u = (int)((s >> 16) % (unsigned)n);
        int v = (int)((s >> 40) % (unsigned)n);
        if (m[imp(u, v)] != k.imp[m[u]][m[v]]) {
          cert.fail("mediator is not a homomorphism");
          return;
        }
      }
    }
  }

  // Exhaustive cross-check on small universes: among all homs of the
  // materialized coproduct into k, exactly one commutes with both legs.
  void check_unique(const Algebra& result, bool require_zero,
                    const std::vector<int>& inj_l,
                    const std::vector<int>& inj_r,
                    const std::vector<int>& f, const std::vector<int>& g,
                    const std::vector<int>& m) {
    if (result.n > 64) return;
    int found = 0;
    bool matches_mediator = false;
    for (const Hom& cand : enumerate_homs(result, k, require_zero)) {
      bool commutes = true;
      for (std::size_t a = 0; a < f.size() && commutes; ++a)
        if (cand.map[inj_l[a]] != f[a]) commutes = false;
      for (std::size_t b = 0; b < g.size() && commutes; ++b)
        if (cand.map[inj_r[b]] != g[b]) commutes = false;
      if (commutes) {
        ++found;
        if (cand.map == m) matches_mediator = true;
      }
    }
    if (found != 1)
      cert.fail("hom search found " + std::to_string(found) +
                " factorizations instead of exactly one");
    else if (!matches_mediator)
      cert.fail("the unique factorization differs from the mediator");
  }
};

}  // namespace

Certification certify_coproduct_universal(
    const Algebra& h, const Algebra& g, int target_cap,
    const std::vector<int>* inj_override) {
  if (h.bounded() != g.bounded())
    throw InputError("coproduct factors must both be bounded or both "
                     "unbounded");
  Certification cert;

  if (h.bounded()) {
    CoproductData cd = coproduct_bounded(h, g);
    for (const std::string& line : cd.log) cert.log.push_back(line);
    const std::vector<int>& inj_l =
        inj_override ? *inj_override : cd.inj_left;
    std::vector<Algebra> targets = enumerate_bph_algebras(target_cap);
    cert.log.push_back("targets: " + std::to_string(targets.size()));

    for (const Algebra& k : targets) {
      std::vector<Hom> fs = enumerate_homs(h, k, /*require_zero=*/true);
      if (fs.empty()) continue;
      std::vector<Hom> gs = enumerate_homs(g, k, /*require_zero=*/true);
      CoconeCheck cc{cert, k};
      for (const Hom& f : fs)
        for (const Hom& g2 : gs) {
          ++cert.cones;
          std::vector<int> m = mediator_bounded(cd, k, f.map, g2.map);
          ++cert.mediators;
          cc.check_commutes(m, inj_l, f.map, "left");
          cc.check_commutes(m, cd.inj_right, g2.map, "right");
          if (m[cd.view.zero] != k.zero || m[cd.view.one] != k.one)
            cert.fail("mediator fails to preserve the bounds");
          cc.check_hom(m, cd.view.n(), cd.trace.steps,
                       [&](int u, int v) { return cd.view.imp(u, v); });
          if (cd.materialized)
            cc.check_unique(cd.result, true, inj_l, cd.inj_right, f.map,
                            g2.map, m);
        }
    }
  } else {
    UnboundedCoproduct uc = coproduct_unbounded(h, g);
    for (const std::string& line : uc.base.log) cert.log.push_back(line);
    const std::vector<int>& inj_l =
        inj_override ? *inj_override : uc.inj_left;
    std::vector<Algebra> targets = enumerate_phil_algebras(target_cap);
    cert.log.push_back("targets: " + std::to_string(targets.size()));

    int n = (int)uc.members.size();
    std::vector<std::array<int, 3>> steps;
    for (const auto& st : uc.trace.steps)
      steps.push_back({uc.position_of(st[0]), uc.position_of(st[1]),
                       uc.position_of(st[2])});

    for (const Algebra& k : targets) {
      std::vector<Hom> fs = enumerate_homs(h, k, /*require_zero=*/false);
      if (fs.empty()) continue;
      std::vector<Hom> gs = enumerate_homs(g, k, /*require_zero=*/false);
      CoconeCheck cc{cert, k};
      for (const Hom& f : fs)
        for (const Hom& g2 : gs) {
          ++cert.cones;
          std::vector<int> m = mediator_unbounded(uc, k, f.map, g2.map);
          ++cert.mediators;
          cc.check_commutes(m, inj_l, f.map, "left");
          cc.check_commutes(m, uc.inj_right, g2.map, "right");
          if (m[uc.position_of(uc.base.view.one)] != k.one)
            cert.fail("mediator fails to preserve the top");
          cc.check_hom(m, n, steps, [&](int u, int v) {
            return uc.position_of(
                uc.base.view.imp(uc.members[u], uc.members[v]));
          });
          if (uc.materialized)
            cc.check_unique(uc.result, false, inj_l, uc.inj_right, f.map,
                            g2.map, m);
        }
    }
  }
  cert.log.push_back("cocones checked: " + std::to_string(cert.cones));
  return cert;
}

}  // namespace hilfor
