#include "hilfor/product.hpp"

#include <algorithm>
#include <unordered_set>

#include "hilfor/caps.hpp"
#include "hilfor/error.hpp"

namespace hilfor {

namespace {

bool walk_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::vector<int>> upper_covers(const Poset& p) {
  std::vector<std::vector<int>> c(p.n);
  for (auto [a, b] : p.cover_pairs()) c[a].push_back(b);
  return c;
}

}  // namespace

std::vector<std::vector<int>> u_successions(const Poset& f) {
  if (!f.is_valid()) throw InputError("not a poset");
  if (!f.is_forest()) throw InputError("u-successions need a forest");
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  // Extend by any strictly greater element; chains need not be saturated.
  std::function<void(int)> grow = [&](int last) {
    out.push_back(chain);
    Bitset above = f.up[last];
    for (int x = above.next(0); x >= 0; x = above.next(x + 1)) {
      if (x == last) continue;
      chain.push_back(x);
      grow(x);
      chain.pop_back();
    }
  };
  Bitset mins = f.minimals();
  for (int m = mins.next(0); m >= 0; m = mins.next(m + 1)) {
    chain.assign(1, m);
    grow(m);
  }
  std::sort(out.begin(), out.end(), walk_less);
  return out;
}

int ProductForest::index_of(const std::vector<int>& walk) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), walk, walk_less);
  if (it == carrier.end() || *it != walk) return -1;
  return (int)(it - carrier.begin());
}

ProductForest forest_product(const Poset& s, const Poset& t) {
  if (!s.is_valid() || !t.is_valid()) throw InputError("not a poset");
  if (!s.is_forest() || !t.is_forest())
    throw InputError("forest product needs forests");

  ProductForest pf;
  pf.s_n = s.n;
  pf.t_n = t.n;

  pf.grid = Poset(s.n * t.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < t.n; ++b)
      for (int c = 0; c < s.n; ++c)
        for (int d = 0; d < t.n; ++d)
          if (s.leq(a, c) && t.leq(b, d))
            pf.grid.up[pf.pair_index(a, b)].set(pf.pair_index(c, d));
  for (int i = 0; i < pf.grid.n; ++i)
    for (int j = 0; j < pf.grid.n; ++j)
      if (pf.grid.up[i].test(j)) pf.grid.down[j].set(i);

  std::vector<std::vector<int>> s_cov = upper_covers(s);
  std::vector<std::vector<int>> t_cov = upper_covers(t);

  long long cap = effective_cap(200000);

  // A carrier member is exactly a walk that starts at a minimal pair and
  // moves by a cover step in one or both coordinates: any coordinate jump
  // would skip an element of the projected principal downset.
  std::vector<int> walk;
  std::function<void(int, int)> grow = [&](int a, int b) {
    pf.carrier.push_back(walk);
    if ((long long)pf.carrier.size() > cap)
      throw ResourceError("forest product exceeds the walk cap");
    for (int a2 : s_cov[a]) {
      walk.push_back(pf.pair_index(a2, b));
      grow(a2, b);
      walk.pop_back();
    }
    for (int b2 : t_cov[b]) {
      walk.push_back(pf.pair_index(a, b2));
      grow(a, b2);
      walk.pop_back();
    }
    for (int a2 : s_cov[a])
      for (int b2 : t_cov[b]) {
        walk.push_back(pf.pair_index(a2, b2));
        grow(a2, b2);
        walk.pop_back();
      }
  };
  Bitset s_min = s.minimals(), t_min = t.minimals();
  for (int a = s_min.next(0); a >= 0; a = s_min.next(a + 1))
    for (int b = t_min.next(0); b >= 0; b = t_min.next(b + 1)) {
      walk.assign(1, pf.pair_index(a, b));
      grow(a, b);
      walk.pop_back();
    }

  std::sort(pf.carrier.begin(), pf.carrier.end(), walk_less);

  int n = (int)pf.carrier.size();
  pf.order = Poset(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& p = pf.carrier[i];
      const auto& q = pf.carrier[j];
      if (p.size() <= q.size() &&
          std::equal(p.begin(), p.end(), q.begin()))
        pf.order.up[i].set(j);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pf.order.up[i].test(j)) pf.order.down[j].set(i);

  pf.proj1.reserve(n);
  pf.proj2.reserve(n);
  for (const auto& p : pf.carrier) {
    pf.proj1.push_back(pf.pair_s(p.back()));
    pf.proj2.push_back(pf.pair_t(p.back()));
  }
  return pf;
}

ForestMap product_mediator(const ProductForest& pf, const Poset& f,
                           const std::vector<int>& alpha,
                           const std::vector<int>& beta) {
  if (!f.is_forest()) throw InputError("mediator source must be a forest");
  if ((int)alpha.size() != f.n || (int)beta.size() != f.n)
    throw InputError("cone map length does not match the source");
  ForestMap h;
  h.map.reserve(f.n);
  for (int x = 0; x < f.n; ++x) {
    std::vector<int> trace;
    for (int g = f.down[x].next(0); g >= 0; g = f.down[x].next(g + 1))
      trace.push_back(pf.pair_index(alpha[g], beta[g]));
    std::sort(trace.begin(), trace.end(), [&](int u, int v) {
      return u != v && pf.grid.leq(u, v);
    });
    trace.erase(std::unique(trace.begin(), trace.end()), trace.end());
    int idx = pf.index_of(trace);
    if (idx < 0)
      throw InternalError("mediator trace is not a carrier walk");
    h.map.push_back(idx);
  }
  return h;
}

namespace {

// Minimal sets of all projection preimages of factor base sets, the data
// both the eager and the lazy tensor need.
std::vector<Bitset> preimage_minimal_sets(const HForest& x, const HForest& y,
                                          const ProductForest& pf) {
  std::vector<Bitset> out;
  int n = (int)pf.carrier.size();
  for (int side = 0; side < 2; ++side) {
    const std::vector<Bitset>& fam = (side == 0 ? x.base : y.base);
    const std::vector<int>& proj = (side == 0 ? pf.proj1 : pf.proj2);
    for (const Bitset& v : fam) {
      Bitset pre(n);
      for (int i = 0; i < n; ++i)
        if (v.test(proj[i])) pre.set(i);
      out.push_back(pf.order.minimals_in(pre));
    }
  }
  return out;
}

}  // namespace

BaseTensor base_tensor(const HForest& x, const HForest& y,
                       const ProductForest& pf, bool close_base,
                       int minimal_cap) {
  require_valid(x);
  require_valid(y);
  int n = (int)pf.carrier.size();
  int cap = effective_cap(minimal_cap);

  BaseTensor bt;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto add = [&](const Bitset& s) {
    if (seen.insert(s).second) bt.family.push_back(s);
  };

  for (int u = 0; u < n; ++u) add(pf.order.up[u]);
  bt.audit_log.push_back("principal upsets: " + std::to_string(n));

  std::vector<Bitset> min_sets = preimage_minimal_sets(x, y, pf);
  for (const Bitset& mins : min_sets) {
    int k = mins.count();
    if (k > cap)
      throw ResourceError(
          "projection preimage has " + std::to_string(k) +
          " minimals; subset enumeration capped at " + std::to_string(cap));
    std::vector<int> m = mins.members();
    for (long long pick = 0; pick < (1LL << k); ++pick) {
      Bitset t(n);
      for (int i = 0; i < k; ++i)
        if ((pick >> i) & 1) t.set(m[i]);
      add(pf.order.upset_of(t));
    }
    bt.audit_log.push_back("preimage minimal set of size " +
                           std::to_string(k) + ": " +
                           std::to_string(1LL << k) + " subsets");
  }

  canonicalize_family(bt.family);
  bt.audit_log.push_back("clause family size: " +
                         std::to_string(bt.family.size()));

  // Closure audit under both h-base characterizations. The clause family
  // is provably closed, so additions signal a construction bug; they are
  // surfaced, and only the close_base variant keeps going.
  std::vector<Bitset> closed = bt.family;
  std::unordered_set<Bitset, BitsetHash> in(closed.begin(), closed.end());
  for (std::size_t i = 0; i < closed.size(); ++i) {
    Bitset mins = pf.order.minimals_in(closed[i]);
    for (int v = mins.next(0); v >= 0; v = mins.next(v + 1)) {
      Bitset m = mins;
      m.reset(v);
      Bitset gen = pf.order.upset_of(m);
      if (in.insert(gen).second) {
        closed.push_back(gen);
        bt.added.push_back(gen);
      }
    }
    for (std::size_t j = 0; j < closed.size(); ++j) {
      Bitset gen = pf.order.upset_of(closed[i].minus(closed[j]));
      if (in.insert(gen).second) {
        closed.push_back(gen);
        bt.added.push_back(gen);
      }
      if (i < closed.size() && j < closed.size()) {
        Bitset gen2 = pf.order.upset_of(closed[j].minus(closed[i]));
        if (in.insert(gen2).second) {
          closed.push_back(gen2);
          bt.added.push_back(gen2);
        }
      }
    }
  }
  if (!bt.added.empty()) {
    bt.audit_log.push_back("closure audit ADDED " +
                           std::to_string(bt.added.size()) + " sets");
    if (!close_base)
      throw InternalError(
          "base tensor clauses are not closed; the audit had to add " +
          std::to_string(bt.added.size()) + " sets");
    bt.family = closed;
    canonicalize_family(bt.family);
  } else {
    bt.audit_log.push_back("closure audit added nothing");
  }
  return bt;
}

bool LazyTensorBase::contains(const Bitset& s) const {
  if (s.universe() != nodes) return false;
  if (!order->is_upset(s)) return false;
  Bitset mins = order->minimals_in(s);
  if (mins.count() <= 1) return true;
  for (const Bitset& m : minimal_sets)
    if (mins.subset_of(m)) return true;
  return false;
}

LazyTensorBase lazy_base_tensor(const HForest& x, const HForest& y,
                                const ProductForest& pf) {
  require_valid(x);
  require_valid(y);
  LazyTensorBase lb;
  lb.nodes = (int)pf.carrier.size();
  lb.order = &pf.order;
  lb.minimal_sets = preimage_minimal_sets(x, y, pf);
  return lb;
}

ProductSpace product_space(const HForest& x, const HForest& y,
                           bool close_base, int minimal_cap) {
  ProductSpace ps;
  ps.pf = forest_product(x.order, y.order);
  ps.audit = base_tensor(x, y, ps.pf, close_base, minimal_cap);
  ps.forest.order = ps.pf.order;
  ps.forest.base = ps.audit.family;
  ps.forest.trusted = true;
  ps.proj1.map = ps.pf.proj1;
  ps.proj2.map = ps.pf.proj2;
  if (!is_forest_map(ps.forest, x, ps.proj1) ||
      !is_forest_map(ps.forest, y, ps.proj2))
    throw InternalError("product projections fail to be morphisms");
  return ps;
}

}  // namespace hilfor
