#include "hilfor/coproduct.hpp"

#include <algorithm>
#include <unordered_map>

#include "hilfor/caps.hpp"
#include "hilfor/error.hpp"

namespace hilfor {

Algebra zero_extension(const Algebra& h) {
  Algebra e;
  e.n = h.n + 1;
  e.one = h.one;
  e.zero = h.n;
  e.imp.assign(e.n, std::vector<int>(e.n, 0));
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b) e.imp[a][b] = h.imp[a][b];
  for (int b = 0; b < e.n; ++b) e.imp[e.zero][b] = e.one;
  for (int a = 0; a < h.n; ++a) e.imp[a][e.zero] = e.zero;
  if (!h.labels.empty()) {
    e.labels = h.labels;
    e.labels.resize(e.n);
    e.labels[e.zero] = "0";
  }
  e.trusted = h.trusted;
  return e;
}

std::vector<int> hom_zero_extension(const std::vector<int>& f,
                                    const Algebra& h, const Algebra& k) {
  if ((int)f.size() != h.n)
    throw InputError("hom has the wrong source size");
  std::vector<int> e(f);
  e.push_back(k.n);  // new bottom of H0 to new bottom of K0
  return e;
}

namespace {

// Downset of the product carrier pulled back from a factor downset given
// by a membership predicate on factor nodes.
Bitset pull_back(const ProductForest& pf, const std::vector<int>& proj,
                 const std::vector<char>& member) {
  Bitset s((int)pf.carrier.size());
  for (int i = 0; i < (int)pf.carrier.size(); ++i)
    if (member[proj[i]]) s.set(i);
  return s;
}

std::vector<int> injection(const CoproductData& c, const DualSpace& dual,
                           const std::vector<int>& proj, int n) {
  std::vector<int> inj(n, -1);
  int points = dual.forest.order.n;
  for (int a = 0; a < n; ++a) {
    std::vector<char> member(std::max(points, 1), 0);
    for (int p = 0; p < points; ++p)
      if (dual.point_filters[p].test(a)) member[p] = 1;
    Bitset down = pull_back(c.prod.pf, proj, member);
    inj[a] = c.view.index_of(down);
    if (inj[a] < 0)
      throw InternalError("injected image is not a coproduct element");
  }
  return inj;
}

void check_injection_is_hom(const Algebra& h, const CoproductData& c,
                            const std::vector<int>& inj) {
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      if (c.view.imp(inj[a], inj[b]) != inj[h.imp[a][b]])
        throw InternalError("injection fails to preserve implication");
  if (inj[h.one] != c.view.one || inj[h.zero] != c.view.zero)
    throw InternalError("injection fails to preserve the bounds");
}

}  // namespace

CoproductData coproduct_bounded(const Algebra& h, const Algebra& g,
                                int materialize_cap) {
  require_valid(h);
  require_valid(g);
  CoproductData c;
  c.left = h;
  c.right = g;
  c.dual_left = dual_space(h, std::max(14, h.n));
  c.dual_right = dual_space(g, std::max(14, g.n));
  c.prod = product_space(c.dual_left.forest, c.dual_right.forest,
                         /*close_base=*/true);
  c.view = downset_algebra(c.prod.forest);

  for (const std::string& line : c.prod.audit.audit_log) c.log.push_back(line);
  if (!c.prod.audit.added.empty())
    c.log.push_back("clause family was not closed; coproduct computed over "
                    "the closed family (" +
                    std::to_string(c.prod.audit.added.size()) +
                    " sets added)");

  c.inj_left = injection(c, c.dual_left, c.prod.pf.proj1, h.n);
  c.inj_right = injection(c, c.dual_right, c.prod.pf.proj2, g.n);
  check_injection_is_hom(h, c, c.inj_left);
  check_injection_is_hom(g, c, c.inj_right);

  std::vector<int> seeds = c.inj_left;
  seeds.insert(seeds.end(), c.inj_right.begin(), c.inj_right.end());
  seeds.push_back(c.view.zero);
  c.trace = saturate_under_imp(
      c.view.n(), [&](int u, int v) { return c.view.imp(u, v); }, seeds);
  if ((int)c.trace.members.count() != c.view.n())
    throw InternalError("coproduct universe is not generated by the "
                        "injected images");
  c.log.push_back("generated from the injected images and 0: " +
                  std::to_string(c.view.n()) + " elements");

  if (c.view.n() <= effective_cap(materialize_cap)) {
    c.result = c.view.materialize(std::max(materialize_cap, c.view.n()));
    c.materialized = true;
  }
  return c;
}

std::vector<int> mediator_bounded(const CoproductData& c, const Algebra& k,
                                  const std::vector<int>& f,
                                  const std::vector<int>& g) {
  if (!is_homomorphism(c.left, k, f, /*require_zero=*/true))
    throw InputError("left factorization map is not a bounded "
                     "homomorphism");
  if (!is_homomorphism(c.right, k, g, /*require_zero=*/true))
    throw InputError("right factorization map is not a bounded "
                     "homomorphism");

  DualSpace dual_k = dual_space(k, std::max(14, k.n));
  ForestMap alpha = dual_of_hom(f, c.dual_left, dual_k);
  ForestMap beta = dual_of_hom(g, c.dual_right, dual_k);
  ForestMap med = product_mediator(c.prod.pf, dual_k.forest.order, alpha.map,
                                   beta.map);
  // Pulling back along a valid morphism always yields a homomorphism, so
  // checking the dual map here certifies the mediator without scanning
  // every pair of a possibly huge coproduct universe.
  if (!is_forest_map(dual_k.forest, c.prod.forest, med))
    throw InternalError("dual of the mediator is not a morphism of forest "
                        "spaces");
  DownsetAlgebra dk = downset_algebra(dual_k.forest);
  std::vector<int> pulled = hom_of_map(med, c.view, dk);

  std::vector<int> iso = duality_iso(k, dual_k, dk);
  std::vector<int> inv(iso.size(), -1);
  for (int a = 0; a < (int)iso.size(); ++a) inv[iso[a]] = a;

  std::vector<int> m;
  m.reserve(pulled.size());
  for (int v : pulled) m.push_back(inv[v]);

  for (int a = 0; a < c.left.n; ++a)
    if (m[c.inj_left[a]] != f[a])
      throw InternalError("mediator does not commute with the left "
                          "injection");
  for (int b = 0; b < c.right.n; ++b)
    if (m[c.inj_right[b]] != g[b])
      throw InternalError("mediator does not commute with the right "
                          "injection");
  return m;
}

int UnboundedCoproduct::position_of(int view_index) const {
  auto it = std::lower_bound(members.begin(), members.end(), view_index);
  if (it == members.end() || *it != view_index) return -1;
  return (int)(it - members.begin());
}

UnboundedCoproduct coproduct_unbounded(const Algebra& h, const Algebra& g,
                                       int materialize_cap) {
  if (h.bounded() || g.bounded())
    throw InputError("unbounded coproduct expects algebras without a "
                     "designated bottom");
  UnboundedCoproduct u;
  u.left = h;
  u.right = g;
  u.base = coproduct_bounded(zero_extension(h), zero_extension(g),
                             materialize_cap);

  std::vector<int> seeds;
  for (int a = 0; a < h.n; ++a) seeds.push_back(u.base.inj_left[a]);
  for (int b = 0; b < g.n; ++b) seeds.push_back(u.base.inj_right[b]);
  u.trace = saturate_under_imp(
      u.base.view.n(), [&](int x, int y) { return u.base.view.imp(x, y); },
      seeds);
  for (int i = u.trace.members.next(0); i >= 0;
       i = u.trace.members.next(i + 1))
    u.members.push_back(i);

  u.inj_left.reserve(h.n);
  for (int a = 0; a < h.n; ++a)
    u.inj_left.push_back(u.position_of(u.base.inj_left[a]));
  u.inj_right.reserve(g.n);
  for (int b = 0; b < g.n; ++b)
    u.inj_right.push_back(u.position_of(u.base.inj_right[b]));

  int n = (int)u.members.size();
  if (n <= effective_cap(materialize_cap)) {
    Algebra a;
    a.n = n;
    a.imp.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a.imp[i][j] = u.position_of(u.base.view.imp(u.members[i],
                                                    u.members[j]));
        if (a.imp[i][j] < 0)
          throw InternalError("generated members are not closed under "
                              "implication");
      }
    a.one = u.position_of(u.base.view.one);
    a.zero = -1;
    a.trusted = true;
    u.result = a;
    u.materialized = true;
  }
  return u;
}

std::vector<int> mediator_unbounded(const UnboundedCoproduct& c,
                                    const Algebra& k,
                                    const std::vector<int>& f,
                                    const std::vector<int>& g) {
  if (k.bounded())
    throw InputError("unbounded mediator expects a target without a "
                     "designated bottom");
  if (!is_homomorphism(c.left, k, f, /*require_zero=*/false))
    throw InputError("left factorization map is not a homomorphism");
  if (!is_homomorphism(c.right, k, g, /*require_zero=*/false))
    throw InputError("right factorization map is not a homomorphism");

  Algebra k0 = zero_extension(k);
  std::vector<int> f0 = hom_zero_extension(f, c.left, k);
  std::vector<int> g0 = hom_zero_extension(g, c.right, k);
  std::vector<int> m0 = mediator_bounded(c.base, k0, f0, g0);

  std::vector<int> m;
  m.reserve(c.members.size());
  for (int v : c.members) {
    if (m0[v] == k0.zero)
      throw InternalError("mediator escapes into the adjoined bottom");
    m.push_back(m0[v]);
  }
  for (int a = 0; a < c.left.n; ++a)
    if (m[c.inj_left[a]] != f[a])
      throw InternalError("mediator does not commute with the left "
                          "injection");
  for (int b = 0; b < c.right.n; ++b)
    if (m[c.inj_right[b]] != g[b])
      throw InternalError("mediator does not commute with the right "
                          "injection");
  return m;
}

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= (std::size_t)(x + 1);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Tuples over a fixed list of chain sizes, closed under pointwise Goedel
// implication.
struct TupleClosure {
  std::vector<int> sizes;  // chain size per coordinate
  std::vector<std::vector<int>> elements;
  std::unordered_map<std::vector<int>, int, TupleHash> index;

  int add(const std::vector<int>& t) {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    int id = (int)elements.size();
    elements.push_back(t);
    index.emplace(t, id);
    return id;
  }

  std::vector<int> imp(const std::vector<int>& a,
                       const std::vector<int>& b) const {
    std::vector<int> r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
      r[j] = a[j] <= b[j] ? sizes[j] - 1 : b[j];
    return r;
  }

  void saturate() {
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (std::size_t j = 0; j < elements.size(); ++j) {
        if (elements.size() > 1000000)
          throw ResourceError("free-algebra closure exceeded a million "
                              "tuples");
        add(imp(elements[i], elements[j]));
        add(imp(elements[j], elements[i]));
      }
  }
};

}  // namespace

Algebra free_algebra_oracle(int generators, int chain_cap, bool with_zero) {
  if (generators < 1 || generators > 3)
    throw InputError("free-algebra oracle supports 1 to 3 generators");
  chain_cap = effective_cap(chain_cap);
  if (chain_cap < 2)
    throw InputError("free-algebra oracle needs a chain cap of at least 2");

  int prev_size = -1;
  for (int top = 2; top <= chain_cap; ++top) {
    TupleClosure tc;
    // One coordinate per assignment of the generators into each chain of
    // size 2..top, cumulative so the embedding only refines.
    std::vector<std::vector<int>> assignments;
    for (int c = 2; c <= top; ++c) {
      std::vector<int> t(generators, 0);
      for (;;) {
        assignments.push_back(t);
        tc.sizes.push_back(c);
        int j = generators - 1;
        while (j >= 0 && t[j] == c - 1) t[j--] = 0;
        if (j < 0) break;
        ++t[j];
      }
    }
    std::vector<std::vector<int>> gens(generators);
    for (int i = 0; i < generators; ++i) {
      gens[i].resize(assignments.size());
      for (std::size_t a = 0; a < assignments.size(); ++a)
        gens[i][a] = assignments[a][i];
    }
    for (int i = 0; i < generators; ++i) tc.add(gens[i]);
    if (with_zero) tc.add(std::vector<int>(assignments.size(), 0));
    tc.saturate();

    int size = (int)tc.elements.size();
    if (size == prev_size) {
      std::vector<std::vector<int>> sorted = tc.elements;
      std::sort(sorted.begin(), sorted.end());
      std::unordered_map<std::vector<int>, int, TupleHash> pos;
      for (int i = 0; i < size; ++i) pos.emplace(sorted[i], i);

      Algebra alg;
      alg.n = size;
      alg.imp.assign(size, std::vector<int>(size, -1));
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
          alg.imp[i][j] = pos.at(tc.imp(sorted[i], sorted[j]));
      std::vector<int> ones(assignments.size());
      for (std::size_t a = 0; a < assignments.size(); ++a)
        ones[a] = tc.sizes[a] - 1;
      alg.one = pos.at(ones);
      alg.zero =
          with_zero ? pos.at(std::vector<int>(assignments.size(), 0)) : -1;
      alg.labels.assign(size, "");
      for (int i = 0; i < generators; ++i)
        alg.labels[pos.at(gens[i])] = "p" + std::to_string(i);
      alg.labels[alg.one] = "1";
      if (with_zero) alg.labels[alg.zero] = "0";
      return alg;
    }
    prev_size = size;
  }
  throw ResourceError("free-algebra size did not stabilize within the "
                      "chain cap");
}

}  // namespace hilfor
