#include "hilfor/envelope.hpp"

#include <algorithm>

#include "hilfor/caps.hpp"
#include "hilfor/error.hpp"
#include "hilfor/filters.hpp"

namespace hilfor {

ValidationReport validate_godel(const GodelAlgebra& g) {
  ValidationReport rep;
  ValidationReport reduct = validate_algebra(g.alg);
  if (reduct.valid)
    rep.pass("implicative-reduct");
  else
    rep.fail("implicative-reduct", reduct.failure);
  if (!rep.valid) return rep;

  if (g.alg.bounded())
    rep.pass("bounded");
  else
    rep.fail("bounded", "no designated bottom");

  int n = g.alg.n;
  if ((int)g.meet.size() != n || (int)g.join.size() != n) {
    rep.fail("lattice-tables", "meet/join tables have the wrong shape");
    return rep;
  }
  for (int a = 0; a < n; ++a)
    if ((int)g.meet[a].size() != n || (int)g.join[a].size() != n) {
      rep.fail("lattice-tables", "meet/join tables have the wrong shape");
      return rep;
    }

  bool meets_ok = true, joins_ok = true;
  for (int a = 0; a < n && (meets_ok || joins_ok); ++a)
    for (int b = 0; b < n; ++b) {
      if (meets_ok) {
        auto m = meet(g.alg, a, b);
        if (!m || *m != g.meet[a][b]) {
          rep.fail("meets", "meet table disagrees with the natural order "
                            "at (" + g.alg.label(a) + "," + g.alg.label(b) +
                            ")");
          meets_ok = false;
        }
      }
      if (joins_ok) {
        auto j = join(g.alg, a, b);
        if (!j || *j != g.join[a][b]) {
          rep.fail("joins", "join table disagrees with the natural order "
                            "at (" + g.alg.label(a) + "," + g.alg.label(b) +
                            ")");
          joins_ok = false;
        }
      }
    }
  if (meets_ok) rep.pass("meets");
  if (joins_ok) rep.pass("joins");

  bool resid_ok = true;
  for (int a = 0; a < n && resid_ok; ++a)
    for (int b = 0; b < n && resid_ok; ++b)
      for (int c = 0; c < n; ++c) {
        bool left = g.alg.leq(g.meet[a][b], c);
        bool right = g.alg.leq(a, g.alg.imp[b][c]);
        if (left != right) {
          rep.fail("residuation", "a and b |- c fails against b -> c at (" +
                                      g.alg.label(a) + "," + g.alg.label(b) +
                                      "," + g.alg.label(c) + ")");
          resid_ok = false;
          break;
        }
      }
  if (resid_ok) rep.pass("residuation");

  bool pre_ok = true;
  for (int a = 0; a < n && pre_ok; ++a)
    for (int b = 0; b < n; ++b)
      if (g.join[g.alg.imp[a][b]][g.alg.imp[b][a]] != g.alg.one) {
        rep.fail("prelinearity", "(a->b) v (b->a) != 1 at (" +
                                     g.alg.label(a) + "," + g.alg.label(b) +
                                     ")");
        pre_ok = false;
        break;
      }
  if (pre_ok) rep.pass("prelinearity");

  return rep;
}

void require_valid(const GodelAlgebra& g) {
  if (g.trusted) return;
  ValidationReport rep = validate_godel(g);
  if (!rep.valid) throw InputError("invalid Goedel algebra: " + rep.failure);
}

Envelope godel_envelope(const Algebra& h, int cap) {
  Envelope e;
  e.dual = dual_space(h, cap);
  const Poset& p = e.dual.forest.order;
  if (p.n > 20)
    throw ResourceError("envelope of a dual with more than 20 points");

  // Full base: every upset. The downset algebra over it carries every
  // downset of the dual, which is exactly the envelope universe.
  HForest full;
  full.order = p;
  for (long long m = 0; m < (1LL << p.n); ++m) {
    Bitset s(p.n);
    for (int i = 0; i < p.n; ++i)
      if ((m >> i) & 1) s.set(i);
    if (p.is_upset(s)) full.base.push_back(s);
  }
  canonicalize_family(full.base);
  full.trusted = true;

  DownsetAlgebra da = downset_algebra(full);
  e.universe = da.universe;
  e.star.alg = da.materialize();
  int n = e.star.alg.n;
  e.star.meet.assign(n, std::vector<int>(n, 0));
  e.star.join.assign(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      e.star.meet[u][v] = da.index_of(e.universe[u] & e.universe[v]);
      e.star.join[u][v] = da.index_of(e.universe[u] | e.universe[v]);
      if (e.star.meet[u][v] < 0 || e.star.join[u][v] < 0)
        throw InternalError("downsets are not closed under union or "
                            "intersection");
    }
  e.star.trusted = true;

  int m = p.n;
  for (int a = 0; a < h.n; ++a) {
    Bitset image(m);
    for (int i = 0; i < m; ++i)
      if (e.dual.point_filters[i].test(a)) image.set(i);
    int idx = da.index_of(image);
    if (idx < 0)
      throw InternalError("phi image is not a downset of the dual");
    e.psi.push_back(idx);
  }
  return e;
}

std::vector<int> semilattice_closure(const Envelope& e) {
  std::vector<char> in(e.universe.size(), 0);
  std::vector<int> work;
  for (int v : e.psi)
    if (!in[v]) {
      in[v] = 1;
      work.push_back(v);
    }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      int w = e.star.meet[work[i]][work[j]];
      if (!in[w]) {
        in[w] = 1;
        work.push_back(w);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

std::vector<int> star_hom(const Envelope& eh, const Envelope& eg,
                          const std::vector<int>& f) {
  ForestMap dual = dual_of_hom(f, eh.dual, eg.dual);
  int ng = eg.dual.forest.order.n;
  std::vector<int> s;
  s.reserve(eh.universe.size());
  for (const Bitset& u : eh.universe) {
    Bitset pre(ng);
    for (int j = 0; j < ng; ++j)
      if (u.test(dual.map[j])) pre.set(j);
    int idx = -1;
    for (int v = 0; v < (int)eg.universe.size(); ++v)
      if (eg.universe[v] == pre) {
        idx = v;
        break;
      }
    if (idx < 0)
      throw InternalError("preimage of a downset is not a downset");
    s.push_back(idx);
  }
  return s;
}

std::vector<int> factor_through_envelope(const Envelope& eh,
                                         const GodelAlgebra& g,
                                         const std::vector<int>& f) {
  require_valid(g);
  Envelope eg = godel_envelope(g.alg);
  if ((int)eg.universe.size() != g.alg.n)
    throw InternalError("a finite Goedel algebra must match its envelope");
  std::vector<int> psi_inv(g.alg.n, -1);
  for (int a = 0; a < g.alg.n; ++a) {
    if (psi_inv[eg.psi[a]] >= 0)
      throw InternalError("psi of a Goedel algebra must be injective");
    psi_inv[eg.psi[a]] = a;
  }
  std::vector<int> s = star_hom(eh, eg, f);
  std::vector<int> m;
  m.reserve(s.size());
  for (int v : s) m.push_back(psi_inv[v]);

  if (!is_heyting_hom(eh.star, g, m))
    throw InternalError("factorization is not a Heyting homomorphism");
  for (std::size_t a = 0; a < f.size(); ++a)
    if (m[eh.psi[a]] != f[a])
      throw InternalError("factorization does not extend the given hom");
  return m;
}

bool is_heyting_hom(const GodelAlgebra& a, const GodelAlgebra& b,
                    const std::vector<int>& map) {
  if ((int)map.size() != a.alg.n) return false;
  for (int v : map)
    if (v < 0 || v >= b.alg.n) return false;
  if (map[a.alg.one] != b.alg.one) return false;
  if (a.alg.zero < 0 || b.alg.zero < 0) return false;
  if (map[a.alg.zero] != b.alg.zero) return false;
  for (int x = 0; x < a.alg.n; ++x)
    for (int y = 0; y < a.alg.n; ++y) {
      if (map[a.alg.imp[x][y]] != b.alg.imp[map[x]][map[y]]) return false;
      if (map[a.meet[x][y]] != b.meet[map[x]][map[y]]) return false;
      if (map[a.join[x][y]] != b.join[map[x]][map[y]]) return false;
    }
  return true;
}

namespace {

struct HeytingSearch {
  const GodelAlgebra& a;
  const GodelAlgebra& b;
  std::vector<int> irr;          // join-irreducibles of a, small first
  std::vector<int> g;            // assignment on irr
  long long visited = 0;
  long long cap;
  std::vector<std::vector<int>> out;
  Poset ord_a;

  HeytingSearch(const GodelAlgebra& a_, const GodelAlgebra& b_,
                long long cap_)
      : a(a_), b(b_), cap(cap_), ord_a(natural_order(a_.alg)) {
    // Join-irreducible: exactly one lower cover.
    for (int x = 0; x < a.alg.n; ++x) {
      int covers = 0;
      for (int y = 0; y < a.alg.n; ++y)
        if (ord_a.covers(y, x)) ++covers;
      if (covers == 1) irr.push_back(x);
    }
    std::sort(irr.begin(), irr.end(), [&](int x, int y) {
      if (ord_a.down[x].count() != ord_a.down[y].count())
        return ord_a.down[x].count() < ord_a.down[y].count();
      return x < y;
    });
    g.assign(irr.size(), -1);
  }

  std::vector<int> extend() const {
    std::vector<int> h(a.alg.n, b.alg.zero);
    for (int x = 0; x < a.alg.n; ++x) {
      int acc = b.alg.zero;
      for (std::size_t k = 0; k < irr.size(); ++k)
        if (ord_a.leq(irr[k], x)) acc = b.join[acc][g[k]];
      h[x] = acc;
    }
    return h;
  }

  // Cheap necessary conditions on the partial assignment before the full
  // table scan: pairwise meet and implication agreement on irreducibles.
  bool leaf_plausible() const {
    std::vector<int> h = extend();
    for (std::size_t i = 0; i < irr.size(); ++i)
      for (std::size_t j = 0; j < irr.size(); ++j) {
        if (h[a.meet[irr[i]][irr[j]]] != b.meet[g[i]][g[j]]) return false;
        if (h[a.alg.imp[irr[i]][irr[j]]] != b.alg.imp[g[i]][g[j]])
          return false;
      }
    return true;
  }

  void dfs(std::size_t k) {
    if (++visited > cap)
      throw ResourceError("Heyting hom search exceeded the cap");
    if (k == irr.size()) {
      if (!leaf_plausible()) return;
      std::vector<int> h = extend();
      if (is_heyting_hom(a, b, h)) out.push_back(h);
      return;
    }
    for (int v = 0; v < b.alg.n; ++v) {
      bool mono = true;
      for (std::size_t j = 0; j < k && mono; ++j) {
        if (ord_a.leq(irr[j], irr[k]) && !b.alg.leq(g[j], v)) mono = false;
        if (ord_a.leq(irr[k], irr[j]) && !b.alg.leq(v, g[j])) mono = false;
      }
      if (!mono) continue;
      g[k] = v;
      dfs(k + 1);
      g[k] = -1;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> enumerate_heyting_homs(const GodelAlgebra& a,
                                                     const GodelAlgebra& b,
                                                     long long cap) {
  require_valid(a);
  require_valid(b);
  HeytingSearch search(a, b, cap);
  search.dfs(0);
  std::sort(search.out.begin(), search.out.end());
  return search.out;
}

std::vector<int> envelope_spectrum_iso(const Algebra& h, const Envelope& e,
                                       int cap) {
  Spectrum sh = spectrum(h, cap);
  Spectrum se = spectrum(e.star.alg, std::max(cap, e.star.alg.n));
  if (sh.points.size() != se.points.size())
    throw InternalError("envelope spectrum has the wrong size");
  int m = (int)se.points.size();
  std::vector<int> iso(m, -1);
  for (int i = 0; i < m; ++i) {
    Bitset pulled(h.n);
    for (int a = 0; a < h.n; ++a)
      if (se.points[i].test(e.psi[a])) pulled.set(a);
    for (int j = 0; j < m; ++j)
      if (sh.points[j] == pulled) {
        iso[i] = j;
        break;
      }
    if (iso[i] < 0)
      throw InternalError("pulled-back point is not a source point");
  }
  std::vector<char> hit(m, 0);
  for (int v : iso) hit[v] = 1;
  for (char c : hit)
    if (!c) throw InternalError("spectrum pullback is not a bijection");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool le = se.points[i].subset_of(se.points[j]);
      bool lh = sh.points[iso[i]].subset_of(sh.points[iso[j]]);
      if (le != lh)
        throw InternalError("spectrum pullback is not an order "
                            "isomorphism");
    }
  return iso;
}

}  // namespace hilfor
