#include "hilfor/algebra.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "hilfor/error.hpp"

namespace hilfor {

namespace {

std::string inst2(const Algebra& h, int a, int b) {
  return "(" + h.label(a) + "," + h.label(b) + ")";
}
std::string inst3(const Algebra& h, int a, int b, int c) {
  return "(" + h.label(a) + "," + h.label(b) + "," + h.label(c) + ")";
}

void check_shape(const Algebra& h) {
  if (h.n <= 0) throw InputError("algebra needs at least one element");
  if ((int)h.imp.size() != h.n)
    throw InputError("implication table has " + std::to_string(h.imp.size()) +
                     " rows, expected " + std::to_string(h.n));
  for (int a = 0; a < h.n; ++a) {
    if ((int)h.imp[a].size() != h.n)
      throw InputError("implication table row " + std::to_string(a) +
                       " has wrong length");
    for (int b = 0; b < h.n; ++b)
      if (h.imp[a][b] < 0 || h.imp[a][b] >= h.n)
        throw InputError("table entry at " + inst2(h, a, b) +
                         " is out of range");
  }
  if (h.one < 0 || h.one >= h.n) throw InputError("top index out of range");
  if (h.zero < -1 || h.zero >= h.n)
    throw InputError("bottom index out of range");
}

}  // namespace

ValidationReport validate_algebra(const Algebra& h) {
  check_shape(h);
  ValidationReport r;

  bool ok = true;
  for (int a = 0; a < h.n && ok; ++a)
    for (int b = 0; b < h.n && ok; ++b)
      if (h.imp[a][h.imp[b][a]] != h.one) {
        r.fail("axiom a->(b->a)=1", "at " + inst2(h, a, b));
        ok = false;
      }
  if (ok) r.pass("axiom a->(b->a)=1");

  ok = true;
  for (int a = 0; a < h.n && ok; ++a)
    for (int b = 0; b < h.n && ok; ++b)
      for (int c = 0; c < h.n && ok; ++c) {
        int lhs = h.imp[a][h.imp[b][c]];
        int rhs = h.imp[h.imp[a][b]][h.imp[a][c]];
        if (h.imp[lhs][rhs] != h.one) {
          r.fail("axiom (a->(b->c))->((a->b)->(a->c))=1",
                 "at " + inst3(h, a, b, c));
          ok = false;
        }
      }
  if (ok) r.pass("axiom (a->(b->c))->((a->b)->(a->c))=1");

  ok = true;
  for (int a = 0; a < h.n && ok; ++a)
    for (int b = a + 1; b < h.n && ok; ++b)
      if (h.imp[a][b] == h.one && h.imp[b][a] == h.one) {
        r.fail("axiom a->b=b->a=1 implies a=b", "at " + inst2(h, a, b));
        ok = false;
      }
  if (ok) r.pass("axiom a->b=b->a=1 implies a=b");

  if (h.bounded()) {
    ok = true;
    for (int a = 0; a < h.n && ok; ++a)
      if (h.imp[h.zero][a] != h.one) {
        r.fail("bottom 0<=a", "at " + h.label(a));
        ok = false;
      }
    if (ok) r.pass("bottom 0<=a");
  }
  return r;
}

void require_valid(const Algebra& h) {
  if (h.trusted) {
    check_shape(h);
    return;
  }
  ValidationReport r = validate_algebra(h);
  if (!r.valid) throw InputError("invalid algebra: " + r.failure);
}

Poset natural_order(const Algebra& h) {
  require_valid(h);
  Poset p(h.n);
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      if (h.imp[a][b] == h.one) {
        p.up[a].set(b);
        p.down[b].set(a);
      }
  return p;
}

int prelinearity_term(const Algebra& h, int a, int b, int c) {
  int x = h.imp[h.imp[a][b]][c];
  int y = h.imp[h.imp[b][a]][c];
  return h.imp[x][h.imp[y][c]];
}

std::optional<std::array<int, 3>> check_prelinear(const Algebra& h) {
  require_valid(h);
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      for (int c = 0; c < h.n; ++c)
        if (prelinearity_term(h, a, b, c) != h.one)
          return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

namespace {

// Least element of s in the natural order, if s has one.
std::optional<int> least_of(const Algebra& h, const Bitset& s) {
  for (int m = s.next(0); m >= 0; m = s.next(m + 1)) {
    bool below_all = true;
    for (int x = s.next(0); x >= 0 && below_all; x = s.next(x + 1))
      if (h.imp[m][x] != h.one) below_all = false;
    if (below_all) return m;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> join(const Algebra& h, int a, int b) {
  require_valid(h);
  Bitset ub(h.n);
  for (int c = 0; c < h.n; ++c)
    if (h.imp[a][c] == h.one && h.imp[b][c] == h.one) ub.set(c);
  return least_of(h, ub);
}

std::optional<int> meet(const Algebra& h, int a, int b) {
  require_valid(h);
  Bitset lb(h.n);
  for (int c = 0; c < h.n; ++c)
    if (h.imp[c][a] == h.one && h.imp[c][b] == h.one) lb.set(c);
  // greatest of lb
  for (int m = lb.next(0); m >= 0; m = lb.next(m + 1)) {
    bool above_all = true;
    for (int x = lb.next(0); x >= 0 && above_all; x = lb.next(x + 1))
      if (h.imp[x][m] != h.one) above_all = false;
    if (above_all) return m;
  }
  return std::nullopt;
}

int godel_join_formula(const Algebra& h, int a, int b) {
  require_valid(h);
  int x = h.imp[h.imp[a][b]][b];
  int y = h.imp[h.imp[b][a]][a];
  auto m = meet(h, x, y);
  if (!m)
    throw DomainError("natural order is not a meet-semilattice: no meet of " +
                      h.label(x) + " and " + h.label(y));
  return *m;
}

GenerationTrace saturate_under_imp(int n,
                                   const std::function<int(int, int)>& f,
                                   const std::vector<int>& seeds) {
  GenerationTrace t;
  t.members = Bitset(n);
  std::vector<int> order;
  for (int s : seeds)
    if (!t.members.test(s)) {
      t.members.set(s);
      order.push_back(s);
    }
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int x = order[qi];
    for (std::size_t j = 0; j <= qi; ++j) {
      int y = order[j];
      for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
        int w = f(u, v);
        if (!t.members.test(w)) {
          t.members.set(w);
          t.steps.push_back({u, v, w});
          order.push_back(w);
        }
        if (u == v) break;
      }
    }
  }
  return t;
}

Bitset generated_subalgebra(const Algebra& h, const Bitset& s,
                            bool with_zero) {
  require_valid(h);
  if (s.universe() != h.n) throw InputError("generator set universe mismatch");
  if (with_zero && !h.bounded())
    throw InputError("algebra has no bottom to include");
  std::vector<int> seeds = s.members();
  seeds.push_back(h.one);
  if (with_zero) seeds.push_back(h.zero);
  auto f = [&](int a, int b) { return h.imp[a][b]; };
  return saturate_under_imp(h.n, f, seeds).members;
}

namespace {

bool is_filter(const Algebra& h, const Bitset& f) {
  if (f.universe() != h.n || !f.test(h.one)) return false;
  for (int a = f.next(0); a >= 0; a = f.next(a + 1))
    for (int b = 0; b < h.n; ++b)
      if (f.test(h.imp[a][b]) && !f.test(b)) return false;
  return true;
}

}  // namespace

QuotientResult quotient(const Algebra& h, const Bitset& filter) {
  require_valid(h);
  if (!is_filter(h, filter))
    throw InputError("quotient requires an implicative filter");

  std::vector<int> rep(h.n, -1);
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b <= a; ++b)
      if (filter.test(h.imp[a][b]) && filter.test(h.imp[b][a])) {
        rep[a] = b;
        break;
      }
  std::vector<int> reps;
  for (int a = 0; a < h.n; ++a)
    if (rep[a] == a) reps.push_back(a);

  QuotientResult q;
  q.class_of.resize(h.n);
  std::vector<int> idx_of(h.n, -1);
  for (int i = 0; i < (int)reps.size(); ++i) idx_of[reps[i]] = i;
  for (int a = 0; a < h.n; ++a) q.class_of[a] = idx_of[rep[a]];

  int m = (int)reps.size();
  q.alg.n = m;
  q.alg.imp.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      q.alg.imp[i][j] = q.class_of[h.imp[reps[i]][reps[j]]];
  q.alg.one = q.class_of[h.one];
  q.alg.zero = h.bounded() ? q.class_of[h.zero] : -1;
  q.alg.trusted = true;
  return q;
}

bool is_homomorphism(const Algebra& h, const Algebra& k,
                     const std::vector<int>& map, bool require_zero) {
  require_valid(h);
  require_valid(k);
  if ((int)map.size() != h.n) return false;
  for (int v : map)
    if (v < 0 || v >= k.n) return false;
  if (map[h.one] != k.one) return false;
  if (require_zero) {
    if (!h.bounded() || !k.bounded())
      throw InputError("bottom preservation requested on unbounded algebra");
    if (map[h.zero] != k.zero) return false;
  }
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      if (map[h.imp[a][b]] != k.imp[map[a]][map[b]]) return false;
  return true;
}

namespace {

// Greedily picks elements until seeds + picks generate everything.
std::vector<int> greedy_generators(const Algebra& h,
                                   const std::vector<int>& seeds) {
  std::vector<int> gens;
  auto f = [&](int a, int b) { return h.imp[a][b]; };
  for (;;) {
    std::vector<int> all = seeds;
    all.insert(all.end(), gens.begin(), gens.end());
    Bitset cl = saturate_under_imp(h.n, f, all).members;
    if ((int)cl.count() == h.n) return gens;
    int pick = -1;
    for (int x = 0; x < h.n; ++x)
      if (!cl.test(x)) {
        pick = x;
        break;
      }
    gens.push_back(pick);
  }
}

struct HomSearch {
  const Algebra& h;
  const Algebra& k;
  std::vector<int> seeds;
  std::vector<int> gens;
  long long cap;
  long long visited = 0;
  std::vector<Hom> out;

  // img[x] = -1 when not yet forced.
  bool propagate(std::vector<int>& img, int depth) {
    std::vector<int> base = seeds;
    for (int i = 0; i < depth; ++i) base.push_back(gens[i]);
    auto f = [&](int a, int b) { return h.imp[a][b]; };
    GenerationTrace t = saturate_under_imp(h.n, f, base);
    for (auto& st : t.steps) {
      int forced = k.imp[img[st[0]]][img[st[1]]];
      if (img[st[2]] == -1)
        img[st[2]] = forced;
      else if (img[st[2]] != forced)
        return false;
    }
    // Full consistency on the closed set: the trace forces each element
    // once, but every pair must agree with the target table.
    auto mem = t.members.members();
    for (int a : mem)
      for (int b : mem)
        if (img[h.imp[a][b]] != k.imp[img[a]][img[b]]) return false;
    return true;
  }

  void dfs(std::vector<int> img, int depth) {
    if (++visited > cap)
      throw ResourceError("homomorphism search exceeded candidate cap");
    if (depth == (int)gens.size()) {
      out.push_back(Hom{img});
      return;
    }
    for (int v = 0; v < k.n; ++v) {
      std::vector<int> next = img;
      next[gens[depth]] = v;
      if (propagate(next, depth + 1)) dfs(std::move(next), depth + 1);
    }
  }
};

}  // namespace

std::vector<Hom> enumerate_homs(const Algebra& h, const Algebra& k,
                                bool require_zero, long long cap) {
  require_valid(h);
  require_valid(k);
  if (require_zero && (!h.bounded() || !k.bounded()))
    throw InputError("bottom preservation requested on unbounded algebra");

  std::vector<int> seeds{h.one};
  if (require_zero) seeds.push_back(h.zero);

  HomSearch search{h, k, seeds, greedy_generators(h, seeds), cap, 0, {}};
  std::vector<int> img(h.n, -1);
  img[h.one] = k.one;
  if (require_zero) img[h.zero] = k.zero;
  if (search.propagate(img, 0)) search.dfs(std::move(img), 0);
  std::sort(search.out.begin(), search.out.end(),
            [](const Hom& a, const Hom& b) { return a.map < b.map; });
  return search.out;
}

namespace {

// Iterated refinement of element colors by the implication table; the
// resulting classes bound the isomorphism backtracking.
std::vector<long long> refine_colors(const Algebra& a) {
  Poset ord = natural_order(a);
  std::vector<long long> col(a.n);
  for (int i = 0; i < a.n; ++i)
    col[i] = (long long)ord.up[i].count() * 1000003 + ord.down[i].count() * 31 +
             (i == a.one ? 7 : 0) + (i == a.zero ? 11 : 0);
  for (int round = 0; round < a.n; ++round) {
    std::vector<long long> next(a.n);
    for (int i = 0; i < a.n; ++i) {
      std::vector<long long> sig;
      sig.reserve(2 * a.n);
      for (int j = 0; j < a.n; ++j) {
        sig.push_back(col[j] * 3 + col[a.imp[i][j]]);
        sig.push_back(col[j] * 5 + col[a.imp[j][i]]);
      }
      std::sort(sig.begin(), sig.end());
      long long acc = col[i];
      for (long long s : sig) acc = acc * 1000000007LL + s + 0x9e3779b9;
      next[i] = acc;
    }
    if (next == col) break;
    col = next;
  }
  return col;
}

// Partial consistency: whenever both arguments and the table result are
// already mapped, the images must agree. Sound (never prunes a real
// isomorphism); the leaf runs the complete check.
bool iso_consistent(const Algebra& h, const Algebra& k,
                    const std::vector<int>& map, int x) {
  for (int z = 0; z <= x; ++z) {
    if (map[z] == -1) continue;
    int w1 = h.imp[x][z], w2 = h.imp[z][x];
    if (map[w1] != -1 && map[w1] != k.imp[map[x]][map[z]]) return false;
    if (map[w2] != -1 && map[w2] != k.imp[map[z]][map[x]]) return false;
  }
  return true;
}

bool iso_dfs(const Algebra& h, const Algebra& k,
             const std::vector<long long>& ch, const std::vector<long long>& ck,
             std::vector<int>& map, std::vector<bool>& used, int x) {
  if (x == h.n) return is_homomorphism(h, k, map, h.bounded());
  for (int y = 0; y < k.n; ++y) {
    if (used[y] || ch[x] != ck[y]) continue;
    map[x] = y;
    used[y] = true;
    if (iso_consistent(h, k, map, x) &&
        iso_dfs(h, k, ch, ck, map, used, x + 1))
      return true;
    map[x] = -1;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Algebra& h,
                                                 const Algebra& k) {
  require_valid(h);
  require_valid(k);
  if (h.n != k.n || h.bounded() != k.bounded()) return std::nullopt;
  std::vector<long long> ch = refine_colors(h), ck = refine_colors(k);
  {
    std::vector<long long> sh = ch, sk = ck;
    std::sort(sh.begin(), sh.end());
    std::sort(sk.begin(), sk.end());
    if (sh != sk) return std::nullopt;
  }
  std::vector<int> map(h.n, -1);
  std::vector<bool> used(k.n, false);
  if (!iso_dfs(h, k, ch, ck, map, used, 0)) return std::nullopt;
  return map;
}

Algebra two_element_algebra() {
  Algebra a;
  a.n = 2;
  a.imp = {{1, 1}, {0, 1}};
  a.one = 1;
  a.zero = 0;
  a.labels = {"0", "1"};
  return a;
}

Algebra godel_chain(int n) {
  if (n < 1) throw InputError("chain needs at least one element");
  Algebra a;
  a.n = n;
  a.imp.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a.imp[x][y] = x <= y ? n - 1 : y;
  a.one = n - 1;
  a.zero = 0;
  return a;
}

Algebra godel_chain_unbounded(int n) {
  Algebra a = godel_chain(n);
  a.zero = -1;
  return a;
}

Algebra upset_implication_algebra(const Poset& p) {
  if (!p.is_valid()) throw InputError("not a valid poset");
  if (p.n > 20) throw ResourceError("upset scan capped at 20 poset elements");
  std::vector<Bitset> ups;
  for (unsigned long long m = 0; m < (1ULL << p.n); ++m) {
    Bitset s(p.n);
    for (int i = 0; i < p.n; ++i)
      if (m >> i & 1) s.set(i);
    if (p.is_upset(s)) ups.push_back(s);
  }
  std::sort(ups.begin(), ups.end(), size_value_less);

  auto index_of = [&](const Bitset& s) {
    for (int i = 0; i < (int)ups.size(); ++i)
      if (ups[i] == s) return i;
    throw InternalError("upset family not closed under implication");
  };

  Algebra a;
  a.n = (int)ups.size();
  a.imp.assign(a.n, std::vector<int>(a.n));
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      // Heyting implication on upsets: drop everything whose upset meets
      // the difference.
      Bitset diff = ups[i].minus(ups[j]);
      Bitset bad = p.downset_of(diff);
      a.imp[i][j] = index_of(bad.complement());
    }
  a.zero = 0;          // empty upset sorts first
  a.one = a.n - 1;     // full carrier sorts last
  return a;
}

}  // namespace hilfor
