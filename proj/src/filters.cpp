#include "hilfor/filters.hpp"

#include <algorithm>

#include "hilfor/caps.hpp"
#include "hilfor/error.hpp"

namespace hilfor {

bool is_implicative_filter(const Algebra& h, const Bitset& f) {
  require_valid(h);
  if (f.universe() != h.n || !f.test(h.one)) return false;
  for (int a = f.next(0); a >= 0; a = f.next(a + 1))
    for (int b = 0; b < h.n; ++b)
      if (f.test(h.imp[a][b]) && !f.test(b)) return false;
  return true;
}

Bitset generated_filter(const Algebra& h, const Bitset& x) {
  require_valid(h);
  if (x.universe() != h.n) throw InputError("generator set universe mismatch");
  Bitset f = x;
  f.set(h.one);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = f.next(0); a >= 0; a = f.next(a + 1))
      for (int b = 0; b < h.n; ++b)
        if (f.test(h.imp[a][b]) && !f.test(b)) {
          f.set(b);
          grew = true;
        }
  }
  return f;
}

bool filter_membership_by_nesting(const Algebra& h, const Bitset& x, int y) {
  require_valid(h);
  Bitset reach(h.n);
  reach.set(y);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int t = reach.next(0); t >= 0; t = reach.next(t + 1))
      for (int a = x.next(0); a >= 0; a = x.next(a + 1))
        if (!reach.test(h.imp[a][t])) {
          reach.set(h.imp[a][t]);
          grew = true;
        }
  }
  return reach.test(h.one) || y == h.one;
}

namespace {

void antichain_dfs(const Poset& ord, std::vector<int>& chosen, int from,
                   const Algebra& h, std::vector<Bitset>& out) {
  if (!chosen.empty()) {
    Bitset s(h.n);
    for (int c : chosen) s |= ord.up[c];
    bool closed = true;
    for (int a = s.next(0); a >= 0 && closed; a = s.next(a + 1))
      for (int b = 0; b < h.n && closed; ++b)
        if (s.test(h.imp[a][b]) && !s.test(b)) closed = false;
    if (closed) out.push_back(s);
  }
  for (int j = from; j < ord.n; ++j) {
    bool anti = true;
    for (int c : chosen)
      if (ord.comparable(c, j)) {
        anti = false;
        break;
      }
    if (!anti) continue;
    chosen.push_back(j);
    antichain_dfs(ord, chosen, j + 1, h, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Bitset> enumerate_filters(const Algebra& h, int cap) {
  require_valid(h);
  if (h.n > effective_cap(cap))
    throw ResourceError("filter enumeration capped at " +
                        std::to_string(effective_cap(cap)) + " elements");
  Poset ord = natural_order(h);
  std::vector<Bitset> out;
  std::vector<int> chosen;
  antichain_dfs(ord, chosen, 0, h, out);
  std::sort(out.begin(), out.end(), size_value_less);
  return out;
}

bool is_irreducible(const Algebra& h, const Bitset& f) {
  if (!is_implicative_filter(h, f))
    throw InputError("irreducibility asked of a non-filter");
  if ((int)f.count() == h.n) return false;  // not proper
  Bitset outside = f.complement();
  for (int a = outside.next(0); a >= 0; a = outside.next(a + 1))
    for (int b = outside.next(a); b >= 0; b = outside.next(b + 1)) {
      bool found = false;
      for (int c = outside.next(0); c >= 0 && !found;
           c = outside.next(c + 1))
        if (h.imp[a][c] == h.one && h.imp[b][c] == h.one) found = true;
      if (!found) return false;
    }
  return true;
}

Spectrum spectrum(const Algebra& h, int cap) {
  Spectrum s;
  for (const Bitset& f : enumerate_filters(h, cap))
    if (is_irreducible(h, f)) s.points.push_back(f);
  int m = (int)s.points.size();
  s.order = Poset(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (s.points[i].subset_of(s.points[j])) s.order.up[i].set(j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (s.order.up[i].test(j)) s.order.down[j].set(i);
  return s;
}

Bitset separating_irreducible(const Algebra& h, const Bitset& f,
                              const Bitset& i, int cap) {
  if (!is_implicative_filter(h, f))
    throw InputError("separation needs an implicative filter");
  if (i.universe() != h.n || i.none())
    throw InputError("separation needs a nonempty order ideal");
  Poset ord = natural_order(h);
  if (!ord.is_downset(i)) throw InputError("ideal is not downward closed");
  for (int a = i.next(0); a >= 0; a = i.next(a + 1))
    for (int b = i.next(a); b >= 0; b = i.next(b + 1)) {
      bool found = false;
      for (int c = i.next(0); c >= 0 && !found; c = i.next(c + 1))
        if (ord.leq(a, c) && ord.leq(b, c)) found = true;
      if (!found)
        throw InputError("ideal is not upward directed at " + h.label(a) +
                         "," + h.label(b));
    }
  if (f.intersects(i)) throw InputError("filter and ideal are not disjoint");

  std::vector<Bitset> witnesses;
  for (const Bitset& p : enumerate_filters(h, cap))
    if (is_irreducible(h, p) && f.subset_of(p) && !p.intersects(i))
      witnesses.push_back(p);
  if (witnesses.empty())
    throw InternalError("no separating irreducible filter found");
  // enumerate_filters is (size, bitmask)-sorted, so the first witness that
  // has no strictly smaller witness inside it is the canonical minimal one.
  for (const Bitset& w : witnesses) {
    bool minimal = true;
    for (const Bitset& v : witnesses)
      if (v != w && v.subset_of(w)) {
        minimal = false;
        break;
      }
    if (minimal) return w;
  }
  throw InternalError("witness set lost its minimal element");
}

Bitset phi(const Algebra& h, const Spectrum& spec, int a) {
  if (a < 0 || a >= h.n) throw InputError("element index out of range");
  Bitset r((int)spec.points.size());
  for (int p = 0; p < (int)spec.points.size(); ++p)
    if (spec.points[p].test(a)) r.set(p);
  return r;
}

}  // namespace hilfor
