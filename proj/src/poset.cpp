#include "hilfor/poset.hpp"

#include <algorithm>

#include "hilfor/error.hpp"

namespace hilfor {

void Poset::finish() {
  // Warshall closure on the up-sets.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && up[i].test(j) && up[j].test(i))
        throw InputError("order relation is not antisymmetric at " +
                         std::to_string(i) + "," + std::to_string(j));
  for (int i = 0; i < n; ++i) down[i] = Bitset(n);
  for (int i = 0; i < n; ++i)
    for (int j = up[i].next(0); j >= 0; j = up[i].next(j + 1))
      down[j].set(i);
}

bool Poset::is_valid() const {
  if ((int)up.size() != n || (int)down.size() != n) return false;
  for (int i = 0; i < n; ++i) {
    if (up[i].universe() != n || down[i].universe() != n) return false;
    if (!up[i].test(i) || !down[i].test(i)) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (up[i].test(j) != down[j].test(i)) return false;
      if (i != j && up[i].test(j) && up[j].test(i)) return false;
      if (up[i].test(j) && !up[j].subset_of(up[i])) return false;
    }
  return true;
}

bool Poset::covers(int a, int b) const {
  if (a == b || !leq(a, b)) return false;
  Bitset between = up[a] & down[b];
  return between.count() == 2;  // just a and b
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (covers(a, b)) out.emplace_back(a, b);
  return out;
}

int Poset::parent(int i) const {
  Bitset below = down[i].minus(single(i));
  if (!below.any()) return -1;
  // In a forest the strict down-set is a chain; its maximum is the parent.
  int best = below.next(0);
  for (int j = below.next(best + 1); j >= 0; j = below.next(j + 1))
    if (leq(best, j)) best = j;
  return best;
}

std::vector<int> Poset::topo_order() const {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    int da = down[a].count(), db = down[b].count();
    if (da != db) return da < db;
    return a < b;
  });
  return idx;
}

Poset Poset::reversed() const {
  Poset r(n);
  r.up = down;
  r.down = up;
  return r;
}

Poset Poset::restrict(const Bitset& s) const {
  auto m = s.members();
  int k = (int)m.size();
  Poset r(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (leq(m[i], m[j])) r.up[i].set(j);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (r.up[i].test(j)) r.down[j].set(i);
  return r;
}

}  // namespace hilfor
