#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hilfor/bitset.hpp"

namespace hilfor {

// Finite partial order on {0, ..., n-1}, stored as up-sets and down-sets per
// element so that closure operations are cheap word-parallel unions.
struct Poset {
  int n = 0;
  std::vector<Bitset> up;    // up[i]   = { j : i <= j }
  std::vector<Bitset> down;  // down[i] = { j : j <= i }

  Poset() = default;
  explicit Poset(int n_) : n(n_), up(n_, Bitset(n_)), down(n_, Bitset(n_)) {
    for (int i = 0; i < n; ++i) {
      up[i].set(i);
      down[i].set(i);
    }
  }

  bool leq(int a, int b) const { return up[a].test(b); }

  // Declares a <= b and reflexive/transitive consequences. Only usable while
  // building; finish() recomputes the closure.
  void add_leq(int a, int b) { up[a].set(b); }

  // Reflexive-transitive closure of whatever add_leq recorded, then rebuilds
  // the down-sets. Throws InputError if the result is not antisymmetric.
  void finish();

  bool is_valid() const;

  Bitset upset_of(const Bitset& s) const {
    Bitset r(n);
    for (int i = s.next(0); i >= 0; i = s.next(i + 1)) r |= up[i];
    return r;
  }
  Bitset downset_of(const Bitset& s) const {
    Bitset r(n);
    for (int i = s.next(0); i >= 0; i = s.next(i + 1)) r |= down[i];
    return r;
  }
  bool is_upset(const Bitset& s) const { return upset_of(s) == s; }
  bool is_downset(const Bitset& s) const { return downset_of(s) == s; }

  Bitset carrier() const {
    Bitset r(n);
    for (int i = 0; i < n; ++i) r.set(i);
    return r;
  }

  // Minimal elements of s within the induced subposet.
  Bitset minimals_in(const Bitset& s) const {
    Bitset r(n);
    for (int i = s.next(0); i >= 0; i = s.next(i + 1))
      if (!(down[i] & s).minus(single(i)).any()) r.set(i);
    return r;
  }
  Bitset maximals_in(const Bitset& s) const {
    Bitset r(n);
    for (int i = s.next(0); i >= 0; i = s.next(i + 1))
      if (!(up[i] & s).minus(single(i)).any()) r.set(i);
    return r;
  }
  Bitset minimals() const { return minimals_in(carrier()); }

  Bitset single(int i) const {
    Bitset r(n);
    r.set(i);
    return r;
  }

  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  // Chain test on an arbitrary subset.
  bool is_chain(const Bitset& s) const {
    auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (!comparable(m[i], m[j])) return false;
    return true;
  }

  // Every principal down-set is a chain.
  bool is_forest() const {
    for (int i = 0; i < n; ++i)
      if (!is_chain(down[i])) return false;
    return true;
  }

  // Every principal up-set is a chain.
  bool is_root_system() const {
    for (int i = 0; i < n; ++i)
      if (!is_chain(up[i])) return false;
    return true;
  }

  bool is_total() const { return is_chain(carrier()); }

  // b covers a: a < b with nothing strictly between.
  bool covers(int a, int b) const;

  std::vector<std::pair<int, int>> cover_pairs() const;

  // In a forest, the unique lower cover of i, or -1 if i is minimal.
  int parent(int i) const;

  // Indices in an order compatible with <= (parents first).
  std::vector<int> topo_order() const;

  Poset reversed() const;

  // The order restricted to the members of s, reindexed by ascending member.
  Poset restrict(const Bitset& s) const;
};

}  // namespace hilfor
