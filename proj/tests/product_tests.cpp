#include "doctest.h"

#include <algorithm>
#include <vector>

#include "hilfor/error.hpp"
#include "hilfor/forest.hpp"
#include "hilfor/poset.hpp"
#include "hilfor/product.hpp"

using namespace hilfor;

namespace {

Poset chain_poset(int n) {
  Poset p(n);
  for (int i = 0; i + 1 < n; ++i) p.add_leq(i, i + 1);
  p.finish();
  return p;
}

Poset v_poset() {
  Poset p(3);
  p.add_leq(0, 1);
  p.add_leq(0, 2);
  p.finish();
  return p;
}

Poset antichain(int n) {
  Poset p(n);
  p.finish();
  return p;
}

std::vector<Bitset> all_upsets_of(const Poset& p) {
  std::vector<Bitset> out;
  for (long long mask = 0; mask < (1LL << p.n); ++mask) {
    Bitset s(p.n);
    for (int i = 0; i < p.n; ++i)
      if ((mask >> i) & 1) s.set(i);
    if (p.is_upset(s)) out.push_back(s);
  }
  canonicalize_family(out);
  return out;
}

HForest full_space(const Poset& order) {
  HForest fs;
  fs.order = order;
  fs.base = all_upsets_of(order);
  return fs;
}

bool family_has(const std::vector<Bitset>& fam, const Bitset& s) {
  return std::find(fam.begin(), fam.end(), s) != fam.end();
}

}  // namespace

TEST_CASE("chains from the ground are enumerated in canonical order") {
  std::vector<std::vector<int>> two = u_successions(chain_poset(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == std::vector<int>{0});
  CHECK(two[1] == std::vector<int>{0, 1});

  std::vector<std::vector<int>> vee = u_successions(v_poset());
  REQUIRE(vee.size() == 3);
  CHECK(vee[0] == std::vector<int>{0});
  CHECK(vee[1] == std::vector<int>{0, 1});
  CHECK(vee[2] == std::vector<int>{0, 2});

  CHECK(u_successions(antichain(2)).size() == 2);
  // Chains need not be saturated: the three-chain also has the jump {0,2}.
  std::vector<std::vector<int>> three = u_successions(chain_poset(3));
  REQUIRE(three.size() == 4);
  CHECK(three[2] == std::vector<int>{0, 2});
  CHECK(three[3] == std::vector<int>{0, 1, 2});

  Poset not_forest(3);
  not_forest.add_leq(0, 2);
  not_forest.add_leq(1, 2);
  not_forest.finish();
  CHECK_THROWS_AS(u_successions(not_forest), InputError);
}

TEST_CASE("product of two two-chains is the six-walk forest") {
  ProductForest pf = forest_product(chain_poset(2), chain_poset(2));
  REQUIRE(pf.order.n == 6);
  CHECK(pf.s_n == 2);
  CHECK(pf.t_n == 2);

  int root = pf.index_of({0});
  int a = pf.index_of({0, pf.pair_index(0, 1)});
  int b = pf.index_of({0, pf.pair_index(1, 0)});
  int c = pf.index_of({0, pf.pair_index(1, 1)});
  int d = pf.index_of({0, pf.pair_index(0, 1), pf.pair_index(1, 1)});
  int e = pf.index_of({0, pf.pair_index(1, 0), pf.pair_index(1, 1)});
  for (int w : {root, a, b, c, d, e}) REQUIRE(w >= 0);
  CHECK(pf.index_of({pf.pair_index(1, 1)}) == -1);

  CHECK(pf.order.is_forest());
  CHECK(pf.order.minimals() == pf.order.single(root));
  CHECK(pf.order.leq(root, d));
  CHECK(pf.order.leq(a, d));
  CHECK(!pf.order.leq(a, e));
  CHECK(!pf.order.comparable(c, d));
  CHECK(pf.order.maximals_in(pf.order.carrier()).count() == 3);

  CHECK(pf.proj1[root] == 0);
  CHECK(pf.proj2[root] == 0);
  CHECK(pf.proj1[a] == 0);
  CHECK(pf.proj2[a] == 1);
  CHECK(pf.proj1[c] == 1);
  CHECK(pf.proj2[c] == 1);
  CHECK(pf.proj1[e] == 1);
  CHECK(pf.proj2[e] == 1);

  CHECK(pf.grid.leq(pf.pair_index(0, 0), pf.pair_index(1, 1)));
  CHECK(!pf.grid.comparable(pf.pair_index(0, 1), pf.pair_index(1, 0)));
}

TEST_CASE("mediator traces the commuting walk") {
  ProductForest pf = forest_product(chain_poset(2), chain_poset(2));
  Poset z = chain_poset(3);
  std::vector<int> alpha{0, 1, 1};
  std::vector<int> beta{0, 0, 1};
  ForestMap h = product_mediator(pf, z, alpha, beta);
  REQUIRE(h.map.size() == 3);
  CHECK(h.map[0] == pf.index_of({0}));
  CHECK(h.map[1] == pf.index_of({0, pf.pair_index(1, 0)}));
  CHECK(h.map[2] == pf.index_of({0, pf.pair_index(1, 0), pf.pair_index(1, 1)}));
  for (int i = 0; i < 3; ++i) {
    CHECK(pf.proj1[h.map[i]] == alpha[i]);
    CHECK(pf.proj2[h.map[i]] == beta[i]);
  }
  HForest src = full_space(z);
  ProductSpace ps = product_space(full_space(chain_poset(2)),
                                  full_space(chain_poset(2)));
  CHECK(is_forest_map(src, ps.forest, h));

  // A cone whose legs are not open cannot be traced: the walk would have
  // to start off the ground.
  Poset flat = antichain(2);
  CHECK_THROWS_AS(product_mediator(pf, flat, {0, 1}, {0, 0}), InternalError);
}

TEST_CASE("tensor family of two full two-chains has fifteen sets") {
  HForest x = full_space(chain_poset(2));
  ProductForest pf = forest_product(x.order, x.order);
  BaseTensor bt = base_tensor(x, x, pf);
  CHECK(bt.family.size() == 15);
  CHECK(bt.added.empty());
  CHECK(!bt.audit_log.empty());

  int root = pf.index_of({0});
  Bitset empty(6), carrier(6);
  for (int i = 0; i < 6; ++i) carrier.set(i);
  CHECK(family_has(bt.family, empty));
  CHECK(family_has(bt.family, carrier));
  for (int w = 0; w < 6; ++w)
    CHECK(family_has(bt.family, pf.order.upset_of(pf.order.single(w))));
  // The full powerset of upsets is bigger: the two depth-one walks heading
  // in different coordinates never share a covering base set.
  int a = pf.index_of({0, pf.pair_index(0, 1)});
  int b = pf.index_of({0, pf.pair_index(1, 0)});
  Bitset ab(6);
  ab.set(a);
  ab.set(b);
  CHECK(!family_has(bt.family, pf.order.upset_of(ab)));
  CHECK(root >= 0);
}

TEST_CASE("lazy membership agrees with the materialized family") {
  struct Pair {
    Poset s, t;
  };
  std::vector<Pair> pairs = {{chain_poset(2), chain_poset(2)},
                             {antichain(2), chain_poset(2)},
                             {antichain(2), antichain(2)},
                             {chain_poset(3), chain_poset(2)}};
  for (const Pair& pr : pairs) {
    HForest x = full_space(pr.s);
    HForest y = full_space(pr.t);
    ProductForest pf = forest_product(pr.s, pr.t);
    REQUIRE(pf.order.n <= 12);
    BaseTensor bt = base_tensor(x, y, pf);
    LazyTensorBase lt = lazy_base_tensor(x, y, pf);
    CHECK(lt.nodes == pf.order.n);
    for (long long mask = 0; mask < (1LL << pf.order.n); ++mask) {
      Bitset s(pf.order.n);
      for (int i = 0; i < pf.order.n; ++i)
        if ((mask >> i) & 1) s.set(i);
      if (!pf.order.is_upset(s)) continue;
      CHECK(lt.contains(s) == family_has(bt.family, s));
    }
  }
}

TEST_CASE("materializing a four-chain tensor trips the resource cap") {
  HForest c4 = full_space(chain_poset(4));
  ProductForest pf = forest_product(c4.order, c4.order);
  CHECK(pf.order.n == 160);
  CHECK_THROWS_AS(base_tensor(c4, c4, pf), ResourceError);

  // The lazy view handles the same product without materializing.
  LazyTensorBase lt = lazy_base_tensor(c4, c4, pf);
  Bitset carrier(160);
  for (int i = 0; i < 160; ++i) carrier.set(i);
  CHECK(lt.contains(carrier));
  CHECK(lt.contains(Bitset(160)));
  int deep = -1;
  for (int w = 0; w < 160; ++w)
    if (pf.order.upset_of(pf.order.single(w)).count() == 1) deep = w;
  REQUIRE(deep >= 0);
  CHECK(lt.contains(pf.order.single(deep)));
}

TEST_CASE("product space packages valid projections") {
  struct Pair {
    Poset s, t;
  };
  std::vector<Pair> pairs = {{chain_poset(2), chain_poset(2)},
                             {antichain(2), chain_poset(2)},
                             {v_poset(), chain_poset(2)}};
  for (const Pair& pr : pairs) {
    HForest x = full_space(pr.s);
    HForest y = full_space(pr.t);
    ProductSpace ps = product_space(x, y, true);
    CHECK(ps.forest.trusted);
    CHECK(validate_forest_space(ps.forest).valid);
    CHECK(is_forest_map(ps.forest, x, ps.proj1));
    CHECK(is_forest_map(ps.forest, y, ps.proj2));
    for (int w = 0; w < ps.pf.order.n; ++w) {
      CHECK(ps.proj1.map[w] == ps.pf.proj1[w]);
      CHECK(ps.proj2.map[w] == ps.pf.proj2[w]);
    }
  }
}
