#include "doctest.h"

#include <algorithm>

#include "hilfor/algebra.hpp"
#include "hilfor/error.hpp"
#include "hilfor/forest.hpp"
#include "hilfor/poset.hpp"

using namespace hilfor;

namespace {

Bitset of(int n, std::initializer_list<int> xs) {
  Bitset s(n);
  for (int x : xs) s.set(x);
  return s;
}

Poset chain_poset(int n) {
  Poset p(n);
  for (int i = 0; i + 1 < n; ++i) p.add_leq(i, i + 1);
  p.finish();
  return p;
}

// Root 0 with leaves 1 and 2.
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

HForest mk(const Poset& order, std::vector<Bitset> base) {
  HForest fs;
  fs.order = order;
  canonicalize_family(base);
  fs.base = std::move(base);
  return fs;
}

HForest full_space(const Poset& order) { return mk(order, all_upsets_of(order)); }

// Empty set, the principal upsets, and the carrier.
HForest minimal_space(const Poset& order) {
  std::vector<Bitset> base{Bitset(order.n), order.carrier()};
  for (int i = 0; i < order.n; ++i) base.push_back(order.upset_of(of(order.n, {i})));
  return mk(order, std::move(base));
}

Algebra lambda5() {
  Poset wedge(3);
  wedge.add_leq(0, 1);
  wedge.add_leq(0, 2);
  wedge.finish();
  return upset_implication_algebra(wedge);
}

}  // namespace

TEST_CASE("forest space validation accepts the standard fixtures") {
  CHECK(validate_forest_space(full_space(v_poset())).valid);
  CHECK(validate_forest_space(minimal_space(v_poset())).valid);
  CHECK(validate_forest_space(full_space(chain_poset(4))).valid);
  CHECK(validate_forest_space(minimal_space(chain_poset(3))).valid);
  CHECK(validate_forest_space(full_space(antichain(3))).valid);
  HForest empty = mk(Poset(0), {Bitset(0)});
  CHECK(validate_forest_space(empty).valid);
}

TEST_CASE("forest space validation flags each defect") {
  // Order that is not a forest: two roots under one top.
  Poset vee(3);
  vee.add_leq(0, 2);
  vee.add_leq(1, 2);
  vee.finish();
  CHECK(!validate_forest_space(full_space(vee)).valid);

  // Missing carrier.
  HForest no_carrier = mk(v_poset(), {Bitset(3), of(3, {1}), of(3, {2})});
  CHECK(!validate_forest_space(no_carrier).valid);

  // Missing a principal upset.
  HForest no_principal =
      mk(v_poset(), {Bitset(3), of(3, {1}), of(3, {0, 1, 2})});
  CHECK(!validate_forest_space(no_principal).valid);

  // A member that is not an upset.
  HForest not_upset = full_space(v_poset());
  not_upset.base.push_back(of(3, {0, 1}));
  canonicalize_family(not_upset.base);
  CHECK(!validate_forest_space(not_upset).valid);

  // The carrier of a three-element antichain has three minimals, so the
  // base must contain every pair upset as well; the bare family does not.
  CHECK(!validate_forest_space(minimal_space(antichain(3))).valid);
  CHECK_THROWS_AS(require_valid(minimal_space(antichain(3))), InputError);
  CHECK_NOTHROW(require_valid(full_space(antichain(3))));
}

TEST_CASE("dual space of the bounded three-chain") {
  DualSpace ds = dual_space(godel_chain(3));
  REQUIRE(ds.forest.nodes() == 2);
  // Larger filters sit lower: {1,2} below {2}.
  CHECK(ds.point_filters[0] == of(3, {2}));
  CHECK(ds.point_filters[1] == of(3, {1, 2}));
  CHECK(ds.forest.order.leq(1, 0));
  CHECK(!ds.forest.order.leq(0, 1));
  CHECK(ds.forest.order.is_total());
  REQUIRE(ds.forest.base.size() == 3);
  CHECK(ds.forest.base[0] == Bitset(2));
  CHECK(ds.forest.base[1] == of(2, {0}));
  CHECK(ds.forest.base[2] == of(2, {0, 1}));
  CHECK(ds.forest.trusted);
}

TEST_CASE("dual space rejects unsuitable algebras") {
  CHECK_THROWS_AS(dual_space(godel_chain_unbounded(3)), InputError);
  CHECK_THROWS_AS(dual_space(lambda5()), DomainError);
}

TEST_CASE("downset algebra of the rooted vee") {
  DownsetAlgebra da = downset_algebra(minimal_space(v_poset()));
  REQUIRE(da.n() == 4);
  CHECK(da.universe[0] == Bitset(3));
  CHECK(da.universe[1] == of(3, {0, 1}));
  CHECK(da.universe[2] == of(3, {0, 2}));
  CHECK(da.universe[3] == of(3, {0, 1, 2}));
  CHECK(da.zero == 0);
  CHECK(da.one == 3);
  CHECK(da.index_of(of(3, {0, 2})) == 2);
  CHECK(da.index_of(of(3, {1})) == -1);

  for (int u = 0; u < 4; ++u) {
    CHECK(da.imp(da.zero, u) == da.one);
    CHECK(da.imp(da.one, u) == u);
    CHECK(da.imp(u, u) == da.one);
  }
  CHECK(da.imp(1, 2) == 2);
  CHECK(da.imp(2, 1) == 1);

  Algebra mat = da.materialize();
  CHECK(mat.trusted);
  CHECK(validate_algebra(mat).valid);
  CHECK(!check_prelinear(mat).has_value());

  Algebra five = algebra_of(full_space(v_poset()));
  CHECK(five.n == 5);
  CHECK(validate_algebra(five).valid);
  CHECK(!check_prelinear(five).has_value());
}

TEST_CASE("algebra-to-forest round trip is an isomorphism") {
  for (const Algebra& h :
       {two_element_algebra(), godel_chain(4), algebra_of(full_space(v_poset())),
        algebra_of(minimal_space(v_poset()))}) {
    DualSpace ds = dual_space(h);
    DownsetAlgebra dd = downset_algebra(ds.forest);
    std::vector<int> iso = duality_iso(h, ds, dd);
    REQUIRE((int)iso.size() == h.n);
    std::vector<char> hit(h.n, 0);
    for (int v : iso) {
      REQUIRE(v >= 0);
      REQUIRE(v < dd.n());
      hit[v] = 1;
    }
    CHECK(std::count(hit.begin(), hit.end(), 1) == h.n);
    CHECK(find_isomorphism(algebra_of(ds.forest), h).has_value());
  }
}

TEST_CASE("forest-to-algebra round trip is an isomorphism") {
  for (const HForest& fs :
       {minimal_space(v_poset()), full_space(v_poset()), full_space(chain_poset(3)),
        full_space(antichain(2)), minimal_space(chain_poset(4))}) {
    DownsetAlgebra da = downset_algebra(fs);
    DualSpace ds2 = dual_space(da.materialize());
    std::vector<int> iso = forest_round_trip_iso(fs, da, ds2);
    REQUIRE((int)iso.size() == fs.nodes());
    std::vector<char> hit(fs.nodes(), 0);
    for (int v : iso) hit[v] = 1;
    CHECK(std::count(hit.begin(), hit.end(), 1) == fs.nodes());
  }
}

TEST_CASE("map validation enforces order preservation and openness") {
  HForest two = full_space(chain_poset(2));
  HForest vf = full_space(v_poset());
  HForest flat = full_space(antichain(2));

  CHECK(is_forest_map(two, vf, ForestMap{{0, 1}}));
  CHECK(is_forest_map(two, vf, ForestMap{{0, 0}}));
  // Sends the bottom node above the image of the top node.
  CHECK(!is_forest_map(two, two, ForestMap{{1, 0}}));
  // Order preserving but not open: collapses an antichain onto a chain
  // while lifting one minimal node off the ground.
  CHECK(!is_forest_map(flat, two, ForestMap{{0, 1}}));
  CHECK(is_forest_map(flat, two, ForestMap{{0, 0}}));
  ValidationReport bad = validate_forest_map(flat, two, ForestMap{{0, 1}});
  CHECK(!bad.valid);
  CHECK(!bad.failure.empty());
}

TEST_CASE("map enumeration matches the hand count") {
  HForest two = full_space(chain_poset(2));
  HForest vf = full_space(v_poset());
  std::vector<ForestMap> up = enumerate_forest_maps(two, vf);
  REQUIRE(up.size() == 3);
  CHECK(up[0].map == std::vector<int>{0, 0});
  CHECK(up[1].map == std::vector<int>{0, 1});
  CHECK(up[2].map == std::vector<int>{0, 2});
  std::vector<ForestMap> down = enumerate_forest_maps(vf, two);
  CHECK(down.size() == 4);
  CHECK(enumerate_forest_maps(full_space(antichain(2)), two).size() == 1);
}

TEST_CASE("maps and relations are two views of the same morphisms") {
  std::vector<HForest> spaces = {full_space(chain_poset(2)), full_space(v_poset()),
                                 full_space(antichain(2)),
                                 minimal_space(v_poset())};
  for (const HForest& src : spaces)
    for (const HForest& dst : spaces) {
      std::vector<ForestMap> maps = enumerate_forest_maps(src, dst);
      std::vector<ForestRelation> rels = enumerate_forest_relations(src, dst);
      CHECK(maps.size() == rels.size());
      for (const ForestMap& f : maps) {
        ForestRelation r = relation_of_map(src, dst, f);
        CHECK(is_forest_relation(src, dst, r));
        CHECK(map_of_relation(src, dst, r).map == f.map);
      }
      for (const ForestRelation& r : rels) {
        ForestMap f = map_of_relation(src, dst, r);
        CHECK(is_forest_map(src, dst, f));
        CHECK(relation_of_map(src, dst, f).rows == r.rows);
      }
    }
}

TEST_CASE("a rowwise maximum is required to read a map off a relation") {
  HForest pt = full_space(chain_poset(1));
  HForest flat = full_space(antichain(2));
  ForestRelation no_max{{of(2, {0, 1})}};
  CHECK_THROWS_AS(map_of_relation(pt, flat, no_max), InputError);
}

TEST_CASE("homs and maps translate across the duality") {
  Algebra three = godel_chain(3);
  Algebra two = two_element_algebra();
  DualSpace dh = dual_space(three);
  DualSpace dk = dual_space(two);
  std::vector<Hom> homs = enumerate_homs(three, two, true);
  REQUIRE(homs.size() == 1);
  CHECK(homs[0].map == std::vector<int>{0, 1, 1});
  ForestMap m = dual_of_hom(homs[0].map, dh, dk);
  REQUIRE(m.map.size() == 1);
  CHECK(m.map[0] == 1);
  CHECK(is_forest_map(dk.forest, dh.forest, m));

  // Pulling a one-point space back along its embedding gives the
  // evaluation-at-the-root homomorphism.
  HForest chain2 = full_space(chain_poset(2));
  HForest pt = full_space(chain_poset(1));
  ForestMap emb{{0}};
  REQUIRE(is_forest_map(pt, chain2, emb));
  DownsetAlgebra ax = downset_algebra(chain2);
  DownsetAlgebra ay = downset_algebra(pt);
  std::vector<int> hom = hom_of_map(emb, ax, ay);
  CHECK(hom == std::vector<int>{0, 1, 1});
  Algebra mx = ax.materialize();
  Algebra my = ay.materialize();
  for (int u = 0; u < mx.n; ++u)
    for (int v = 0; v < mx.n; ++v)
      CHECK(my.imp[hom[u]][hom[v]] == hom[mx.imp[u][v]]);
  CHECK(hom[mx.one] == my.one);
  CHECK(hom[mx.zero] == my.zero);
}

TEST_CASE("forest isomorphism search respects bases") {
  HForest a = full_space(v_poset());
  Poset relabeled(3);
  relabeled.add_leq(2, 0);
  relabeled.add_leq(2, 1);
  relabeled.finish();
  HForest b = full_space(relabeled);
  std::optional<std::vector<int>> iso = find_forest_isomorphism(a, b);
  REQUIRE(iso.has_value());
  CHECK((*iso)[0] == 2);  // root goes to root

  CHECK(!find_forest_isomorphism(a, full_space(chain_poset(3))).has_value());
  // Same order, different base family.
  CHECK(!find_forest_isomorphism(a, minimal_space(v_poset())).has_value());
}
