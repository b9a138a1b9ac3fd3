#pragma once

#include <string>
#include <vector>

#include "hilfor/algebra.hpp"
#include "hilfor/bitset.hpp"
#include "hilfor/envelope.hpp"
#include "hilfor/forest.hpp"
#include "hilfor/poset.hpp"

namespace hilfor {

// Canonical key for a poset up to order isomorphism: the lexicographically
// least row-major bitmatrix of <= over all permutations that respect the
// order-invariant node classes.
std::string poset_canonical_key(const Poset& p);

// All forests on exactly n unlabeled nodes up to order isomorphism, roots
// minimal, in deterministic order. n <= 7 unless the cap override raises
// it.
std::vector<Poset> enumerate_forests(int n);

// Every h-base on f: upsets containing all principal upsets, the carrier
// and the empty set, closed under upset-generation from subsets of any
// member's minimals. Families and the list come back in canonical order.
// With max_sets >= 0 only families of at most that many sets are kept.
// f must have <= 5 nodes unless the cap override raises it.
std::vector<std::vector<Bitset>> enumerate_hbases(const Poset& f,
                                                  int max_sets = -1);

// All bounded prelinear algebras with <= n elements up to isomorphism,
// built as algebra_of over enumerated (forest, h-base) pairs. n <= 8
// unless the cap override raises it.
std::vector<Algebra> enumerate_bph_algebras(int n);

// All prelinear Hilbert algebras without a designated bottom and <= n
// elements, up to isomorphism: obtained by stripping the bottom off the
// members of enumerate_bph_algebras(n + 1) whose bottom is implication
// unreachable.
std::vector<Algebra> enumerate_phil_algebras(int n);

// All prelinear Heyting algebras with <= n elements up to isomorphism:
// downset algebras of forests under the family of all upsets, with meet
// and join tables attached.
std::vector<GodelAlgebra> enumerate_godel_algebras(int n);

struct EnumerationReport {
  std::string kind;
  int parameter = 0;
  long long count = 0;
  double seconds = 0.0;
};

struct Certification {
  bool ok = true;
  long long cones = 0;      // (cone or cocone, morphism pair) combinations
  long long mediators = 0;  // mediators constructed and verified
  std::vector<std::string> log;
  std::string counterexample;  // first failure, empty while ok

  void fail(const std::string& what) {
    if (ok) counterexample = what;
    ok = false;
  }
};

// Exhaustive universal-property check for the product of two forest
// spaces: over every cone (Z, alpha, beta) with Z drawn from the
// enumeration up to cone_cap nodes, builds the mediator, verifies it is a
// morphism, and verifies no other open order-preserving map commutes with
// the projections. base_override, when given, replaces the product's
// distinguished family; corrupting it is the negative control.
Certification certify_product_universal(
    const HForest& x, const HForest& y, int cone_cap,
    const std::vector<Bitset>* base_override = nullptr);

// Exhaustive universal-property check for the coproduct: over every
// target K from the enumeration up to target_cap elements and every pair
// of homs (f, g) into K, builds the mediator and verifies commutation,
// the homomorphism identities along the generation trace and on sampled
// pairs (all pairs on small universes), and uniqueness by forced
// evaluation plus a full hom search on small universes. inj_override,
// when given, replaces the left injection; corrupting it is the negative
// control. Runs bounded when both inputs carry a bottom, unbounded when
// neither does.
Certification certify_coproduct_universal(
    const Algebra& h, const Algebra& g, int target_cap,
    const std::vector<int>* inj_override = nullptr);

}  // namespace hilfor
