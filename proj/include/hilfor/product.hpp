#pragma once

#include <string>
#include <vector>

#include "hilfor/forest.hpp"
#include "hilfor/poset.hpp"

namespace hilfor {

// All chains that start at a minimal element, each as an increasing vector
// of node indices, sorted by (length, lexicographic). Throws InputError
// when f is not a forest.
std::vector<std::vector<int>> u_successions(const Poset& f);

// The product of two forests: nodes are walks over the coordinate grid
// that start at a minimal pair and climb by cover steps in one or both
// coordinates, so that each coordinate projection sweeps a full principal
// downset. Ordered by walk prefix.
struct ProductForest {
  int s_n = 0, t_n = 0;
  std::vector<std::vector<int>> carrier;  // walks as grid-index chains
  Poset order;                            // prefix order on the carrier
  Poset grid;                             // componentwise order on pairs
  std::vector<int> proj1, proj2;          // walk -> endpoint coordinates

  int pair_index(int s, int t) const { return s * t_n + t; }
  int pair_s(int g) const { return g / t_n; }
  int pair_t(int g) const { return g % t_n; }

  // Index of a walk in the carrier, -1 when absent.
  int index_of(const std::vector<int>& walk) const;
};

ProductForest forest_product(const Poset& s, const Poset& t);

// The unique map commuting with both projections: f goes to the walk
// traced by (alpha, beta) over the principal downset of f. Throws
// InternalError if the trace is not a carrier member (it always is for
// open order-preserving alpha, beta).
ForestMap product_mediator(const ProductForest& pf, const Poset& f,
                           const std::vector<int>& alpha,
                           const std::vector<int>& beta);

// The distinguished family on a product: principal upsets of walks, plus
// upsets generated by any subset of the minimals of a projection preimage
// of a factor base set.
struct BaseTensor {
  std::vector<Bitset> family;         // canonical final family
  std::vector<Bitset> added;          // sets a closure pass had to add
  std::vector<std::string> audit_log; // one line per enumeration stage
};

// Enumerates the three clause families and audits closure under the two
// h-base characterizations. A deficit is never repaired silently: unless
// close_base is set, any set the audit adds raises InternalError; with
// close_base the saturated family is returned and every addition is
// logged. Throws ResourceError when some projection-preimage minimal set
// exceeds minimal_cap (default 16, raisable via HILFOR_CAP_OVERRIDE).
BaseTensor base_tensor(const HForest& x, const HForest& y,
                       const ProductForest& pf, bool close_base = false,
                       int minimal_cap = 16);

// Membership test for the base tensor that never materializes the family:
// an upset belongs iff it has at most one minimal element or its minimals
// sit inside the minimals of some projection preimage of a factor base
// set. Used where the materialized family would be astronomically large.
struct LazyTensorBase {
  int nodes = 0;
  const Poset* order = nullptr;      // the product order
  std::vector<Bitset> minimal_sets;  // per (side, V): minimals of preimage

  bool contains(const Bitset& s) const;
};

LazyTensorBase lazy_base_tensor(const HForest& x, const HForest& y,
                                const ProductForest& pf);

// The product in the category of forests-with-bases: carrier and prefix
// order from forest_product, family from base_tensor, projections checked
// to be valid morphisms.
struct ProductSpace {
  ProductForest pf;
  HForest forest;
  ForestMap proj1, proj2;
  BaseTensor audit;
};

ProductSpace product_space(const HForest& x, const HForest& y,
                           bool close_base = false, int minimal_cap = 16);

}  // namespace hilfor
