#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hilfor/algebra.hpp"
#include "hilfor/bitset.hpp"
#include "hilfor/filters.hpp"
#include "hilfor/poset.hpp"

namespace hilfor {

// Finite forest together with a distinguished family of upsets. The family
// is kept deduplicated and (size, bitmask)-sorted at all times.
struct HForest {
  Poset order;
  std::vector<Bitset> base;
  std::vector<std::string> labels;

  // Set by library constructors whose output satisfies the invariants by
  // construction (dual spaces, products); lets require_valid skip the scan.
  bool trusted = false;

  int nodes() const { return order.n; }
  std::string label(int i) const {
    if (i >= 0 && i < (int)labels.size() && !labels[i].empty())
      return labels[i];
    return "n" + std::to_string(i);
  }
};

// Dedupe and sort a set family into the canonical (size, bitmask) order.
void canonicalize_family(std::vector<Bitset>& fam);

// Checks, in report form: the order is a forest, every base set is an
// upset, the carrier and every principal upset belong to the base, the
// base is closed under upset-generation from subsets of a member's
// minimals, and closed under [B1 minus B2) for member pairs.
ValidationReport validate_forest_space(const HForest& fs);

// Throws InputError unless fs.trusted or the report comes back clean.
void require_valid(const HForest& fs);

// Spectrum of a bounded prelinear algebra, packaged as a forest: node i is
// the i-th irreducible filter (in (size, bitmask) order) and the forest
// order is REVERSE filter inclusion, so larger filters sit lower. The base
// collects the complements of the phi images.
struct DualSpace {
  HForest forest;
  std::vector<Bitset> point_filters;  // node -> its filter, over h's indices
};

// Throws InputError when h has no designated bottom and DomainError when h
// is not prelinear (the reversed spectrum then fails the forest condition).
DualSpace dual_space(const Algebra& h, int cap = 14);

// The algebra of downsets attached to a forest with a base, kept as a view:
// the universe is materialized but the implication table is computed on
// demand, so very large universes stay usable.
struct DownsetAlgebra {
  Poset order;                   // the forest order
  std::vector<Bitset> universe;  // complements of base sets, canonical order
  int one = -1;                  // index of the full carrier
  int zero = -1;                 // index of the empty set

  int n() const { return (int)universe.size(); }

  // Index lookup, -1 when the set is not an element.
  int index_of(const Bitset& downset) const;

  // U -> V = complement of the upset generated by U minus V. Throws
  // InputError when the result falls outside the universe (the base was
  // not closed under implication).
  int imp(int u, int v) const;

  // Full table as an Algebra (trusted). Throws ResourceError when the
  // universe exceeds the cap (default 4096, raisable via
  // HILFOR_CAP_OVERRIDE).
  Algebra materialize(int cap = 4096) const;

 private:
  std::unordered_map<Bitset, int, BitsetHash> index_;
  friend DownsetAlgebra downset_algebra(const HForest& fs);
};

DownsetAlgebra downset_algebra(const HForest& fs);

// Convenience: downset_algebra + materialize. Bounded (zero = empty set),
// top = full carrier.
Algebra algebra_of(const HForest& fs);

// Node map between forests-with-bases. Valid when order preserving, open
// (image of a principal downset is the principal downset of the image) and
// preimages of dst base sets land in the src base.
struct ForestMap {
  std::vector<int> map;
};

ValidationReport validate_forest_map(const HForest& src, const HForest& dst,
                                     const ForestMap& f);
bool is_forest_map(const HForest& src, const HForest& dst,
                   const ForestMap& f);

// Binary relation between forests-with-bases. Valid when every row is a
// nonempty downset, every related pair (x,y) has a witness z <= x with
// R(z) = (y], and R-preimages (x such that R(x) meets U) of dst base sets
// land in the src base.
struct ForestRelation {
  std::vector<Bitset> rows;  // rows[x] = R(x), a subset of dst nodes
};

ValidationReport validate_forest_relation(const HForest& src,
                                          const HForest& dst,
                                          const ForestRelation& r);
bool is_forest_relation(const HForest& src, const HForest& dst,
                        const ForestRelation& r);

// The relation of a map: R(x) = principal downset of f(x). The map of a
// relation: f(x) = max R(x); throws InputError when some row lacks a
// maximum. On valid morphisms these are mutually inverse.
ForestRelation relation_of_map(const HForest& src, const HForest& dst,
                               const ForestMap& f);
ForestMap map_of_relation(const HForest& src, const HForest& dst,
                          const ForestRelation& r);

// All valid maps src -> dst, lexicographically ordered by map vector.
// Walks nodes parents-first; a non-minimal node can only go to its
// parent's image or one step above it, which characterizes openness.
std::vector<ForestMap> enumerate_forest_maps(const HForest& src,
                                             const HForest& dst);

// All valid relations src -> dst by brute force over rows drawn from the
// nonempty downsets of dst. Throws ResourceError when the candidate count
// exceeds the cap.
std::vector<ForestRelation> enumerate_forest_relations(
    const HForest& src, const HForest& dst, long long cap = 10'000'000LL);

// Contravariant morphism dictionary: a bounded Hom f : H -> K induces the
// point map P |-> f^{-1}(P) from dual_space(K) to dual_space(H).
ForestMap dual_of_hom(const std::vector<int>& f, const DualSpace& dual_h,
                      const DualSpace& dual_k);

// A map m : Y -> X induces the bounded Hom algebra_of(X) -> algebra_of(Y),
// U |-> m^{-1}(U), written on universe indices.
std::vector<int> hom_of_map(const ForestMap& m, const DownsetAlgebra& ax,
                            const DownsetAlgebra& ay);

// phi as an index map from h onto the algebra of its dual space: the
// duality isomorphism. Throws InternalError if it fails to be a bounded
// bijective homomorphism (it never should).
std::vector<int> duality_iso(const Algebra& h, const DualSpace& ds,
                             const DownsetAlgebra& dd);

// The other round trip: node x of fs goes to the point of
// dual_space(algebra_of(fs)) given by { elements whose downset contains x }.
// da must be downset_algebra(fs) and ds2 the dual space of its
// materialization. Checks order isomorphism plus a base-to-base bijection;
// throws InternalError on any failure.
std::vector<int> forest_round_trip_iso(const HForest& fs,
                                       const DownsetAlgebra& da,
                                       const DualSpace& ds2);

// Brute-force HForest isomorphism: an order isomorphism carrying base onto
// base. Intended for small test fixtures.
std::optional<std::vector<int>> find_forest_isomorphism(const HForest& a,
                                                        const HForest& b);

}  // namespace hilfor
