#pragma once

#include <vector>

#include "hilfor/algebra.hpp"
#include "hilfor/forest.hpp"

namespace hilfor {

// Bounded prelinear Heyting algebra: an implication algebra together with
// meet and join tables.
struct GodelAlgebra {
  Algebra alg;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
  bool trusted = false;
};

// Checks the reduct axioms, that meet/join agree with the bounds computed
// from the natural order (hence lattice laws), residuation, and
// prelinearity.
ValidationReport validate_godel(const GodelAlgebra& g);
void require_valid(const GodelAlgebra& g);

// The free prelinear Heyting extension of a bounded prelinear algebra:
// all downsets of the dual space, with intersection, union and the usual
// downset implication. psi embeds the source onto the phi images.
struct Envelope {
  GodelAlgebra star;
  std::vector<Bitset> universe;  // star element i = universe[i], a downset
  DualSpace dual;                // dual space of the source algebra
  std::vector<int> psi;          // source element -> star element
};

Envelope godel_envelope(const Algebra& h, int cap = 14);

// Indices reachable from the psi images by pairwise intersection, sorted.
// Coincides with the whole universe (checked by callers and tests).
std::vector<int> semilattice_closure(const Envelope& e);

// The Heyting hom between envelopes induced by a bounded Hom f : H -> G:
// preimage along the dual point map. Satisfies star . psi_H = psi_G . f.
std::vector<int> star_hom(const Envelope& eh, const Envelope& eg,
                          const std::vector<int>& f);

// The unique Heyting hom m : H* -> G with m(psi(a)) = f(a) for a bounded
// Hilbert hom f into the implication reduct of G. Built by passing f
// through star_hom and the inverse of G's own (bijective) psi. The result
// is verified; uniqueness certificates run through
// enumerate_heyting_homs.
std::vector<int> factor_through_envelope(const Envelope& eh,
                                         const GodelAlgebra& g,
                                         const std::vector<int>& f);

bool is_heyting_hom(const GodelAlgebra& a, const GodelAlgebra& b,
                    const std::vector<int>& map);

// All Heyting homs a -> b, lexicographically ordered. Exhaustive for
// finite Goedel algebras: such a lattice is distributive, so a hom is
// pinned by its monotone restriction to the join-irreducible elements.
std::vector<std::vector<int>> enumerate_heyting_homs(
    const GodelAlgebra& a, const GodelAlgebra& b,
    long long cap = 10'000'000LL);

// The spectrum of the envelope is order-isomorphic to the spectrum of the
// source, by pulling points back along psi. Returns the point map from
// spectrum(star) indices to spectrum(h) indices; throws InternalError if
// it fails to be an order isomorphism.
std::vector<int> envelope_spectrum_iso(const Algebra& h, const Envelope& e,
                                       int cap = 14);

}  // namespace hilfor
