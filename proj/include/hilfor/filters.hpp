#pragma once

#include <vector>

#include "hilfor/algebra.hpp"
#include "hilfor/bitset.hpp"
#include "hilfor/poset.hpp"

namespace hilfor {

// Modus-ponens closed upsets containing the top. Represented as plain
// element bitsets over the owning algebra.

bool is_implicative_filter(const Algebra& h, const Bitset& f);

// Least filter containing x, by modus-ponens saturation.
Bitset generated_filter(const Algebra& h, const Bitset& x);

// Independent characterization of membership in the generated filter:
// y is in F(X) iff some nested implication a1->(a2->...(ak->y)...) with all
// ai in X equals the top. Computed by closing {y} under t |-> a->t and
// asking whether the top is reached. Used as a cross-check oracle against
// generated_filter; deliberately shares no code with it.
bool filter_membership_by_nesting(const Algebra& h, const Bitset& x, int y);

// Every implicative filter of H, each exactly once, sorted by
// (size, bitmask). Walks antichains of the natural order (each upset has a
// unique antichain of minimal elements) and keeps the MP-closed ones.
// Throws ResourceError when |H| exceeds the cap (default 14, raisable via
// HILFOR_CAP_OVERRIDE).
std::vector<Bitset> enumerate_filters(const Algebra& h, int cap = 14);

// Proper filter such that any two elements outside it have a common upper
// bound outside it. Cross-checked elsewhere against the definition via
// intersections of strictly larger filters.
bool is_irreducible(const Algebra& h, const Bitset& f);

struct Spectrum {
  std::vector<Bitset> points;  // irreducible filters, sorted (size, bitmask)
  Poset order;                 // inclusion order on the points
};

Spectrum spectrum(const Algebra& h, int cap = 14);

// An irreducible filter P containing f and disjoint from the order ideal i.
// The ideal is validated (downset, up-directed, nonempty, disjoint from f).
// Returns the inclusion-minimal witness, ties broken by (size, bitmask).
Bitset separating_irreducible(const Algebra& h, const Bitset& f,
                              const Bitset& i, int cap = 14);

// Points of the spectrum containing a.
Bitset phi(const Algebra& h, const Spectrum& spec, int a);

}  // namespace hilfor
