#pragma once

#include <string>
#include <vector>

#include "hilfor/algebra.hpp"
#include "hilfor/forest.hpp"
#include "hilfor/product.hpp"

namespace hilfor {

// Fresh bottom below every element: 0 -> x = 1 and x -> 0 = 0 for old x.
// Old indices are unchanged; the new bottom sits at index h.n.
Algebra zero_extension(const Algebra& h);

// Extension of a Hom f : H -> K along two zero extensions: old values
// kept, new bottom to new bottom.
std::vector<int> hom_zero_extension(const std::vector<int>& f,
                                    const Algebra& h, const Algebra& k);

// Coproduct of two finite bounded prelinear algebras, computed on the
// product of the dual forests. The universe is the downset algebra of the
// product space; `result` is materialized only while the universe fits
// materialize_cap, everything else works against the view.
struct CoproductData {
  Algebra left, right;  // the inputs, copied for mediator validation
  DualSpace dual_left, dual_right;
  ProductSpace prod;
  DownsetAlgebra view;
  std::vector<int> inj_left, inj_right;  // input index -> view index
  GenerationTrace trace;  // saturation from the injected images and 0
  std::vector<std::string> log;  // tensor audit plus generation report
  Algebra result;                // filled when materialized
  bool materialized = false;
};

CoproductData coproduct_bounded(const Algebra& h, const Algebra& g,
                                int materialize_cap = 4096);

// The unique bounded Hom m out of the coproduct with m(inj_left(a)) = f(a)
// and m(inj_right(b)) = g(b), as a vector over view indices. Built by
// dualizing f and g, taking the product mediator between the dual forests,
// and pulling the resulting map back to algebras.
std::vector<int> mediator_bounded(const CoproductData& c, const Algebra& k,
                                  const std::vector<int>& f,
                                  const std::vector<int>& g);

// Coproduct without bottoms: the implication subalgebra of the bounded
// coproduct of the zero extensions, generated by the original images.
struct UnboundedCoproduct {
  Algebra left, right;
  CoproductData base;      // bounded coproduct of the zero extensions
  std::vector<int> members;  // sorted view indices forming the result
  std::vector<int> inj_left, inj_right;  // input index -> member position
  GenerationTrace trace;                 // over view indices
  Algebra result;  // materialized over members when they fit the cap
  bool materialized = false;

  int position_of(int view_index) const;  // -1 when absent
};

UnboundedCoproduct coproduct_unbounded(const Algebra& h, const Algebra& g,
                                       int materialize_cap = 4096);

// Restriction of the bounded mediator of the zero-extended homs to the
// members; values over k's original indices, one per member position.
std::vector<int> mediator_unbounded(const UnboundedCoproduct& c,
                                    const Algebra& k,
                                    const std::vector<int>& f,
                                    const std::vector<int>& g);

// Independent free-algebra oracle: the subalgebra of a product of Goedel
// chains, one coordinate per assignment of the generators into the chain,
// generated by the projection tuples. Chain length grows from 2 until the
// size repeats for two consecutive lengths; failing that within chain_cap
// raises ResourceError. with_zero also seeds the all-bottom tuple and
// designates it as the result's bottom.
Algebra free_algebra_oracle(int generators, int chain_cap = 6,
                            bool with_zero = false);

}  // namespace hilfor
