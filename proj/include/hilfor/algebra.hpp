#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hilfor/bitset.hpp"
#include "hilfor/poset.hpp"

namespace hilfor {

// Finite implication algebra: a table imp[a][b] = a->b over indices 0..n-1
// with a designated top and an optional bottom (zero = -1 means none).
struct Algebra {
  int n = 0;
  std::vector<std::vector<int>> imp;
  int one = 0;
  int zero = -1;  // -1: no designated bottom
  std::vector<std::string> labels;

  // Set by library constructors whose output is valid by construction, so
  // exported operations can skip re-running the axiom scan.
  bool trusted = false;

  bool bounded() const { return zero >= 0; }
  int arrow(int a, int b) const { return imp[a][b]; }
  bool leq(int a, int b) const { return imp[a][b] == one; }

  std::string label(int i) const {
    if (i >= 0 && i < (int)labels.size() && !labels[i].empty())
      return labels[i];
    return "e" + std::to_string(i);
  }
};

// One line per checked condition plus the first failure in detail.
struct ValidationReport {
  bool valid = true;
  std::vector<std::string> checks;  // "<name>: ok" or "<name>: FAIL ..."
  std::string failure;              // empty when valid

  void pass(const std::string& name) { checks.push_back(name + ": ok"); }
  void fail(const std::string& name, const std::string& detail) {
    checks.push_back(name + ": FAIL " + detail);
    if (valid) failure = detail;
    valid = false;
  }
};

// Scans every axiom instance. Malformed input (wrong table shape, entries out
// of range, bad one/zero index) throws InputError; axiom violations are
// reported, not thrown.
ValidationReport validate_algebra(const Algebra& h);

// Throws InputError unless h.trusted or validate_algebra(h).valid.
void require_valid(const Algebra& h);

Poset natural_order(const Algebra& h);

// l(a,b,c) = ((a->b)->c)->(((b->a)->c)->c).
int prelinearity_term(const Algebra& h, int a, int b, int c);

// Empty result means every instance of l(a,b,c)=1 holds; otherwise a
// falsifying triple.
std::optional<std::array<int, 3>> check_prelinear(const Algebra& h);

// Least upper / greatest lower bound in the natural order, when they exist.
std::optional<int> join(const Algebra& h, int a, int b);
std::optional<int> meet(const Algebra& h, int a, int b);

// ((a->b)->b) meet ((b->a)->a). Throws DomainError when the meet does not
// exist (the natural order is not a meet-semilattice at that pair).
int godel_join_formula(const Algebra& h, int a, int b);

// Least superset of s (plus one, plus zero when with_zero) closed under
// the implication table.
Bitset generated_subalgebra(const Algebra& h, const Bitset& s, bool with_zero);

// Generic implication-saturation with provenance: starting from seeds, add
// f(u,v) for members u,v until stable. steps records each new element as
// {u, v, f(u,v)} in discovery order; seeds carry no step. Used both for
// subalgebra generation and for the forced-evaluation uniqueness argument
// (a homomorphism's value on f(u,v) is pinned by its values on u and v).
struct GenerationTrace {
  Bitset members;
  std::vector<std::array<int, 3>> steps;
  GenerationTrace() : members(0) {}
};
GenerationTrace saturate_under_imp(int n,
                                   const std::function<int(int, int)>& f,
                                   const std::vector<int>& seeds);

// H/F for an implicative filter F: classes of a~b iff a->b,b->a in F.
// Classes are indexed in increasing order of their least member.
struct QuotientResult {
  Algebra alg;
  std::vector<int> class_of;  // original element -> class index
};
QuotientResult quotient(const Algebra& h, const Bitset& filter);

struct Hom {
  std::vector<int> map;
};

bool is_homomorphism(const Algebra& h, const Algebra& k,
                     const std::vector<int>& map, bool require_zero);

// All homomorphisms H -> K, each exactly once, ordered lexicographically by
// the map vector. Search walks a greedily chosen generating set and forces
// the rest of the map through the generation trace. Throws ResourceError
// when the candidate space exceeds cap.
std::vector<Hom> enumerate_homs(const Algebra& h, const Algebra& k,
                                bool require_zero,
                                long long cap = 10'000'000LL);

// A bijective homomorphism H -> K if one exists (bounded when both carry a
// bottom). Backtracking over order-invariant classes.
std::optional<std::vector<int>> find_isomorphism(const Algebra& h,
                                                 const Algebra& k);

// Small standard algebras used all over the test and example suites.
Algebra two_element_algebra();              // {0,1}, classical table
Algebra godel_chain(int n);                 // bounded chain 0 < ... < 1
Algebra godel_chain_unbounded(int n);       // chain without designated 0
// Heyting implication reduct of the upsets of an arbitrary finite poset,
// bounded by the empty set and the full carrier. Elements are the upsets
// sorted by (size, bitmask).
Algebra upset_implication_algebra(const Poset& p);

}  // namespace hilfor
