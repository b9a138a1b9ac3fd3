#pragma once

#include <string>
#include <vector>

#include "hilfor/algebra.hpp"
#include "hilfor/envelope.hpp"
#include "hilfor/forest.hpp"
#include "hilfor/poset.hpp"

namespace hilfor {

// Text formats. Algebras:
//
//   algebra NAME
//   elements e0 e1 ... e{n-1}
//   one eK
//   zero eJ            (omitted when there is no bottom)
//   imp
//   <n rows of n element names, row a = a -> .>
//
// Forests with bases:
//
//   forest NAME
//   nodes n0 n1 ...
//   cover nA nB        (nA is covered by nB, one line per edge)
//   base { n_i ... } { ... } ...
//
// '#' starts a comment anywhere; blank lines are ignored. serialize and
// parse are mutually inverse byte for byte on serializer output.

struct ParsedAlgebra {
  std::string name;
  Algebra alg;
};

struct ParsedForest {
  std::string name;
  HForest space;
};

// Throw ParseError (with the offending line) on syntax problems and
// InputError when the parsed object fails validation; pass validate=false
// to get the raw object and run validation yourself.
ParsedAlgebra parse_algebra_file(const std::string& text,
                                 bool validate = true);
ParsedForest parse_forest_file(const std::string& text, bool validate = true);

std::string serialize_algebra(const Algebra& a, const std::string& name);

// Algebra format plus "meet" and "join" table blocks in the same row shape.
std::string serialize_godel(const GodelAlgebra& g, const std::string& name);

std::string serialize_forest(const HForest& fs, const std::string& name);

// Deterministic DOT renderings of Hasse diagrams (edges point upward).
// highlight_base fills the members of that base set, counted in the
// family's canonical order; -1 highlights nothing.
std::string export_dot(const Poset& p, const std::vector<std::string>& labels,
                       const std::string& name);
std::string export_dot(const Algebra& a, const std::string& name);
std::string export_dot(const HForest& fs, const std::string& name,
                       int highlight_base = -1);

}  // namespace hilfor
