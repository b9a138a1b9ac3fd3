#pragma once

#include <string>
#include <vector>

namespace hilfor {

// Self-check against the two worked coproduct examples the library was
// built around: the two-element case, which collapses back to the
// two-element algebra, and the three-element-chain case with its
// characteristic six-node dual forest. Structural claims are hard checks;
// element counts are reported beside the worked example's advisory counts.
struct ExampleReport {
  bool ok = true;
  std::vector<std::string> lines;

  void check(bool pass, const std::string& what) {
    lines.push_back(what + (pass ? ": PASS" : ": FAIL"));
    if (!pass) ok = false;
  }
};

ExampleReport run_example_suite();

}  // namespace hilfor
