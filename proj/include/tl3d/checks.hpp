#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tl3d/algebra.hpp"
#include "tl3d/posets.hpp"

namespace tl3d {

struct SuiteResult {
  std::string name;
  bool passed = false;
  long checks = 0;      // individual assertions exercised
  std::string detail;   // failure description or summary notes
  double seconds = 0.0;
};

// Named property suites runnable from the command line.  Each suite is
// deterministic for a fixed seed.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

// Independent composition oracle: transitive closure of the same-block
// relation on the chain graph over all three layers, restricted to the
// outer ground.  Used to cross-check the union-find engine.
GluingResult compose_oracle(const SetPartition& a, const SetPartition& b);

// Brute-force hom enumeration: every partition of the joined edge set,
// filtered by the admissibility definition.
std::vector<Diagram> enumerate_homs_oracle(const RootedTree& F,
                                           const RootedTree& Fp);

// Propagating-order experiment over all ordered pairs of trees with at
// most max_loops loops: verifies subfold implies propagating, and reports
// (without asserting) whether the converse held.
struct PropagatingReport {
  bool subfold_implies_propagating = true;
  long pairs_checked = 0;
  long inconclusive = 0;
  std::vector<std::string> converse_counterexamples;  // a <=_p b, not a <f b
  std::vector<std::string> failures;                  // a <f b, not a <=_p b
};
PropagatingReport propagating_experiment(int max_loops, long max_check);

}  // namespace tl3d
