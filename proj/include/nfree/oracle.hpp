#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nfree/npattern.hpp"
#include "nfree/poset.hpp"

namespace nfree {

// Exhaustive search over single-round subdivision subsets: returns the
// unique inclusion-minimal E ⊆ covers(p) whose subdivision is N-free,
// verifying that it is unique, equals n_diag(p) ∪ a_set(p), and that no
// proper subset works. Throws BoundExceededError beyond 12 covers and
// MinimalityViolationError when a check fails.
EdgeSet minimality_oracle(const Poset& p);

struct ConfluenceReport {
  bool pass = false;
  std::size_t expected_steps = 0;
  std::vector<std::size_t> step_counts;  // lexicographic run first
  std::string detail;                    // first mismatch, empty when pass
};

// Runs the sequential algorithm under the lexicographic strategy and
// `trials` seeded-random strategies (seeds seed, seed+1, ...). Passes iff
// all results are VertexId-identical, equal to the two-pass closure, and
// every step count is |n_diag(p)| + |a_set(p)|.
ConfluenceReport confluence_fuzz(const Poset& p, int trials,
                                 std::uint64_t seed);

// Rebuilds p with every dummy renamed by swapping its endpoints,
// Dummy(x, y, r) -> Dummy(y, x, r), recursively. Originals are unchanged.
// Used to state duality facts about subdivided posets exactly.
Poset with_dual_dummy_names(const Poset& p);

struct VerifyOptions {
  int n = 4;
  std::string suite = "all";  // all|npattern|subdivision|minimality|confluence
  bool allow_slow = false;
};

struct VerifyResult {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

// Checks every registered property of the requested suite on every labeled
// poset with exactly n elements, writing one line per failure (property
// name, message, offending poset) to `out`.
VerifyResult run_verify(const VerifyOptions& options, std::ostream& out);

// Names accepted by VerifyOptions::suite.
const std::vector<std::string>& verify_suites();

}  // namespace nfree
