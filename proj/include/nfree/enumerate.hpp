#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nfree/poset.hpp"

namespace nfree {

// Exhaustive enumeration of all labeled posets on elements {v1..vn}.
// n up to 6 runs in seconds; n = 7 (6,129,859 posets) must be opted into.
struct EnumerationSpec {
  int n = 1;
  std::string filter;      // "", "nfree", "cac" or "sp"
  bool allow_slow = false;  // unlocks n = 7
};

// Calls `visit` once per poset, in a fixed deterministic order. Returning
// false stops the enumeration early. Throws BoundExceededError when n is
// out of range.
void for_each_poset(const EnumerationSpec& spec,
                    const std::function<bool(const Poset&)>& visit);

// Number of posets the spec enumerates. Without a filter this avoids
// building the posets.
std::uint64_t count_posets(const EnumerationSpec& spec);

// Closure matrices encoded as bit(i*8 + j) words, sorted ascending.
// `direct` walks transitive antisymmetric relations; `via_dags` closes every
// acyclic digraph and dedupes. Both exist so they can check each other.
// n ≤ 5 for the DAG route (it scans 2^(n(n-1)) digraphs).
std::vector<std::uint64_t> closure_codes_direct(int n);
std::vector<std::uint64_t> closure_codes_via_dags(int n);

}  // namespace nfree
