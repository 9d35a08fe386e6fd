#pragma once

#include <cstdint>
#include <vector>

#include "nfree/npattern.hpp"
#include "nfree/poset.hpp"

namespace nfree {

// Policy for picking one diagonal edge per step of the sequential
// algorithm. The end result is choice-independent; the strategy only fixes
// the trace.
class Strategy {
 public:
  enum class Kind { Lexicographic, SeededRandom, Scripted };

  static Strategy lexicographic() { return Strategy(Kind::Lexicographic); }
  // Reproducible pseudo-random choices: std::mt19937_64 seeded with `seed`,
  // picking index gen() % #candidates at each step.
  static Strategy seeded_random(std::uint64_t seed) {
    Strategy s(Kind::SeededRandom);
    s.seed_ = seed;
    return s;
  }
  // A fixed edge sequence; each entry must be a diagonal edge at the step
  // it is consumed, and the sequence must cover the whole run.
  static Strategy scripted(std::vector<Edge> order) {
    Strategy s(Kind::Scripted);
    s.script_ = std::move(order);
    return s;
  }

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<Edge>& script() const { return script_; }

 private:
  explicit Strategy(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::uint64_t seed_ = 0;
  std::vector<Edge> script_;
};

struct SubdivisionStep {
  int index;  // 1-based
  Edge edge;
  VertexId dummy;
};

struct RunTrace {
  std::vector<SubdivisionStep> steps;
  Poset result;
};

// Replaces each cover (x, y) in `edges` by x ≺ u ≺ y where u is a fresh
// dummy named by the pair; all other covers are untouched and the original
// order embeds. Throws NotACoverEdgeError.
Poset subdivide(const Poset& p, const EdgeSet& edges);

// The dummy that subdividing `e` in `p` would introduce.
VertexId subdivision_vertex(const Poset& p, const Edge& e);

// One dummy on every edge of the diagram.
Poset full_subdivision(const Poset& p);

// One dummy on each diagonal edge.
Poset s_n(const Poset& p);

// Two passes of s_n: the minimal barycentric subdivision that is N-free.
Poset grillet_closure(const Poset& p);

// Variant driven by NDiag diagonals instead; lands on the same poset.
Poset nd_closure(const Poset& p);

// One diagonal edge at a time until none remain. The result and step count
// do not depend on the strategy. Throws InvalidScriptError.
RunTrace sequential_closure(const Poset& p, const Strategy& strategy);

}  // namespace nfree
