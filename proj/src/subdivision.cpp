#include "nfree/subdivision.hpp"

#include <random>

#include "nfree/errors.hpp"

namespace nfree {

namespace {

int next_round(const Poset& p, const VertexId& lower, const VertexId& upper) {
  int max_round = 0;
  for (const auto& v : p.vertices()) {
    if (v.is_dummy() && v.round() > max_round && v.lower() == lower &&
        v.upper() == upper)
      max_round = v.round();
  }
  return max_round + 1;
}

}  // namespace

VertexId subdivision_vertex(const Poset& p, const Edge& e) {
  return VertexId::dummy(e.lower, e.upper, next_round(p, e.lower, e.upper));
}

Poset subdivide(const Poset& p, const EdgeSet& edges) {
  for (const Edge& e : edges) {
    if (!p.contains(e.lower) || !p.contains(e.upper) ||
        !p.covers(e.lower, e.upper))
      throw NotACoverEdgeError("'" + e.encode() +
                               "' is not a covering pair of the poset");
  }
  std::vector<VertexId> verts = p.vertices();
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(p.cover_pairs().size() + 2 * edges.size());
  for (const Edge& e : p.cover_edges()) {
    if (!edges.contains(e)) pairs.emplace_back(e.lower, e.upper);
  }
  for (const Edge& e : edges) {
    VertexId u = subdivision_vertex(p, e);
    pairs.emplace_back(e.lower, u);
    pairs.emplace_back(u, e.upper);
    verts.push_back(std::move(u));
  }
  return Poset::from_vertices(std::move(verts), pairs);
}

Poset full_subdivision(const Poset& p) {
  return subdivide(p, EdgeSet(p.cover_edges()));
}

Poset s_n(const Poset& p) { return subdivide(p, n_diag(p)); }

Poset grillet_closure(const Poset& p) { return s_n(s_n(p)); }

Poset nd_closure(const Poset& p) {
  Poset once = subdivide(p, nd_diag(p));
  return subdivide(once, nd_diag(once));
}

RunTrace sequential_closure(const Poset& p, const Strategy& strategy) {
  const std::size_t step_limit = p.cover_pairs().size();
  std::mt19937_64 gen(strategy.seed());
  std::size_t script_pos = 0;

  RunTrace trace;
  trace.result = p;
  while (true) {
    EdgeSet diagonals = n_diag(trace.result);
    if (diagonals.empty()) break;
    if (trace.steps.size() >= step_limit)
      throw InternalError(
          "sequential subdivision exceeded the step limit of " +
          std::to_string(step_limit) + "; this cannot happen for a valid "
          "implementation");

    Edge chosen = diagonals.edges().front();
    switch (strategy.kind()) {
      case Strategy::Kind::Lexicographic:
        break;
      case Strategy::Kind::SeededRandom:
        chosen = diagonals.edges()[gen() % diagonals.size()];
        break;
      case Strategy::Kind::Scripted: {
        if (script_pos >= strategy.script().size())
          throw InvalidScriptError(
              "script exhausted after " + std::to_string(script_pos) +
              " steps while diagonal edges remain");
        chosen = strategy.script()[script_pos++];
        if (!diagonals.contains(chosen))
          throw InvalidScriptError("scripted edge '" + chosen.encode() +
                                   "' is not a diagonal edge at step " +
                                   std::to_string(script_pos));
        break;
      }
    }

    VertexId dummy = subdivision_vertex(trace.result, chosen);
    trace.steps.push_back(SubdivisionStep{
        static_cast<int>(trace.steps.size()) + 1, chosen, dummy});
    trace.result = subdivide(trace.result, EdgeSet({chosen}));
  }
  if (strategy.kind() == Strategy::Kind::Scripted &&
      script_pos != strategy.script().size())
    throw InvalidScriptError("script names " +
                             std::to_string(strategy.script().size()) +
                             " edges but the run finished after " +
                             std::to_string(script_pos));
  return trace;
}

}  // namespace nfree
