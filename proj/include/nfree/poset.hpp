#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nfree/vertex.hpp"

namespace nfree {

// A finite strict order. Construction normalizes any input relation by
// taking its transitive closure and then the transitive reduction, so the
// stored state is always the full closure plus the covering relation
// (the diagram). Vertices are kept in canonical sorted order and all
// derived data is deterministic. Instances are immutable.
class Poset {
 public:
  Poset() = default;  // the empty poset

  // Builds a poset from declared element labels and any subset of a strict
  // order between them. Throws DuplicateElementError, UnknownElementError,
  // InvalidLabelError, CycleError.
  static Poset from_relation(
      const std::vector<std::string>& elements,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  // Same, over arbitrary vertex ids (used for subdivided posets).
  static Poset from_vertices(
      std::vector<VertexId> vertices,
      const std::vector<std::pair<VertexId, VertexId>>& pairs);

  int size() const { return n_; }
  const std::vector<VertexId>& vertices() const { return verts_; }
  const VertexId& vertex(int i) const { return verts_[static_cast<size_t>(i)]; }
  bool contains(const VertexId& v) const { return find_index(v) >= 0; }
  int index_of(const VertexId& v) const;  // throws UnknownElementError

  // Order queries. leq is reflexive; the closure stores strict pairs.
  bool less(const VertexId& x, const VertexId& y) const;
  bool leq(const VertexId& x, const VertexId& y) const;
  bool covers(const VertexId& x, const VertexId& y) const;
  bool incomparable(const VertexId& x, const VertexId& y) const;

  bool less_idx(int i, int j) const { return closure_bit(i, j); }
  bool covers_idx(int i, int j) const;
  bool incomparable_idx(int i, int j) const {
    return i != j && !closure_bit(i, j) && !closure_bit(j, i);
  }

  // Covering pairs (the diagram), sorted by (lower, upper) index.
  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
  std::vector<Edge> cover_edges() const;
  const std::vector<int>& up_covers(int i) const { return up_[static_cast<size_t>(i)]; }
  const std::vector<int>& down_covers(int i) const { return down_[static_cast<size_t>(i)]; }

  // All strict pairs of the closure, sorted.
  std::vector<std::pair<int, int>> closure_pairs() const;

  Poset dual() const;

  // Complete, duplicate-free, deterministically ordered lists. Chains are
  // listed bottom-to-top; antichains in canonical vertex order.
  std::vector<std::vector<int>> maximal_chain_indices() const;
  std::vector<std::vector<int>> maximal_antichain_indices() const;
  std::vector<std::vector<VertexId>> maximal_chains() const;
  std::vector<std::vector<VertexId>> maximal_antichains() const;

  // Exact equality of vertex sets and closures; no isomorphism search.
  bool equals(const Poset& other) const;
  bool operator==(const Poset& other) const { return equals(other); }

 private:
  int find_index(const VertexId& v) const;  // -1 when absent
  bool closure_bit(int i, int j) const {
    return (closure_[static_cast<size_t>(i) * words_ + static_cast<size_t>(j) / 64] >>
            (static_cast<size_t>(j) % 64)) & 1u;
  }

  static Poset build(std::vector<VertexId> vertices,
                     const std::vector<std::pair<VertexId, VertexId>>& pairs);

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<VertexId> verts_;           // sorted canonically
  std::vector<std::uint64_t> closure_;    // n_ rows of words_ 64-bit words
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
};

}  // namespace nfree
