#pragma once

#include <vector>

#include "nfree/poset.hpp"
#include "nfree/vertex.hpp"

namespace nfree {

// The three ways a four-vertex N pattern can sit in a poset. All share the
// diagonal cover b ≺ c; they differ in how a and d attach:
//   N      a ≺ c, b ≺ d, a and d incomparable
//   NPrime a < c, b < d, a and d incomparable
//   NDiag  a ≺ c, b ≺ d, (a, d) not a covering pair
enum class NForm { N, NPrime, NDiag };

// A labeled quadruple certifying one N occurrence. (b, c) is the diagonal.
struct NWitness {
  VertexId a, b, c, d;
  NForm form;

  bool operator==(const NWitness& other) const = default;
};

// A deterministic ordered set of cover edges of some reference poset.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);  // sorts and dedupes

  bool contains(const Edge& e) const;
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  bool operator==(const EdgeSet& other) const = default;

 private:
  std::vector<Edge> edges_;
};

EdgeSet union_of(const EdgeSet& a, const EdgeSet& b);
EdgeSet intersection_of(const EdgeSet& a, const EdgeSet& b);
EdgeSet difference_of(const EdgeSet& a, const EdgeSet& b);
bool is_subset(const EdgeSet& a, const EdgeSet& b);

// All witnesses of the requested form, duplicate-free, sorted by (a,b,c,d).
std::vector<NWitness> find_ns(const Poset& p, NForm form);

// Diagonal edges of all form-N occurrences.
EdgeSet n_diag(const Poset& p);

// Diagonal edges of all form-NDiag occurrences.
EdgeSet nd_diag(const Poset& p);

// Cover edges outside n_diag(p) that gain an N after the first subdivision
// pass: (b, c) with vertices a, d such that a < c, b < d, a incomparable to
// b, c incomparable to d, and (a, c) or (b, d) already diagonal.
EdgeSet a_set(const Poset& p);

bool is_n_free(const Poset& p);

// Chain-antichain completeness: every maximal chain meets every maximal
// antichain.
bool is_cac(const Poset& p);

// True when no four vertices induce exactly the comparabilities of an N
// (a < c, b < c, b < d and nothing else among the six pairs).
bool is_series_parallel(const Poset& p);

}  // namespace nfree
