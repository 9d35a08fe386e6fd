#include "nfree/npattern.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>

namespace nfree {

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

EdgeSet union_of(const EdgeSet& a, const EdgeSet& b) {
  std::vector<Edge> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return EdgeSet(std::move(out));
}

EdgeSet intersection_of(const EdgeSet& a, const EdgeSet& b) {
  std::vector<Edge> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return EdgeSet(std::move(out));
}

EdgeSet difference_of(const EdgeSet& a, const EdgeSet& b) {
  std::vector<Edge> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return EdgeSet(std::move(out));
}

bool is_subset(const EdgeSet& a, const EdgeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

bool all_distinct(int a, int b, int c, int d) {
  return a != b && a != c && a != d && b != c && b != d && c != d;
}

// Attachment condition on (a, d) for the given form; the shared cover
// conditions are handled by the callers' loops.
bool ad_condition(const Poset& p, NForm form, int a, int d) {
  switch (form) {
    case NForm::N:
    case NForm::NPrime:
      return p.incomparable_idx(a, d);
    case NForm::NDiag:
      return !p.covers_idx(a, d);
  }
  return false;
}

// True when some witness with diagonal (b, c) exists for the given form.
bool has_witness_on(const Poset& p, NForm form, int b, int c) {
  const int n = p.size();
  if (form == NForm::NPrime) {
    for (int a = 0; a < n; ++a) {
      if (a == b || !p.less_idx(a, c)) continue;
      for (int d = 0; d < n; ++d) {
        if (d == c || !p.less_idx(b, d)) continue;
        if (all_distinct(a, b, c, d) && ad_condition(p, form, a, d))
          return true;
      }
    }
    return false;
  }
  for (int a : p.down_covers(c)) {
    if (a == b) continue;
    for (int d : p.up_covers(b)) {
      if (d == c) continue;
      if (all_distinct(a, b, c, d) && ad_condition(p, form, a, d)) return true;
    }
  }
  return false;
}

EdgeSet diagonal_edges(const Poset& p, NForm form) {
  std::vector<Edge> out;
  for (const auto& [b, c] : p.cover_pairs()) {
    if (has_witness_on(p, form, b, c))
      out.push_back(Edge{p.vertex(b), p.vertex(c)});
  }
  return EdgeSet(std::move(out));
}

}  // namespace

std::vector<NWitness> find_ns(const Poset& p, NForm form) {
  std::vector<NWitness> out;
  const int n = p.size();
  for (const auto& [b, c] : p.cover_pairs()) {
    if (form == NForm::NPrime) {
      for (int a = 0; a < n; ++a) {
        if (a == b || !p.less_idx(a, c)) continue;
        for (int d = 0; d < n; ++d) {
          if (d == c || !p.less_idx(b, d)) continue;
          if (all_distinct(a, b, c, d) && ad_condition(p, form, a, d))
            out.push_back(NWitness{p.vertex(a), p.vertex(b), p.vertex(c),
                                   p.vertex(d), form});
        }
      }
    } else {
      for (int a : p.down_covers(c)) {
        if (a == b) continue;
        for (int d : p.up_covers(b)) {
          if (d == c) continue;
          if (all_distinct(a, b, c, d) && ad_condition(p, form, a, d))
            out.push_back(NWitness{p.vertex(a), p.vertex(b), p.vertex(c),
                                   p.vertex(d), form});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NWitness& x, const NWitness& y) {
    if (auto c = x.a <=> y.a; c != 0) return c < 0;
    if (auto c = x.b <=> y.b; c != 0) return c < 0;
    if (auto c = x.c <=> y.c; c != 0) return c < 0;
    return (x.d <=> y.d) < 0;
  });
  return out;
}

EdgeSet n_diag(const Poset& p) { return diagonal_edges(p, NForm::N); }

EdgeSet nd_diag(const Poset& p) { return diagonal_edges(p, NForm::NDiag); }

EdgeSet a_set(const Poset& p) {
  const int n = p.size();
  // Index-level membership of n_diag for the disjunction test.
  std::vector<std::pair<int, int>> diag;
  for (const auto& [b, c] : p.cover_pairs())
    if (has_witness_on(p, NForm::N, b, c)) diag.emplace_back(b, c);
  auto in_diag = [&](int x, int y) {
    return std::binary_search(diag.begin(), diag.end(), std::make_pair(x, y));
  };

  std::vector<Edge> out;
  for (const auto& [b, c] : p.cover_pairs()) {
    if (in_diag(b, c)) continue;
    bool found = false;
    for (int a = 0; a < n && !found; ++a) {
      if (!p.less_idx(a, c) || !p.incomparable_idx(a, b)) continue;
      for (int d = 0; d < n && !found; ++d) {
        if (!p.less_idx(b, d) || !p.incomparable_idx(c, d)) continue;
        if (in_diag(a, c) || in_diag(b, d)) found = true;
      }
    }
    if (found) out.push_back(Edge{p.vertex(b), p.vertex(c)});
  }
  return EdgeSet(std::move(out));
}

bool is_n_free(const Poset& p) {
  for (const auto& [b, c] : p.cover_pairs())
    if (has_witness_on(p, NForm::N, b, c)) return false;
  return true;
}

bool is_cac(const Poset& p) {
  const auto chains = p.maximal_chain_indices();
  const auto antichains = p.maximal_antichain_indices();
  const std::size_t words = (static_cast<std::size_t>(p.size()) + 63) / 64;
  auto to_mask = [&](const std::vector<int>& set) {
    std::vector<std::uint64_t> m(words, 0);
    for (int v : set)
      m[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1}
                                             << (static_cast<std::size_t>(v) % 64);
    return m;
  };
  std::vector<std::vector<std::uint64_t>> chain_masks, anti_masks;
  chain_masks.reserve(chains.size());
  for (const auto& c : chains) chain_masks.push_back(to_mask(c));
  anti_masks.reserve(antichains.size());
  for (const auto& a : antichains) anti_masks.push_back(to_mask(a));

  for (const auto& cm : chain_masks) {
    for (const auto& am : anti_masks) {
      bool meets = false;
      for (std::size_t w = 0; w < words; ++w)
        if (cm[w] & am[w]) {
          meets = true;
          break;
        }
      if (!meets) return false;
    }
  }
  return true;
}

bool is_series_parallel(const Poset& p) {
  const int n = p.size();
  // Look for four vertices whose induced comparabilities are exactly
  // a < c, b < c, b < d.
  for (int c = 0; c < n; ++c) {
    for (int a = 0; a < n; ++a) {
      if (!p.less_idx(a, c)) continue;
      for (int b = 0; b < n; ++b) {
        if (b == a || !p.less_idx(b, c) || !p.incomparable_idx(a, b)) continue;
        for (int d = 0; d < n; ++d) {
          if (d == c || !p.less_idx(b, d)) continue;
          if (p.incomparable_idx(a, d) && p.incomparable_idx(c, d))
            return false;
        }
      }
    }
  }
  return true;
}

}  // namespace nfree
