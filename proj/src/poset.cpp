#include "nfree/poset.hpp"

#include <algorithm>

#include "nfree/errors.hpp"

namespace nfree {

namespace {

std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& m, std::size_t words, int i, int j) {
  m[static_cast<std::size_t>(i) * words + static_cast<std::size_t>(j) / 64] |=
      std::uint64_t{1} << (static_cast<std::size_t>(j) % 64);
}

bool test_bit(const std::vector<std::uint64_t>& m, std::size_t words, int i,
              int j) {
  return (m[static_cast<std::size_t>(i) * words + static_cast<std::size_t>(j) / 64] >>
          (static_cast<std::size_t>(j) % 64)) & 1u;
}

}  // namespace

int Poset::find_index(const VertexId& v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || !(*it == v)) return -1;
  return static_cast<int>(it - verts_.begin());
}

int Poset::index_of(const VertexId& v) const {
  int i = find_index(v);
  if (i < 0)
    throw UnknownElementError("unknown element '" + v.encode() + "'");
  return i;
}

Poset Poset::build(std::vector<VertexId> vertices,
                   const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  Poset p;
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1])
      throw DuplicateElementError("duplicate element '" +
                                  vertices[i].encode() + "'");
  }
  p.verts_ = std::move(vertices);
  p.n_ = static_cast<int>(p.verts_.size());
  p.words_ = word_count(p.n_);
  p.closure_.assign(static_cast<std::size_t>(p.n_) * p.words_, 0);

  for (const auto& [x, y] : pairs) {
    int i = p.find_index(x);
    if (i < 0)
      throw UnknownElementError("order pair endpoint '" + x.encode() +
                                "' is not a declared element");
    int j = p.find_index(y);
    if (j < 0)
      throw UnknownElementError("order pair endpoint '" + y.encode() +
                                "' is not a declared element");
    if (i == j)
      throw CycleError("element '" + x.encode() + "' compared to itself");
    set_bit(p.closure_, p.words_, i, j);
  }

  // Warshall closure over the row bitsets.
  for (int k = 0; k < p.n_; ++k) {
    const std::size_t krow = static_cast<std::size_t>(k) * p.words_;
    for (int i = 0; i < p.n_; ++i) {
      if (!test_bit(p.closure_, p.words_, i, k)) continue;
      const std::size_t irow = static_cast<std::size_t>(i) * p.words_;
      for (std::size_t w = 0; w < p.words_; ++w)
        p.closure_[irow + w] |= p.closure_[krow + w];
    }
  }

  for (int i = 0; i < p.n_; ++i) {
    if (test_bit(p.closure_, p.words_, i, i))
      throw CycleError("the relation is cyclic at element '" +
                       p.verts_[static_cast<std::size_t>(i)].encode() + "'");
  }

  // Transitive reduction: (i, j) is a cover iff j is reachable and not
  // reachable through any intermediate point.
  p.up_.assign(static_cast<std::size_t>(p.n_), {});
  p.down_.assign(static_cast<std::size_t>(p.n_), {});
  std::vector<std::uint64_t> via(p.words_);
  for (int i = 0; i < p.n_; ++i) {
    std::fill(via.begin(), via.end(), 0);
    for (int z = 0; z < p.n_; ++z) {
      if (!test_bit(p.closure_, p.words_, i, z)) continue;
      const std::size_t zrow = static_cast<std::size_t>(z) * p.words_;
      for (std::size_t w = 0; w < p.words_; ++w) via[w] |= p.closure_[zrow + w];
    }
    for (int j = 0; j < p.n_; ++j) {
      if (!test_bit(p.closure_, p.words_, i, j)) continue;
      if ((via[static_cast<std::size_t>(j) / 64] >> (static_cast<std::size_t>(j) % 64)) & 1u)
        continue;
      p.covers_.emplace_back(i, j);
      p.up_[static_cast<std::size_t>(i)].push_back(j);
      p.down_[static_cast<std::size_t>(j)].push_back(i);
    }
  }
  // covers_ is already sorted by (i, j); the up/down lists are ascending.
  return p;
}

Poset Poset::from_relation(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<VertexId> verts;
  verts.reserve(elements.size());
  for (const auto& label : elements) verts.push_back(VertexId::original(label));
  std::vector<std::pair<VertexId, VertexId>> vpairs;
  vpairs.reserve(pairs.size());
  for (const auto& [a, b] : pairs)
    vpairs.emplace_back(VertexId::original(a), VertexId::original(b));
  return build(std::move(verts), vpairs);
}

Poset Poset::from_vertices(
    std::vector<VertexId> vertices,
    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  return build(std::move(vertices), pairs);
}

bool Poset::less(const VertexId& x, const VertexId& y) const {
  return less_idx(index_of(x), index_of(y));
}

bool Poset::leq(const VertexId& x, const VertexId& y) const {
  int i = index_of(x), j = index_of(y);
  return i == j || less_idx(i, j);
}

bool Poset::covers(const VertexId& x, const VertexId& y) const {
  return covers_idx(index_of(x), index_of(y));
}

bool Poset::incomparable(const VertexId& x, const VertexId& y) const {
  return incomparable_idx(index_of(x), index_of(y));
}

bool Poset::covers_idx(int i, int j) const {
  const auto& ups = up_[static_cast<std::size_t>(i)];
  return std::binary_search(ups.begin(), ups.end(), j);
}

std::vector<Edge> Poset::cover_edges() const {
  std::vector<Edge> out;
  out.reserve(covers_.size());
  for (const auto& [i, j] : covers_)
    out.push_back(Edge{verts_[static_cast<std::size_t>(i)],
                       verts_[static_cast<std::size_t>(j)]});
  return out;
}

std::vector<std::pair<int, int>> Poset::closure_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (closure_bit(i, j)) out.emplace_back(i, j);
  return out;
}

Poset Poset::dual() const {
  std::vector<std::pair<VertexId, VertexId>> reversed;
  reversed.reserve(covers_.size());
  for (const auto& [i, j] : covers_)
    reversed.emplace_back(verts_[static_cast<std::size_t>(j)],
                          verts_[static_cast<std::size_t>(i)]);
  return build(verts_, reversed);
}

std::vector<std::vector<int>> Poset::maximal_chain_indices() const {
  std::vector<std::vector<int>> out;
  if (n_ == 0) return out;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int v) -> void {
    path.push_back(v);
    const auto& ups = up_[static_cast<std::size_t>(v)];
    if (ups.empty()) {
      out.push_back(path);
    } else {
      for (int u : ups) self(self, u);
    }
    path.pop_back();
  };
  for (int v = 0; v < n_; ++v)
    if (down_[static_cast<std::size_t>(v)].empty()) dfs(dfs, v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> Poset::maximal_antichain_indices() const {
  std::vector<std::vector<int>> out;
  if (n_ == 0) return out;
  // Maximal antichains are the maximal cliques of the incomparability
  // graph; Bron-Kerbosch with pivoting over word masks.
  const std::size_t words = words_;
  std::vector<std::uint64_t> inc(static_cast<std::size_t>(n_) * words, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (incomparable_idx(i, j)) set_bit(inc, words, i, j);

  auto row = [&](int v) { return inc.begin() + static_cast<long>(v) * static_cast<long>(words); };
  auto count_and = [&](const std::vector<std::uint64_t>& a, int v) {
    int c = 0;
    auto r = row(v);
    for (std::size_t w = 0; w < words; ++w)
      c += __builtin_popcountll(a[w] & r[w]);
    return c;
  };

  std::vector<int> current;
  auto bk = [&](auto&& self, std::vector<std::uint64_t> cand,
                std::vector<std::uint64_t> excl) -> void {
    bool cand_empty = true, excl_empty = true;
    for (std::size_t w = 0; w < words; ++w) {
      if (cand[w]) cand_empty = false;
      if (excl[w]) excl_empty = false;
    }
    if (cand_empty && excl_empty) {
      out.push_back(current);
      return;
    }
    // pivot: vertex of cand|excl with most candidates incomparable to it
    int pivot = -1, best = -1;
    for (int v = 0; v < n_; ++v) {
      bool in = ((cand[static_cast<std::size_t>(v) / 64] |
                  excl[static_cast<std::size_t>(v) / 64]) >>
                 (static_cast<std::size_t>(v) % 64)) & 1u;
      if (!in) continue;
      int c = count_and(cand, v);
      if (c > best) {
        best = c;
        pivot = v;
      }
    }
    for (int v = 0; v < n_; ++v) {
      bool in_cand = (cand[static_cast<std::size_t>(v) / 64] >>
                      (static_cast<std::size_t>(v) % 64)) & 1u;
      if (!in_cand) continue;
      if (pivot >= 0 && test_bit(inc, words, pivot, v)) continue;
      std::vector<std::uint64_t> next_cand(words), next_excl(words);
      auto r = row(v);
      for (std::size_t w = 0; w < words; ++w) {
        next_cand[w] = cand[w] & r[w];
        next_excl[w] = excl[w] & r[w];
      }
      current.push_back(v);
      self(self, std::move(next_cand), std::move(next_excl));
      current.pop_back();
      cand[static_cast<std::size_t>(v) / 64] &=
          ~(std::uint64_t{1} << (static_cast<std::size_t>(v) % 64));
      excl[static_cast<std::size_t>(v) / 64] |=
          std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
    }
  };

  std::vector<std::uint64_t> all(words, 0);
  for (int v = 0; v < n_; ++v) set_bit(all, words, 0, v);
  bk(bk, all, std::vector<std::uint64_t>(words, 0));

  for (auto& a : out) std::sort(a.begin(), a.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> Poset::maximal_chains() const {
  std::vector<std::vector<VertexId>> out;
  for (const auto& chain : maximal_chain_indices()) {
    std::vector<VertexId> c;
    c.reserve(chain.size());
    for (int i : chain) c.push_back(verts_[static_cast<std::size_t>(i)]);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<VertexId>> Poset::maximal_antichains() const {
  std::vector<std::vector<VertexId>> out;
  for (const auto& anti : maximal_antichain_indices()) {
    std::vector<VertexId> a;
    a.reserve(anti.size());
    for (int i : anti) a.push_back(verts_[static_cast<std::size_t>(i)]);
    out.push_back(std::move(a));
  }
  return out;
}

bool Poset::equals(const Poset& other) const {
  return n_ == other.n_ && verts_ == other.verts_ && closure_ == other.closure_;
}

}  // namespace nfree
