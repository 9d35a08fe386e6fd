#include "nfree/enumerate.hpp"

#include <algorithm>
#include <array>

#include "nfree/errors.hpp"
#include "nfree/npattern.hpp"

namespace nfree {

namespace {

// Bit i*8 + j set means vi < vj. Stride 8 keeps row extraction trivial for
// n ≤ 8.
using Matrix = std::uint64_t;

constexpr int kMaxN = 7;

bool bit(Matrix m, int i, int j) { return (m >> (i * 8 + j)) & 1u; }

// DFS over the unordered vertex pairs in lexicographic order. Each pair is
// incomparable, i < j, or j < i; the running transitive closure of the
// chosen "less" pairs prunes inconsistent branches and forces implied ones,
// so every leaf is a distinct strict order and every strict order is a
// leaf.
class DirectEnumerator {
 public:
  DirectEnumerator(int n, std::function<bool(Matrix)> emit)
      : n_(n), emit_(std::move(emit)) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
    state_.assign(pairs_.size(), Unassigned);
  }

  // Returns false if the visitor requested a stop.
  bool run() { return rec(0); }

 private:
  enum PairState : unsigned char { Unassigned, Incomparable, Lt, Gt };

  bool rec(std::size_t p) {
    if (p == pairs_.size()) return emit_(closure_);
    const auto [i, j] = pairs_[p];
    if (bit(closure_, i, j)) {
      state_[p] = Lt;
      if (!rec(p + 1)) return false;
      state_[p] = Unassigned;
      return true;
    }
    if (bit(closure_, j, i)) {
      state_[p] = Gt;
      if (!rec(p + 1)) return false;
      state_[p] = Unassigned;
      return true;
    }
    state_[p] = Incomparable;
    if (!rec(p + 1)) return false;

    std::size_t mark = undo_.size();
    if (add_less(i, j)) {
      state_[p] = Lt;
      if (!rec(p + 1)) return false;
    }
    rollback(mark);

    mark = undo_.size();
    if (add_less(j, i)) {
      state_[p] = Gt;
      if (!rec(p + 1)) return false;
    }
    rollback(mark);

    state_[p] = Unassigned;
    return true;
  }

  // Adds x < y plus all implied pairs; fails (leaving a partial log to roll
  // back) when an implied pair clashes with an assigned state.
  bool add_less(int x, int y) {
    std::array<int, 8> from{}, to{};
    int nf = 0, nt = 0;
    from[nf++] = x;
    to[nt++] = y;
    for (int a = 0; a < n_; ++a) {
      if (bit(closure_, a, x)) from[nf++] = a;
      if (bit(closure_, y, a)) to[nt++] = a;
    }
    for (int fi = 0; fi < nf; ++fi) {
      for (int ti = 0; ti < nt; ++ti) {
        const int a = from[fi], b = to[ti];
        if (bit(closure_, a, b)) continue;
        if (a == b || bit(closure_, b, a)) return false;
        const std::size_t idx = pair_index(a, b);
        if (state_[idx] == Incomparable) return false;
        const PairState wanted = a < b ? Lt : Gt;
        if (state_[idx] != Unassigned && state_[idx] != wanted) return false;
        closure_ |= Matrix{1} << (a * 8 + b);
        undo_.push_back(static_cast<unsigned char>(a * 8 + b));
      }
    }
    return true;
  }

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      closure_ &= ~(Matrix{1} << undo_.back());
      undo_.pop_back();
    }
  }

  std::size_t pair_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    // index of (a, b) in the lex-ordered list of pairs with a < b
    return static_cast<std::size_t>(a) * (2 * n_ - a - 1) / 2 + (b - a - 1);
  }

  int n_;
  std::function<bool(Matrix)> emit_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<PairState> state_;
  std::vector<unsigned char> undo_;
  Matrix closure_ = 0;
};

const std::vector<VertexId>& cached_labels(int n) {
  static const std::vector<VertexId> all = [] {
    std::vector<VertexId> v;
    for (int i = 1; i <= kMaxN; ++i)
      v.push_back(VertexId::original("v" + std::to_string(i)));
    return v;
  }();
  static std::vector<std::vector<VertexId>> prefixes = [] {
    std::vector<std::vector<VertexId>> p(kMaxN + 1);
    for (int i = 0; i <= kMaxN; ++i)
      p[static_cast<std::size_t>(i)] =
          std::vector<VertexId>(all.begin(), all.begin() + i);
    return p;
  }();
  return prefixes[static_cast<std::size_t>(n)];
}

Poset poset_from_matrix(int n, Matrix m) {
  const auto& labels = cached_labels(n);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bit(m, i, j))
        pairs.emplace_back(labels[static_cast<std::size_t>(i)],
                           labels[static_cast<std::size_t>(j)]);
  return Poset::from_vertices(labels, pairs);
}

void validate_spec(const EnumerationSpec& spec) {
  if (spec.n < 1)
    throw BoundExceededError("enumeration needs n >= 1");
  if (spec.n > kMaxN)
    throw BoundExceededError("enumeration beyond n = 7 is not supported");
  if (spec.n == kMaxN && !spec.allow_slow)
    throw BoundExceededError(
        "n = 7 enumerates 6,129,859 posets; pass the long-running flag to "
        "allow it");
  if (!spec.filter.empty() && spec.filter != "nfree" && spec.filter != "cac" &&
      spec.filter != "sp")
    throw Error("unknown enumeration filter '" + spec.filter +
                "' (expected nfree, cac or sp)");
}

bool passes_filter(const Poset& p, const std::string& filter) {
  if (filter.empty()) return true;
  if (filter == "nfree") return is_n_free(p);
  if (filter == "cac") return is_cac(p);
  return is_series_parallel(p);
}

}  // namespace

void for_each_poset(const EnumerationSpec& spec,
                    const std::function<bool(const Poset&)>& visit) {
  validate_spec(spec);
  DirectEnumerator e(spec.n, [&](Matrix m) {
    Poset p = poset_from_matrix(spec.n, m);
    if (!passes_filter(p, spec.filter)) return true;
    return visit(p);
  });
  e.run();
}

std::uint64_t count_posets(const EnumerationSpec& spec) {
  validate_spec(spec);
  std::uint64_t count = 0;
  if (spec.filter.empty()) {
    DirectEnumerator e(spec.n, [&](Matrix) {
      ++count;
      return true;
    });
    e.run();
  } else {
    for_each_poset(spec, [&](const Poset&) {
      ++count;
      return true;
    });
  }
  return count;
}

std::vector<std::uint64_t> closure_codes_direct(int n) {
  std::vector<std::uint64_t> codes;
  DirectEnumerator e(n, [&](Matrix m) {
    codes.push_back(m);
    return true;
  });
  e.run();
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::vector<std::uint64_t> closure_codes_via_dags(int n) {
  if (n < 1 || n > 5)
    throw BoundExceededError("the DAG-closure enumeration is bounded at n = 5");
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) arcs.emplace_back(i, j);

  std::vector<std::uint64_t> codes;
  const std::uint64_t total = std::uint64_t{1} << arcs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Matrix m = 0;
    for (std::size_t k = 0; k < arcs.size(); ++k)
      if ((mask >> k) & 1u)
        m |= Matrix{1} << (arcs[k].first * 8 + arcs[k].second);
    // close, then drop anything cyclic
    for (int k = 0; k < n; ++k) {
      const Matrix krow = (m >> (k * 8)) & 0xffu;
      for (int i = 0; i < n; ++i)
        if (bit(m, i, k)) m |= krow << (i * 8);
    }
    bool cyclic = false;
    for (int i = 0; i < n && !cyclic; ++i) cyclic = bit(m, i, i);
    if (!cyclic) codes.push_back(m);
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

}  // namespace nfree
