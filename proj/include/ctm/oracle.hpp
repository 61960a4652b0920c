#pragma once

// Deliberately naive reference implementations. Nothing here reuses the
// incremental machinery it is meant to check: parent distances come straight
// from their definition, swap matches from enumerating the sequences that
// realize a tree, and edit matches from trying every split.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "ctm/cartesian_tree.hpp"
#include "ctm/matchers.hpp"
#include "ctm/sequence.hpp"

namespace ctm::oracle {

inline constexpr std::size_t kSwapEnumerationGuard = 8;
inline constexpr std::size_t kDiffGuard = 32;
inline constexpr std::size_t kTreeEnumerationGuard = 12;
// Above this length brute_force_search switches from enumerating the
// pattern's neighbourhood to the linear-extension check per window.
inline constexpr std::size_t kSearchEnumerationLimit = 6;

struct OracleVerdict {
  bool matched = false;
  // Index of the edited element: the left element of the swapped pair, the
  // mismatched element, the inserted element (in the longer sequence) or the
  // deleted element (in the pattern). Empty for an exact match.
  std::optional<std::size_t> witness;
};

// h minus the largest j < h holding a smaller value, 0 if none.
template <SequenceValue T>
Table naive_parent_distance(std::span<const T> x) {
  Table pd(x.size(), 0);
  for (std::size_t h = 0; h < x.size(); ++h)
    for (std::size_t j = h; j-- > 0;)
      if (position_less(x, j, h)) {
        pd[h] = static_cast<std::uint32_t>(h - j);
        break;
      }
  return pd;
}

// The smallest j > h holding a smaller value, minus h; 0 if none.
template <SequenceValue T>
Table naive_reverse_parent_distance(std::span<const T> x) {
  Table pd(x.size(), 0);
  for (std::size_t h = 0; h < x.size(); ++h)
    for (std::size_t j = h + 1; j < x.size(); ++j)
      if (position_less(x, j, h)) {
        pd[h] = static_cast<std::uint32_t>(j - h);
        break;
      }
  return pd;
}

// sn[h] = number of positions whose referent is h.
template <SequenceValue T>
Table naive_skipped_number(std::span<const T> x) {
  const Table ref = naive_reverse_parent_distance(x);
  Table sn(x.size(), 0);
  for (std::size_t h = 0; h < x.size(); ++h)
    if (ref[h] != 0) ++sn[h + ref[h]];
  return sn;
}

template <SequenceValue T>
Table naive_parent_distance(const std::vector<T>& x) {
  return naive_parent_distance(std::span<const T>(x));
}
template <SequenceValue T>
Table naive_reverse_parent_distance(const std::vector<T>& x) {
  return naive_reverse_parent_distance(std::span<const T>(x));
}
template <SequenceValue T>
Table naive_skipped_number(const std::vector<T>& x) {
  return naive_skipped_number(std::span<const T>(x));
}

// Parent of every position in the Cartesian tree, by recursive minimum split.
template <SequenceValue T>
std::vector<std::size_t> naive_tree_parents(std::span<const T> x) {
  std::vector<std::size_t> parent(x.size(), kNoNode);
  std::function<void(std::size_t, std::size_t, std::size_t)> split =
      [&](std::size_t lo, std::size_t hi, std::size_t up) {
        if (lo >= hi) return;
        std::size_t best = lo;
        for (std::size_t k = lo + 1; k < hi; ++k)
          if (position_less(x, k, best)) best = k;
        parent[best] = up;
        split(lo, best, best);
        split(best + 1, hi, best);
      };
  split(0, x.size(), kNoNode);
  return parent;
}

inline std::uint64_t catalan(std::size_t m) {
  std::uint64_t c = 1;
  for (std::size_t k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// One PD table per binary tree with m nodes, lexicographically sorted.
// Shapes come from recursive root splits; each shape is turned into a
// sequence by numbering nodes in preorder.
inline std::vector<Table> enumerate_trees(std::size_t m) {
  if (m > kTreeEnumerationGuard)
    throw Error(ErrorKind::TooLarge, "tree enumeration limited to 12 nodes");
  // shapes[n] lists every shape on n nodes as a preorder value layout.
  std::vector<std::vector<std::vector<std::int64_t>>> shapes(m + 1);
  shapes[0].push_back({});
  for (std::size_t n = 1; n <= m; ++n) {
    for (std::size_t left = 0; left < n; ++left) {
      const std::size_t right = n - 1 - left;
      for (const auto& l : shapes[left])
        for (const auto& r : shapes[right]) {
          std::vector<std::int64_t> seq;
          seq.reserve(n);
          for (const auto v : l) seq.push_back(v + 1);
          seq.push_back(0);
          for (const auto v : r) seq.push_back(v + 1 + static_cast<std::int64_t>(left));
          shapes[n].push_back(std::move(seq));
        }
    }
  }
  std::vector<Table> out;
  out.reserve(shapes[m].size());
  for (const auto& seq : shapes[m]) out.push_back(naive_parent_distance(seq));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Trees reachable by one swap at each position from any permutation that
// realizes C(x): ng[i] holds the PD tables for a swap of elements i, i+1.
template <SequenceValue T>
std::vector<std::set<Table>> brute_force_neighbourhood(
    std::span<const T> x, std::size_t guard = kSwapEnumerationGuard) {
  const std::size_t m = x.size();
  if (m > guard)
    throw Error(ErrorKind::TooLarge, "swap enumeration guard exceeded");
  std::vector<std::set<Table>> ng(m == 0 ? 0 : m - 1);
  const Table target = naive_parent_distance(x);
  std::vector<std::int64_t> z(m);
  std::iota(z.begin(), z.end(), 0);
  do {
    if (naive_parent_distance(z) != target) continue;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      std::swap(z[i], z[i + 1]);
      ng[i].insert(naive_parent_distance(z));
      std::swap(z[i], z[i + 1]);
    }
  } while (std::next_permutation(z.begin(), z.end()));
  return ng;
}

template <SequenceValue T>
std::vector<std::set<Table>> brute_force_neighbourhood(
    const std::vector<T>& x, std::size_t guard = kSwapEnumerationGuard) {
  return brute_force_neighbourhood(std::span<const T>(x), guard);
}

// x and y match up to one swap: some z realizing C(x) becomes a realization
// of C(y) after swapping two adjacent elements.
template <SequenceValue T, SequenceValue U>
OracleVerdict brute_force_ct_tau(std::span<const T> x, std::span<const U> y,
                                 std::size_t guard = kSwapEnumerationGuard) {
  if (x.size() != y.size())
    throw Error(ErrorKind::InvalidInput, "swap matching needs equal lengths");
  if (ct_equal(x, y)) return {true, std::nullopt};
  const auto ng = brute_force_neighbourhood(x, guard);
  const Table target = naive_parent_distance(y);
  for (std::size_t i = 0; i < ng.size(); ++i)
    if (ng[i].contains(target)) return {true, i};
  return {};
}

template <SequenceValue T, SequenceValue U>
OracleVerdict brute_force_ct_tau(const std::vector<T>& x,
                                 const std::vector<U>& y,
                                 std::size_t guard = kSwapEnumerationGuard) {
  return brute_force_ct_tau(std::span<const T>(x), std::span<const U>(y), guard);
}

// Swap match without enumeration, for lengths past the enumeration guard:
// z realizes C(x) iff z is heap-ordered on C(x), so a swap at i links C(x) to
// C(y) iff the heap orders of C(x) and of C(y) (with positions i, i+1
// exchanged) admit a common linear extension, i.e. their union is acyclic.
template <SequenceValue T, SequenceValue U>
OracleVerdict linear_extension_ct_tau(std::span<const T> x,
                                      std::span<const U> y) {
  const std::size_t m = x.size();
  if (m != y.size())
    throw Error(ErrorKind::InvalidInput, "swap matching needs equal lengths");
  const auto px = naive_tree_parents(x);
  const auto py = naive_tree_parents(y);
  if (px == py) return {true, std::nullopt};
  for (std::size_t i = 0; i + 1 < m; ++i) {
    auto sigma = [i](std::size_t k) {
      return k == i ? i + 1 : (k == i + 1 ? i : k);
    };
    std::vector<std::vector<std::size_t>> out(m);
    std::vector<std::size_t> indegree(m, 0);
    auto edge = [&](std::size_t a, std::size_t b) {
      out[a].push_back(b);
      ++indegree[b];
    };
    for (std::size_t k = 0; k < m; ++k) {
      if (px[k] != kNoNode) edge(px[k], k);
      if (py[k] != kNoNode) edge(sigma(py[k]), sigma(k));
    }
    std::vector<std::size_t> ready;
    for (std::size_t k = 0; k < m; ++k)
      if (indegree[k] == 0) ready.push_back(k);
    std::size_t seen = 0;
    while (!ready.empty()) {
      const std::size_t v = ready.back();
      ready.pop_back();
      ++seen;
      for (const std::size_t w : out[v])
        if (--indegree[w] == 0) ready.push_back(w);
    }
    if (seen == m) return {true, i};
  }
  return {};
}

template <SequenceValue T, SequenceValue U>
OracleVerdict linear_extension_ct_tau(const std::vector<T>& x,
                                      const std::vector<U>& y) {
  return linear_extension_ct_tau(std::span<const T>(x), std::span<const U>(y));
}

// Mismatch / insertion / deletion by trying every position of the edit.
// x is the pattern; y has length m, m+1 or m-1 respectively.
template <SequenceValue T, SequenceValue U>
OracleVerdict brute_force_diff(std::span<const T> x, std::span<const U> y,
                               MatchMode mode) {
  const std::size_t m = x.size();
  if (m == 0) throw Error(ErrorKind::InvalidInput, "empty pattern");
  if (m > kDiffGuard)
    throw Error(ErrorKind::TooLarge, "split oracle guard exceeded");
  auto same = [](auto a, auto b) { return ct_equal(a, b); };
  switch (mode) {
    case MatchMode::Mismatch:
      if (y.size() != m) break;
      for (std::size_t e = 0; e < m; ++e)
        if (same(x.first(e), y.first(e)) &&
            same(x.subspan(e + 1), y.subspan(e + 1)))
          return {true, e};
      return {};
    case MatchMode::Insertion:
      if (y.size() != m + 1) break;
      for (std::size_t e = 1; e <= m; ++e)
        if (same(x.first(e), y.first(e)) &&
            same(x.subspan(e), y.subspan(e + 1)))
          return {true, e};
      return {};
    case MatchMode::Deletion:
      if (m < 2 || y.size() != m - 1) break;
      for (std::size_t e = 1; e < m; ++e)
        if (same(x.first(e), y.first(e)) &&
            same(x.subspan(e + 1), y.subspan(e)))
          return {true, e};
      return {};
    default:
      throw Error(ErrorKind::InvalidInput, "not an edit mode");
  }
  throw Error(ErrorKind::InvalidInput, "lengths inconsistent with mode");
}

template <SequenceValue T, SequenceValue U>
OracleVerdict brute_force_diff(const std::vector<T>& x,
                               const std::vector<U>& y, MatchMode mode) {
  return brute_force_diff(std::span<const T>(x), std::span<const U>(y), mode);
}

// Definitional verdict at every window start (1-based), for any mode.
template <SequenceValue TP, SequenceValue TT>
std::vector<std::size_t> brute_force_search(std::span<const TP> p,
                                            std::span<const TT> t,
                                            MatchMode mode) {
  if (p.empty()) throw Error(ErrorKind::InvalidInput, "empty pattern");
  const std::size_t m = p.size();
  const std::size_t w = window_length(mode, m);
  if (w == 0 || w > t.size())
    throw Error(ErrorKind::InvalidInput, "window longer than text");
  const bool swap = mode == MatchMode::SwapPD || mode == MatchMode::SwapSN;

  // Small swap patterns: enumerate the pattern's neighbourhood once.
  std::set<Table> accepted;
  const bool enumerate = swap && m <= kSearchEnumerationLimit;
  if (enumerate) {
    accepted.insert(naive_parent_distance(p));
    for (const auto& at_i : brute_force_neighbourhood(p))
      accepted.insert(at_i.begin(), at_i.end());
  }

  std::vector<std::size_t> hits;
  for (std::size_t s = 0; s + w <= t.size(); ++s) {
    const auto x = t.subspan(s, w);
    bool hit = false;
    if (mode == MatchMode::Exact)
      hit = naive_parent_distance(p) == naive_parent_distance(x);
    else if (enumerate)
      hit = accepted.contains(naive_parent_distance(x));
    else if (swap)
      hit = linear_extension_ct_tau(p, x).matched;
    else
      hit = brute_force_diff(p, x, mode).matched;
    if (hit) hits.push_back(s + 1);
  }
  return hits;
}

template <SequenceValue TP, SequenceValue TT>
std::vector<std::size_t> brute_force_search(const std::vector<TP>& p,
                                            const std::vector<TT>& t,
                                            MatchMode mode) {
  return brute_force_search(std::span<const TP>(p), std::span<const TT>(t),
                            mode);
}

}  // namespace ctm::oracle
