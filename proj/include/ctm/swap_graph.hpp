#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctm/cartesian_tree.hpp"
#include "ctm/representations.hpp"
#include "ctm/sequence.hpp"

namespace ctm {

// Trees reachable from C(x) by one adjacent swap, split by swap position.
struct Neighborhood {
  std::vector<std::vector<Table>> at;  // at[i]: swap of elements i, i+1
  std::set<Table> all;

  std::size_t size() const noexcept { return all.size(); }
};

namespace detail {

// Forward tables of ng(C(x), i), built from x's (forward, backward) pair.
inline std::vector<Table> neighbours_at(const Table& xf, const Table& xb,
                                        std::size_t i) {
  const std::size_t m = xf.size();
  std::vector<Table> out;
  Table base = xf;

  if (xf[i + 1] == 1) {
    const std::uint32_t a = xf[i];
    base[i + 1] = a == 0 ? 0 : a + 1;
    for (std::size_t q = i + 2; q < m; ++q)
      if (xf[q] == q - i) --base[q];
    out.push_back(base);
    // i may also hang below any node it skipped.
    for (std::uint32_t d = 1; d <= i; ++d)
      if (xb[i - d] == d) {
        base[i] = d;
        out.push_back(base);
      }
  } else {
    const std::uint32_t b = xf[i + 1];
    base[i] = b == 0 ? 0 : b - 1;
    base[i + 1] = 1;
    std::vector<std::size_t> chain;
    for (std::size_t q = i + 2; q < m; ++q)
      if (xf[q] == q - i - 1) chain.push_back(q);
    out.push_back(base);
    for (std::size_t k = chain.size(); k-- > 0;) {
      ++base[chain[k]];
      out.push_back(base);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Table backward_from_forward(std::span<const std::uint32_t> pd) {
  const auto values = realize(tree_from_parent_distance(pd));
  return reverse_parent_distance(values);
}

}  // namespace detail

template <SequenceValue T>
std::vector<Table> neighborhood_at(std::span<const T> x, std::size_t i) {
  if (x.size() < 2 || i + 1 >= x.size())
    throw Error(ErrorKind::InvalidPosition, "swap position out of range");
  return detail::neighbours_at(parent_distance(x), reverse_parent_distance(x), i);
}

template <SequenceValue T>
std::vector<Table> neighborhood_at(const std::vector<T>& x, std::size_t i) {
  return neighborhood_at(std::span<const T>(x), i);
}

inline Neighborhood neighborhood_of_table(std::span<const std::uint32_t> pd) {
  const std::size_t m = pd.size();
  if (m < 2)
    throw Error(ErrorKind::InvalidInput, "neighborhood needs at least 2 elements");
  const Table xf(pd.begin(), pd.end());
  const Table xb = detail::backward_from_forward(pd);
  Neighborhood ng;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    ng.at.push_back(detail::neighbours_at(xf, xb, i));
    ng.all.insert(ng.at.back().begin(), ng.at.back().end());
  }
  return ng;
}

template <SequenceValue T>
Neighborhood neighborhood(std::span<const T> x) {
  if (x.size() < 2)
    throw Error(ErrorKind::InvalidInput, "neighborhood needs at least 2 elements");
  return neighborhood_of_table(parent_distance(x));
}

template <SequenceValue T>
Neighborhood neighborhood(const std::vector<T>& x) {
  return neighborhood(std::span<const T>(x));
}

// Permutation counts overflow 64 bits past 20 nodes.
inline constexpr std::size_t kCountGuard = 20;

// n! / prod(subtree sizes).
inline std::uint64_t count_sequences_hook(const CartesianTree& t) {
  if (t.size() > kCountGuard)
    throw Error(ErrorKind::TooLarge, "sequence count overflows beyond 20 nodes");
  std::uint64_t num = 1;
  for (std::uint64_t k = 2; k <= t.size(); ++k) num *= k;
  std::uint64_t den = 1;
  for (const std::size_t s : subtree_sizes(t)) den *= s;
  return num / den;
}

// binom(n-1, |left|) * p(left) * p(right), evaluated bottom-up.
inline std::uint64_t count_sequences_recursive(const CartesianTree& t) {
  if (t.size() > kCountGuard)
    throw Error(ErrorKind::TooLarge, "sequence count overflows beyond 20 nodes");
  if (t.empty()) return 1;
  std::vector<std::vector<std::uint64_t>> binom(t.size() + 1);
  for (std::size_t n = 0; n <= t.size(); ++n) {
    binom[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k)
      binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
  }
  const auto size = subtree_sizes(t);
  std::vector<std::uint64_t> ways(t.size(), 1);
  // Children sit on both sides of their parent, so process by subtree size.
  std::vector<std::size_t> order(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return size[a] < size[b]; });
  for (const std::size_t v : order) {
    const std::size_t l = t.left[v] == kNoNode ? 0 : size[t.left[v]];
    std::uint64_t w = binom[size[v] - 1][l];
    if (t.left[v] != kNoNode) w *= ways[t.left[v]];
    if (t.right[v] != kNoNode) w *= ways[t.right[v]];
    ways[v] = w;
  }
  return ways[t.root];
}

inline std::uint64_t count_sequences(const CartesianTree& t) {
  return count_sequences_recursive(t);
}

// Every PD table of size m, grown one position at a time: the new position's
// parent is either nobody or some node on the current right branch.
inline std::vector<Table> trees_by_insertion(std::size_t m) {
  std::vector<Table> out;
  Table pd(m, 0);
  std::vector<std::size_t> branch;
  auto grow = [&](auto&& self, std::size_t h) -> void {
    if (h == m) {
      out.push_back(pd);
      return;
    }
    const std::vector<std::size_t> saved = branch;
    for (std::size_t keep = 0; keep <= saved.size(); ++keep) {
      branch.assign(saved.begin(), saved.begin() + static_cast<std::ptrdiff_t>(keep));
      pd[h] = keep == 0 ? 0 : static_cast<std::uint32_t>(h - branch.back());
      branch.push_back(h);
      self(self, h + 1);
    }
    branch = saved;
  };
  grow(grow, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline constexpr std::size_t kGraphMin = 2;
inline constexpr std::size_t kGraphMax = 12;

struct SwapGraph {
  std::size_t m = 0;
  std::vector<Table> vertices;  // sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, sorted
  std::vector<std::size_t> degree;

  std::size_t index_of(const Table& pd) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), pd);
    if (it == vertices.end() || *it != pd)
      throw Error(ErrorKind::InvalidInput, "table is not a vertex");
    return static_cast<std::size_t>(it - vertices.begin());
  }
};

inline SwapGraph build_swap_graph(std::size_t m) {
  if (m < kGraphMin || m > kGraphMax)
    throw Error(ErrorKind::TooLarge, "swap graph size must be in [2, 12]");
  SwapGraph g;
  g.m = m;
  g.vertices = trees_by_insertion(m);
  g.degree.assign(g.vertices.size(), 0);
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    const Neighborhood ng = neighborhood_of_table(g.vertices[u]);
    g.degree[u] = ng.size();
    for (const Table& pd : ng.all) {
      const std::size_t v = g.index_of(pd);
      if (u < v) g.edges.emplace_back(u, v);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline std::string vertex_id(const Table& pd) {
  std::string s;
  for (std::size_t k = 0; k < pd.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(pd[k]);
  }
  return s;
}

inline void write_dot(std::ostream& os, const SwapGraph& g) {
  os << "graph swap_" << g.m << " {\n";
  for (const Table& v : g.vertices) os << "  \"" << vertex_id(v) << "\";\n";
  for (const auto& [u, v] : g.edges)
    os << "  \"" << vertex_id(g.vertices[u]) << "\" -- \""
       << vertex_id(g.vertices[v]) << "\";\n";
  os << "}\n";
}

inline void write_csv(std::ostream& os, const SwapGraph& g) {
  os << "source,target\n";
  for (const auto& [u, v] : g.edges)
    os << '"' << vertex_id(g.vertices[u]) << "\",\"" << vertex_id(g.vertices[v])
       << "\"\n";
}

}  // namespace ctm
