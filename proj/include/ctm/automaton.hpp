#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <queue>
#include <span>
#include <vector>

#include "ctm/matchers.hpp"
#include "ctm/representations.hpp"
#include "ctm/sequence.hpp"
#include "ctm/swap_graph.hpp"

namespace ctm {

// Aho-Corasick automaton over forward PD tables of a pattern and of every tree
// in its swap neighborhood. A PD symbol read at depth d that points further
// back than d is outside the current match and is read as 0.
class SwapAutomaton {
 public:
  struct State {
    std::map<std::uint32_t, std::size_t> next;
    std::size_t fail = 0;
    std::size_t depth = 0;
    std::size_t pattern = kNoNode;  // index into patterns(), terminals only
  };

  explicit SwapAutomaton(const std::vector<Table>& patterns) : patterns_(patterns) {
    states_.emplace_back();
    for (std::size_t id = 0; id < patterns_.size(); ++id) insert(id);
    link();
  }

  std::size_t pattern_length() const noexcept {
    return patterns_.empty() ? 0 : patterns_.front().size();
  }
  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t pattern_count() const noexcept { return patterns_.size(); }
  const std::vector<Table>& patterns() const noexcept { return patterns_; }
  const State& state(std::size_t s) const { return states_[s]; }

  // One transition, following failure links as needed. Every lookup counts
  // as a comparison.
  std::size_t step(std::size_t s, std::uint32_t symbol,
                   ComparisonCounter& cmp) const {
    for (;;) {
      const std::uint32_t c = symbol > states_[s].depth ? 0 : symbol;
      ++cmp.count;
      const auto it = states_[s].next.find(c);
      if (it != states_[s].next.end()) return it->second;
      if (s == 0) return 0;
      s = states_[s].fail;
    }
  }

  // Whole-table membership, ignoring failure links.
  bool accepts(std::span<const std::uint32_t> pd) const {
    std::size_t s = 0;
    for (const std::uint32_t c : pd) {
      const auto it = states_[s].next.find(c);
      if (it == states_[s].next.end()) return false;
      s = it->second;
    }
    return states_[s].pattern != kNoNode;
  }

 private:
  void insert(std::size_t id) {
    std::size_t s = 0;
    for (const std::uint32_t c : patterns_[id]) {
      const auto it = states_[s].next.find(c);
      if (it != states_[s].next.end()) {
        s = it->second;
        continue;
      }
      states_.emplace_back();
      states_.back().depth = states_[s].depth + 1;
      states_[s].next.emplace(c, states_.size() - 1);
      s = states_.size() - 1;
    }
    states_[s].pattern = id;
  }

  void link() {
    std::queue<std::size_t> bfs;
    for (const auto& [c, child] : states_[0].next) {
      states_[child].fail = 0;
      bfs.push(child);
    }
    while (!bfs.empty()) {
      const std::size_t s = bfs.front();
      bfs.pop();
      for (const auto& [c, child] : states_[s].next) {
        std::size_t f = states_[s].fail;
        for (;;) {
          const std::uint32_t rc = c > states_[f].depth ? 0 : c;
          const auto it = states_[f].next.find(rc);
          if (it != states_[f].next.end()) {
            f = it->second;
            break;
          }
          if (f == 0) break;
          f = states_[f].fail;
        }
        states_[child].fail = f;
        bfs.push(child);
      }
    }
  }

  std::vector<Table> patterns_;
  std::vector<State> states_;
};

template <SequenceValue T>
SwapAutomaton build_swap_automaton(std::span<const T> p) {
  if (p.size() < 2)
    throw Error(ErrorKind::InvalidInput, "swap automaton needs at least 2 elements");
  const Neighborhood ng = neighborhood(p);
  std::vector<Table> tables;
  tables.push_back(parent_distance(p));
  for (const Table& pd : ng.all)
    if (pd != tables.front()) tables.push_back(pd);
  return SwapAutomaton(tables);
}

template <SequenceValue T>
SwapAutomaton build_swap_automaton(const std::vector<T>& p) {
  return build_swap_automaton(std::span<const T>(p));
}

// Feeds the text's forward PD table through the automaton. Lookups made while
// reading t[j] are charged to the window ending at j (to window 1 before the
// first window is complete).
template <SequenceValue T>
MatchReport automaton_search(const SwapAutomaton& a, std::span<const T> t) {
  const std::size_t m = a.pattern_length();
  if (m == 0 || m > t.size())
    throw Error(ErrorKind::InvalidInput, "window longer than text");
  const Table pd = parent_distance(t);
  MatchReport report;
  report.window_length = m;
  report.windows = t.size() - m + 1;
  report.comparisons.assign(report.windows, 0);
  std::size_t s = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    ComparisonCounter cmp;
    s = a.step(s, pd[j], cmp);
    const std::size_t w = j + 1 < m ? 0 : j + 1 - m;
    report.comparisons[w] += static_cast<std::uint32_t>(cmp.count);
    report.total_comparisons += cmp.count;
    if (a.state(s).depth == m) report.occurrences.push_back(j + 2 - m);
  }
  return report;
}

template <SequenceValue T>
MatchReport automaton_search(const SwapAutomaton& a, const std::vector<T>& t) {
  return automaton_search(a, std::span<const T>(t));
}

}  // namespace ctm
