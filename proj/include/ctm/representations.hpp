#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ctm/sequence.hpp"

namespace ctm {

// Forward table: distance back to the nearest earlier smaller element.
// Backward table: distance ahead to the nearest later smaller element.
// 0 means "none" in both.
struct PDRepresentation {
  Table forward;
  Table backward;

  std::size_t size() const noexcept { return forward.size(); }
  friend bool operator==(const PDRepresentation&,
                         const PDRepresentation&) = default;
};

// sn[h]: how many right-branch nodes position h pops during online
// construction. ref_distance[h]: distance to the position that pops h (its
// referent), 0 when h is never popped.
struct SNRepresentation {
  Table sn;
  Table ref_distance;

  std::size_t size() const noexcept { return sn.size(); }

  std::optional<std::size_t> referent(std::size_t h) const {
    if (ref_distance[h] == 0) return std::nullopt;
    return h + ref_distance[h];
  }

  friend bool operator==(const SNRepresentation&,
                         const SNRepresentation&) = default;
};

template <SequenceValue T>
Table parent_distance(std::span<const T> x) {
  Table pd(x.size(), 0);
  std::vector<std::size_t> branch;
  branch.reserve(x.size());
  for (std::size_t h = 0; h < x.size(); ++h) {
    while (!branch.empty() && position_less(x, h, branch.back()))
      branch.pop_back();
    if (!branch.empty()) pd[h] = static_cast<std::uint32_t>(h - branch.back());
    branch.push_back(h);
  }
  return pd;
}

template <SequenceValue T>
Table reverse_parent_distance(std::span<const T> x) {
  Table pd(x.size(), 0);
  std::vector<std::size_t> branch;
  branch.reserve(x.size());
  for (std::size_t h = 0; h < x.size(); ++h) {
    while (!branch.empty() && position_less(x, h, branch.back())) {
      pd[branch.back()] = static_cast<std::uint32_t>(h - branch.back());
      branch.pop_back();
    }
    branch.push_back(h);
  }
  return pd;
}

template <SequenceValue T>
PDRepresentation pd_representation(std::span<const T> x) {
  return {parent_distance(x), reverse_parent_distance(x)};
}

template <SequenceValue T>
SNRepresentation skipped_number(std::span<const T> x) {
  SNRepresentation rep{Table(x.size(), 0), Table(x.size(), 0)};
  std::vector<std::size_t> branch;
  branch.reserve(x.size());
  for (std::size_t h = 0; h < x.size(); ++h) {
    std::uint32_t popped = 0;
    while (!branch.empty() && position_less(x, h, branch.back())) {
      rep.ref_distance[branch.back()] =
          static_cast<std::uint32_t>(h - branch.back());
      branch.pop_back();
      ++popped;
    }
    rep.sn[h] = popped;
    branch.push_back(h);
  }
  return rep;
}

template <SequenceValue T>
Table parent_distance(const std::vector<T>& x) {
  return parent_distance(std::span<const T>(x));
}
template <SequenceValue T>
Table reverse_parent_distance(const std::vector<T>& x) {
  return reverse_parent_distance(std::span<const T>(x));
}
template <SequenceValue T>
PDRepresentation pd_representation(const std::vector<T>& x) {
  return pd_representation(std::span<const T>(x));
}
template <SequenceValue T>
SNRepresentation skipped_number(const std::vector<T>& x) {
  return skipped_number(std::span<const T>(x));
}

}  // namespace ctm
