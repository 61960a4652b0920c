#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "ctm/representations.hpp"
#include "ctm/sequence.hpp"

namespace ctm {

enum class WindowMode { ParentDistance, SkippedNumber };

// Read-only view of a circular table addressed by logical window index.
class CircularTableView {
 public:
  CircularTableView(const std::uint32_t* data, std::size_t size,
                    std::size_t offset) noexcept
      : data_(data), size_(size), offset_(offset) {}

  std::uint32_t operator[](std::size_t i) const noexcept {
    std::size_t k = offset_ + i;
    if (k >= size_) k -= size_;
    return data_[k];
  }

  std::size_t size() const noexcept { return size_; }

 private:
  const std::uint32_t* data_;
  std::size_t size_;
  std::size_t offset_;
};

// Sliding window over a text that keeps either the parent-distance pair or
// the skipped-number table of the current factor up to date in amortized
// O(1) per shift.
//
// The right branch of the window's Cartesian tree lives in a deque: the front
// is the most recently inserted position, the back is the root. All tables
// are circular of size m and slot(p) = p mod m for absolute text position p.
template <SequenceValue T>
class WindowState {
 public:
  WindowState(std::span<const T> text, std::size_t m, WindowMode mode)
      : text_(text), m_(m), mode_(mode) {
    if (m == 0 || m > text.size())
      throw Error(ErrorKind::InvalidWindow,
                  "window length must be in [1, text length]");
    if (mode_ == WindowMode::ParentDistance) {
      forward_.assign(m, 0);
      backward_.assign(m, 0);
      dependents_.resize(m);
    } else {
      sn_.assign(m, 0);
      ref_.assign(m, 0);
    }
    for (std::size_t j = 0; j < m; ++j) insert(j);
  }

  std::size_t length() const noexcept { return m_; }
  WindowMode mode() const noexcept { return mode_; }
  // Absolute 0-based text position of the first window element.
  std::size_t start() const noexcept { return start_; }
  bool can_advance() const noexcept { return start_ + m_ < text_.size(); }

  std::span<const T> values() const noexcept {
    return text_.subspan(start_, m_);
  }

  // Shift by one: drop text[start], append text[start + m].
  void advance() {
    const std::size_t expelled = start_;
    const std::size_t entering = start_ + m_;
    if (!branch_.empty() && branch_.back() == expelled) branch_.pop_back();
    if (mode_ == WindowMode::ParentDistance) {
      // Positions whose parent was the expelled one have no smaller element
      // to their left inside the new window.
      auto& orphans = dependents_[slot(expelled)];
      for (const std::size_t d : orphans) forward_[slot(d)] = 0;
      orphans.clear();
    } else {
      const std::uint32_t dist = ref_[slot(expelled)];
      if (dist > 0) --sn_[slot(expelled + dist)];
    }
    ++start_;
    insert(entering);
  }

  CircularTableView forward() const noexcept { return view(forward_); }
  CircularTableView backward() const noexcept { return view(backward_); }
  CircularTableView sn() const noexcept { return view(sn_); }
  CircularTableView ref_distance() const noexcept { return view(ref_); }

  PDRepresentation pd_tables() const {
    return {linearize(forward_), linearize(backward_)};
  }
  SNRepresentation sn_tables() const {
    return {linearize(sn_), linearize(ref_)};
  }

  // Right branch (absolute positions), root first.
  std::vector<std::size_t> right_branch() const {
    return {branch_.rbegin(), branch_.rend()};
  }

 private:
  std::size_t slot(std::size_t absolute) const noexcept {
    return absolute % m_;
  }

  CircularTableView view(const std::vector<std::uint32_t>& table) const noexcept {
    return {table.data(), m_, slot(start_)};
  }

  Table linearize(const std::vector<std::uint32_t>& table) const {
    Table out(m_);
    const auto v = view(table);
    for (std::size_t i = 0; i < m_; ++i) out[i] = v[i];
    return out;
  }

  void insert(std::size_t j) {
    std::uint32_t popped = 0;
    while (!branch_.empty() && position_less(text_, j, branch_.front())) {
      const std::size_t p = branch_.front();
      const auto dist = static_cast<std::uint32_t>(j - p);
      if (mode_ == WindowMode::ParentDistance)
        backward_[slot(p)] = dist;
      else
        ref_[slot(p)] = dist;
      branch_.pop_front();
      ++popped;
    }
    const std::size_t s = slot(j);
    if (mode_ == WindowMode::ParentDistance) {
      if (branch_.empty()) {
        forward_[s] = 0;
      } else {
        forward_[s] = static_cast<std::uint32_t>(j - branch_.front());
        dependents_[slot(branch_.front())].push_back(j);
      }
      backward_[s] = 0;
    } else {
      sn_[s] = popped;
      ref_[s] = 0;
    }
    branch_.push_front(j);
  }

  std::span<const T> text_;
  std::size_t m_;
  WindowMode mode_;
  std::size_t start_ = 0;
  std::deque<std::size_t> branch_;
  std::vector<std::uint32_t> forward_, backward_;
  std::vector<std::vector<std::size_t>> dependents_;
  std::vector<std::uint32_t> sn_, ref_;
};

template <SequenceValue T>
WindowState<T> init_window(std::span<const T> text, std::size_t m,
                           WindowMode mode) {
  return WindowState<T>(text, m, mode);
}

template <SequenceValue T>
void update_pd(WindowState<T>& state) {
  if (state.mode() != WindowMode::ParentDistance)
    throw Error(ErrorKind::InvalidWindow, "window does not track parent distances");
  state.advance();
}

template <SequenceValue T>
void update_sn(WindowState<T>& state) {
  if (state.mode() != WindowMode::SkippedNumber)
    throw Error(ErrorKind::InvalidWindow, "window does not track skipped numbers");
  state.advance();
}

}  // namespace ctm
