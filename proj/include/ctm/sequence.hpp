#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace ctm {

// Errors raised by the library. The kind mirrors the failure classes callers
// are expected to branch on (the CLI maps all of them to exit status 2).
enum class ErrorKind {
  InvalidInput,
  InvalidWindow,
  InvalidPosition,
  TooLarge,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <typename T>
concept SequenceValue = std::integral<T> || std::floating_point<T>;

template <SequenceValue T>
using Sequence = std::vector<T>;

// Strict order on positions of one sequence. Equal values are linearized by
// position: the earlier occurrence is the smaller one. Every "<" in the
// library goes through this so duplicates behave deterministically.
template <SequenceValue T>
constexpr bool position_less(std::span<const T> values, std::size_t a,
                             std::size_t b) noexcept {
  return values[a] < values[b] || (!(values[b] < values[a]) && a < b);
}

// True when every element can take part in a strict total order.
template <SequenceValue T>
bool is_orderable(std::span<const T> values) noexcept {
  if constexpr (std::floating_point<T>) {
    for (const T v : values)
      if (!std::isfinite(v)) return false;
  }
  return true;
}

// Parent-distance style tables hold distances, never positions, so they are
// index-base agnostic.
using Table = std::vector<std::uint32_t>;

}  // namespace ctm
