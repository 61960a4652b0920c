#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace ctm_test {

using Seq = std::vector<std::int64_t>;

inline std::vector<Seq> permutations(std::size_t m) {
  std::vector<Seq> out;
  Seq z(m);
  std::iota(z.begin(), z.end(), 1);
  do out.push_back(z);
  while (std::next_permutation(z.begin(), z.end()));
  return out;
}

// Small alphabets produce plenty of ties.
inline Seq random_sequence(std::mt19937_64& rng, std::size_t n, std::int64_t alphabet) {
  Seq s(n);
  for (auto& v : s) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(alphabet));
  return s;
}

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace ctm_test
