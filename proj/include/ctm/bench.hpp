#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <thread>
#include <vector>

#include "ctm/matchers.hpp"
#include "ctm/sequence.hpp"

namespace ctm {

struct BenchConfig {
  MatchMode mode = MatchMode::SwapPD;
  std::vector<std::size_t> ms;
  std::size_t n = 10000;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool planted = false;
  bool timing = false;  // off: runtime column is 0 so output is reproducible
  std::size_t workers = 0;  // 0: hardware concurrency
};

struct BenchRecord {
  MatchMode mode = MatchMode::SwapPD;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t trials = 0;
  bool planted = false;
  double mean_comparisons_per_window = 0;
  double mean_runtime_ns = 0;
  double mean_occurrences = 0;
};

// Uniform in [0, bound) by rejection, independent of the standard library's
// distribution implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

// Fisher-Yates over 1..n.
inline std::vector<std::int64_t> random_permutation(std::size_t n,
                                                    std::mt19937_64& rng) {
  std::vector<std::int64_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t k = n; k > 1; --k)
    std::swap(v[k - 1], v[uniform_below(rng, k)]);
  return v;
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, MatchMode mode,
                                 std::size_t m, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(mode),
                    static_cast<std::uint32_t>(m),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

// Rewrites t[at..at+m) with its own values, reordered so the factor has the
// same relative order as p. t stays a permutation.
inline void plant(std::vector<std::int64_t>& t, std::span<const std::int64_t> p,
                  std::size_t at) {
  const std::size_t m = p.size();
  std::vector<std::int64_t> values(t.begin() + static_cast<std::ptrdiff_t>(at),
                                   t.begin() + static_cast<std::ptrdiff_t>(at + m));
  std::sort(values.begin(), values.end());
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return position_less(p, a, b);
  });
  for (std::size_t r = 0; r < m; ++r) t[at + order[r]] = values[r];
}

namespace detail {

struct TrialResult {
  std::uint64_t comparisons = 0;
  std::uint64_t windows = 0;
  std::uint64_t occurrences = 0;
  std::uint64_t runtime_ns = 0;
};

inline TrialResult run_trial(const BenchConfig& cfg, std::size_t m,
                             std::size_t trial) {
  auto rng = trial_rng(cfg.seed, cfg.mode, m, trial);
  std::vector<std::int64_t> t = random_permutation(cfg.n, rng);
  const std::vector<std::int64_t> p = random_permutation(m, rng);
  if (cfg.planted) plant(t, p, uniform_below(rng, cfg.n - m + 1));

  const auto begin = std::chrono::steady_clock::now();
  const MatchReport r = meta_search(p, t, cfg.mode);
  const auto end = std::chrono::steady_clock::now();

  TrialResult out;
  out.comparisons = r.total_comparisons;
  out.windows = r.windows;
  out.occurrences = r.occurrences.size();
  if (cfg.timing)
    out.runtime_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin).count());
  return out;
}

}  // namespace detail

// One record per pattern length. Trials are spread over a worker pool; each
// trial's generator depends only on (seed, mode, m, trial) and sums are
// integral, so the output does not depend on the worker count.
inline std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  if (cfg.trials == 0) throw Error(ErrorKind::InvalidInput, "trials must be >= 1");
  for (const std::size_t m : cfg.ms) {
    const std::size_t w = window_length(cfg.mode, m);
    if (m == 0 || w == 0 || w > cfg.n || m > cfg.n)
      throw Error(ErrorKind::InvalidInput, "pattern length must fit the text");
  }
  std::size_t workers = cfg.workers ? cfg.workers : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, cfg.trials);

  std::vector<BenchRecord> records;
  for (const std::size_t m : cfg.ms) {
    std::vector<detail::TrialResult> results(cfg.trials);
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> pool;
      for (std::size_t k = 0; k < workers; ++k)
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < cfg.trials;)
            results[i] = detail::run_trial(cfg, m, i);
        });
    }
    detail::TrialResult sum;
    for (const auto& r : results) {
      sum.comparisons += r.comparisons;
      sum.windows += r.windows;
      sum.occurrences += r.occurrences;
      sum.runtime_ns += r.runtime_ns;
    }
    const double trials = static_cast<double>(cfg.trials);
    records.push_back({cfg.mode, m, cfg.n, cfg.trials, cfg.planted,
                       static_cast<double>(sum.comparisons) /
                           static_cast<double>(sum.windows),
                       static_cast<double>(sum.runtime_ns) / trials,
                       static_cast<double>(sum.occurrences) / trials});
  }
  return records;
}

inline void write_bench_csv(std::ostream& os,
                            const std::vector<BenchRecord>& records) {
  os << "# ctm-bench v1\n"
        "mode,m,n,trials,planted,mean_comparisons_per_window,"
        "mean_runtime_ns,mean_occurrences\n";
  char line[256];
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%s,%zu,%zu,%zu,%d,%.6f,%.1f,%.6f\n",
                  std::string(to_string(r.mode)).c_str(), r.m, r.n, r.trials,
                  r.planted ? 1 : 0, r.mean_comparisons_per_window,
                  r.mean_runtime_ns, r.mean_occurrences);
    os << line;
  }
}

}  // namespace ctm
