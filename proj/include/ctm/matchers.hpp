#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ctm/representations.hpp"
#include "ctm/sequence.hpp"
#include "ctm/window.hpp"

namespace ctm {

enum class MatchMode { Exact, SwapPD, SwapSN, Mismatch, Insertion, Deletion };

inline std::string_view to_string(MatchMode mode) {
  switch (mode) {
    case MatchMode::Exact: return "exact";
    case MatchMode::SwapPD: return "swap";
    case MatchMode::SwapSN: return "swap-sn";
    case MatchMode::Mismatch: return "mismatch";
    case MatchMode::Insertion: return "insert";
    case MatchMode::Deletion: return "delete";
  }
  return "?";
}

inline std::optional<MatchMode> parse_mode(std::string_view name) {
  for (const MatchMode m : {MatchMode::Exact, MatchMode::SwapPD, MatchMode::SwapSN,
                            MatchMode::Mismatch, MatchMode::Insertion,
                            MatchMode::Deletion})
    if (name == to_string(m)) return m;
  if (name == "swap-pd") return MatchMode::SwapPD;
  return std::nullopt;
}

// Length of the text factor compared against a pattern of length m.
inline std::size_t window_length(MatchMode mode, std::size_t m) {
  switch (mode) {
    case MatchMode::Insertion: return m + 1;
    case MatchMode::Deletion:
      if (m < 2)
        throw Error(ErrorKind::InvalidInput,
                    "deletion matching needs a pattern of length >= 2");
      return m - 1;
    default: return m;
  }
}

// Table-cell comparisons performed by the equivalence tests.
struct ComparisonCounter {
  std::uint64_t count = 0;
};

template <typename V>
concept TableLike = requires(const V& v, std::size_t i) {
  { v[i] } -> std::convertible_to<std::uint32_t>;
  { v.size() } -> std::convertible_to<std::size_t>;
};

// Up to two swap positions consistent with the first forward mismatch `j`
// and the last backward mismatch `k`.
struct Candidates {
  std::array<std::size_t, 2> pos{};
  std::size_t count = 0;

  const std::size_t* begin() const noexcept { return pos.data(); }
  const std::size_t* end() const noexcept { return pos.data() + count; }
};

inline Candidates compute_candidates(std::size_t j, std::size_t k) {
  Candidates c;
  if (k == j + 1) {
    c.pos[c.count++] = j;
  } else if (j == k + 1) {
    c.pos[c.count++] = k;
  } else if (j == k) {
    if (j > 0) c.pos[c.count++] = j - 1;
    c.pos[c.count++] = j;
  }
  return c;
}

namespace detail {

// Does the forward table of p equal one of the neighbours of C(x) obtained by
// a swap at i? Positions before i must already be known to agree.
//
// When x[i] < x[i+1] the neighbour is fixed except at i, where the moved
// element may hang below any node skipped by i (those s with ref(s) = i) or
// keep i's parent; nodes whose parent was i move one step closer.
// When x[i] > x[i+1] the neighbour is fixed except on the nodes whose parent
// was i+1: a suffix of that chain (in position order) moves one step away.
template <TableLike PF, TableLike XF, TableLike XB>
bool swap_pd_neighbour(std::size_t i, const PF& pf, const XF& xf,
                       const XB& xb, ComparisonCounter& cmp) {
  const std::size_t m = xf.size();
  if (xf[i + 1] == 1) {
    const std::uint32_t a = xf[i];
    ++cmp.count;
    if (pf[i + 1] != (a == 0 ? 0u : a + 1)) return false;
    const std::uint32_t d = pf[i];
    ++cmp.count;
    if (d != a) {
      ++cmp.count;
      if (d == 0 || d > i || xb[i - d] != d) return false;
    }
    for (std::size_t q = i + 2; q < m; ++q) {
      const std::uint32_t v = xf[q];
      const std::uint32_t expected = (v == q - i) ? v - 1 : v;
      ++cmp.count;
      if (pf[q] != expected) return false;
    }
    return true;
  }

  const std::uint32_t b = xf[i + 1];
  ++cmp.count;
  if (pf[i] != (b == 0 ? 0u : b - 1)) return false;
  ++cmp.count;
  if (pf[i + 1] != 1) return false;
  bool shifted = false;
  for (std::size_t q = i + 2; q < m; ++q) {
    const std::uint32_t v = xf[q];
    const std::uint32_t got = pf[q];
    ++cmp.count;
    if (v == q - i - 1) {
      if (got == v + 1) {
        shifted = true;
      } else if (got != v || shifted) {
        return false;
      }
    } else if (got != v) {
      return false;
    }
  }
  return true;
}

// Same question on skipped-number tables, hosted on x's (sn, ref) pair.
template <TableLike PS, TableLike XS, TableLike XR>
bool swap_sn_neighbour(std::size_t i, const PS& sp, const XS& sx,
                       const XR& rx, ComparisonCounter& cmp) {
  const std::size_t m = sx.size();
  if (rx[i] != 1) {
    // x[i] < x[i+1]: i+1 joins the right branch of i's left subtree.
    ++cmp.count;
    if (sp[i] > sx[i]) return false;
    ++cmp.count;
    if (sp[i + 1] != sx[i] - sp[i] + 1) return false;
    const std::size_t lost =
        rx[i + 1] == 0 ? m : i + 1 + static_cast<std::size_t>(rx[i + 1]);
    for (std::size_t q = i + 2; q < m; ++q) {
      ++cmp.count;
      if (sp[q] != (q == lost ? sx[q] - 1 : sx[q])) return false;
    }
    return true;
  }

  // x[i] > x[i+1]: i moves under a node of the prefix-minimum chain that
  // starts at i+2 and ends at ref(i+1); no new referent only if ref(i+1) is
  // absent.
  ++cmp.count;
  if (sp[i] != sx[i] + sx[i + 1] - 1) return false;
  ++cmp.count;
  if (sp[i + 1] != 0) return false;
  const bool has_ref = rx[i + 1] != 0;
  const std::size_t chain_end =
      has_ref ? i + 1 + static_cast<std::size_t>(rx[i + 1]) : m;
  std::size_t next_on_chain = i + 2;
  bool gained = false;
  for (std::size_t q = i + 2; q < m; ++q) {
    const bool on_chain = q == next_on_chain && q <= chain_end;
    if (on_chain)
      next_on_chain = rx[q] == 0 ? m : q + static_cast<std::size_t>(rx[q]);
    ++cmp.count;
    if (sp[q] == sx[q]) continue;
    if (gained || !on_chain || sp[q] != sx[q] + 1) return false;
    gained = true;
  }
  return gained || !has_ref;
}

}  // namespace detail

// Exact Cartesian-tree match on forward parent-distance tables.
template <TableLike PF, TableLike XF>
bool equivalence_test_exact(const PF& pf, const XF& xf, ComparisonCounter& cmp) {
  if (pf.size() != xf.size()) return false;
  for (std::size_t j = 1; j < pf.size(); ++j) {
    ++cmp.count;
    if (pf[j] != xf[j]) return false;
  }
  return true;
}

// Result of the pincer scan used by the swap test.
struct SwapScan {
  bool exact = false;
  Candidates candidates;
  std::size_t verified = 0;  // candidates that verify (at most one)
};

template <TableLike PF, TableLike PB, TableLike XF, TableLike XB>
SwapScan swap_pd_scan(const PF& pf, const PB& pb, const XF& xf, const XB& xb,
                      ComparisonCounter& cmp, bool stop_at_first = true) {
  SwapScan scan;
  const std::size_t m = pf.size();
  std::size_t j = 1;
  while (j < m) {
    ++cmp.count;
    if (pf[j] != xf[j]) break;
    ++j;
  }
  if (j >= m) {
    scan.exact = true;
    return scan;
  }
  // Backward tables always end with 0; scan from m-2 down to j. k ends on
  // the last backward mismatch, or on j-1 when there is none at or above j.
  std::size_t k = m - 1;
  while (k-- > j) {
    ++cmp.count;
    if (pb[k] != xb[k]) break;
  }
  scan.candidates = compute_candidates(j, k);
  for (const std::size_t i : scan.candidates) {
    if (i + 1 >= m) continue;
    if (detail::swap_pd_neighbour(i, pf, xf, xb, cmp)) {
      ++scan.verified;
      if (stop_at_first) break;
    }
  }
  return scan;
}


// One-swap Cartesian tree match on the parent-distance pair.
template <TableLike PF, TableLike PB, TableLike XF, TableLike XB>
bool equivalence_test_swap_pd(const PF& pf, const PB& pb, const XF& xf,
                              const XB& xb, ComparisonCounter& cmp) {
  if (pf.size() != xf.size()) return false;
  const SwapScan scan = swap_pd_scan(pf, pb, xf, xb, cmp);
  return scan.exact || scan.verified > 0;
}

inline bool equivalence_test_swap_pd(const PDRepresentation& p,
                                     const PDRepresentation& x) {
  ComparisonCounter cmp;
  return equivalence_test_swap_pd(p.forward, p.backward, x.forward, x.backward,
                                  cmp);
}

// One-swap Cartesian tree match on skipped-number tables. The first sn
// mismatch sits at the swap position or right after it, so both are tried.
template <TableLike PS, TableLike XS, TableLike XR>
bool equivalence_test_swap_sn(const PS& sp, const XS& sx, const XR& rx,
                              ComparisonCounter& cmp) {
  const std::size_t m = sp.size();
  if (m != sx.size()) return false;
  std::size_t j = 1;
  while (j < m) {
    ++cmp.count;
    if (sp[j] != sx[j]) break;
    ++j;
  }
  if (j >= m) return true;
  for (const std::size_t i : {j - 1, j}) {
    if (i + 1 < m && detail::swap_sn_neighbour(i, sp, sx, rx, cmp)) return true;
  }
  return false;
}

inline bool equivalence_test_swap_sn(const SNRepresentation& p,
                                     const SNRepresentation& x) {
  ComparisonCounter cmp;
  return equivalence_test_swap_sn(p.sn, x.sn, x.ref_distance, cmp);
}

// Mismatch / insertion / deletion test: with l the longest common prefix of
// the forward tables and r the longest common suffix of the backward tables,
// the factor matches iff l + r reaches m-1 (mismatch, deletion) or m
// (insertion).
template <TableLike PF, TableLike PB, TableLike XF, TableLike XB>
bool equivalence_test_diff(const PF& pf, const PB& pb, const XF& xf,
                           const XB& xb, MatchMode mode,
                           ComparisonCounter& cmp) {
  const std::size_t m = pf.size();
  const std::size_t w = xf.size();
  if (m == 0 || (mode != MatchMode::Mismatch && mode != MatchMode::Insertion &&
                 mode != MatchMode::Deletion) ||
      w != window_length(mode, m))
    throw Error(ErrorKind::InvalidWindow, "window length inconsistent with mode");

  const std::size_t need = mode == MatchMode::Insertion ? m : m - 1;
  const std::size_t common = std::min(m, w);
  if (common == 0) return true;

  std::size_t lcp = 1;
  while (lcp < common) {
    ++cmp.count;
    if (pf[lcp] != xf[lcp]) break;
    ++lcp;
  }
  if (lcp >= need) return true;

  std::size_t lcs = 1;
  while (lcs < common && lcp + lcs < need) {
    ++cmp.count;
    if (pb[m - 1 - lcs] != xb[w - 1 - lcs]) break;
    ++lcs;
  }
  return lcp + lcs >= need;
}

inline bool equivalence_test_diff(const PDRepresentation& p,
                                  const PDRepresentation& x, MatchMode mode) {
  ComparisonCounter cmp;
  return equivalence_test_diff(p.forward, p.backward, x.forward, x.backward,
                               mode, cmp);
}

struct MatchReport {
  std::vector<std::size_t> occurrences;  // 1-based window starts, sorted
  std::vector<std::uint32_t> comparisons;  // per window start
  std::uint64_t total_comparisons = 0;
  std::size_t windows = 0;
  std::size_t window_length = 0;

  double mean_comparisons() const noexcept {
    return windows == 0 ? 0.0
                        : static_cast<double>(total_comparisons) /
                              static_cast<double>(windows);
  }
};

// Slides a window over t, keeps its linear representation up to date and
// runs the mode's equivalence test at every start.
template <SequenceValue TP, SequenceValue TT>
MatchReport meta_search(std::span<const TP> p, std::span<const TT> t,
                        MatchMode mode) {
  if (p.empty()) throw Error(ErrorKind::InvalidInput, "empty pattern");
  const std::size_t m = p.size();
  const std::size_t w = window_length(mode, m);
  if (w == 0 || w > t.size())
    throw Error(ErrorKind::InvalidInput, "window longer than text");

  MatchReport report;
  report.window_length = w;
  report.windows = t.size() - w + 1;
  report.comparisons.reserve(report.windows);

  auto record = [&report](bool hit, const ComparisonCounter& cmp,
                          std::size_t start) {
    if (hit) report.occurrences.push_back(start + 1);
    report.comparisons.push_back(static_cast<std::uint32_t>(cmp.count));
    report.total_comparisons += cmp.count;
  };

  if (mode == MatchMode::SwapSN) {
    const SNRepresentation rp = skipped_number(p);
    WindowState<TT> win(t, w, WindowMode::SkippedNumber);
    for (;;) {
      ComparisonCounter cmp;
      const bool hit =
          equivalence_test_swap_sn(rp.sn, win.sn(), win.ref_distance(), cmp);
      record(hit, cmp, win.start());
      if (!win.can_advance()) break;
      win.advance();
    }
    return report;
  }

  const PDRepresentation rp = pd_representation(p);
  WindowState<TT> win(t, w, WindowMode::ParentDistance);
  for (;;) {
    ComparisonCounter cmp;
    bool hit = false;
    switch (mode) {
      case MatchMode::Exact:
        hit = equivalence_test_exact(rp.forward, win.forward(), cmp);
        break;
      case MatchMode::SwapPD:
        hit = equivalence_test_swap_pd(rp.forward, rp.backward, win.forward(),
                                       win.backward(), cmp);
        break;
      default:
        hit = equivalence_test_diff(rp.forward, rp.backward, win.forward(),
                                    win.backward(), mode, cmp);
        break;
    }
    record(hit, cmp, win.start());
    if (!win.can_advance()) break;
    win.advance();
  }
  return report;
}

template <SequenceValue TP, SequenceValue TT>
MatchReport meta_search(const std::vector<TP>& p, const std::vector<TT>& t,
                        MatchMode mode) {
  return meta_search(std::span<const TP>(p), std::span<const TT>(t), mode);
}

// Splits the window starts into `chunks` ranges (text slices overlap by w-1),
// searches them concurrently and concatenates the reports in order.
template <SequenceValue TP, SequenceValue TT>
MatchReport meta_search_parallel(std::span<const TP> p, std::span<const TT> t,
                                 MatchMode mode, std::size_t chunks) {
  if (p.empty()) throw Error(ErrorKind::InvalidInput, "empty pattern");
  const std::size_t w = window_length(mode, p.size());
  if (w == 0 || w > t.size())
    throw Error(ErrorKind::InvalidInput, "window longer than text");
  const std::size_t starts = t.size() - w + 1;
  chunks = std::clamp<std::size_t>(chunks, 1, starts);

  std::vector<std::future<MatchReport>> parts;
  std::vector<std::size_t> offsets;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t first = starts * c / chunks;
    const std::size_t last = starts * (c + 1) / chunks;  // exclusive
    offsets.push_back(first);
    const auto slice = t.subspan(first, last - first + w - 1);
    parts.push_back(std::async(std::launch::async, [p, slice, mode] {
      return meta_search(p, slice, mode);
    }));
  }

  MatchReport merged;
  merged.window_length = w;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    MatchReport part = parts[c].get();
    for (const std::size_t pos : part.occurrences)
      merged.occurrences.push_back(pos + offsets[c]);
    merged.comparisons.insert(merged.comparisons.end(),
                              part.comparisons.begin(), part.comparisons.end());
    merged.total_comparisons += part.total_comparisons;
    merged.windows += part.windows;
  }
  return merged;
}

}  // namespace ctm
