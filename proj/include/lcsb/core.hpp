#pragma once

// Sequences, the quadratic LCS rank table, embeddings, match points, and
// the deterministic single-LCS backtrace.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcsb {

using Symbol = std::int32_t;
using Sequence = std::vector<Symbol>;

/// Raised when a requested DP table would exceed the configured entry cap.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Default cap on (m+1)*(n+1) table entries.
inline constexpr std::uint64_t kDefaultDpEntryCap = std::uint64_t{1} << 31;

/// Rank table L[i,j] = LCS length of a_1..a_i and b_1..b_j, 0 <= i <= m,
/// 0 <= j <= n.
class DpTable {
public:
  DpTable(std::size_t m, std::size_t n) : m_(m), n_(n), ranks_((m + 1) * (n + 1), 0) {}

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }

  int& at(std::size_t i, std::size_t j) { return ranks_[i * (n_ + 1) + j]; }
  int at(std::size_t i, std::size_t j) const { return ranks_[i * (n_ + 1) + j]; }

  int lcs_length() const { return at(m_, n_); }

private:
  std::size_t m_, n_;
  std::vector<int> ranks_;
};

/// A position pair [i,j] (1-based) with a_i == b_j.  prefix_rank is L[i,j];
/// suffix_rank is the LCS length of a_i..a_m and b_j..b_n (both include the
/// match itself).
struct MatchPoint {
  std::size_t i = 0;
  std::size_t j = 0;
  int prefix_rank = 0;
  int suffix_rank = 0;
};

/// Aligned pair of strictly increasing 1-based position lists.
struct Embedding {
  std::vector<std::size_t> positions_a;
  std::vector<std::size_t> positions_b;

  friend bool operator==(const Embedding&, const Embedding&) = default;
  friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

inline DpTable build_dp(const Sequence& a, const Sequence& b,
                        std::uint64_t entry_cap = kDefaultDpEntryCap) {
  const std::size_t m = a.size(), n = b.size();
  const std::uint64_t entries = std::uint64_t(m + 1) * std::uint64_t(n + 1);
  if (entries > entry_cap)
    throw capacity_error("dp table of " + std::to_string(entries) +
                         " entries exceeds cap " + std::to_string(entry_cap));
  DpTable t(m, n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (a[i - 1] == b[j - 1])
        t.at(i, j) = t.at(i - 1, j - 1) + 1;
      else
        t.at(i, j) = std::max(t.at(i - 1, j), t.at(i, j - 1));
    }
  return t;
}

inline int lcs_length(const Sequence& a, const Sequence& b,
                      std::uint64_t entry_cap = kDefaultDpEntryCap) {
  return build_dp(a, b, entry_cap).lcs_length();
}

/// Rank table for suffixes: suffix_table.at(m-i+1, n-j+1) is the LCS length
/// of a_i..a_m and b_j..b_n.
inline DpTable build_dp_reversed(const Sequence& a, const Sequence& b,
                                 std::uint64_t entry_cap = kDefaultDpEntryCap) {
  Sequence ra(a.rbegin(), a.rend());
  Sequence rb(b.rbegin(), b.rend());
  return build_dp(ra, rb, entry_cap);
}

/// One embedding of maximum length; tie-break is diagonal on a match, then
/// up, then left, so the result is stable across runs.
inline Embedding backtrace_one(const Sequence& a, const Sequence& b, const DpTable& t) {
  Embedding e;
  std::size_t i = t.m(), j = t.n();
  while (i > 0 && j > 0 && t.at(i, j) > 0) {
    if (a[i - 1] == b[j - 1] && t.at(i, j) == t.at(i - 1, j - 1) + 1) {
      e.positions_a.push_back(i);
      e.positions_b.push_back(j);
      --i;
      --j;
    } else if (t.at(i - 1, j) == t.at(i, j)) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(e.positions_a.begin(), e.positions_a.end());
  std::reverse(e.positions_b.begin(), e.positions_b.end());
  return e;
}

inline bool embedding_is_valid(const Sequence& a, const Sequence& b, const Embedding& e,
                               std::size_t l) {
  if (e.positions_a.size() != l || e.positions_b.size() != l) return false;
  for (std::size_t k = 0; k < l; ++k) {
    const std::size_t p = e.positions_a[k], q = e.positions_b[k];
    if (p < 1 || p > a.size() || q < 1 || q > b.size()) return false;
    if (k > 0 && (e.positions_a[k - 1] >= p || e.positions_b[k - 1] >= q)) return false;
    if (a[p - 1] != b[q - 1]) return false;
  }
  return true;
}

/// Symbol sequence an embedding spells out of `a`.
inline Sequence embedded_string(const Sequence& a, const Embedding& e) {
  Sequence s;
  s.reserve(e.positions_a.size());
  for (std::size_t p : e.positions_a) s.push_back(a[p - 1]);
  return s;
}

/// Two character embeddings (p,q) and (p',q') cross when one precedes in A
/// but follows in B.
inline bool crossings(std::size_t p, std::size_t q, std::size_t p2, std::size_t q2) {
  return (p < p2 && q2 < q) || (p2 < p && q < q2);
}

/// All matches with prefix and suffix ranks, in lexicographic (i,j) order.
inline std::vector<MatchPoint> match_points(const Sequence& a, const Sequence& b,
                                            const DpTable& fwd, const DpTable& rev) {
  std::vector<MatchPoint> out;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      if (a[i - 1] == b[j - 1])
        out.push_back({i, j, fwd.at(i, j),
                       rev.at(a.size() - i + 1, b.size() - j + 1)});
  return out;
}

}  // namespace lcsb
