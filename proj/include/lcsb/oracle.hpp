#pragma once

// Brute-force reference implementations.  These deliberately avoid the DP
// and match-graph machinery of the other modules: everything here is plain
// subset / chain enumeration, so a shared bug cannot hide.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "lcsb/bounds.hpp"
#include "lcsb/core.hpp"

namespace lcsb {

struct OracleLimits {
  std::size_t max_shorter_length = 20;   // distinct: 2^len subsets
  std::size_t max_embedding_length = 12; // embeddings: chain recursion
  std::size_t max_search_total = 10;     // max-embeddings search: 2^(m+n) pairs
};

class oracle_limit_error : public std::runtime_error {
public:
  explicit oracle_limit_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline bool is_subsequence(const Sequence& sub, const Sequence& sup) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < sup.size() && k < sub.size(); ++i)
    if (sup[i] == sub[k]) ++k;
  return k == sub.size();
}

}  // namespace detail

/// All distinct LCS strings by enumerating every subsequence of the shorter
/// input and filtering against the longer one.
inline std::set<Sequence> oracle_distinct(const Sequence& a, const Sequence& b,
                                          const OracleLimits& limits = {}) {
  const Sequence& shorter = a.size() <= b.size() ? a : b;
  const Sequence& longer = a.size() <= b.size() ? b : a;
  if (shorter.size() > limits.max_shorter_length)
    throw oracle_limit_error("oracle_distinct: shorter input too long");
  std::set<Sequence> best;
  std::size_t best_len = 0;
  const std::uint64_t total = std::uint64_t{1} << shorter.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Sequence cand;
    for (std::size_t i = 0; i < shorter.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) cand.push_back(shorter[i]);
    if (cand.size() < best_len) continue;
    if (!detail::is_subsequence(cand, longer)) continue;
    if (cand.size() > best_len) {
      best_len = cand.size();
      best.clear();
    }
    best.insert(std::move(cand));
  }
  return best;
}

/// All maximal-length strictly increasing match chains, by exhaustive
/// extension over every position pair.
inline std::set<Embedding> oracle_embeddings(const Sequence& a, const Sequence& b,
                                             const OracleLimits& limits = {}) {
  if (a.size() > limits.max_embedding_length || b.size() > limits.max_embedding_length)
    throw oracle_limit_error("oracle_embeddings: inputs too long");
  std::set<Embedding> best;
  std::size_t best_len = 0;
  Embedding cur;
  auto consider = [&]() {
    if (cur.positions_a.size() > best_len) {
      best_len = cur.positions_a.size();
      best.clear();
    }
    if (cur.positions_a.size() == best_len) best.insert(cur);
  };
  auto rec = [&](auto&& self, std::size_t ai, std::size_t bi) -> void {
    consider();
    for (std::size_t i = ai; i < a.size(); ++i)
      for (std::size_t j = bi; j < b.size(); ++j)
        if (a[i] == b[j]) {
          cur.positions_a.push_back(i + 1);
          cur.positions_b.push_back(j + 1);
          self(self, i + 1, j + 1);
          cur.positions_a.pop_back();
          cur.positions_b.pop_back();
        }
  };
  rec(rec, 0, 0);
  return best;
}

/// Exhaustive search over all binary-alphabet pairs of lengths (m, n) whose
/// LCS length is exactly l, for the largest per-distinct-LCS embedding
/// count.  Checks attainment of the E(n,m,l) construction.
inline BigInt oracle_max_embeddings_search(std::size_t m, std::size_t n, std::size_t l,
                                           const OracleLimits& limits = {}) {
  if (m + n > limits.max_search_total)
    throw oracle_limit_error("oracle_max_embeddings_search: m + n too large");
  BigInt best = 0;
  for (std::uint64_t ma = 0; ma < (std::uint64_t{1} << m); ++ma)
    for (std::uint64_t mb = 0; mb < (std::uint64_t{1} << n); ++mb) {
      Sequence a, b;
      for (std::size_t i = 0; i < m; ++i) a.push_back((ma >> i) & 1);
      for (std::size_t j = 0; j < n; ++j) b.push_back((mb >> j) & 1);
      const auto embs = oracle_embeddings(a, b, limits);
      if (embs.empty() || embs.begin()->positions_a.size() != l) continue;
      std::map<Sequence, std::int64_t> per_string;
      for (const Embedding& e : embs) ++per_string[embedded_string(a, e)];
      for (const auto& [s, c] : per_string)
        if (c > best) best = c;
    }
  return best;
}

/// Checks that across all pairs of LCS embeddings spelling strings with
/// different first characters, the initial character embeddings cross.
inline bool check_crossing_property(const Sequence& a, const Sequence& b,
                                    const OracleLimits& limits = {}) {
  const auto embs = oracle_embeddings(a, b, limits);
  std::vector<const Embedding*> list;
  for (const Embedding& e : embs) list.push_back(&e);
  for (std::size_t x = 0; x < list.size(); ++x)
    for (std::size_t y = x + 1; y < list.size(); ++y) {
      const Embedding& e1 = *list[x];
      const Embedding& e2 = *list[y];
      if (e1.positions_a.empty()) continue;
      const Symbol c1 = a[e1.positions_a[0] - 1];
      const Symbol c2 = a[e2.positions_a[0] - 1];
      if (c1 == c2) continue;
      if (!crossings(e1.positions_a[0], e1.positions_b[0], e2.positions_a[0],
                     e2.positions_b[0]))
        return false;
    }
  return true;
}

}  // namespace lcsb
