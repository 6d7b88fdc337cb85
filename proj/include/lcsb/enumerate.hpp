#pragma once

// Duplicate-free enumeration and exact counting of distinct LCSs and LCS
// embeddings, plus the instrumented naive backtrace.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "lcsb/bounds.hpp"
#include "lcsb/core.hpp"

namespace lcsb {

/// Sink verdict: keep going or abort the enumeration early.
enum class SinkAction { kContinue, kStop };

using EmbeddingSink = std::function<SinkAction(const Embedding&)>;
using StringSink = std::function<SinkAction(const Sequence&)>;

struct CountResult {
  BigInt count;
  int lcs_length = 0;
};

struct NaiveRunStats {
  BigInt nodes_visited;
  BigInt outputs_emitted;
  BigInt output_chars;
  int lcs_length = 0;
  bool budget_exceeded = false;
  bool stopped_by_sink = false;
};

inline constexpr std::uint64_t kDefaultNaiveNodeBudget = 100'000'000;

namespace detail {

// Shared precomputation: forward/suffix rank tables and, per symbol, the
// earliest occurrence at or after each position.
struct EnumContext {
  const Sequence& a;
  const Sequence& b;
  DpTable fwd;
  DpTable rev;
  std::size_t m, n;
  int l;

  EnumContext(const Sequence& a_, const Sequence& b_, std::uint64_t cap)
      : a(a_), b(b_), fwd(build_dp(a_, b_, cap)), rev(build_dp_reversed(a_, b_, cap)),
        m(a_.size()), n(b_.size()), l(fwd.lcs_length()) {}

  // LCS length of a_i..a_m and b_j..b_n (1-based; i > m or j > n gives 0).
  int suffix_rank(std::size_t i, std::size_t j) const {
    if (i > m || j > n) return 0;
    return rev.at(m - i + 1, n - j + 1);
  }
};

// next_in_a[i][c] = smallest position >= i holding symbol c, or 0.  Built
// lazily as a per-position sorted map so sparse alphabets stay cheap.
struct NextOccurrence {
  // next[i] maps symbol -> earliest 1-based position >= i+1... we store for
  // each 0-based "after" index the first occurrence of every symbol.
  std::vector<std::map<Symbol, std::size_t>> next;

  explicit NextOccurrence(const Sequence& s) : next(s.size() + 1) {
    for (std::size_t i = s.size(); i-- > 0;) {
      next[i] = next[i + 1];
      next[i][s[i]] = i + 1;  // 1-based
    }
  }

  // Earliest occurrence of c at 1-based position > after; 0 if none.
  std::size_t first_after(Symbol c, std::size_t after) const {
    const auto& m = next[after];
    auto it = m.find(c);
    return it == m.end() ? 0 : it->second;
  }
};

}  // namespace detail

/// Every distinct LCS string exactly once, in lexicographic symbol order.
/// From a consumed prefix ending at (i,j), the candidate continuations are
/// symbols whose componentwise-earliest next match still completes an LCS;
/// any LCS through a later match of the same symbol re-embeds through the
/// earliest one, so each string is reached exactly once.
inline CountResult enumerate_distinct(const Sequence& a, const Sequence& b, const StringSink& sink,
                                      std::uint64_t entry_cap = kDefaultDpEntryCap) {
  detail::EnumContext ctx(a, b, entry_cap);
  detail::NextOccurrence na(a), nb(b);
  CountResult res{0, ctx.l};
  Sequence prefix;
  bool stopped = false;

  auto rec = [&](auto&& self, std::size_t i, std::size_t j, int remaining) -> void {
    if (stopped) return;
    if (remaining == 0) {
      ++res.count;
      if (sink && sink(prefix) == SinkAction::kStop) stopped = true;
      return;
    }
    // Candidate symbols in ascending order for lexicographic emission.
    std::vector<std::pair<Symbol, std::pair<std::size_t, std::size_t>>> cands;
    for (const auto& [c, ia] : na.next[i]) {
      const std::size_t jb = nb.first_after(c, j);
      if (jb == 0) continue;
      if (ctx.suffix_rank(ia, jb) == remaining) cands.push_back({c, {ia, jb}});
    }
    for (const auto& [c, pos] : cands) {
      if (stopped) return;
      prefix.push_back(c);
      self(self, pos.first, pos.second, remaining - 1);
      prefix.pop_back();
    }
  };
  rec(rec, 0, 0, ctx.l);
  return res;
}

/// Exact distinct-LCS count without materializing the strings.  Memoized on
/// the consumed position pair; the remaining length is determined by it.
inline CountResult count_distinct(const Sequence& a, const Sequence& b,
                                  std::uint64_t entry_cap = kDefaultDpEntryCap) {
  detail::EnumContext ctx(a, b, entry_cap);
  detail::NextOccurrence na(a), nb(b);
  std::map<std::pair<std::size_t, std::size_t>, BigInt> memo;

  auto rec = [&](auto&& self, std::size_t i, std::size_t j, int remaining) -> BigInt {
    if (remaining == 0) return 1;
    const auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (const auto& [c, ia] : na.next[i]) {
      const std::size_t jb = nb.first_after(c, j);
      if (jb != 0 && ctx.suffix_rank(ia, jb) == remaining)
        total += self(self, ia, jb, remaining - 1);
    }
    memo[key] = total;
    return total;
  };
  return {rec(rec, 0, 0, ctx.l), ctx.l};
}

namespace detail {

// Useful matches (prefix_rank + suffix_rank == l + 1) grouped by rank; a
// maximal chain of dominated useful matches is exactly one LCS embedding.
struct UsefulMatches {
  // per rank k (1-based), matches sorted by (i, j)
  std::vector<std::vector<MatchPoint>> by_rank;

  UsefulMatches(const EnumContext& ctx) : by_rank(ctx.l + 1) {
    for (std::size_t i = 1; i <= ctx.m; ++i)
      for (std::size_t j = 1; j <= ctx.n; ++j)
        if (ctx.a[i - 1] == ctx.b[j - 1]) {
          const int pr = ctx.fwd.at(i, j);
          const int sr = ctx.suffix_rank(i, j);
          if (pr + sr == ctx.l + 1)
            by_rank[pr].push_back({i, j, pr, sr});
        }
  }
};

}  // namespace detail

/// Every LCS embedding exactly once, delivered in lexicographic order of
/// positions_a then positions_b.  The chain DFS visits matches in (i,j)
/// order, which is not quite that order, so results are buffered and
/// sorted before delivery.
inline CountResult enumerate_embeddings(const Sequence& a, const Sequence& b,
                                        const EmbeddingSink& sink,
                                        std::uint64_t entry_cap = kDefaultDpEntryCap) {
  detail::EnumContext ctx(a, b, entry_cap);
  CountResult res{0, ctx.l};
  if (ctx.l == 0) {
    res.count = 1;
    if (sink) sink(Embedding{});
    return res;
  }
  detail::UsefulMatches um(ctx);
  std::vector<Embedding> out;
  Embedding cur;
  auto rec = [&](auto&& self, int rank, std::size_t i, std::size_t j) -> void {
    if (rank > ctx.l) {
      out.push_back(cur);
      return;
    }
    for (const MatchPoint& mp : um.by_rank[rank]) {
      if (mp.i <= i || mp.j <= j) continue;
      cur.positions_a.push_back(mp.i);
      cur.positions_b.push_back(mp.j);
      self(self, rank + 1, mp.i, mp.j);
      cur.positions_a.pop_back();
      cur.positions_b.pop_back();
    }
  };
  rec(rec, 1, 0, 0);
  std::sort(out.begin(), out.end());
  res.count = static_cast<std::int64_t>(out.size());
  if (sink)
    for (const Embedding& e : out)
      if (sink(e) == SinkAction::kStop) break;
  return res;
}

/// Exact embedding count: chains are counted backward over useful matches
/// with big-integer accumulation.
inline CountResult count_embeddings(const Sequence& a, const Sequence& b,
                                    std::uint64_t entry_cap = kDefaultDpEntryCap) {
  detail::EnumContext ctx(a, b, entry_cap);
  if (ctx.l == 0) return {1, 0};
  detail::UsefulMatches um(ctx);
  // ways[k][idx] = number of chains from match idx at rank k out to rank l
  std::vector<BigInt> next_ways(um.by_rank[ctx.l].size(), 1);
  for (int k = ctx.l - 1; k >= 1; --k) {
    const auto& cur_matches = um.by_rank[k];
    const auto& nxt_matches = um.by_rank[k + 1];
    std::vector<BigInt> cur_ways(cur_matches.size(), 0);
    for (std::size_t x = 0; x < cur_matches.size(); ++x)
      for (std::size_t y = 0; y < nxt_matches.size(); ++y)
        if (nxt_matches[y].i > cur_matches[x].i && nxt_matches[y].j > cur_matches[x].j)
          cur_ways[x] += next_ways[y];
    next_ways = std::move(cur_ways);
  }
  BigInt total = 0;
  for (const BigInt& w : next_ways) total += w;
  return {total, ctx.l};
}

class budget_error : public std::runtime_error {
public:
  budget_error(std::string what, NaiveRunStats partial)
      : std::runtime_error(std::move(what)), partial_stats(std::move(partial)) {}
  NaiveRunStats partial_stats;
};

/// The naive recursive backtrace from [m,n]: follow the diagonal on a match
/// and every rank-preserving up/left move, emitting at [0,0].  Duplicates
/// are emitted exactly as the procedure produces them.
inline NaiveRunStats enumerate_naive(const Sequence& a, const Sequence& b,
                                     const EmbeddingSink& sink,
                                     std::uint64_t node_budget = kDefaultNaiveNodeBudget,
                                     std::uint64_t entry_cap = kDefaultDpEntryCap) {
  const DpTable t = build_dp(a, b, entry_cap);
  NaiveRunStats stats;
  stats.lcs_length = t.lcs_length();
  std::uint64_t nodes = 0;
  Embedding cur;  // positions collected in reverse
  bool stopped = false;

  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (stopped) return;
    if (++nodes > node_budget) {
      stats.nodes_visited = nodes - 1;
      stats.budget_exceeded = true;
      throw budget_error("naive backtrace exceeded node budget", stats);
    }
    if (i == 0 && j == 0) {
      ++stats.outputs_emitted;
      stats.output_chars += static_cast<std::int64_t>(cur.positions_a.size());
      if (sink) {
        Embedding e = cur;
        std::reverse(e.positions_a.begin(), e.positions_a.end());
        std::reverse(e.positions_b.begin(), e.positions_b.end());
        if (sink(e) == SinkAction::kStop) stopped = true;
      }
      return;
    }
    if (i > 0 && j > 0 && a[i - 1] == b[j - 1]) {
      cur.positions_a.push_back(i);
      cur.positions_b.push_back(j);
      self(self, i - 1, j - 1);
      cur.positions_a.pop_back();
      cur.positions_b.pop_back();
    }
    if (i > 0 && t.at(i - 1, j) == t.at(i, j)) self(self, i - 1, j);
    if (j > 0 && t.at(i, j - 1) == t.at(i, j)) self(self, i, j - 1);
  };
  rec(rec, t.m(), t.n());
  stats.nodes_visited = nodes;
  stats.stopped_by_sink = stopped;
  return stats;
}

struct OverheadReport {
  NaiveRunStats naive;
  BigInt embedding_count;
  BigInt distinct_count;
  int lcs_length = 0;
  double ratio = 0.0;  // nodes_visited / max(1, l * embedding_count)
  BigInt bound;        // C(m+n, m)
  double ratio_to_bound = 0.0;
};

/// Runs the naive backtrace and both exact counters and relates the
/// measured node count to the worst-case factor C(m+n, m).
inline OverheadReport overhead_report(const Sequence& a, const Sequence& b,
                                      std::uint64_t node_budget = kDefaultNaiveNodeBudget,
                                      std::uint64_t entry_cap = kDefaultDpEntryCap) {
  OverheadReport rep;
  rep.naive = enumerate_naive(a, b, nullptr, node_budget, entry_cap);
  rep.embedding_count = count_embeddings(a, b, entry_cap).count;
  rep.distinct_count = count_distinct(a, b, entry_cap).count;
  rep.lcs_length = rep.naive.lcs_length;
  BigInt denom = BigInt(rep.lcs_length) * rep.embedding_count;
  if (denom < 1) denom = 1;
  rep.ratio = std::exp(ln_big(rep.naive.nodes_visited) - ln_big(denom));
  rep.bound = naive_overhead_bound(static_cast<std::int64_t>(a.size()),
                                   static_cast<std::int64_t>(b.size()));
  rep.ratio_to_bound = std::exp(std::log(rep.ratio) - ln_big(rep.bound));
  return rep;
}

}  // namespace lcsb
