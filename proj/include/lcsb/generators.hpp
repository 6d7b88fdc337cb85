#pragma once

// Extremal instance constructions: the distinct-LCS lower-bound family, the
// embedding-maximizing two-letter family, and the no-match / single-match
// worst cases for the naive backtrace.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "lcsb/bounds.hpp"
#include "lcsb/core.hpp"

namespace lcsb {

struct Expectation {
  int expected_l = 0;
  std::optional<BigInt> expected_distinct_count;
  std::optional<BigInt> expected_embedding_count;
  std::optional<Sequence> unique_lcs;
};

struct InstancePair {
  Sequence a;
  Sequence b;
  Expectation expected;
  std::string note;
};

/// Distinct-LCS maximizing pair at total length t: both strings use
/// floor(t/2) fresh symbols, a short two- or four-symbol scrambled prefix
/// followed by length-3 blocks reversed in the second string.
inline InstancePair gen_max_distinct(std::int64_t t) {
  if (t < 4) throw std::domain_error("gen_max_distinct requires t >= 4");
  const std::int64_t m = t / 2;
  const std::int64_t z = ((-m) % 3 + 3) % 3;
  InstancePair p;
  Symbol next = 0;
  if (z == 1) {
    p.a = {0, 1};
    p.b = {1, 0};
    next = 2;
  } else if (z == 2) {
    p.a = {0, 1, 2, 3};
    p.b = {1, 0, 3, 2};
    next = 4;
  }
  const std::int64_t blocks = (m - 2 * z) / 3;
  for (std::int64_t k = 0; k < blocks; ++k) {
    p.a.insert(p.a.end(), {next, Symbol(next + 1), Symbol(next + 2)});
    p.b.insert(p.b.end(), {Symbol(next + 2), Symbol(next + 1), next});
    next += 3;
  }
  p.expected.expected_l = static_cast<int>(z + blocks);
  p.expected.expected_distinct_count = d_lower(t);
  // no character repeats, so every distinct LCS has a single embedding
  p.expected.expected_embedding_count = d_lower(t);
  if (t % 2 != 0) p.note = "odd t: construction uses 2*floor(t/2) characters";
  return p;
}

/// Embedding-maximizing pair: A = a^(m-y) b^y, B = a^(l-y) b^(n+y-l), whose
/// unique LCS a^(l-y) b^y has C(m-y, l-y) * C(n+y-l, y) embeddings.
inline InstancePair gen_max_embeddings(std::int64_t m, std::int64_t n, std::int64_t l,
                                       std::optional<std::int64_t> y_opt = std::nullopt) {
  if (!(0 <= l && l <= m && m <= n))
    throw std::domain_error("gen_max_embeddings requires l <= m <= n");
  const std::int64_t y = y_opt.value_or(optimal_y(m, n, l));
  if (y < 0 || y > l) throw std::domain_error("gen_max_embeddings requires 0 <= y <= l");
  InstancePair p;
  p.a.assign(static_cast<std::size_t>(m - y), 0);
  p.a.insert(p.a.end(), static_cast<std::size_t>(y), 1);
  p.b.assign(static_cast<std::size_t>(l - y), 0);
  p.b.insert(p.b.end(), static_cast<std::size_t>(n + y - l), 1);
  p.expected.expected_l = static_cast<int>(l);
  p.expected.expected_distinct_count = 1;
  p.expected.expected_embedding_count = binomial(m - y, l - y) * binomial(n + y - l, y);
  Sequence lcs(static_cast<std::size_t>(l - y), 0);
  lcs.insert(lcs.end(), static_cast<std::size_t>(y), 1);
  p.expected.unique_lcs = std::move(lcs);
  return p;
}

/// A = a^m, B = b^n: no matches, so the naive backtrace walks every lattice
/// path and emits C(m+n, m) copies of the empty embedding.
inline InstancePair gen_no_match(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::domain_error("gen_no_match requires m, n >= 1");
  InstancePair p;
  p.a.assign(static_cast<std::size_t>(m), 0);
  p.b.assign(static_cast<std::size_t>(n), 1);
  p.expected.expected_l = 0;
  p.expected.expected_distinct_count = 1;
  p.expected.expected_embedding_count = 1;
  p.expected.unique_lcs = Sequence{};
  return p;
}

/// A = x a^(m-1), B = x b^(n-1): the only match is [1,1]; the naive
/// backtrace funnels C(m+n-2, m-1) paths through it.
inline InstancePair gen_single_match(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::domain_error("gen_single_match requires m, n >= 1");
  InstancePair p;
  p.a.assign(static_cast<std::size_t>(m), 1);
  p.a[0] = 0;
  p.b.assign(static_cast<std::size_t>(n), 2);
  p.b[0] = 0;
  p.expected.expected_l = 1;
  p.expected.expected_distinct_count = 1;
  p.expected.expected_embedding_count = 1;
  p.expected.unique_lcs = Sequence{0};
  return p;
}

}  // namespace lcsb
