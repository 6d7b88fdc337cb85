#pragma once

// Randomized / exhaustive cross-checking harness: enumerators against the
// brute-force oracles, and closed-form bounds against exhaustive scans.
// Used by both the CLI `verify` subcommand and the acceptance suite.

#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lcsb/bounds.hpp"
#include "lcsb/core.hpp"
#include "lcsb/enumerate.hpp"
#include "lcsb/oracle.hpp"
#include "lcsb/text.hpp"

namespace lcsb {

struct VerifyOptions {
  std::size_t max_len = 5;
  int alphabet = 2;
  std::uint32_t seed = 1;
  bool exhaustive = true;
  std::size_t random_count = 1000;
  std::size_t random_max_len = 8;
  int random_alphabet = 3;
};

struct VerifyFailure {
  std::string check;
  std::string instance;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<VerifyFailure> failures;

  bool pass() const { return failures.empty(); }
  void merge(const VerifyReport& other) {
    instances += other.instances;
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

namespace detail {

inline std::string describe(const Sequence& a, const Sequence& b) {
  return "(\"" + sequence_to_text(a) + "\",\"" + sequence_to_text(b) + "\")";
}

inline std::vector<std::pair<Sequence, Sequence>> instance_suite(const VerifyOptions& opt) {
  std::vector<std::pair<Sequence, Sequence>> out;
  if (opt.exhaustive) {
    std::vector<Sequence> all;
    Sequence cur;
    auto gen = [&](auto&& self) -> void {
      all.push_back(cur);
      if (cur.size() == opt.max_len) return;
      for (Symbol c = 0; c < opt.alphabet; ++c) {
        cur.push_back(c);
        self(self);
        cur.pop_back();
      }
    };
    gen(gen);
    for (const Sequence& a : all)
      for (const Sequence& b : all) out.push_back({a, b});
  }
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> len_dist(0, opt.random_max_len);
  std::uniform_int_distribution<int> sym_dist(0, opt.random_alphabet - 1);
  for (std::size_t k = 0; k < opt.random_count; ++k) {
    Sequence a(len_dist(rng)), b(len_dist(rng));
    for (Symbol& c : a) c = sym_dist(rng);
    for (Symbol& c : b) c = sym_dist(rng);
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

template <typename T>
inline std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace detail

/// Distinct-LCS engine vs oracle: set equality, counter agreement,
/// duplicate-freedom, and the 4^(t/5) upper bound.
inline VerifyReport verify_distinct(const std::vector<std::pair<Sequence, Sequence>>& suite) {
  VerifyReport rep{"distinct"};
  for (const auto& [a, b] : suite) {
    ++rep.instances;
    const std::string inst = detail::describe(a, b);
    std::vector<Sequence> got_list;
    const CountResult enum_count = enumerate_distinct(a, b, [&](const Sequence& s) {
      got_list.push_back(s);
      return SinkAction::kContinue;
    });
    std::set<Sequence> got(got_list.begin(), got_list.end());
    rep.checks += 4;
    if (got.size() != got_list.size())
      rep.failures.push_back({"distinct-no-duplicates", inst,
                              detail::str(got.size()), detail::str(got_list.size())});
    const auto expected = oracle_distinct(a, b);
    if (got != expected)
      rep.failures.push_back({"distinct-set-equality", inst, detail::str(expected.size()),
                              detail::str(got.size())});
    const CountResult counted = count_distinct(a, b);
    if (counted.count != BigInt(static_cast<std::int64_t>(expected.size())) ||
        enum_count.count != counted.count)
      rep.failures.push_back({"distinct-count", inst, detail::str(expected.size()),
                              counted.count.str()});
    const double ln_bound = d_upper(a.size() + b.size()).ln_value;
    if (ln_big(counted.count == 0 ? BigInt(1) : counted.count) > ln_bound + 1e-9)
      rep.failures.push_back(
          {"distinct-upper-bound", inst, "<= 4^(t/5)", counted.count.str()});
  }
  return rep;
}

/// Embedding engine vs oracle, naive-backtrace soundness, embedding
/// validity, and the per-chain rank property.
inline VerifyReport verify_embeddings(const std::vector<std::pair<Sequence, Sequence>>& suite) {
  VerifyReport rep{"embeddings"};
  for (const auto& [a, b] : suite) {
    ++rep.instances;
    const std::string inst = detail::describe(a, b);
    std::vector<Embedding> got_list;
    const CountResult enum_count = enumerate_embeddings(a, b, [&](const Embedding& e) {
      got_list.push_back(e);
      return SinkAction::kContinue;
    });
    std::set<Embedding> got(got_list.begin(), got_list.end());
    rep.checks += 7;
    if (got.size() != got_list.size())
      rep.failures.push_back({"embeddings-no-duplicates", inst,
                              detail::str(got.size()), detail::str(got_list.size())});
    const auto expected = oracle_embeddings(a, b);
    if (got != expected)
      rep.failures.push_back({"embeddings-set-equality", inst,
                              detail::str(expected.size()), detail::str(got.size())});
    const CountResult counted = count_embeddings(a, b);
    if (counted.count != BigInt(static_cast<std::int64_t>(expected.size())) ||
        enum_count.count != counted.count)
      rep.failures.push_back({"embeddings-count", inst, detail::str(expected.size()),
                              counted.count.str()});
    const DpTable fwd = build_dp(a, b);
    const std::size_t l = static_cast<std::size_t>(fwd.lcs_length());
    for (const Embedding& e : got_list)
      if (!embedding_is_valid(a, b, e, l)) {
        rep.failures.push_back({"embedding-validity", inst, "valid", "invalid"});
        break;
      }
    for (const Embedding& e : got_list) {
      bool ok = true;
      for (std::size_t k = 0; k < e.positions_a.size(); ++k)
        ok = ok && fwd.at(e.positions_a[k], e.positions_b[k]) == static_cast<int>(k) + 1;
      if (!ok) {
        rep.failures.push_back({"chain-rank", inst, "prefix_rank == k", "mismatch"});
        break;
      }
    }
    std::set<Embedding> naive_set;
    enumerate_naive(a, b, [&](const Embedding& e) {
      naive_set.insert(e);
      return SinkAction::kContinue;
    });
    if (naive_set != expected)
      rep.failures.push_back({"naive-dedup-set", inst, detail::str(expected.size()),
                              detail::str(naive_set.size())});
    if (count_distinct(a, b).count > counted.count)
      rep.failures.push_back({"distinct-le-embeddings", inst, "<=", ">"});
  }
  return rep;
}

/// Crossing property of initial character embeddings (Lemma-level check).
inline VerifyReport verify_crossing(const std::vector<std::pair<Sequence, Sequence>>& suite) {
  VerifyReport rep{"crossing"};
  for (const auto& [a, b] : suite) {
    ++rep.instances;
    ++rep.checks;
    if (!check_crossing_property(a, b))
      rep.failures.push_back(
          {"crossing-property", detail::describe(a, b), "true", "false"});
  }
  return rep;
}

/// Closed-form bound identities against exhaustive scans.
inline VerifyReport verify_bounds() {
  VerifyReport rep{"bounds"};
  auto fail = [&](std::string check, std::string inst, std::string exp, std::string got) {
    rep.failures.push_back({std::move(check), std::move(inst), std::move(exp), std::move(got)});
  };

  // E(n,m,l) closed-form y* vs scan, plus unimodality of P(y).
  for (std::int64_t n = 0; n <= 40; ++n)
    for (std::int64_t m = 0; m <= n; ++m)
      for (std::int64_t l = 0; l <= m; ++l) {
        ++rep.checks;
        BigInt best = 0;
        bool rising = true, unimodal = true;
        BigInt prev = -1;
        for (std::int64_t y = 0; y <= l; ++y) {
          const BigInt p = binomial(m - y, l - y) * binomial(n + y - l, y);
          if (p > best) best = p;
          if (prev >= 0) {
            if (p > prev && !rising) unimodal = false;
            if (p < prev) rising = false;
          }
          prev = p;
        }
        const std::string inst =
            "m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",l=" + std::to_string(l);
        if (max_embeddings(m, n, l) != best)
          fail("max-embeddings-scan", inst, best.str(), max_embeddings(m, n, l).str());
        if (!unimodal) fail("p-unimodal", inst, "unimodal", "not unimodal");
      }

  // m = n specialization.
  for (std::int64_t n = 0; n <= 60; ++n)
    for (std::int64_t l = 0; l <= n; ++l) {
      ++rep.checks;
      if (max_embeddings_equal(n, l) != max_embeddings(n, n, l))
        fail("equal-specialization", "n=" + std::to_string(n) + ",l=" + std::to_string(l),
             max_embeddings(n, n, l).str(), max_embeddings_equal(n, l).str());
    }

  // Closed-form optima vs scans, and l* optimality.
  for (std::int64_t n = 1; n <= 100; ++n) {
    ++rep.checks;
    BigInt best = 0;
    for (std::int64_t l = 0; l <= n; ++l) {
      const BigInt v = max_embeddings_equal(n, l);
      if (v > best) best = v;
    }
    if (max_embeddings_equal_opt(n) != best)
      fail("equal-opt-scan", "n=" + std::to_string(n), best.str(),
           max_embeddings_equal_opt(n).str());
    const OptimalLength ol = optimal_l_equal(n);
    for (std::int64_t l : ol.alternatives)
      if (max_embeddings_equal(n, l) != best)
        fail("optimal-l", "n=" + std::to_string(n) + ",l=" + std::to_string(l), best.str(),
             max_embeddings_equal(n, l).str());
    if (!(ol.sigma < ol.tau && ol.tau < ol.sigma + 1))
      fail("sigma-tau-order", "n=" + std::to_string(n), "sigma < tau < sigma+1",
           detail::str(ol.sigma) + "," + detail::str(ol.tau));
  }
  for (std::int64_t t = 0; t <= 200; ++t) {
    ++rep.checks;
    BigInt best = 0;
    for (std::int64_t l = 0; 2 * l <= t; ++l) {
      const BigInt v = max_embeddings_total(t, l);
      if (v > best) best = v;
    }
    if (max_embeddings_total_opt(t) != best)
      fail("total-opt-scan", "t=" + std::to_string(t), best.str(),
           max_embeddings_total_opt(t).str());
  }

  // Bound ordering and the repeat-free coincidence.
  for (std::int64_t t = 4; t <= 2000; ++t) {
    ++rep.checks;
    if (ln_big(d_lower(t)) > d_upper(t).ln_value + 1e-9)
      fail("lower-le-upper", "t=" + std::to_string(t), "<=", ">");
    if (d_lower(t) != d_upper_distinct_chars(t))
      fail("repeat-free-tight", "t=" + std::to_string(t), d_lower(t).str(),
           d_upper_distinct_chars(t).str());
  }

  // Integral sigma is always even.
  for (std::int64_t n = 1; n <= 1000000; ++n) {
    const std::int64_t disc = 5 * (n + 1) * (n + 1) - 4;
    const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(double(disc))));
    if (root * root == disc && (5 * n - 1 - root) % 5 == 0) {
      ++rep.checks;
      if (((5 * n - 1 - root) / 5) % 2 != 0)
        fail("sigma-integral-even", "n=" + std::to_string(n), "even", "odd");
    }
  }

  // Stirling accuracy.
  for (std::int64_t n : {1, 2, 5, 10, 50, 100, 1000}) {
    ++rep.checks;
    const double exact = ln_big(factorial(n));
    const double approx = ln_factorial_stirling(n);
    const double rel = n == 1 ? std::fabs(approx - exact) : std::fabs(approx / exact - 1);
    if (n >= 10 && rel > 1e-3)
      fail("stirling-accuracy", "n=" + std::to_string(n), "<0.1%", detail::str(rel));
  }
  return rep;
}

inline VerifyReport verify_all(const VerifyOptions& opt) {
  const auto suite = detail::instance_suite(opt);
  VerifyReport rep{"all"};
  rep.merge(verify_distinct(suite));
  rep.merge(verify_embeddings(suite));
  rep.merge(verify_crossing(suite));
  rep.merge(verify_bounds());
  return rep;
}

}  // namespace lcsb
