// Acceptance suite: one numbered check per criterion, one PASS/FAIL line
// each, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "lcsb/lcsb.hpp"

using namespace lcsb;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

Sequence seq(const char* s) { return sequence_from_text(s); }

// 1. count_distinct("abcda","cbadc") == 7 with l == 2.
void criterion1() {
  const CountResult c = count_distinct(seq("abcda"), seq("cbadc"));
  report(1, "distinct-count example", c.count == 7 && c.lcs_length == 2,
         "count=" + c.count.str() + " l=" + std::to_string(c.lcs_length));
}

// 2. Construction tightness for t in 4..20; 3^(t/6) at t in {6,12,18}.
void criterion2() {
  bool ok = true;
  std::string detail;
  for (std::int64_t t = 4; t <= 20; ++t) {
    const InstancePair p = gen_max_distinct(t);
    const BigInt counted = count_distinct(p.a, p.b).count;
    if (counted != d_lower(t) || counted != d_upper_distinct_chars(t)) {
      ok = false;
      detail = "t=" + std::to_string(t) + " count=" + counted.str();
      break;
    }
  }
  for (std::int64_t t : {6, 12, 18}) {
    BigInt want = 1;
    for (std::int64_t i = 0; i < t / 6; ++i) want *= 3;
    if (count_distinct(gen_max_distinct(t).a, gen_max_distinct(t).b).count != want) {
      ok = false;
      detail = "t=" + std::to_string(t) + " != 3^(t/6)";
    }
  }
  report(2, "lower/no-repeat bound tightness on construction", ok, detail);
}

std::vector<std::pair<Sequence, Sequence>> exhaustive_pairs(int alphabet, std::size_t max_len) {
  std::vector<Sequence> all;
  Sequence cur;
  auto gen = [&](auto&& self) -> void {
    all.push_back(cur);
    if (cur.size() == max_len) return;
    for (Symbol c = 0; c < alphabet; ++c) {
      cur.push_back(c);
      self(self);
      cur.pop_back();
    }
  };
  gen(gen);
  std::vector<std::pair<Sequence, Sequence>> out;
  for (const auto& a : all)
    for (const auto& b : all) out.push_back({a, b});
  return out;
}

// 3. count_distinct <= 4^(t/5) everywhere.
void criterion3() {
  bool ok = true;
  std::string detail;
  auto check = [&](const Sequence& a, const Sequence& b) {
    const BigInt c = count_distinct(a, b).count;
    const double ln_bound = d_upper(a.size() + b.size()).ln_value;
    if (ln_big(c) > ln_bound + 1e-9) {
      ok = false;
      detail = "(\"" + sequence_to_text(a) + "\",\"" + sequence_to_text(b) + "\")";
    }
  };
  for (int alphabet : {2, 3})
    for (const auto& [a, b] : exhaustive_pairs(alphabet, 5)) check(a, b);
  for (std::int64_t t = 4; t <= 20; ++t) {
    const InstancePair p = gen_max_distinct(t);
    check(p.a, p.b);
  }
  report(3, "distinct count <= 4^(t/5)", ok, detail);
}

// 4. E(n,m,l) attainment with a unique distinct LCS, l <= m <= n <= 12.
void criterion4() {
  bool ok = true;
  std::string detail;
  for (std::int64_t n = 0; n <= 12 && ok; ++n)
    for (std::int64_t m = 0; m <= n && ok; ++m)
      for (std::int64_t l = 0; l <= m && ok; ++l) {
        const InstancePair p = gen_max_embeddings(m, n, l);
        const BigInt got = count_embeddings(p.a, p.b).count;
        if (got != max_embeddings(m, n, l) || count_distinct(p.a, p.b).count != 1) {
          ok = false;
          detail = "m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                   ",l=" + std::to_string(l) + " got=" + got.str();
        }
      }
  report(4, "E(n,m,l) attained by the construction", ok, detail);
}

// 5. y* maximizes the binomial product; P(y) unimodal; l <= m <= n <= 40.
void criterion5() {
  bool ok = true;
  std::string detail;
  for (std::int64_t n = 0; n <= 40 && ok; ++n)
    for (std::int64_t m = 0; m <= n && ok; ++m)
      for (std::int64_t l = 0; l <= m && ok; ++l) {
        BigInt best = 0, prev = -1;
        bool rising = true, unimodal = true;
        for (std::int64_t y = 0; y <= l; ++y) {
          const BigInt p = binomial(m - y, l - y) * binomial(n + y - l, y);
          if (p > best) best = p;
          if (prev >= 0) {
            if (p > prev && !rising) unimodal = false;
            if (p < prev) rising = false;
          }
          prev = p;
        }
        if (max_embeddings(m, n, l) != best || !unimodal) {
          ok = false;
          detail = "m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                   ",l=" + std::to_string(l);
        }
      }
  report(5, "y* optimality and P(y) unimodality", ok, detail);
}

// 6. m = n closed form vs scan, n <= 100; spot values.
void criterion6() {
  bool ok = max_embeddings_equal_opt(4) == 9 && max_embeddings_equal_opt(10) == 1225;
  std::string detail;
  for (std::int64_t n = 1; n <= 100 && ok; ++n) {
    BigInt best = 0;
    for (std::int64_t l = 0; l <= n; ++l) {
      const BigInt v = max_embeddings_equal(n, l);
      if (v > best) best = v;
    }
    if (max_embeddings_equal_opt(n) != best) {
      ok = false;
      detail = "n=" + std::to_string(n);
    }
  }
  report(6, "m=n closed form equals scan", ok, detail);
}

// 7. Total-length closed form vs scan, t <= 200; spot value 35 at t = 10.
void criterion7() {
  bool ok = max_embeddings_total_opt(10) == 35;
  std::string detail;
  for (std::int64_t t = 0; t <= 200 && ok; ++t) {
    BigInt best = 0;
    for (std::int64_t l = 0; 2 * l <= t; ++l) {
      const BigInt v = max_embeddings_total(t, l);
      if (v > best) best = v;
    }
    if (max_embeddings_total_opt(t) != best) {
      ok = false;
      detail = "t=" + std::to_string(t);
    }
  }
  report(7, "total-length closed form equals scan", ok, detail);
}

// 8. Asymptotic accuracy: within 2% at n = 500 and 1% at t = 1000.
void criterion8() {
  const double r1 =
      std::exp(ln_big(max_embeddings_equal_opt(500)) - asymptotic_embeddings_equal(500).ln_value);
  const double r2 =
      std::exp(ln_big(max_embeddings_total_opt(1000)) - asymptotic_embeddings_total(1000).ln_value);
  const bool ok = std::fabs(r1 - 1) <= 0.02 && std::fabs(r2 - 1) <= 0.01;
  report(8, "asymptotic corollaries", ok,
         "equal ratio=" + std::to_string(r1) + " total ratio=" + std::to_string(r2));
}

// 9. Naive overhead: exact output counts and the 4*sqrt(n/(n+1)) growth law.
void criterion9() {
  bool ok = true;
  std::string detail;
  for (std::int64_t n = 1; n <= 8; ++n) {
    const InstancePair p = gen_no_match(n, n);
    std::size_t nonempty = 0;
    const NaiveRunStats st = enumerate_naive(p.a, p.b, [&](const Embedding& e) {
      if (!e.positions_a.empty()) ++nonempty;
      return SinkAction::kContinue;
    });
    if (st.outputs_emitted != binomial(2 * n, n) || nonempty != 0) {
      ok = false;
      detail = "no-match n=" + std::to_string(n);
    }
    const InstancePair s = gen_single_match(n, n);
    const NaiveRunStats st2 = enumerate_naive(s.a, s.b, nullptr);
    if (st2.outputs_emitted != binomial(2 * n - 2, n - 1) ||
        count_embeddings(s.a, s.b).count != 1) {
      ok = false;
      detail = "single-match n=" + std::to_string(n);
    }
  }
  // growth factor of measured overhead on the no-match family
  std::vector<double> overhead;
  for (std::int64_t n = 4; n <= 11; ++n) {
    const InstancePair p = gen_no_match(n, n);
    overhead.push_back(overhead_report(p.a, p.b).ratio);
  }
  for (std::size_t k = 0; k + 1 < overhead.size(); ++k) {
    const std::int64_t n = 4 + static_cast<std::int64_t>(k);
    const double growth = overhead[k + 1] / overhead[k];
    const double target = 4.0 * std::sqrt(double(n) / double(n + 1));
    if (std::fabs(growth / target - 1) > 0.10) {
      ok = false;
      detail = "growth at n=" + std::to_string(n) + ": " + std::to_string(growth) + " vs " +
               std::to_string(target);
    }
  }
  report(9, "naive overhead counts and growth", ok, detail);
}

// 10. Oracle equivalence over the exhaustive + random suite.
void criterion10(const std::vector<std::pair<Sequence, Sequence>>& suite) {
  VerifyReport rep{"acceptance"};
  rep.merge(verify_distinct(suite));
  rep.merge(verify_embeddings(suite));
  std::string detail = "instances=" + std::to_string(rep.instances / 2);
  if (!rep.pass())
    detail += " first failure: " + rep.failures[0].check + " " + rep.failures[0].instance;
  report(10, "oracle equivalence and duplicate-freedom", rep.pass(), detail);
}

// 11. Crossing property over the same suite.
void criterion11(const std::vector<std::pair<Sequence, Sequence>>& suite) {
  const VerifyReport rep = verify_crossing(suite);
  std::string detail;
  if (!rep.pass()) detail = rep.failures[0].instance;
  report(11, "crossing property of initial characters", rep.pass(), detail);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  VerifyOptions opt;  // binary exhaustive to length 5 plus 1000 random pairs
  opt.max_len = 5;
  opt.alphabet = 2;
  opt.seed = 1;
  opt.random_count = 1000;
  opt.random_max_len = 8;
  opt.random_alphabet = 3;
  const auto suite = detail::instance_suite(opt);
  criterion10(suite);
  criterion11(suite);
  const auto secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d criteria failed (%.1fs)\n", failures, secs);
  return failures == 0 ? 0 : 1;
}
