#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "lcsb/core.hpp"
#include "lcsb/text.hpp"

using namespace lcsb;

namespace {

Sequence seq(const char* s) { return sequence_from_text(s); }

void check_table_invariants(const Sequence& a, const Sequence& b, const DpTable& t) {
  const std::size_t m = a.size(), n = b.size();
  for (std::size_t j = 0; j <= n; ++j) CHECK(t.at(0, j) == 0);
  for (std::size_t i = 0; i <= m; ++i) CHECK(t.at(i, 0) == 0);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      CHECK(t.at(i, j) >= t.at(i - 1, j));
      CHECK(t.at(i, j) >= t.at(i, j - 1));
      CHECK(t.at(i, j) - t.at(i - 1, j) <= 1);
      CHECK(t.at(i, j) - t.at(i, j - 1) <= 1);
      CHECK(t.at(i, j) - t.at(i - 1, j - 1) <= 1);
      const int expect = a[i - 1] == b[j - 1]
                             ? t.at(i - 1, j - 1) + 1
                             : std::max(t.at(i - 1, j), t.at(i, j - 1));
      CHECK(t.at(i, j) == expect);
    }
}

}  // namespace

TEST_CASE("build_dp examples") {
  CHECK(build_dp(seq("abcda"), seq("cbadc")).lcs_length() == 2);
  const DpTable empty = build_dp(seq(""), seq("xyz"));
  for (std::size_t j = 0; j <= 3; ++j) CHECK(empty.at(0, j) == 0);
  const DpTable zero = build_dp(seq("aa"), seq("bb"));
  for (std::size_t i = 0; i <= 2; ++i)
    for (std::size_t j = 0; j <= 2; ++j) CHECK(zero.at(i, j) == 0);
}

TEST_CASE("lcs_length examples") {
  CHECK(lcs_length(seq("abcda"), seq("cbadc")) == 2);
  CHECK(lcs_length(seq("abc"), seq("abc")) == 3);
  CHECK(lcs_length(seq("aa"), seq("bb")) == 0);
}

TEST_CASE("build_dp capacity cap") {
  CHECK_THROWS_AS(build_dp(Sequence(100, 0), Sequence(100, 0), 1000), capacity_error);
}

TEST_CASE("backtrace_one examples") {
  {
    const Sequence a = seq("abc");
    const Embedding e = backtrace_one(a, a, build_dp(a, a));
    CHECK(e.positions_a == std::vector<std::size_t>{1, 2, 3});
    CHECK(e.positions_b == std::vector<std::size_t>{1, 2, 3});
  }
  {
    const Embedding e = backtrace_one(seq("aa"), seq("bb"), build_dp(seq("aa"), seq("bb")));
    CHECK(e.positions_a.empty());
    CHECK(e.positions_b.empty());
  }
  {
    const Embedding e = backtrace_one(seq("ab"), seq("bb"), build_dp(seq("ab"), seq("bb")));
    CHECK(e.positions_a == std::vector<std::size_t>{2});
    CHECK(e.positions_b == std::vector<std::size_t>{2});
  }
}

TEST_CASE("embedding_is_valid") {
  CHECK(embedding_is_valid(seq("ab"), seq("bb"), {{2}, {1}}, 1));
  CHECK(!embedding_is_valid(seq("ab"), seq("bb"), {{1}, {1}}, 1));
  CHECK(embedding_is_valid(seq("ab"), seq("xy"), {}, 0));
}

TEST_CASE("crossings") {
  CHECK(crossings(1, 3, 2, 1));
  CHECK(!crossings(1, 1, 2, 2));
  CHECK(crossings(3, 2, 1, 4));
}

TEST_CASE("dp invariants on random and exhaustive small inputs") {
  // exhaustive binary, lengths <= 3
  std::vector<Sequence> all;
  for (std::size_t len = 0; len <= 3; ++len)
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      Sequence s;
      for (std::size_t i = 0; i < len; ++i) s.push_back((mask >> i) & 1);
      all.push_back(s);
    }
  for (const auto& a : all)
    for (const auto& b : all) {
      const DpTable t = build_dp(a, b);
      check_table_invariants(a, b, t);
      const Embedding e = backtrace_one(a, b, t);
      CHECK(embedding_is_valid(a, b, e, t.lcs_length()));
    }

  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> len(0, 64);
  std::uniform_int_distribution<int> sym(0, 3);
  for (int k = 0; k < 50; ++k) {
    Sequence a(len(rng)), b(len(rng));
    for (auto& c : a) c = sym(rng);
    for (auto& c : b) c = sym(rng);
    const DpTable t = build_dp(a, b);
    check_table_invariants(a, b, t);
    CHECK(embedding_is_valid(a, b, backtrace_one(a, b, t), t.lcs_length()));
    // symmetry and renaming invariance
    CHECK(lcs_length(a, b) == lcs_length(b, a));
    Sequence ra = a, rb = b;
    for (auto& c : ra) c = 17 - c;
    for (auto& c : rb) c = 17 - c;
    CHECK(lcs_length(a, b) == lcs_length(ra, rb));
  }
}

TEST_CASE("match_points ranks") {
  const Sequence a = seq("abcda"), b = seq("cbadc");
  const DpTable fwd = build_dp(a, b);
  const DpTable rev = build_dp_reversed(a, b);
  const int l = fwd.lcs_length();
  for (const MatchPoint& mp : match_points(a, b, fwd, rev)) {
    CHECK(a[mp.i - 1] == b[mp.j - 1]);
    CHECK(mp.prefix_rank >= 1);
    CHECK(mp.prefix_rank + mp.suffix_rank - 1 <= l);
  }
}

TEST_CASE("text round trips") {
  CHECK(sequence_from_text("abc") == Sequence{'a', 'b', 'c'});
  CHECK(sequence_from_tokens("1, 2,30") == Sequence{1, 2, 30});
  CHECK(sequence_to_tokens({1, 2, 30}) == "1,2,30");
  CHECK(sequence_to_text({0, 1, 2}) == "abc");
  CHECK_THROWS_AS(sequence_from_tokens("1,,2"), parse_error);
}
