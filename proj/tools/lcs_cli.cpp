// Command line front end: enumerate / count / bounds / gen / verify / bench.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 resource budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcsb/lcsb.hpp"

using json = nlohmann::ordered_json;
using namespace lcsb;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

struct InputSpec {
  std::vector<std::string> payload;  // two strings / token lists, or one path
  bool tokens = false;
  bool file = false;

  void add_options(CLI::App* cmd) {
    cmd->add_option("input", payload, "two sequences (or one file path with --from-file)")
        ->expected(1, 2);
    cmd->add_flag("--tokens", tokens, "parse inputs as comma-separated integer tokens");
    cmd->add_flag("--from-file", file,
                  "read both sequences from a token file (one per line)");
  }

  std::pair<Sequence, Sequence> parse() const {
    if (file) {
      if (payload.size() != 1) throw parse_error("--from-file takes exactly one path");
      std::ifstream in(payload[0]);
      if (!in) throw parse_error("cannot open " + payload[0]);
      std::string line_a, line_b;
      if (!std::getline(in, line_a) || !std::getline(in, line_b))
        throw parse_error("token file must contain two lines");
      return {sequence_from_tokens(line_a), sequence_from_tokens(line_b)};
    }
    if (payload.size() != 2) throw parse_error("expected two sequences");
    if (tokens) return {sequence_from_tokens(payload[0]), sequence_from_tokens(payload[1])};
    return {sequence_from_text(payload[0]), sequence_from_text(payload[1])};
  }
};

json embedding_json(const Sequence& a, const Embedding& e) {
  json j;
  j["positions_a"] = e.positions_a;
  j["positions_b"] = e.positions_b;
  j["string"] = sequence_to_text(embedded_string(a, e));
  return j;
}

std::string embedding_text(const Sequence& a, const Embedding& e) {
  std::string out = sequence_to_text(embedded_string(a, e));
  if (out.empty()) out = "(empty)";
  out += "  a:(";
  for (std::size_t k = 0; k < e.positions_a.size(); ++k)
    out += (k ? "," : "") + std::to_string(e.positions_a[k]);
  out += ") b:(";
  for (std::size_t k = 0; k < e.positions_b.size(); ++k)
    out += (k ? "," : "") + std::to_string(e.positions_b[k]);
  out += ")";
  return out;
}

int run_enumerate(const InputSpec& input, const std::string& mode, std::uint64_t limit,
                  const std::string& format, std::uint64_t budget) {
  const auto [a, b] = input.parse();
  const bool jsonl = format == "json-lines";
  std::uint64_t emitted = 0;
  json summary;
  summary["mode"] = mode;

  auto emit_line = [&](const json& j, const std::string& text) {
    if (jsonl)
      std::cout << j.dump() << "\n";
    else
      std::cout << text << "\n";
  };

  if (mode == "distinct") {
    const CountResult res = enumerate_distinct(a, b, [&](const Sequence& s) {
      emit_line(json{{"string", sequence_to_text(s)}},
                s.empty() ? "(empty)" : sequence_to_text(s));
      return ++emitted < limit ? SinkAction::kContinue : SinkAction::kStop;
    });
    summary["count"] = res.count.str();
    summary["l"] = res.lcs_length;
  } else if (mode == "embeddings") {
    const CountResult res = enumerate_embeddings(a, b, [&](const Embedding& e) {
      emit_line(embedding_json(a, e), embedding_text(a, e));
      return ++emitted < limit ? SinkAction::kContinue : SinkAction::kStop;
    });
    summary["count"] = res.count.str();
    summary["l"] = res.lcs_length;
  } else if (mode == "naive") {
    NaiveRunStats stats;
    bool truncated = false;
    try {
      stats = enumerate_naive(a, b, [&](const Embedding& e) {
        emit_line(embedding_json(a, e), embedding_text(a, e));
        return ++emitted < limit ? SinkAction::kContinue : SinkAction::kStop;
      }, budget);
    } catch (const budget_error& e) {
      stats = e.partial_stats;
      truncated = true;
    }
    summary["nodes_visited"] = stats.nodes_visited.str();
    summary["outputs_emitted"] = stats.outputs_emitted.str();
    summary["output_chars"] = stats.output_chars.str();
    summary["l"] = stats.lcs_length;
    if (truncated) {
      summary["partial"] = true;
      std::cout << summary.dump() << "\n";
      std::cerr << "node budget exceeded\n";
      return kExitBudget;
    }
  } else {
    throw CLI::ValidationError("mode must be distinct, embeddings, or naive");
  }
  std::cout << summary.dump() << "\n";
  return 0;
}

int run_count(const InputSpec& input, const std::string& mode) {
  const auto [a, b] = input.parse();
  const CountResult res = mode == "distinct" ? count_distinct(a, b) : count_embeddings(a, b);
  json j;
  j["mode"] = mode;
  j["count"] = res.count.str();
  j["l"] = res.lcs_length;
  std::cout << j.dump() << "\n";
  return 0;
}

void print_table(const std::vector<json>& rows) {
  for (const json& r : rows) std::cout << r.dump() << "\n";
}

int run_bounds(const std::string& kind, std::optional<std::int64_t> t,
               std::optional<std::int64_t> n, std::optional<std::int64_t> m,
               std::optional<std::int64_t> l, std::optional<std::int64_t> sweep_to) {
  std::vector<json> rows;
  auto ratio = [](const BigInt& exact, const AsymptoticEstimate& asym) {
    return std::exp(ln_big(exact) - asym.ln_value);
  };
  if (kind == "distinct") {
    if (!t) throw CLI::ValidationError("bounds distinct requires --t");
    for (std::int64_t tt = *t; tt <= sweep_to.value_or(*t); ++tt) {
      json r;
      r["t"] = tt;
      r["lower"] = d_lower(tt).str();
      r["upper_4^(t/5)"] = d_upper(tt).value;
      r["no_repeat_upper"] = d_upper_distinct_chars(tt).str();
      rows.push_back(r);
    }
  } else if (kind == "embeddings") {
    if (m && n && l) {
      json r;
      r["m"] = *m;
      r["n"] = *n;
      r["l"] = *l;
      r["y_star"] = optimal_y(std::min(*m, *n), std::max(*m, *n), *l);
      r["max_embeddings"] = max_embeddings(std::min(*m, *n), std::max(*m, *n), *l).str();
      rows.push_back(r);
    } else if (n) {
      for (std::int64_t nn = *n; nn <= sweep_to.value_or(*n); ++nn) {
        const OptimalLength ol = optimal_l_equal(nn);
        json r;
        r["n"] = nn;
        r["l_star"] = ol.l_star;
        r["exact"] = max_embeddings_equal_opt(nn).str();
        r["asymptotic_ln"] = asymptotic_embeddings_equal(nn).ln_value;
        r["exact_over_asymptotic"] = ratio(max_embeddings_equal_opt(nn),
                                           asymptotic_embeddings_equal(nn));
        rows.push_back(r);
      }
    } else if (t) {
      for (std::int64_t tt = *t; tt <= sweep_to.value_or(*t); ++tt) {
        json r;
        r["t"] = tt;
        r["exact"] = max_embeddings_total_opt(tt).str();
        if (tt >= 1) {
          r["asymptotic_ln"] = asymptotic_embeddings_total(tt).ln_value;
          r["exact_over_asymptotic"] =
              ratio(max_embeddings_total_opt(tt), asymptotic_embeddings_total(tt));
        }
        rows.push_back(r);
      }
    } else {
      throw CLI::ValidationError("bounds embeddings requires --t, --n, or --m/--n/--l");
    }
  } else if (kind == "naive") {
    if (m && n) {
      json r;
      r["m"] = *m;
      r["n"] = *n;
      r["bound"] = naive_overhead_bound(*m, *n).str();
      rows.push_back(r);
    } else if (n) {
      for (std::int64_t nn = *n; nn <= sweep_to.value_or(*n); ++nn) {
        const auto o = naive_overhead_equal(nn);
        json r;
        r["n"] = nn;
        r["exact"] = o.exact.str();
        r["asymptotic"] = o.asymptotic.value;
        r["exact_over_asymptotic"] = ratio(o.exact, o.asymptotic);
        rows.push_back(r);
      }
    } else if (t) {
      for (std::int64_t tt = *t; tt <= sweep_to.value_or(*t); ++tt) {
        const auto o = naive_overhead_total(tt);
        json r;
        r["t"] = tt;
        r["exact"] = o.exact.str();
        r["asymptotic"] = o.asymptotic.value;
        r["exact_over_asymptotic"] = ratio(o.exact, o.asymptotic);
        rows.push_back(r);
      }
    } else {
      throw CLI::ValidationError("bounds naive requires --n, --t, or --m/--n");
    }
  } else {
    throw CLI::ValidationError("kind must be distinct, embeddings, or naive");
  }
  print_table(rows);
  return 0;
}

int run_gen(const std::string& kind, std::optional<std::int64_t> t,
            std::optional<std::int64_t> m, std::optional<std::int64_t> n,
            std::optional<std::int64_t> l, std::optional<std::int64_t> y,
            const std::string& emit) {
  InstancePair p;
  if (kind == "max-distinct") {
    if (!t) throw CLI::ValidationError("gen max-distinct requires --t");
    p = gen_max_distinct(*t);
  } else if (kind == "max-embeddings") {
    if (!m || !n || !l) throw CLI::ValidationError("gen max-embeddings requires --m --n --l");
    p = gen_max_embeddings(*m, *n, *l, y ? std::optional<std::int64_t>(*y) : std::nullopt);
  } else if (kind == "no-match") {
    if (!m || !n) throw CLI::ValidationError("gen no-match requires --m --n");
    p = gen_no_match(*m, *n);
  } else if (kind == "single-match") {
    if (!m || !n) throw CLI::ValidationError("gen single-match requires --m --n");
    p = gen_single_match(*m, *n);
  } else {
    throw CLI::ValidationError("unknown generator kind");
  }
  json j;
  j["kind"] = kind;
  if (emit == "tokens") {
    j["a"] = sequence_to_tokens(p.a);
    j["b"] = sequence_to_tokens(p.b);
  } else {
    j["a"] = sequence_to_text(p.a);
    j["b"] = sequence_to_text(p.b);
  }
  j["expected_l"] = p.expected.expected_l;
  if (p.expected.expected_distinct_count)
    j["expected_distinct_count"] = p.expected.expected_distinct_count->str();
  if (p.expected.expected_embedding_count)
    j["expected_embedding_count"] = p.expected.expected_embedding_count->str();
  if (p.expected.unique_lcs) j["unique_lcs"] = sequence_to_text(*p.expected.unique_lcs);
  if (!p.note.empty()) j["note"] = p.note;
  std::cout << j.dump() << "\n";
  return 0;
}

int run_verify(const std::string& suite_name, const VerifyOptions& opt) {
  VerifyReport rep{suite_name};
  if (suite_name == "bounds") {
    rep = verify_bounds();
  } else {
    const auto suite = detail::instance_suite(opt);
    if (suite_name == "distinct")
      rep = verify_distinct(suite);
    else if (suite_name == "embeddings")
      rep = verify_embeddings(suite);
    else if (suite_name == "crossing")
      rep = verify_crossing(suite);
    else if (suite_name == "all")
      rep = verify_all(opt);
    else
      throw CLI::ValidationError("unknown verify suite");
  }
  json j;
  j["suite"] = suite_name;
  j["instances"] = rep.instances;
  j["checks"] = rep.checks;
  j["pass"] = rep.pass();
  json fails = json::array();
  for (const auto& f : rep.failures)
    fails.push_back({{"check", f.check},
                     {"instance", f.instance},
                     {"expected", f.expected},
                     {"got", f.got}});
  j["failures"] = fails;
  std::cout << j.dump(2) << "\n";
  return rep.pass() ? 0 : kExitVerifyFailure;
}

int run_bench(const std::string& family, std::int64_t from, std::int64_t to,
              std::uint64_t budget) {
  std::optional<double> prev_nodes;
  for (std::int64_t size = from; size <= to; ++size) {
    InstancePair p;
    if (family == "no-match")
      p = gen_no_match(size, size);
    else if (family == "single-match")
      p = gen_single_match(size, size);
    else if (family == "max-distinct")
      p = gen_max_distinct(size);
    else if (family == "max-embeddings") {
      const std::int64_t l = optimal_l_equal(std::max<std::int64_t>(size, 1)).l_star;
      p = gen_max_embeddings(size, size, l);
    } else {
      throw CLI::ValidationError("unknown bench family");
    }
    json r;
    r["family"] = family;
    r["size"] = size;
    r["m"] = p.a.size();
    r["n"] = p.b.size();
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const OverheadReport rep = overhead_report(p.a, p.b, budget);
      r["l"] = rep.lcs_length;
      r["naive_nodes"] = rep.naive.nodes_visited.str();
      r["naive_outputs"] = rep.naive.outputs_emitted.str();
      r["embedding_count"] = rep.embedding_count.str();
      r["distinct_count"] = rep.distinct_count.str();
      r["overhead_ratio"] = rep.ratio;
      r["bound_C(m+n,m)"] = rep.bound.str();
      r["ratio_to_bound"] = rep.ratio_to_bound;
      const double nodes = std::exp(ln_big(rep.naive.nodes_visited));
      if (prev_nodes) r["node_growth_factor"] = nodes / *prev_nodes;
      prev_nodes = nodes;
    } catch (const budget_error&) {
      r["budget_exceeded"] = true;
      prev_nodes.reset();
    }
    r["seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << r.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"longest common subsequence enumeration, counting, and worst-case bounds"};
  app.require_subcommand(1);

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "stream distinct LCSs, embeddings, or the naive backtrace");
  std::string enum_mode;
  enum_cmd->add_option("mode", enum_mode, "distinct|embeddings|naive")->required();
  InputSpec enum_input;
  enum_input.add_options(enum_cmd);
  std::uint64_t limit = UINT64_MAX;
  enum_cmd->add_option("--limit", limit, "stop after N outputs");
  std::string format = "text";
  enum_cmd->add_option("--format", format, "text|json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));
  std::uint64_t budget = kDefaultNaiveNodeBudget;
  enum_cmd->add_option("--node-budget", budget, "naive backtrace node budget");

  // count
  auto* count_cmd = app.add_subcommand("count", "exact counts without materializing outputs");
  std::string count_mode;
  count_cmd->add_option("mode", count_mode, "distinct|embeddings")
      ->required()
      ->check(CLI::IsMember({"distinct", "embeddings"}));
  InputSpec count_input;
  count_input.add_options(count_cmd);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form worst-case values");
  std::string bounds_kind;
  bounds_cmd->add_option("kind", bounds_kind, "distinct|embeddings|naive")->required();
  std::optional<std::int64_t> opt_t, opt_n, opt_m, opt_l, opt_to;
  bounds_cmd->add_option("--t", opt_t, "total input length");
  bounds_cmd->add_option("--n", opt_n, "per-string length (m = n)");
  bounds_cmd->add_option("--m", opt_m, "shorter string length");
  bounds_cmd->add_option("--l", opt_l, "LCS length");
  bounds_cmd->add_option("--to", opt_to, "sweep the primary parameter up to this value");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "construct extremal instances");
  std::string gen_kind;
  gen_cmd->add_option("kind", gen_kind, "max-distinct|max-embeddings|no-match|single-match")
      ->required();
  std::optional<std::int64_t> g_t, g_m, g_n, g_l, g_y;
  gen_cmd->add_option("--t", g_t, "total length");
  gen_cmd->add_option("--m", g_m, "length of A");
  gen_cmd->add_option("--n", g_n, "length of B");
  gen_cmd->add_option("--l", g_l, "LCS length");
  gen_cmd->add_option("--y", g_y, "split parameter (default y*)");
  std::string emit = "text";
  gen_cmd->add_option("--emit", emit, "text|tokens")->check(CLI::IsMember({"text", "tokens"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "cross-check engines, oracles, and bounds");
  std::string suite;
  verify_cmd->add_option("suite", suite, "distinct|embeddings|bounds|crossing|all")->required();
  VerifyOptions vopt;
  verify_cmd->add_option("--max-len", vopt.max_len, "exhaustive length cap");
  verify_cmd->add_option("--alphabet", vopt.alphabet, "exhaustive alphabet size");
  verify_cmd->add_option("--seed", vopt.seed, "random instance seed");
  bool exhaustive_flag = false;
  verify_cmd->add_flag("--exhaustive", exhaustive_flag, "include the exhaustive sweep");
  verify_cmd->add_option("--random-count", vopt.random_count, "number of random instances");
  verify_cmd->add_option("--random-max-len", vopt.random_max_len, "random length cap");
  verify_cmd->add_option("--random-alphabet", vopt.random_alphabet, "random alphabet size");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "naive-vs-efficient overhead sweep");
  std::string family;
  bench_cmd->add_option("family", family, "no-match|single-match|max-distinct|max-embeddings")
      ->required();
  std::int64_t from = 1, to = 8;
  bench_cmd->add_option("--from", from, "first size");
  bench_cmd->add_option("--to", to, "last size");
  std::uint64_t bench_budget = kDefaultNaiveNodeBudget;
  bench_cmd->add_option("--node-budget", bench_budget, "naive node budget per row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (enum_cmd->parsed()) return run_enumerate(enum_input, enum_mode, limit, format, budget);
    if (count_cmd->parsed()) return run_count(count_input, count_mode);
    if (bounds_cmd->parsed()) return run_bounds(bounds_kind, opt_t, opt_n, opt_m, opt_l, opt_to);
    if (gen_cmd->parsed()) return run_gen(gen_kind, g_t, g_m, g_n, g_l, g_y, emit);
    if (verify_cmd->parsed()) {
      vopt.exhaustive = exhaustive_flag;
      return run_verify(suite, vopt);
    }
    if (bench_cmd->parsed()) return run_bench(family, from, to, bench_budget);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitParse;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const capacity_error& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const oracle_limit_error& e) {
    std::cerr << "oracle limit: " << e.what() << "\n";
    return kExitBudget;
  }
  return kExitParse;
}
