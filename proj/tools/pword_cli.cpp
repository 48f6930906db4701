// Command-line surface for the partial-word periodicity toolkit:
//   eval       point evaluation of the threshold/holes functions
//   table      the piecewise-linear threshold table for a hole budget
//   construct  the extremal word constructions
//   verify     formula-vs-oracle sweeps over a grid, mismatches reported
//   bench      linear vs logarithmic threshold evaluation timings
//
// Exit codes: 0 success, 1 usage error, 2 domain error (including trivial
// instances where one period divides the other), 3 overflow, 4 verification
// failure, 5 budget exceeded.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pword/pword.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitVerification = 4;
constexpr int kExitBudget = 5;

std::int64_t parse_int(const std::string& text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc::result_out_of_range)
    throw std::overflow_error("integer argument out of 64-bit range: " + text);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw CLI::ValidationError("arguments", "not an integer: " + text);
  return v;
}

std::vector<std::int64_t> parse_ints(const std::vector<std::string>& args) {
  std::vector<std::int64_t> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(parse_int(a));
  return out;
}

void require_arity(const std::vector<std::int64_t>& args, std::size_t want, const char* usage) {
  if (args.size() != want)
    throw CLI::ValidationError("arguments", std::string("expected ") + usage);
}

int run_eval(const std::string& kind, const std::vector<std::string>& raw) {
  const auto args = parse_ints(raw);
  std::int64_t value = 0;
  if (kind == "L") {
    require_arity(args, 3, "eval L <h> <p> <q>");
    value = pword::threshold(args[0], args[1], args[2]);
  } else if (kind == "H") {
    require_arity(args, 3, "eval H <n> <p> <q>");
    value = pword::min_holes(args[0], args[1], args[2]);
  } else if (kind == "Ld") {
    require_arity(args, 3, "eval Ld <h> <p> <q>");
    value = pword::special_threshold(args[0], args[1], args[2]);
  } else if (kind == "Hs") {
    require_arity(args, 3, "eval Hs <n> <p> <q>");
    value = pword::bordered_min_holes(args[0], args[1], args[2]);
  } else if (kind == "Ls") {
    require_arity(args, 3, "eval Ls <h> <p> <q>");
    value = pword::bordered_threshold(args[0], args[1], args[2]);
  } else if (kind == "Hd") {
    require_arity(args, 3, "eval Hd <n> <p> <q>");
    value = pword::special_min_holes(args[0], args[1], args[2]);
  } else if (kind == "Gt") {
    require_arity(args, 3, "eval Gt <k> <p> <q>");
    value = pword::nth_exclusive_multiple(args[0], args[1], args[2]);
  } else {
    throw CLI::ValidationError("kind", "unknown kind '" + kind + "' (L|H|Ld|Hs|Ls|Hd|Gt)");
  }
  std::cout << value << "\n";
  return 0;
}

int run_table(std::int64_t h, const std::string& format) {
  const pword::PiecewiseThreshold table = pword::threshold_table(h);
  if (format == "text")
    std::cout << pword::to_text(table);
  else if (format == "tsv")
    std::cout << pword::to_tsv(table);
  else if (format == "structured")
    std::cout << pword::to_json(table).dump(2) << "\n";
  else
    throw CLI::ValidationError("--format", "unknown format '" + format + "'");
  return 0;
}

int run_construct(const std::string& what, const std::vector<std::string>& raw) {
  const auto args = parse_ints(raw);
  if (what == "S") {
    require_arity(args, 2, "construct S <p> <q>");
    std::cout << pword::fine_wilf_word(args[0], args[1]).str() << "\n";
  } else if (what == "W") {
    require_arity(args, 2, "construct W <p> <q>");
    std::cout << pword::bordered_word(args[0], args[1]).str() << "\n";
  } else if (what == "special") {
    require_arity(args, 4, "construct special <n> <p> <q> <l>");
    std::cout << pword::special_word(args[0], args[1], args[2], args[3]).str() << "\n";
  } else if (what == "sturmian") {
    if (args.empty())
      throw CLI::ValidationError("arguments", "construct sturmian <gamma_1> [gamma_2 ...]");
    std::cout << pword::sturmian_word(args).text << "\n";
  } else {
    throw CLI::ValidationError("what", "unknown construction '" + what +
                                           "' (S|W|special|sturmian)");
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct CellReport {
  std::int64_t checks = 0;
  std::vector<std::string> mismatches;
};

template <typename Cell, typename Fn>
std::vector<CellReport> sweep_parallel(const std::vector<Cell>& cells, int jobs, Fn fn) {
  std::vector<CellReport> reports(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      fn(cells[i], reports[i]);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return reports;
}

struct VerifyTotals {
  std::int64_t checks = 0;
  std::int64_t mismatches = 0;
};

void print_reports(const std::string& name, const std::vector<CellReport>& reports,
                   VerifyTotals& totals) {
  std::int64_t checks = 0, bad = 0;
  for (const auto& r : reports) {
    checks += r.checks;
    bad += static_cast<std::int64_t>(r.mismatches.size());
    for (const auto& line : r.mismatches) std::cout << line << "\n";
  }
  std::cout << (bad == 0 ? "ok " : "FAIL ") << name << ": " << checks << " checks, " << bad
            << " mismatches\n";
  totals.checks += checks;
  totals.mismatches += bad;
}

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t q_max) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t p = 3; p < q_max; ++p)
    for (std::int64_t q = p + 1; q <= q_max; ++q)
      if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
  return pairs;
}

int run_verify(std::int64_t q_max, std::int64_t n_max, std::int64_t h_max, int jobs,
               bool inject_fault) {
  using Pair = std::pair<std::int64_t, std::int64_t>;
  const std::vector<Pair> pairs = coprime_pairs(q_max);
  VerifyTotals totals;

  // 1. Formula vs separator oracle for the holes function.
  {
    auto reports = sweep_parallel(pairs, jobs, [n_max](const Pair& cell, CellReport& rep) {
      const auto [p, q] = cell;
      for (std::int64_t n = p + q - 2; n <= n_max; ++n) {
        const std::int64_t expected = pword::min_holes_oracle(n, p, q);
        const std::int64_t got = pword::min_holes(n, p, q);
        ++rep.checks;
        if (got != expected)
          rep.mismatches.push_back("MISMATCH holes-vs-oracle p=" + std::to_string(p) +
                                   " q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                   " expected=" + std::to_string(expected) +
                                   " got=" + std::to_string(got));
      }
    });
    print_reports("holes-vs-oracle", reports, totals);
  }

  // 2. p == 2 closed form vs scan oracle.
  {
    std::vector<std::int64_t> qs;
    for (std::int64_t q = 3; q <= q_max; q += 2) qs.push_back(q);
    auto reports = sweep_parallel(qs, jobs, [h_max](std::int64_t q, CellReport& rep) {
      for (std::int64_t h = 0; h <= h_max; ++h) {
        const std::int64_t scan_bound = 2 * q * (h / q + 2) + 2 * q + 4;
        const std::int64_t expected = pword::threshold_oracle(h, 2, q, scan_bound);
        const std::int64_t got = pword::threshold_p2(h, q);
        ++rep.checks;
        if (got != expected)
          rep.mismatches.push_back("MISMATCH p2-threshold q=" + std::to_string(q) +
                                   " h=" + std::to_string(h) +
                                   " expected=" + std::to_string(expected) +
                                   " got=" + std::to_string(got));
      }
    });
    print_reports("p2-threshold-vs-oracle", reports, totals);
  }

  // 3. The three special-threshold routes against the linear baseline.
  {
    auto reports = sweep_parallel(pairs, jobs, [](const Pair& cell, CellReport& rep) {
      const auto [p, q] = cell;
      for (std::int64_t h = 0; h < p + q - 3; ++h) {
        const std::int64_t expected = pword::special_threshold_linear(h, p, q);
        const std::int64_t fast = pword::special_threshold(h, p, q);
        const std::int64_t sturm = pword::special_threshold_sturmian(h, p, q);
        const std::int64_t piecewise = pword::special_threshold_table(h).evaluate(p, q);
        ++rep.checks;
        if (fast != expected || sturm != expected || piecewise != expected)
          rep.mismatches.push_back(
              "MISMATCH special-threshold-paths p=" + std::to_string(p) +
              " q=" + std::to_string(q) + " h=" + std::to_string(h) +
              " linear=" + std::to_string(expected) + " fast=" + std::to_string(fast) +
              " sturmian=" + std::to_string(sturm) + " piecewise=" + std::to_string(piecewise));
      }
    });
    print_reports("special-threshold-paths", reports, totals);
  }

  // 4. Piecewise threshold table vs direct threshold evaluation.
  {
    std::vector<std::int64_t> budgets;
    for (std::int64_t h = 0; h <= h_max; ++h) budgets.push_back(h);
    auto reports = sweep_parallel(
        budgets, jobs, [&pairs, inject_fault](std::int64_t h, CellReport& rep) {
          pword::PiecewiseThreshold table = pword::threshold_table(h);
          if (inject_fault && h == 7) {
            for (auto& piece : table.pieces)
              if (piece.contains(pword::Fraction(5, 7))) ++piece.form.c_0;
          }
          for (const auto& [p, q] : pairs) {
            if (h >= p + q - 2) continue;
            const std::int64_t expected = pword::threshold(h, p, q);
            const std::int64_t got = table.evaluate(p, q);
            ++rep.checks;
            if (got != expected)
              rep.mismatches.push_back("MISMATCH threshold-table h=" + std::to_string(h) +
                                       " p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                       " expected=" + std::to_string(expected) +
                                       " got=" + std::to_string(got));
          }
        });
    print_reports("threshold-table", reports, totals);
  }

  std::cout << "total: " << totals.checks << " checks, " << totals.mismatches << " mismatches\n";
  return totals.mismatches == 0 ? 0 : kExitVerification;
}

// ---- bench ----------------------------------------------------------------

int run_bench(std::int64_t p, std::int64_t q, std::int64_t count, std::uint64_t seed) {
  if (!(2 < p && p < q)) throw std::domain_error("bench: requires 2 < p < q");
  if (std::gcd(p, q) != 1) throw std::domain_error("bench: requires coprime p, q");
  if (count < 1) throw std::domain_error("bench: count must be positive");

  constexpr std::int64_t kLinearCutoff = 2'000'000;  // p+q above this: O(h) path skipped
  const bool run_linear = p + q <= kLinearCutoff;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> budget(0, 3 * (p + q));

  std::vector<std::int64_t> fast_ns, linear_ns;
  fast_ns.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    const std::int64_t h = budget(rng);

    const auto t0 = std::chrono::steady_clock::now();
    const std::int64_t fast = pword::special_threshold(h, p, q);
    const auto t1 = std::chrono::steady_clock::now();
    fast_ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());

    if (run_linear) {
      const auto t2 = std::chrono::steady_clock::now();
      const std::int64_t linear = pword::special_threshold_linear(h, p, q);
      const auto t3 = std::chrono::steady_clock::now();
      linear_ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t3 - t2).count());
      if (linear != fast) {
        std::cout << "MISMATCH bench p=" << p << " q=" << q << " h=" << h << " linear=" << linear
                  << " fast=" << fast << "\n";
        return kExitVerification;
      }
    }
  }

  const auto median = [](std::vector<std::int64_t>& v) {
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
  };
  std::cout << "seed " << seed << "\n";
  std::cout << "samples " << count << "\n";
  std::cout << "fast median_ns " << median(fast_ns) << "\n";
  if (run_linear) {
    std::cout << "linear median_ns " << median(linear_ns) << "\n";
    std::cout << "equal results on all samples\n";
  } else {
    std::cout << "linear skipped (p+q > " << kLinearCutoff << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact periodicity thresholds for partial words"};
  app.require_subcommand(1);

  std::string eval_kind;
  std::vector<std::string> eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a threshold/holes function");
  eval->add_option("kind", eval_kind, "L|H|Ld|Hs|Ls|Hd|Gt")->required();
  eval->add_option("args", eval_args, "integer arguments")->expected(-1);

  std::int64_t table_h = 0;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "Piecewise threshold table for a hole budget");
  table->add_option("budget", table_h, "hole budget h")->required();
  table->add_option("--format", table_format, "text|tsv|structured")->capture_default_str();

  std::string construct_what;
  std::vector<std::string> construct_args;
  auto* construct = app.add_subcommand("construct", "Extremal word constructions");
  construct->add_option("what", construct_what, "S|W|special|sturmian")->required();
  construct->add_option("args", construct_args, "integer arguments")->expected(-1);

  std::int64_t q_max = 11, n_max = 60, h_max = 20;
  int jobs = 1;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Formula-vs-oracle grid sweeps");
  verify->add_option("--q-max", q_max, "largest period in the grid")->capture_default_str();
  verify->add_option("--n-max", n_max, "largest length in the grid")->capture_default_str();
  verify->add_option("--h-max", h_max, "largest hole budget in the grid")->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault,
                   "deliberately corrupt one table piece (harness self-test)");

  std::int64_t bench_p = 0, bench_q = 0, bench_count = 1000;
  std::uint64_t bench_seed = 123456789;
  auto* bench = app.add_subcommand("bench", "Linear vs logarithmic threshold timings");
  bench->add_option("p", bench_p, "first period")->required();
  bench->add_option("q", bench_q, "second period")->required();
  bench->add_option("--count", bench_count, "number of samples")->capture_default_str();
  bench->add_option("--seed", bench_seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(eval_kind, eval_args);
    if (table->parsed()) return run_table(table_h, table_format);
    if (construct->parsed()) return run_construct(construct_what, construct_args);
    if (verify->parsed()) return run_verify(q_max, n_max, h_max, jobs, inject_fault);
    if (bench->parsed()) return run_bench(bench_p, bench_q, bench_count, bench_seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pword::trivial_instance_error& e) {
    std::cerr << "trivial instance: " << e.what() << "\n";
    return kExitDomain;
  } catch (const pword::budget_exceeded_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::overflow_error& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
