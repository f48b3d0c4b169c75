// Command-line front end: compute terms, dump age tables, cross-verify the
// evaluation methods against each other, and benchmark the fast evaluator.
#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include "rabbits/rabbits.hpp"

using BigInt = boost::multiprecision::cpp_int;

namespace {

enum class OutputFormat { Plain, Csv, JsonLines };

OutputFormat format_from_name(const std::string& name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "csv") return OutputFormat::Csv;
  return OutputFormat::JsonLines;
}

rabbits::MethodId method_from_name(const std::string& name) {
  if (name == "sim") return rabbits::MethodId::Simulation;
  if (name == "rec") return rabbits::MethodId::Theorem1;
  if (name == "oller") return rabbits::MethodId::Oller;
  return rabbits::MethodId::FastEval;
}

/// "inf" or a decimal integer; anything else is a usage error.
std::optional<std::int64_t> parse_death(const std::string& text) {
  if (text == "inf") return std::nullopt;
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw rabbits::InvalidParam("--die expects an integer or \"inf\", got \"" + text +
                                "\"");
  return value;
}

std::uint64_t reduce_big(const BigInt& value, std::uint64_t m) {
  return static_cast<std::uint64_t>(value % BigInt(m));
}

std::string term_string(const rabbits::TermValue<BigInt>& value) {
  if (std::holds_alternative<rabbits::Residue>(value))
    return std::to_string(std::get<rabbits::Residue>(value).value);
  return std::get<BigInt>(value).str();
}

std::vector<std::string> to_strings(const std::vector<BigInt>& terms,
                                    std::optional<std::uint64_t> mod) {
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (const BigInt& t : terms)
    out.push_back(mod ? std::to_string(reduce_big(t, *mod)) : t.str());
  return out;
}

std::vector<std::string> to_strings(const std::vector<std::uint64_t>& residues) {
  std::vector<std::string> out;
  out.reserve(residues.size());
  for (std::uint64_t r : residues) out.push_back(std::to_string(r));
  return out;
}

/// F_1..F_n as decimal strings, by the requested method, reduced when a
/// modulus is given.
std::vector<std::string> sequence_strings(const rabbits::Params& p, std::uint64_t n,
                                          rabbits::MethodId method,
                                          std::optional<std::uint64_t> mod) {
  switch (method) {
    case rabbits::MethodId::Simulation:
      return to_strings(rabbits::run<BigInt>(p, n).terms, mod);
    case rabbits::MethodId::Theorem1:
      if (mod) return to_strings(rabbits::theorem1_sequence_mod(p, n, *mod));
      return to_strings(rabbits::theorem1_sequence<BigInt>(p, n).terms, std::nullopt);
    case rabbits::MethodId::Oller:
      if (mod) return to_strings(rabbits::oller_sequence_mod(p, n, *mod));
      return to_strings(rabbits::oller_sequence<BigInt>(p, n).terms, std::nullopt);
    case rabbits::MethodId::FastEval: {
      std::vector<std::string> out;
      out.reserve(static_cast<std::size_t>(n));
      for (std::uint64_t i = 1; i <= n; ++i) {
        if (mod)
          out.push_back(std::to_string(rabbits::fast_term_mod(p, i, *mod)));
        else
          out.push_back(rabbits::fast_term<BigInt>(p, i).str());
      }
      return out;
    }
  }
  throw rabbits::Error("unknown method");
}

void emit_terms(OutputFormat fmt, std::uint64_t first_index,
                const std::vector<std::string>& values) {
  switch (fmt) {
    case OutputFormat::Plain:
      for (const auto& v : values) std::cout << v << '\n';
      return;
    case OutputFormat::Csv:
      std::cout << "index,value\n";
      for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << first_index + i << ',' << values[i] << '\n';
      return;
    case OutputFormat::JsonLines:
      for (std::size_t i = 0; i < values.size(); ++i) {
        nlohmann::ordered_json row;
        row["n"] = first_index + i;
        row["value"] = values[i];
        std::cout << row.dump() << '\n';
      }
      return;
  }
}

int cmd_compute(std::int64_t fertile, const std::string& die, std::uint64_t n,
                const std::string& method_name, bool method_explicit,
                std::optional<std::uint64_t> mod, const std::string& format_name,
                bool last_only) {
  const rabbits::Params p = rabbits::validate(fertile, parse_death(die));
  rabbits::MethodId method = method_from_name(method_name);
  if (rabbits::classify(p) == rabbits::ParamClass::Degenerate &&
      method != rabbits::MethodId::Simulation && !method_explicit) {
    std::cerr << "warning: death age " << *p.death_age() << " precedes fertility age "
              << p.fertile_age() << "; only the simulator applies, using it\n";
    method = rabbits::MethodId::Simulation;
  }
  std::vector<std::string> values;
  if (last_only)
    values.push_back(term_string(rabbits::term<BigInt>(p, n, method, mod)));
  else
    values = sequence_strings(p, n, method, mod);
  emit_terms(format_from_name(format_name), last_only ? n : 1, values);
  return 0;
}

int cmd_table(std::int64_t fertile, const std::string& die, std::uint64_t n,
              const std::string& format_name) {
  const rabbits::Params p = rabbits::validate(fertile, parse_death(die));
  rabbits::detail::require_index(n);
  if (n > rabbits::kDefaultStepLimit)
    throw rabbits::LimitExceeded("generation " + std::to_string(n) +
                                 " exceeds step limit " +
                                 std::to_string(rabbits::kDefaultStepLimit));
  const OutputFormat fmt = format_from_name(format_name);
  const std::uint64_t width =
      p.death_finite() ? std::min<std::uint64_t>(*p.death_age(), n) : n;

  if (fmt == OutputFormat::Csv) {
    std::cout << "generation";
    for (std::uint64_t x = 1; x <= width; ++x) std::cout << ",age_" << x;
    std::cout << ",total\n";
  }

  rabbits::CohortState<BigInt> cohort = rabbits::initial_cohort<BigInt>(p);
  for (std::uint64_t gen = 1; gen <= n; ++gen) {
    const BigInt total = cohort.total();
    switch (fmt) {
      case OutputFormat::Plain: {
        std::cout << gen << ": ";
        for (std::size_t i = 0; i < cohort.counts.size(); ++i)
          std::cout << (i ? "," : "") << cohort.counts[i].str();
        std::cout << " total " << total.str() << '\n';
        break;
      }
      case OutputFormat::Csv: {
        std::cout << gen;
        for (std::uint64_t x = 1; x <= width; ++x)
          std::cout << ','
                    << (x <= cohort.max_age() ? cohort.at_age(x).str() : "0");
        std::cout << ',' << total.str() << '\n';
        break;
      }
      case OutputFormat::JsonLines: {
        nlohmann::ordered_json row;
        row["generation"] = gen;
        nlohmann::ordered_json counts = nlohmann::ordered_json::array();
        for (const BigInt& c : cohort.counts) counts.push_back(c.str());
        row["counts"] = std::move(counts);
        row["total"] = total.str();
        std::cout << row.dump() << '\n';
        break;
      }
    }
    if (gen < n) cohort = rabbits::step(p, cohort).first;
  }
  return 0;
}

std::string death_label(const rabbits::Params& p) {
  return p.death_finite() ? std::to_string(*p.death_age()) : std::string("inf");
}

int cmd_verify(std::uint64_t max_f, std::uint64_t max_d, std::uint64_t max_n,
               bool include_inf) {
  if (max_f < 1 || max_d < 1 || max_n < 1)
    throw rabbits::InvalidParam("verify bounds must be >= 1");
  if (max_n > rabbits::kDefaultStepLimit)
    throw rabbits::LimitExceeded("--max-n exceeds the simulator step limit " +
                                 std::to_string(rabbits::kDefaultStepLimit));

  std::vector<rabbits::Params> pairs;
  for (std::uint64_t f = 1; f <= max_f; ++f) {
    for (std::uint64_t d = f; d <= max_d; ++d)
      pairs.push_back(rabbits::validate(static_cast<std::int64_t>(f),
                                        static_cast<std::int64_t>(d)));
    if (include_inf)
      pairs.push_back(rabbits::validate(static_cast<std::int64_t>(f)));
  }

  // One slot per pair, written by exactly one worker; order is already the
  // deterministic report order.
  std::vector<char> agree(pairs.size(), 0);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < pairs.size();)
      agree[i] = rabbits::cross_verify<BigInt>(pairs[i], max_n).all_agree ? 1 : 0;
  };
  const std::size_t thread_count =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                            pairs.size());
  std::vector<std::thread> threads;
  threads.reserve(thread_count);
  for (std::size_t t = 0; t < thread_count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  std::size_t bad = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::cout << "f=" << pairs[i].fertile_age() << " d=" << death_label(pairs[i])
              << ": " << (agree[i] ? "ok" : "MISMATCH") << '\n';
    if (!agree[i]) ++bad;
  }
  if (bad == 0) {
    std::cout << "all " << pairs.size() << " parameter pairs agree\n";
    return 0;
  }
  std::cout << bad << " of " << pairs.size() << " parameter pairs disagree\n";
  return 1;
}

int cmd_bench(std::int64_t fertile, const std::string& die, std::uint64_t n,
              std::uint64_t mod, unsigned repeats) {
  const rabbits::Params p = rabbits::validate(fertile, parse_death(die));
  using Clock = std::chrono::steady_clock;
  const auto best_of = [&](auto&& fn, std::uint64_t& result) {
    double best_ms = std::numeric_limits<double>::infinity();
    for (unsigned r = 0; r < repeats; ++r) {
      const auto t0 = Clock::now();
      result = fn();
      const std::chrono::duration<double, std::milli> dt = Clock::now() - t0;
      best_ms = std::min(best_ms, dt.count());
    }
    return best_ms;
  };

  std::uint64_t fast_res = 0;
  std::uint64_t iter_res = 0;
  const double fast_ms = best_of([&] { return rabbits::fast_term_mod(p, n, mod); },
                                 fast_res);
  const double iter_ms = best_of(
      [&] { return rabbits::theorem1_sequence_mod(p, n, mod).back(); }, iter_res);

  std::cout << std::fixed << std::setprecision(3);
  std::cout << "fast:      F_" << n << " mod " << mod << " = " << fast_res << "  ("
            << fast_ms << " ms)\n";
  std::cout << "iterative: F_" << n << " mod " << mod << " = " << iter_res << "  ("
            << iter_ms << " ms)\n";
  std::cout << std::setprecision(2) << "speedup: " << (iter_ms / fast_ms) << "x\n";
  if (fast_res != iter_res) {
    std::cerr << "error: residue mismatch between fast and iterative evaluation\n";
    return 1;
  }
  std::cout << "residues agree\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Fibonacci rabbit populations: pairs breed from age f"
               " and die after age d (d may be \"inf\")."};
  app.require_subcommand(1);

  std::int64_t fertile = 0;
  std::string die;
  std::uint64_t n = 0;
  std::string method = "rec";
  std::string format = "plain";
  std::optional<std::uint64_t> mod;
  bool last_only = false;
  std::uint64_t max_f = 0, max_d = 0, max_n = 0;
  bool include_inf = false;
  std::uint64_t bench_mod = 0;
  unsigned repeats = 1;

  CLI::App* compute = app.add_subcommand(
      "compute", "Print terms F_1..F_n (or only F_n with --last)");
  compute->add_option("--fertile", fertile, "fertility age f (>= 1)")->required();
  compute->add_option("--die", die, "death age d (>= 1), or \"inf\"")->required();
  compute->add_option("--n", n, "last generation index")->required();
  compute->add_option("--method", method, "evaluation method")
      ->check(CLI::IsMember({"sim", "rec", "oller", "fast"}));
  compute->add_option("--mod", mod, "print residues modulo this (>= 2)");
  compute->add_option("--format", format, "output framing")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  compute->add_flag("--last", last_only, "print only F_n");

  CLI::App* table = app.add_subcommand(
      "table", "Print the age census of generations 1..n with row totals");
  table->add_option("--fertile", fertile, "fertility age f (>= 1)")->required();
  table->add_option("--die", die, "death age d (>= 1), or \"inf\"")->required();
  table->add_option("--n", n, "last generation index")->required();
  table->add_option("--format", format, "output framing")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check every method over a parameter sweep");
  verify->add_option("--max-f", max_f, "largest fertility age")->required();
  verify->add_option("--max-d", max_d, "largest finite death age")->required();
  verify->add_option("--max-n", max_n, "terms checked per pair")->required();
  verify->add_flag("--include-inf", include_inf, "also sweep d = inf");

  CLI::App* bench = app.add_subcommand(
      "bench", "Time fast vs. iterative modular evaluation of F_n");
  bench->add_option("--fertile", fertile, "fertility age f (>= 1)")->required();
  bench->add_option("--die", die, "death age d (>= 1), or \"inf\"")->required();
  bench->add_option("--n", n, "generation index")->required();
  bench->add_option("--mod", bench_mod, "modulus (>= 2)")->required();
  bench->add_option("--repeats", repeats, "timing repetitions, best-of")
      ->check(CLI::Range(1u, 1000u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return cmd_compute(fertile, die, n, method, compute->count("--method") > 0, mod,
                         format, last_only);
    if (table->parsed()) return cmd_table(fertile, die, n, format);
    if (verify->parsed()) return cmd_verify(max_f, max_d, max_n, include_inf);
    if (bench->parsed()) return cmd_bench(fertile, die, n, bench_mod, repeats);
  } catch (const rabbits::InvalidParam& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const rabbits::InvalidModulus& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const rabbits::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
