#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rabbits/methods.hpp"
#include "rabbits/recurrence.hpp"
#include "rabbits/simulator.hpp"

using namespace rabbits;
using BigInt = boost::multiprecision::cpp_int;
using LL = long long;

namespace {
const std::vector<LL> k39Terms{1,  1,  1,  2,   3,   4,   6,   9,   13,  18, 26,
                               38, 55, 79, 114, 165, 238, 343, 495, 715, 1032};
}

TEST_CASE("four-case recurrence reproduces known sequences", "[recurrence]") {
  const auto w = theorem1_sequence<LL>(validate(3, 9), 21);
  CHECK(w.terms == k39Terms);
  CHECK(w.at(11) == 26);
  CHECK(w.at(18) == 343);
  CHECK(w.at(20) == 715);
  CHECK(w.at(21) == 1032);

  CHECK(theorem1_sequence<LL>(validate(2), 11).terms ==
        std::vector<LL>{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89});
  CHECK(theorem1_sequence<LL>(validate(2, 3), 10).terms ==
        std::vector<LL>{1, 1, 2, 2, 3, 4, 5, 7, 9, 12});
  CHECK(theorem1_sequence<LL>(validate(1, 2), 6).terms ==
        std::vector<LL>{1, 2, 3, 5, 8, 13});
  CHECK(theorem1_sequence<LL>(validate(1), 10).last() == 512);
  CHECK(theorem1_sequence<LL>(validate(5, 5), 12).terms == std::vector<LL>(12, 1));
  CHECK(theorem1_sequence<LL>(validate(1, 1), 8).terms == std::vector<LL>(8, 1));
}

TEST_CASE("sliding-window recurrence reproduces known sequences", "[recurrence]") {
  CHECK(oller_sequence<LL>(validate(3, 9), 21).terms == k39Terms);
  CHECK(oller_sequence<LL>(validate(2), 11).terms ==
        std::vector<LL>{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89});
  CHECK(oller_sequence<LL>(validate(2, 3), 10).terms ==
        std::vector<LL>{1, 1, 2, 2, 3, 4, 5, 7, 9, 12});
  CHECK(oller_sequence<LL>(validate(1, 1), 8).terms == std::vector<LL>(8, 1));
}

TEST_CASE("both recurrences match the simulator everywhere", "[recurrence]") {
  for (std::int64_t f = 1; f <= 5; ++f) {
    for (std::int64_t d = f; d <= 9; ++d) {  // d == 9 stands in for "never"
      const Params p = d == 9 ? validate(f) : validate(f, d);
      const std::uint64_t n = 60;
      CAPTURE(f, d);
      const auto simulated = run<BigInt>(p, n).terms;
      CHECK(theorem1_sequence<BigInt>(p, n).terms == simulated);
      CHECK(oller_sequence<BigInt>(p, n).terms == simulated);
    }
  }
}

TEST_CASE("terms around the death boundary obey the stated cases", "[recurrence]") {
  for (const Params& p : {validate(3, 9), validate(2, 5), validate(1, 4)}) {
    const std::uint64_t d = *p.death_age();
    const std::uint64_t f = p.fertile_age();
    const auto w = theorem1_sequence<BigInt>(p, 80);
    CHECK(w.at(d + 1) == w.at(d) + w.at(d + 1 - f) - 1);
    for (std::uint64_t i = d + 2; i <= 80; ++i)
      CHECK(w.at(i) == w.at(i - 1) + w.at(i - f) - w.at(i - d - 1));
  }
}

TEST_CASE("single-term evaluators agree with full sequences", "[recurrence]") {
  const Params p = validate(3, 9);
  const auto w = theorem1_sequence<LL>(p, 40);
  for (std::uint64_t i : {1ULL, 2ULL, 3ULL, 9ULL, 10ULL, 11ULL, 21ULL, 40ULL}) {
    CHECK(theorem1_term<LL>(p, i) == w.at(i));
    CHECK(oller_term<LL>(p, i) == w.at(i));
  }
  const Params immortal = validate(2);
  CHECK(theorem1_term<LL>(immortal, 50) ==
        theorem1_sequence<LL>(immortal, 50).last());
  CHECK(oller_term<LL>(immortal, 1) == 1);
}

TEST_CASE("modular evaluation reduces the exact values", "[recurrence]") {
  for (const Params& p : {validate(3, 9), validate(2)}) {
    const auto exact = theorem1_sequence<BigInt>(p, 60);
    for (std::uint64_t m : {2ULL, 97ULL, 1'000'000'007ULL}) {
      const auto rec_mod = theorem1_sequence_mod(p, 60, m);
      const auto win_mod = oller_sequence_mod(p, 60, m);
      for (std::uint64_t i = 1; i <= 60; ++i) {
        const auto expected = static_cast<std::uint64_t>(exact.at(i) % m);
        CAPTURE(p.fertile_age(), m, i);
        CHECK(rec_mod[i - 1] == expected);
        CHECK(win_mod[i - 1] == expected);
      }
      CHECK(theorem1_term_mod(p, 60, m) == rec_mod.back());
      CHECK(oller_term_mod(p, 60, m) == win_mod.back());
    }
  }
}

TEST_CASE("recurrences refuse degenerate parameters and index zero",
          "[recurrence]") {
  const Params bad = validate(4, 2);
  CHECK_THROWS_AS(theorem1_sequence<LL>(bad, 5), DegenerateParams);
  CHECK_THROWS_AS(oller_sequence<LL>(bad, 5), DegenerateParams);
  CHECK_THROWS_AS(theorem1_term<LL>(bad, 5), DegenerateParams);
  CHECK_THROWS_AS(oller_term<LL>(bad, 5), DegenerateParams);
  CHECK_THROWS_AS(theorem1_term_mod(bad, 5, 97), DegenerateParams);
  CHECK_THROWS_AS(oller_sequence_mod(bad, 5, 97), DegenerateParams);

  const Params good = validate(2, 3);
  CHECK_THROWS_AS(theorem1_sequence<LL>(good, 0), InvalidParam);
  CHECK_THROWS_AS(oller_term<LL>(good, 0), InvalidParam);
  CHECK_THROWS_AS(theorem1_term_mod(good, 0, 97), InvalidParam);
  CHECK_THROWS_AS(theorem1_term_mod(good, 5, 1), InvalidModulus);
}

TEST_CASE("term dispatcher routes methods and moduli", "[recurrence]") {
  const Params p = validate(3, 9);
  for (MethodId m : {MethodId::Simulation, MethodId::Theorem1, MethodId::Oller,
                     MethodId::FastEval}) {
    CAPTURE(to_string(m));
    const auto exact = term<BigInt>(p, 21, m);
    REQUIRE(std::holds_alternative<BigInt>(exact));
    CHECK(std::get<BigInt>(exact) == 1032);

    const auto reduced = term<BigInt>(p, 21, m, 1000);
    REQUIRE(std::holds_alternative<Residue>(reduced));
    CHECK(std::get<Residue>(reduced) == Residue{32, 1000});
  }

  const Params bad = validate(4, 2);
  CHECK(std::get<BigInt>(term<BigInt>(bad, 6, MethodId::Simulation)) == 0);
  CHECK_THROWS_AS(term<BigInt>(bad, 6, MethodId::Theorem1), DegenerateParams);
  CHECK_THROWS_AS(term<BigInt>(bad, 6, MethodId::FastEval), DegenerateParams);

  CHECK(to_string(MethodId::Simulation) == "sim");
  CHECK(to_string(MethodId::Theorem1) == "rec");
  CHECK(to_string(MethodId::Oller) == "oller");
  CHECK(to_string(MethodId::FastEval) == "fast");
}

TEST_CASE("cross-verify reports per-index agreement", "[recurrence]") {
  const auto report = cross_verify<BigInt>(validate(3, 9), 30);
  CHECK(report.max_index == 30);
  CHECK(report.methods ==
        std::vector<MethodId>{MethodId::Simulation, MethodId::Theorem1,
                              MethodId::Oller, MethodId::FastEval});
  CHECK(report.inapplicable.empty());
  REQUIRE(report.rows.size() == 30);
  CHECK(report.all_agree);
  const auto& row11 = report.rows[10];
  CHECK(row11.index == 11);
  REQUIRE(row11.values.size() == 4);
  for (const auto& v : row11.values) CHECK(v == 26);

  const auto degenerate = cross_verify<BigInt>(validate(4, 2), 8);
  CHECK(degenerate.methods == std::vector<MethodId>{MethodId::Simulation});
  CHECK(degenerate.inapplicable ==
        std::vector<MethodId>{MethodId::Theorem1, MethodId::Oller,
                              MethodId::FastEval});
  CHECK(degenerate.all_agree);
  CHECK(degenerate.rows.front().values == std::vector<BigInt>{1});
  CHECK(degenerate.rows.back().values == std::vector<BigInt>{0});

  CHECK(cross_verify<BigInt>(validate(2), 50).all_agree);
}
