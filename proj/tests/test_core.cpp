#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "rabbits/core.hpp"

using namespace rabbits;

TEST_CASE("validate accepts in-range parameters", "[core]") {
  const Params p = validate(3, 9);
  CHECK(p.fertile_age() == 3);
  REQUIRE(p.death_finite());
  CHECK(*p.death_age() == 9);

  const Params q = validate(2, std::nullopt);
  CHECK(q.fertile_age() == 2);
  CHECK_FALSE(q.death_finite());
  CHECK(validate(2) == q);

  // degenerate input is valid; only some methods refuse it later
  const Params r = validate(4, 2);
  CHECK(*r.death_age() == 2);
}

TEST_CASE("validate rejects out-of-range input", "[core]") {
  CHECK_THROWS_AS(validate(0, 5), InvalidParam);
  CHECK_THROWS_AS(validate(-3), InvalidParam);
  CHECK_THROWS_AS(validate(2, 0), InvalidParam);
  CHECK_THROWS_AS(validate(2, -1), InvalidParam);
  const auto too_big = static_cast<std::int64_t>(1) << 40;
  CHECK_THROWS_AS(validate(too_big), InvalidParam);
  CHECK_THROWS_AS(validate(2, too_big), InvalidParam);
  CHECK_NOTHROW(validate(1, 1));
}

TEST_CASE("params compare by value", "[core]") {
  CHECK(validate(3, 9) == validate(3, 9));
  CHECK_FALSE(validate(3, 9) == validate(3, 10));
  CHECK_FALSE(validate(3, 9) == validate(3, std::nullopt));
  CHECK(validate(5) == validate(5, std::nullopt));
}

TEST_CASE("classify partitions every parameter choice", "[core]") {
  CHECK(classify(validate(4, 2)) == ParamClass::Degenerate);
  CHECK(classify(validate(2, 1)) == ParamClass::Degenerate);
  CHECK(classify(validate(3, 3)) == ParamClass::Borderline);
  CHECK(classify(validate(1, 1)) == ParamClass::Borderline);
  CHECK(classify(validate(5, 5)) == ParamClass::Borderline);
  CHECK(classify(validate(3, 9)) == ParamClass::Standard);
  CHECK(classify(validate(1, 2)) == ParamClass::Standard);
  CHECK(classify(validate(2)) == ParamClass::Standard);
  CHECK(classify(validate(1)) == ParamClass::Standard);

  CHECK(to_string(ParamClass::Degenerate) == "degenerate");
  CHECK(to_string(ParamClass::Borderline) == "borderline");
  CHECK(to_string(ParamClass::Standard) == "standard");
}

TEST_CASE("cohort state exposes ages one-based", "[core]") {
  CohortState<long long> c;
  c.generation = 5;
  c.counts = {3, 2, 1};
  CHECK(c.max_age() == 3);
  CHECK(c.at_age(1) == 3);
  CHECK(c.at_age(3) == 1);
  CHECK(c.total() == 6);
  CHECK_THROWS_AS(c.at_age(4), std::out_of_range);
}

TEST_CASE("sequence window indexes by absolute position", "[core]") {
  SequenceWindow<long long> w;
  w.start = 1;
  w.terms = {1, 1, 2};
  CHECK(w.first_index() == 1);
  CHECK(w.last_index() == 3);
  CHECK(w.covers(3));
  CHECK_FALSE(w.covers(0));
  CHECK_FALSE(w.covers(4));
  CHECK(w.at(3) == 2);
  CHECK(w.last() == 2);
  CHECK_THROWS_AS(w.at(4), std::out_of_range);

  SequenceWindow<long long> shifted;
  shifted.start = 10;
  shifted.terms = {7, 8};
  CHECK(shifted.at(10) == 7);
  CHECK(shifted.at(11) == 8);
  CHECK_THROWS_AS(shifted.at(9), std::out_of_range);
}

TEST_CASE("term values carry either exact numbers or residues", "[core]") {
  TermValue<long long> exact = 715LL;
  REQUIRE(std::holds_alternative<long long>(exact));
  CHECK(std::get<long long>(exact) == 715);

  TermValue<long long> reduced = Residue{32, 1000};
  REQUIRE(std::holds_alternative<Residue>(reduced));
  CHECK(std::get<Residue>(reduced) == Residue{32, 1000});
  CHECK_FALSE(Residue{32, 1000} == Residue{32, 999});
}
