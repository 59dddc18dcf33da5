#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <chrono>
#include <stdexcept>

#include "oracles.hpp"
#include "testutil.hpp"
#include "upo/errors.hpp"
#include "upo/grounding.hpp"
#include "upo/parser.hpp"
#include "upo/prelude.hpp"
#include "upo/temporal.hpp"

using namespace upo;
namespace t = upo::testing;

namespace {

Instant instant_at_day(long days_since_epoch, long second_of_day) {
  return Instant{std::chrono::seconds{days_since_epoch * 86400 + second_of_day}};
}

long day_of(Instant i) {
  return std::chrono::floor<std::chrono::days>(i).time_since_epoch().count();
}

const std::array<const char*, 7> kWeekdays = {"Sunday",   "Monday", "Tuesday", "Wednesday",
                                              "Thursday", "Friday", "Saturday"};

}  // namespace

TEST_CASE("instant literals: strict format and real calendar dates") {
  CHECK(format_instant(parse_instant("2025-06-06T00:00:00")) == "2025-06-06T00:00:00");
  CHECK(format_instant(parse_instant("1970-01-01T00:00:00")) == "1970-01-01T00:00:00");
  CHECK(parse_instant("1970-01-01T00:00:00") == Instant{});
  CHECK(format_instant(parse_instant("2024-02-29T23:59:59")) == "2024-02-29T23:59:59");
  CHECK(format_instant(parse_instant("1899-12-31T06:07:08")) == "1899-12-31T06:07:08");

  // no month 13: the commonly mistyped literal for June 13th
  CHECK_THROWS_AS(parse_instant("2025-13-07T00:00:00"), InvalidTimestampError);
  try {
    parse_instant("2025-13-07T00:00:00");
  } catch (const InvalidTimestampError& e) {
    CHECK(std::string(e.what()) == "invalid timestamp '2025-13-07T00:00:00'");
  }

  CHECK_THROWS_AS(parse_instant("2025-02-29T00:00:00"), InvalidTimestampError);  // not a leap year
  CHECK_THROWS_AS(parse_instant("2025-06-31T00:00:00"), InvalidTimestampError);
  CHECK_THROWS_AS(parse_instant("2025-00-06T00:00:00"), InvalidTimestampError);
  CHECK_THROWS_AS(parse_instant("2025-06-00T00:00:00"), InvalidTimestampError);
  CHECK_THROWS_AS(parse_instant("2025-06-06T24:00:00"), InvalidTimestampError);
  CHECK_THROWS_AS(parse_instant("2025-06-06T00:60:00"), InvalidTimestampError);
  CHECK_THROWS_AS(parse_instant("2025-06-06T00:00:60"), InvalidTimestampError);
  CHECK_THROWS_AS(parse_instant("2025-06-06 00:00:00"), InvalidTimestampError);
  CHECK_THROWS_AS(parse_instant("2025-06-06T00:00"), InvalidTimestampError);
  CHECK_THROWS_AS(parse_instant("2025-06-06T00:00:00Z"), InvalidTimestampError);
  CHECK_THROWS_AS(parse_instant("25-06-06T00:00:00"), InvalidTimestampError);
  CHECK_THROWS_AS(parse_instant(""), InvalidTimestampError);
}

TEST_CASE("round trip across random instants") {
  t::Rng rng(8128);
  long lo = t::oracle_days_from_civil(1800, 1, 1);
  long hi = t::oracle_days_from_civil(2200, 1, 1);
  for (int i = 0; i < 500; ++i) {
    long day = t::pick(rng, 0, static_cast<int>(hi - lo)) + lo;
    long sec = t::pick(rng, 0, 86399);
    Instant instant = instant_at_day(day, sec);
    std::string text = format_instant(instant);
    CAPTURE(text);
    CHECK(parse_instant(text) == instant);
    // the formatted date agrees with the independent civil-date conversion
    t::CivilDate civil = t::oracle_civil_from_days(day);
    char expect[40];
    std::snprintf(expect, sizeof(expect), "%04d-%02d-%02d", civil.year, civil.month, civil.day);
    CHECK(text.substr(0, 10) == expect);
  }
}

TEST_CASE("day-start individual names") {
  CHECK(day_start_individual(parse_instant("2025-06-06T00:00:00")) == "t_2025-06-06");
  CHECK(day_start_individual(parse_instant("2025-06-06T23:59:59")) == "t_2025-06-06");
  CHECK(day_start_individual(parse_instant("1999-01-02T12:00:00")) == "t_1999-01-02");
}

TEST_CASE("modes and weekday names") {
  CHECK(parse_mode("this") == std::optional<IndexicalMode>(IndexicalMode::This));
  CHECK(parse_mode("next") == std::optional<IndexicalMode>(IndexicalMode::Next));
  CHECK_FALSE(parse_mode("soon").has_value());
  CHECK(to_string(IndexicalMode::This) == "this");
  CHECK(to_string(IndexicalMode::Next) == "next");
  for (const char* day : kWeekdays) CHECK(is_weekday_name(day));
  CHECK_FALSE(is_weekday_name("friday"));
  CHECK_FALSE(is_weekday_name("Fryday"));
}

TEST_CASE("the canonical example: next Friday spoken on Friday June 6th 2025") {
  TemporalContext context{parse_instant("2025-06-06T00:00:00"), CycleSpec{"Friday"}};

  ResolvedInterval next = resolve_indexical(IndexicalMode::Next, context);
  CHECK(format_instant(next.first_instant) == "2025-06-13T00:00:00");
  CHECK(format_instant(next.last_instant) == "2025-06-14T00:00:00");
  CHECK(next.designated_class == "Friday");

  // the utterance day itself is a Friday, so "this Friday" is that very day
  ResolvedInterval this_one = resolve_indexical(IndexicalMode::This, context);
  CHECK(format_instant(this_one.first_instant) == "2025-06-06T00:00:00");
  CHECK(format_instant(this_one.last_instant) == "2025-06-07T00:00:00");
  CHECK(check_precedence(this_one, next));
  CHECK_FALSE(check_precedence(next, this_one));

  // even late in the day, "this Friday" stays on the utterance day
  TemporalContext late{parse_instant("2025-06-06T23:59:59"), CycleSpec{"Friday"}};
  CHECK(format_instant(resolve_indexical(IndexicalMode::This, late).first_instant) ==
        "2025-06-06T00:00:00");

  TemporalContext saturday{parse_instant("2025-06-06T12:00:00"), CycleSpec{"Saturday"}};
  CHECK(format_instant(resolve_indexical(IndexicalMode::This, saturday).first_instant) ==
        "2025-06-07T00:00:00");

  CHECK_THROWS_AS(resolve_indexical(IndexicalMode::This,
                                    TemporalContext{Instant{}, CycleSpec{"Someday"}}),
                  std::invalid_argument);
}

TEST_CASE("resolution agrees with the day-scan oracle on random contexts") {
  t::Rng rng(271828);
  long lo = t::oracle_days_from_civil(1800, 1, 1);
  long hi = t::oracle_days_from_civil(2200, 1, 1);
  for (int i = 0; i < 1000; ++i) {
    long day = t::pick(rng, 0, static_cast<int>(hi - lo)) + lo;
    long sec = t::pick(rng, 0, 86399);
    int target = t::pick(rng, 0, 6);
    TemporalContext context{instant_at_day(day, sec), CycleSpec{kWeekdays[target]}};
    CAPTURE(format_instant(context.utterance));
    CAPTURE(kWeekdays[target]);

    ResolvedInterval this_one = resolve_indexical(IndexicalMode::This, context);
    ResolvedInterval next = resolve_indexical(IndexicalMode::Next, context);

    CHECK(day_of(this_one.first_instant) == t::oracle_resolve_day(false, day, target));
    CHECK(day_of(next.first_instant) == t::oracle_resolve_day(true, day, target));

    // exactly one cycle apart, whole-day intervals, never behind the utterance
    CHECK(next.first_instant - this_one.first_instant == std::chrono::days{7});
    CHECK(this_one.last_instant - this_one.first_instant == std::chrono::days{1});
    CHECK(day_of(this_one.first_instant) >= day);
    CHECK(day_of(this_one.first_instant) <= day + 6);
    CHECK(check_precedence(this_one, next));

    // the resolved day really is the named weekday
    t::CivilDate civil = t::oracle_civil_from_days(day_of(this_one.first_instant));
    CHECK(t::oracle_weekday(civil.year, civil.month, civil.day) == target);
  }
}

TEST_CASE("precedence allows a shared boundary instant") {
  TemporalContext context{parse_instant("2025-06-05T08:00:00"), CycleSpec{"Thursday"}};
  ResolvedInterval a = resolve_indexical(IndexicalMode::This, context);
  ResolvedInterval b = a;
  b.first_instant = a.last_instant;
  b.last_instant = b.first_instant + std::chrono::days{1};
  CHECK(check_precedence(a, b));
  CHECK_FALSE(check_precedence(b, a));
  CHECK_FALSE(check_precedence(a, a));  // a day does not precede itself
}

TEST_CASE("designation expressions") {
  ParseResult r = parse(t::read_file(t::fixture_path("friday.upo")), prelude_ontology());
  REQUIRE(r.ok());
  const Ontology& scope = *r.ontology;
  TemporalContext context{parse_instant("2025-06-06T00:00:00"), CycleSpec{"Friday"}};

  ClassExpression next = emit_designation_expression(IndexicalMode::Next, context, scope);
  CHECK(serialize_expression(next) ==
        "Friday and expressed_on value t_2025-06-06 and preceded_by value t_2025-06-06 and "
        "has_first_instant value t_2025-06-13");

  // "this" has no preceded_by conjunct: the interval may contain the utterance
  ClassExpression this_one = emit_designation_expression(IndexicalMode::This, context, scope);
  CHECK(serialize_expression(this_one) ==
        "Friday and expressed_on value t_2025-06-06 and has_first_instant value t_2025-06-06");

  // matches the shipped fixture's hand-written targets
  std::vector<AboutnessAssertion> declared = scope.aboutness_of("NextFridayExpr");
  REQUIRE(declared.size() == 1);
  CHECK(declared[0].target == next);
  std::vector<AboutnessAssertion> declared_this = scope.aboutness_of("ThisFridayExpr");
  REQUIRE(declared_this.size() == 1);
  CHECK(declared_this[0].target == this_one);

  SUBCASE("scope must declare the day class and the three properties") {
    Ontology bare;
    CHECK_THROWS_AS(emit_designation_expression(IndexicalMode::Next, context, bare),
                    UnknownNameError);
    Ontology missing_props;
    missing_props.declare_class("Friday");
    CHECK_THROWS_AS(emit_designation_expression(IndexicalMode::Next, context, missing_props),
                    UnknownNameError);
  }
}

TEST_CASE("the designation target grounds once its instants are declared") {
  ParseResult r = parse(t::read_file(t::fixture_path("friday.upo")), prelude_ontology());
  REQUIRE(r.ok());
  GroundingReport next = ground(*r.ontology, "NextFridayExpr");
  CHECK(next.overall == GroundingStatus::Grounded);
  CHECK_FALSE(next.necessarily_empty);
  GroundingReport this_one = ground(*r.ontology, "ThisFridayExpr");
  CHECK(this_one.overall == GroundingStatus::Grounded);
}
