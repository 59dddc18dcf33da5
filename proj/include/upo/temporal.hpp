#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "upo/model.hpp"

namespace upo {

// All instants are UTC on the proleptic Gregorian calendar.
using Instant = std::chrono::sys_seconds;

enum class IndexicalMode { This, Next };

std::optional<IndexicalMode> parse_mode(const std::string& text);  // "this" | "next"
std::string to_string(IndexicalMode mode);

// A weekly day-of-week cycle; `day` is a capitalized English weekday name
// doubling as the designated interval class ("Friday"). Each cycle interval
// is exactly one day.
struct CycleSpec {
  std::string day;
};

bool is_weekday_name(const std::string& name);

struct TemporalContext {
  Instant utterance{};
  CycleSpec cycle;
};

// A concrete day interval: [first_instant, last_instant), last_instant
// being the first instant of the following day.
struct ResolvedInterval {
  Instant first_instant{};
  Instant last_instant{};
  Name designated_class;
};

// Strict "YYYY-MM-DDThh:mm:ss"; the date must exist on the calendar.
// Throws InvalidTimestampError.
Instant parse_instant(const std::string& literal);
std::string format_instant(Instant instant);

// Individual name for the first instant of the day containing `instant`,
// e.g. "t_2025-06-13".
std::string day_start_individual(Instant instant);

// This: the first cycle day on or after the utterance day (the utterance
// day itself counts). Next: exactly one cycle later. Pure in everything but
// the calendar date of the utterance.
ResolvedInterval resolve_indexical(IndexicalMode mode, const TemporalContext& context);

// The class expression a resolved indexical designates:
//   <Day> and expressed_on value t_<utterance day>
//         and preceded_by value t_<utterance day>   (Next mode only)
//         and has_first_instant value t_<resolved day>
// The "this" interval may contain the utterance, so only Next carries the
// preceded_by conjunct. Requires the day class and the three properties to
// be declared in `scope` (UnknownNameError).
ClassExpression emit_designation_expression(IndexicalMode mode, const TemporalContext& context,
                                            const Ontology& scope);

// True iff `a` is wholly earlier than `b` allowing a shared boundary
// instant: a.last_instant <= b.first_instant.
bool check_precedence(const ResolvedInterval& a, const ResolvedInterval& b);

}  // namespace upo
