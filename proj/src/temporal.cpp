#include "upo/temporal.hpp"

#include <array>
#include <cstdio>

namespace upo {

namespace {

const std::array<const char*, 7> kWeekdays = {"Sunday",   "Monday", "Tuesday", "Wednesday",
                                              "Thursday", "Friday", "Saturday"};

// c_encoding order: Sunday = 0.
std::optional<unsigned> weekday_index(const std::string& name) {
  for (unsigned i = 0; i < kWeekdays.size(); ++i) {
    if (name == kWeekdays[i]) return i;
  }
  return std::nullopt;
}

}  // namespace

std::optional<IndexicalMode> parse_mode(const std::string& text) {
  if (text == "this") return IndexicalMode::This;
  if (text == "next") return IndexicalMode::Next;
  return std::nullopt;
}

std::string to_string(IndexicalMode mode) {
  return mode == IndexicalMode::This ? "this" : "next";
}

bool is_weekday_name(const std::string& name) { return weekday_index(name).has_value(); }

Instant parse_instant(const std::string& literal) {
  // YYYY-MM-DDThh:mm:ss, nothing more and nothing less.
  if (literal.size() != 19) throw InvalidTimestampError(literal);
  static const char* pattern = "dddd-dd-ddTdd:dd:dd";
  for (size_t i = 0; i < 19; ++i) {
    char p = pattern[i];
    char c = literal[i];
    if (p == 'd' ? (c < '0' || c > '9') : c != p) throw InvalidTimestampError(literal);
  }
  int year = std::stoi(literal.substr(0, 4));
  unsigned month = std::stoi(literal.substr(5, 2));
  unsigned day = std::stoi(literal.substr(8, 2));
  int hour = std::stoi(literal.substr(11, 2));
  int minute = std::stoi(literal.substr(14, 2));
  int second = std::stoi(literal.substr(17, 2));
  std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                  std::chrono::day{day}};
  if (!ymd.ok() || hour > 23 || minute > 59 || second > 59) throw InvalidTimestampError(literal);
  return std::chrono::sys_days{ymd} + std::chrono::hours{hour} + std::chrono::minutes{minute} +
         std::chrono::seconds{second};
}

std::string format_instant(Instant instant) {
  std::chrono::sys_days day = std::chrono::floor<std::chrono::days>(instant);
  std::chrono::year_month_day ymd{day};
  auto time_of_day = std::chrono::duration_cast<std::chrono::seconds>(instant - day).count();
  char buffer[80];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02u-%02uT%02d:%02d:%02d",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<int>(time_of_day / 3600),
                static_cast<int>(time_of_day / 60 % 60), static_cast<int>(time_of_day % 60));
  return buffer;
}

std::string day_start_individual(Instant instant) {
  std::string stamp = format_instant(std::chrono::floor<std::chrono::days>(instant));
  return "t_" + stamp.substr(0, 10);
}

ResolvedInterval resolve_indexical(IndexicalMode mode, const TemporalContext& context) {
  std::optional<unsigned> target = weekday_index(context.cycle.day);
  if (!target) {
    throw std::invalid_argument("'" + context.cycle.day + "' is not a weekday name");
  }
  std::chrono::sys_days utterance_day =
      std::chrono::floor<std::chrono::days>(context.utterance);
  std::chrono::weekday current{utterance_day};
  // Days until the next occurrence of the cycle day; the utterance day
  // itself counts as "this".
  std::chrono::days ahead = std::chrono::weekday{target.value()} - current;
  std::chrono::sys_days first = utterance_day + ahead;
  if (mode == IndexicalMode::Next) first += std::chrono::days{7};
  ResolvedInterval interval;
  interval.first_instant = first;
  interval.last_instant = first + std::chrono::days{1};
  interval.designated_class = context.cycle.day;
  return interval;
}

ClassExpression emit_designation_expression(IndexicalMode mode, const TemporalContext& context,
                                            const Ontology& scope) {
  ResolvedInterval interval = resolve_indexical(mode, context);
  const Name& day_class = interval.designated_class;
  if (!scope.is_class(day_class)) {
    throw UnknownNameError(day_class, "'" + day_class + "' is not a declared class");
  }
  for (const char* property : {"expressed_on", "preceded_by", "has_first_instant"}) {
    if (!scope.is_property(property)) {
      throw UnknownNameError(property, std::string("'") + property +
                                           "' is not a declared property");
    }
  }
  std::string utterance_instant = day_start_individual(context.utterance);
  std::string first_instant = day_start_individual(interval.first_instant);
  std::vector<ClassExpression> members;
  members.push_back(ClassExpression::named(day_class));
  members.push_back(ClassExpression::value("expressed_on", utterance_instant));
  // Only the "next" interval is wholly preceded by the utterance; the
  // "this" interval may contain it.
  if (mode == IndexicalMode::Next) {
    members.push_back(ClassExpression::value("preceded_by", utterance_instant));
  }
  members.push_back(ClassExpression::value("has_first_instant", first_instant));
  return ClassExpression::intersection(std::move(members));
}

bool check_precedence(const ResolvedInterval& a, const ResolvedInterval& b) {
  return a.last_instant <= b.first_instant;
}

}  // namespace upo
