#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hdakit/intervals.hpp"
#include "hdakit/ipomset.hpp"

namespace hdakit::cli {

/// One row of an event log. open_left: the event was already running when
/// the log starts (source interface); open_right: still running at the end.
struct LogRecord {
  std::string event_id;
  Label label;
  Rational begin;
  Rational end;
  bool open_left = false;
  bool open_right = false;
};

/// How concurrent events are ordered.
enum class TieBreak {
  begin,  // ascending begin time, then input order
  input,  // input order
};

/// CSV with columns event_id,label,begin,end,open_left,open_right. A first
/// line starting with "event_id" is a header. Booleans: true/false/1/0.
/// Throws ParseError, MalformedInterval.
std::vector<LogRecord> parse_log_csv(std::string_view text);

/// Throws MalformedInterval (begin > end), AxiomViolation.
Ipomset ingest_log(const std::vector<LogRecord>& records, TieBreak rule = TieBreak::begin);

}  // namespace hdakit::cli
