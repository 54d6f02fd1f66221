#include "hdakit_cli/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hdakit/errors.hpp"

namespace hdakit::cli {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return std::string(s);
}

bool parse_bool(const std::string& s, std::size_t line) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0" || s.empty()) return false;
  throw ParseError("line " + std::to_string(line) + ": expected a boolean, got '" + s + "'");
}

}  // namespace

std::vector<LogRecord> parse_log_csv(std::string_view text) {
  std::vector<LogRecord> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (out.empty() && line.rfind("event_id", 0) == 0) continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 6) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 6 fields, got " +
                       std::to_string(fields.size()));
    }
    if (fields[1].empty()) throw ParseError("line " + std::to_string(line_no) + ": empty label");
    LogRecord r;
    r.event_id = fields[0];
    r.label = fields[1];
    r.begin = Rational::parse_decimal(fields[2]);
    r.end = Rational::parse_decimal(fields[3]);
    r.open_left = parse_bool(fields[4], line_no);
    r.open_right = parse_bool(fields[5], line_no);
    out.push_back(std::move(r));
  }
  return out;
}

Ipomset ingest_log(const std::vector<LogRecord>& records, TieBreak rule) {
  IntervalRep rep;
  for (const auto& r : records) {
    if (r.begin > r.end) throw MalformedInterval("event '" + r.event_id + "' ends before it begins");
    rep.labels.push_back(r.label);
    rep.intervals.push_back({r.begin, r.end, r.open_left, r.open_right});
  }
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  if (rule == TieBreak::begin) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return records[a].begin < records[b].begin;
    });
  }
  rep.rank.resize(records.size());
  for (std::size_t k = 0; k < order.size(); ++k) rep.rank[order[k]] = k;
  return from_intervals(rep);
}

}  // namespace hdakit::cli
