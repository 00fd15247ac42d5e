#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "adfg/event_log.hpp"

namespace adfg {

/// Column and format settings for delimiter-separated event data.
struct LogFormat {
    char delimiter = ',';
    std::string case_column = "case_id";
    std::string timestamp_column = "timestamp";
    std::string activity_column = "activity";
    /// std::get_time format; "%d.%m.%Y" for dotted dates,
    /// "%Y-%m-%d %H:%M:%S" for full datetimes, and so on.
    std::string timestamp_format = "%Y-%m-%d";
};

/// Parses delimiter-separated text with a header row into an event log.
/// Records are grouped by case id; within a case, events are ordered by
/// ascending timestamp, ties keeping input row order. Traces appear in
/// order of first occurrence of their case id.
EventLog parse_log(std::istream& in, const LogFormat& format = {});
EventLog parse_log(const std::string& text, const LogFormat& format = {});
EventLog parse_log_file(const std::filesystem::path& path, const LogFormat& format = {});

/// Writes a log back to delimiter-separated text (inverse of parse_log
/// for the same format). Extra attribute columns reappear after the
/// three configured columns, in first-seen order.
std::string serialize_log(const EventLog& log, const LogFormat& format = {});
void save_log(const EventLog& log, const std::filesystem::path& path, const LogFormat& format = {});

}  // namespace adfg
