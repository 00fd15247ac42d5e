#include "adfg/csv.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

#include "adfg/errors.hpp"

namespace adfg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

/// Reads one delimiter-separated record, honouring double-quoted fields
/// (embedded delimiters, doubled quotes, embedded newlines). Returns
/// false at end of input. `line` advances past every consumed line.
bool read_record(std::istream& in, char delim, std::vector<std::string>& fields,
                 std::size_t& line) {
    fields.clear();
    int c = in.get();
    if (c == EOF) return false;
    ++line;

    std::string field;
    bool quoted = false;
    bool any = false;
    while (true) {
        if (c == EOF) break;
        char ch = static_cast<char>(c);
        any = true;
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n') ++line;
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            quoted = true;
        } else if (ch == delim) {
            fields.push_back(field);
            field.clear();
        } else if (ch == '\r' && in.peek() == '\n') {
            in.get();
            break;
        } else if (ch == '\n') {
            break;
        } else {
            field.push_back(ch);
        }
        c = in.get();
    }
    if (!any) return false;
    fields.push_back(field);
    return true;
}

std::chrono::sys_seconds parse_timestamp(const std::string& raw, const std::string& format,
                                         std::size_t line) {
    std::tm tm{};
    tm.tm_mday = 1;  // day defaults to 1 for date-less formats
    std::istringstream ss(trim(raw));
    ss >> std::get_time(&tm, format.c_str());
    if (ss.fail()) {
        throw ParseError("line " + std::to_string(line) + ": cannot parse timestamp '" + raw +
                             "' with format '" + format + "'",
                         line);
    }
    // Reject trailing garbage; mixed granularities would sort wrongly.
    char rest;
    if (ss >> rest) {
        throw ParseError("line " + std::to_string(line) + ": trailing characters in timestamp '" +
                             raw + "' for format '" + format + "'",
                         line);
    }
    using namespace std::chrono;
    year_month_day ymd{year{tm.tm_year + 1900}, month{static_cast<unsigned>(tm.tm_mon + 1)},
                       day{static_cast<unsigned>(tm.tm_mday)}};
    if (!ymd.ok()) {
        throw ParseError("line " + std::to_string(line) + ": invalid calendar date in '" + raw + "'",
                         line);
    }
    return sys_days{ymd} + hours{tm.tm_hour} + minutes{tm.tm_min} + seconds{tm.tm_sec};
}

void validate_activity(const std::string& activity, std::size_t line) {
    if (activity.empty())
        throw ParseError("line " + std::to_string(line) + ": empty activity name", line);
    if (activity.find('\n') != std::string::npos || activity.find('\r') != std::string::npos)
        throw ParseError("line " + std::to_string(line) + ": activity name contains a line break",
                         line);
}

std::string csv_escape(const std::string& value, char delim) {
    bool needs_quotes = value.find(delim) != std::string::npos ||
                        value.find('"') != std::string::npos ||
                        value.find('\n') != std::string::npos ||
                        value.find('\r') != std::string::npos;
    if (!needs_quotes) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace

EventLog parse_log(std::istream& in, const LogFormat& format) {
    std::size_t line = 0;
    std::vector<std::string> fields;
    if (!read_record(in, format.delimiter, fields, line))
        throw ParseError("empty input: no header row");

    std::map<std::string, std::size_t> columns;
    for (std::size_t i = 0; i < fields.size(); ++i) columns.emplace(trim(fields[i]), i);

    auto require = [&](const std::string& name) {
        auto it = columns.find(name);
        if (it == columns.end())
            throw ParseError("missing required column '" + name + "' in header", 1);
        return it->second;
    };
    const std::size_t case_col = require(format.case_column);
    const std::size_t time_col = require(format.timestamp_column);
    const std::size_t act_col = require(format.activity_column);

    std::vector<std::pair<std::string, std::size_t>> extra_cols;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != case_col && i != time_col && i != act_col)
            extra_cols.emplace_back(trim(fields[i]), i);
    }

    EventLog log;
    std::map<std::string, std::size_t> trace_index;  // case id -> position in log
    bool any_row = false;
    while (read_record(in, format.delimiter, fields, line)) {
        if (fields.size() == 1 && trim(fields[0]).empty()) continue;  // blank line
        any_row = true;
        const std::size_t needed = std::max({case_col, time_col, act_col}) + 1;
        if (fields.size() < needed)
            throw ParseError("line " + std::to_string(line) + ": expected at least " +
                                 std::to_string(needed) + " fields, got " +
                                 std::to_string(fields.size()),
                             line);
        Event event;
        event.raw_timestamp = trim(fields[time_col]);
        event.timestamp = parse_timestamp(event.raw_timestamp, format.timestamp_format, line);
        event.activity = trim(fields[act_col]);
        validate_activity(event.activity, line);
        for (const auto& [name, idx] : extra_cols)
            event.attributes.emplace_back(name, idx < fields.size() ? trim(fields[idx]) : "");

        const std::string case_id = trim(fields[case_col]);
        auto [it, inserted] = trace_index.emplace(case_id, log.traces.size());
        if (inserted) {
            Trace t;
            t.case_id = case_id;
            log.traces.push_back(std::move(t));
        }
        log.traces[it->second].events.push_back(std::move(event));
    }
    if (!any_row) throw ParseError("empty log: input has a header but no event rows");

    // Within a case, ascending timestamp; equal timestamps keep input order.
    for (auto& trace : log.traces) {
        std::stable_sort(trace.events.begin(), trace.events.end(),
                         [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
    }
    return log;
}

EventLog parse_log(const std::string& text, const LogFormat& format) {
    std::istringstream in(text);
    return parse_log(in, format);
}

EventLog parse_log_file(const std::filesystem::path& path, const LogFormat& format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "' for reading");
    return parse_log(in, format);
}

std::string serialize_log(const EventLog& log, const LogFormat& format) {
    // Union of attribute columns, in first-seen order.
    std::vector<std::string> extra;
    for (const auto& t : log.traces)
        for (const auto& e : t.events)
            for (const auto& [name, value] : e.attributes)
                if (std::find(extra.begin(), extra.end(), name) == extra.end())
                    extra.push_back(name);

    const char d = format.delimiter;
    std::ostringstream out;
    out << csv_escape(format.case_column, d) << d << csv_escape(format.timestamp_column, d) << d
        << csv_escape(format.activity_column, d);
    for (const auto& name : extra) out << d << csv_escape(name, d);
    out << "\n";

    for (const auto& t : log.traces) {
        for (const auto& e : t.events) {
            std::string ts = e.raw_timestamp;
            if (ts.empty()) {
                // Hand-built event without source text; format the instant.
                std::time_t secs = std::chrono::system_clock::to_time_t(
                    std::chrono::time_point_cast<std::chrono::seconds>(e.timestamp));
                std::tm tm{};
                gmtime_r(&secs, &tm);
                std::ostringstream tss;
                tss << std::put_time(&tm, format.timestamp_format.c_str());
                ts = tss.str();
            }
            out << csv_escape(t.case_id, d) << d << csv_escape(ts, d) << d
                << csv_escape(e.activity, d);
            for (const auto& name : extra) {
                std::string value;
                for (const auto& [n, v] : e.attributes)
                    if (n == name) { value = v; break; }
                out << d << csv_escape(value, d);
            }
            out << "\n";
        }
    }
    return out.str();
}

void save_log(const EventLog& log, const std::filesystem::path& path, const LogFormat& format) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path.string() + "' for writing");
    out << serialize_log(log, format);
}

}  // namespace adfg
