#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "seqmine/error.hpp"
#include "seqmine/log.hpp"
#include "seqmine/time.hpp"

namespace seqmine {

/// Which CSV columns hold the case id, activity and timestamp.
struct CsvMapping {
    std::string case_column = "case_id";
    std::string activity_column = "activity";
    std::string timestamp_column = "timestamp";
    std::string timestamp_format = "rfc3339";
    char delimiter = ',';

    void validate() const {
        if (case_column.empty() || activity_column.empty() || timestamp_column.empty())
            throw ConfigError("CSV column names must be non-empty");
        if (case_column == activity_column || case_column == timestamp_column || activity_column == timestamp_column)
            throw ConfigError("CSV case, activity and timestamp columns must be distinct");
        if (delimiter == '"' || delimiter == '\n' || delimiter == '\r')
            throw ConfigError("invalid CSV delimiter");
        if (timestamp_format.empty()) throw ConfigError("empty timestamp format");
    }
};

struct ParseIssue {
    std::string locator;
    std::string message;
};

/// Outcome of a lenient parse. events_parsed + rows_rejected equals the data rows seen.
struct ParseReport {
    static constexpr std::size_t max_listed_errors = 20;

    std::size_t events_parsed = 0;
    std::size_t rows_rejected = 0;
    std::vector<ParseIssue> first_errors;

    void reject(std::string locator, std::string message) {
        ++rows_rejected;
        if (first_errors.size() < max_listed_errors) first_errors.push_back({std::move(locator), std::move(message)});
    }
};

struct ParseResult {
    EventLog log;
    ParseReport report;
};

namespace detail {

struct CsvRecord {
    std::size_t line = 0;  // 1-based line where the record starts
    std::vector<std::string> fields;

    bool blank() const { return fields.size() == 1 && fields.front().empty(); }
};

// RFC 4180 records: quoted fields may hold delimiters, doubled quotes and line breaks.
inline std::vector<CsvRecord> read_csv_records(std::string_view text, char delim) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::vector<CsvRecord> records;
    CsvRecord current{1, {}};
    std::string field;
    std::size_t line = 1;
    bool in_quotes = false;
    bool any = false;

    auto end_record = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        records.push_back(std::move(current));
        current = CsvRecord{line, {}};
        any = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        any = true;
        if (c == '"' && field.empty()) {
            in_quotes = true;
        } else if (c == delim) {
            current.fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            continue;
        } else if (c == '\n') {
            ++line;
            end_record();
        } else {
            field.push_back(c);
        }
    }
    if (in_quotes) throw ParseError("line " + std::to_string(current.line), "unterminated quoted field");
    if (any || !current.fields.empty()) end_record();
    return records;
}

inline std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw ConfigError("column '" + name + "' not found in CSV header");
}

inline void append_csv_field(std::string& out, const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) {
        out += value;
        return;
    }
    out.push_back('"');
    for (char c : value) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
}

}  // namespace detail

/// One event per data row. With `strict`, the first bad row throws ParseError; otherwise bad rows
/// are skipped and reported. Unmapped columns become event attributes.
inline ParseResult parse_csv(std::string_view text, const CsvMapping& mapping = {}, bool strict = false) {
    mapping.validate();
    auto records = detail::read_csv_records(text, mapping.delimiter);
    if (records.empty() || records.front().blank()) throw ConfigError("CSV input has no header row");

    const auto& header = records.front().fields;
    std::size_t case_col = detail::find_column(header, mapping.case_column);
    std::size_t activity_col = detail::find_column(header, mapping.activity_column);
    std::size_t time_col = detail::find_column(header, mapping.timestamp_column);

    ParseResult result;
    std::vector<Event> events;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.blank()) continue;

        std::string locator = "line " + std::to_string(rec.line);
        auto fail = [&](const std::string& message) {
            if (strict) throw ParseError(locator, message);
            result.report.reject(locator, message);
        };

        if (rec.fields.size() <= std::max({case_col, activity_col, time_col})) {
            fail("row has " + std::to_string(rec.fields.size()) + " fields, header has " + std::to_string(header.size()));
            continue;
        }
        const std::string& case_id = rec.fields[case_col];
        const std::string& activity = rec.fields[activity_col];
        if (case_id.empty()) {
            fail("empty case id");
            continue;
        }
        if (activity.empty()) {
            fail("empty activity");
            continue;
        }
        auto ts = parse_timestamp(rec.fields[time_col], mapping.timestamp_format);
        if (!ts) {
            fail("unparseable timestamp '" + rec.fields[time_col] + "'");
            continue;
        }

        Event e{case_id, activity, *ts, {}};
        for (std::size_t c = 0; c < rec.fields.size() && c < header.size(); ++c)
            if (c != case_col && c != activity_col && c != time_col) e.attributes.emplace(header[c], rec.fields[c]);
        events.push_back(std::move(e));
        ++result.report.events_parsed;
    }
    result.log = build_log(std::move(events));
    return result;
}

/// `case_id,activity,timestamp` with RFC 3339 UTC timestamps, traces in log order.
inline std::string write_csv(const EventLog& log) {
    std::string out = "case_id,activity,timestamp\n";
    for (const auto& t : log.traces()) {
        for (const auto& e : t.events) {
            detail::append_csv_field(out, e.case_id);
            out.push_back(',');
            detail::append_csv_field(out, e.activity);
            out.push_back(',');
            out += format_rfc3339(e.timestamp);
            out.push_back('\n');
        }
    }
    return out;
}

}  // namespace seqmine
