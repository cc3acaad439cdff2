#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "seqmine/csv.hpp"
#include "seqmine/error.hpp"
#include "seqmine/log.hpp"
#include "seqmine/time.hpp"

namespace seqmine {

namespace detail {

inline std::optional<std::string> child_text(const boost::property_tree::ptree& node, const char* name) {
    auto child = node.get_child_optional(name);
    if (!child) return std::nullopt;
    std::string value = child->get_value<std::string>();
    auto first = value.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return std::string{};
    auto last = value.find_last_not_of(" \t\r\n");
    return value.substr(first, last - first + 1);
}

}  // namespace detail

/// Reads the MXML subset WorkflowLog / Process / ProcessInstance / AuditTrailEntry.
/// Entries whose EventType is outside `lifecycle_filter` are skipped silently; an entry without
/// EventType counts as `complete`. Bad entries are reported, or thrown with `strict`.
inline ParseResult parse_mxml(std::string_view text, const std::set<std::string>& lifecycle_filter = {"complete"},
                              bool strict = false) {
    namespace pt = boost::property_tree;
    pt::ptree doc;
    try {
        std::istringstream in{std::string(text)};
        pt::read_xml(in, doc, pt::xml_parser::trim_whitespace);
    } catch (const pt::xml_parser_error& e) {
        throw ParseError("line " + std::to_string(e.line()), "malformed XML: " + e.message());
    }

    auto root = doc.get_child_optional("WorkflowLog");
    if (!root) throw ParseError("", "missing WorkflowLog root element");

    ParseResult result;
    std::vector<Event> events;
    std::size_t instance_no = 0;

    for (const auto& [process_tag, process] : *root) {
        if (process_tag != "Process") continue;
        for (const auto& [instance_tag, instance] : process) {
            if (instance_tag != "ProcessInstance") continue;
            ++instance_no;
            auto case_id = instance.get_optional<std::string>("<xmlattr>.id");
            std::string instance_loc = case_id && !case_id->empty()
                                           ? "ProcessInstance '" + *case_id + "'"
                                           : "ProcessInstance #" + std::to_string(instance_no);

            std::size_t entry_no = 0;
            for (const auto& [entry_tag, entry] : instance) {
                if (entry_tag != "AuditTrailEntry") continue;
                ++entry_no;
                std::string locator = instance_loc + " / AuditTrailEntry #" + std::to_string(entry_no);

                std::string lifecycle = detail::child_text(entry, "EventType").value_or("complete");
                if (!lifecycle_filter.count(lifecycle)) continue;

                auto fail = [&](const std::string& message) {
                    if (strict) throw ParseError(locator, message);
                    result.report.reject(locator, message);
                };
                if (!case_id || case_id->empty()) {
                    fail("ProcessInstance has no id attribute");
                    continue;
                }
                auto activity = detail::child_text(entry, "WorkflowModelElement");
                if (!activity || activity->empty()) {
                    fail("missing WorkflowModelElement");
                    continue;
                }
                auto stamp = detail::child_text(entry, "Timestamp");
                if (!stamp || stamp->empty()) {
                    fail("missing Timestamp");
                    continue;
                }
                auto ts = parse_rfc3339(*stamp);
                if (!ts) {
                    fail("unparseable timestamp '" + *stamp + "'");
                    continue;
                }
                Event e{*case_id, *activity, *ts, {}};
                if (lifecycle != "complete") e.attributes.emplace("lifecycle", lifecycle);
                events.push_back(std::move(e));
                ++result.report.events_parsed;
            }
        }
    }
    result.log = build_log(std::move(events));
    return result;
}

}  // namespace seqmine
