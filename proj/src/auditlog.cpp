#include "goldbach/auditlog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace goldbach {

namespace {

template <typename Int>
bool parse_int(const std::string& text, Int& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !text.empty();
}

} // namespace

std::string format_audit_line(const AuditRecord& record) {
    std::ostringstream out;
    out << "session_id=" << record.session_id << " n=" << record.n << " p1=" << record.p1
        << " p2=" << record.p2 << " p3=" << record.p3 << " width=" << record.width
        << " parties=" << record.initiator << "," << record.responder
        << " timestamp=" << record.timestamp;
    return out.str();
}

AuditParse parse_audit_line(const std::string& line) {
    AuditParse result;

    std::map<std::string, std::string> fields;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) {
            result.reason = "token '" + token + "' is not key=value";
            return result;
        }
        const std::string key = token.substr(0, eq);
        if (!fields.emplace(key, token.substr(eq + 1)).second) {
            result.reason = "duplicate field '" + key + "'";
            return result;
        }
    }

    static const char* const kRequired[] = {"session_id", "n",       "p1",      "p2",
                                            "p3",         "width",   "parties", "timestamp"};
    for (const char* key : kRequired) {
        if (!fields.contains(key)) {
            result.reason = std::string("missing field '") + key + "'";
            return result;
        }
    }
    if (fields.size() != std::size(kRequired)) {
        for (const auto& [key, value] : fields) {
            if (std::find_if(std::begin(kRequired), std::end(kRequired),
                             [&](const char* k) { return key == k; }) == std::end(kRequired)) {
                result.reason = "unknown field '" + key + "'";
                return result;
            }
        }
    }

    AuditRecord record;
    unsigned long width = 0;
    if (!parse_int(fields["session_id"], record.session_id) || !parse_int(fields["n"], record.n) ||
        !parse_int(fields["p1"], record.p1) || !parse_int(fields["p2"], record.p2) ||
        !parse_int(fields["p3"], record.p3) || !parse_int(fields["width"], width) ||
        !parse_int(fields["timestamp"], record.timestamp)) {
        result.reason = "unparseable numeric field";
        return result;
    }
    record.width = static_cast<unsigned>(width);

    const std::string& parties = fields["parties"];
    const auto comma = parties.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == parties.size() ||
        parties.find(',', comma + 1) != std::string::npos) {
        result.reason = "parties field must be 'initiator,responder'";
        return result;
    }
    record.initiator = parties.substr(0, comma);
    record.responder = parties.substr(comma + 1);

    result.ok = true;
    result.record = std::move(record);
    return result;
}

void append_audit(const AuditRecord& record, std::ostream& log) {
    log << format_audit_line(record) << '\n';
}

void append_audit(const AuditRecord& record, const std::filesystem::path& log_path) {
    std::ofstream log(log_path, std::ios::app);
    if (!log)
        throw std::runtime_error("append_audit: cannot open " + log_path.string());
    append_audit(record, log);
    if (!log.flush())
        throw std::runtime_error("append_audit: write to " + log_path.string() + " failed");
}

AuditLog load_audit(std::istream& log) {
    AuditLog out;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(log, line)) {
        ++line_number;
        if (line.empty())
            continue;
        AuditParse parsed = parse_audit_line(line);
        if (parsed.ok)
            out.records.push_back(std::move(parsed.record));
        else
            out.issues.push_back({line_number, std::move(parsed.reason)});
    }
    return out;
}

AuditLog load_audit(const std::filesystem::path& log_path) {
    std::ifstream log(log_path);
    if (!log)
        throw std::runtime_error("load_audit: cannot open " + log_path.string());
    return load_audit(log);
}

AuditLog load_audit(const std::filesystem::path& log_path, const PrimeTable& table) {
    std::ifstream log(log_path);
    if (!log)
        throw std::runtime_error("load_audit: cannot open " + log_path.string());

    AuditLog out;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(log, line)) {
        ++line_number;
        if (line.empty())
            continue;
        AuditParse parsed = parse_audit_line(line);
        if (!parsed.ok) {
            out.issues.push_back({line_number, std::move(parsed.reason)});
            continue;
        }
        const AuditCheck check = verify_audit(parsed.record, table);
        if (!check.ok) {
            std::string reason = "fails verification:";
            for (const std::string& problem : check.problems)
                reason += " [" + problem + "]";
            out.issues.push_back({line_number, std::move(reason)});
        }
        out.records.push_back(std::move(parsed.record));
    }
    return out;
}

} // namespace goldbach
