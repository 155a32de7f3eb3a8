#ifndef GOLDBACH_AUDITLOG_HPP
#define GOLDBACH_AUDITLOG_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "goldbach/protocol.hpp"

namespace goldbach {

/* Append-only audit trail, one self-describing key-value record per
 * line:
 *
 *   session_id=7 n=181 p1=31 p2=67 p3=83 width=7 parties=alice,bob timestamp=0
 */

std::string format_audit_line(const AuditRecord& record);

// Parses one line; returns the record or a reason string.
struct AuditParse {
    bool ok = false;
    AuditRecord record;
    std::string reason;
};
AuditParse parse_audit_line(const std::string& line);

void append_audit(const AuditRecord& record, std::ostream& log);
void append_audit(const AuditRecord& record, const std::filesystem::path& log_path);

struct AuditIssue {
    std::size_t line_number = 0; // 1-based
    std::string reason;
};

struct AuditLog {
    std::vector<AuditRecord> records; // in append order; parseable lines only
    std::vector<AuditIssue> issues;
};

// Syntactic load: unparseable lines are reported with their line number
// and the remaining records are still returned.
AuditLog load_audit(std::istream& log);
AuditLog load_audit(const std::filesystem::path& log_path);

// Load plus verify_audit on every parsed record; semantically corrupt
// records are reported as issues but stay in the record list.
AuditLog load_audit(const std::filesystem::path& log_path, const PrimeTable& table);

} // namespace goldbach

#endif
