#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "goldbach/auditlog.hpp"
#include "goldbach/harness.hpp"
#include "goldbach/partitions.hpp"
#include "goldbach/primes.hpp"
#include "goldbach/protocol.hpp"
#include "goldbach/seqanalysis.hpp"

namespace {

using namespace goldbach;

struct OddRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

// Accepts "N" or "LO..HI", inclusive; even bounds are snapped inward to
// the nearest odd number with a note on stderr.
OddRange parse_odd_range(const std::string& text) {
    OddRange range;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            range.lo = range.hi = std::stoull(text);
        } else {
            range.lo = std::stoull(text.substr(0, dots));
            range.hi = std::stoull(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or LO..HI, got '" + text + "'");
    }
    const OddRange given = range;
    if (range.lo % 2 == 0)
        ++range.lo;
    if (range.hi % 2 == 0)
        --range.hi;
    if (given.lo != range.lo || given.hi != range.hi)
        std::cerr << "note: bounds snapped to odd: [" << range.lo << "," << range.hi << "]\n";
    if (range.lo > range.hi)
        throw CLI::ValidationError("range", "empty after snapping: '" + text + "'");
    return range;
}

std::array<std::uint64_t, 3> parse_three(const std::string& text, const char* flag) {
    std::array<std::uint64_t, 3> out{};
    char extra = 0;
    if (std::sscanf(text.c_str(), "%" SCNu64 ",%" SCNu64 ",%" SCNu64 "%c", &out[0], &out[1],
                    &out[2], &extra) != 3)
        throw CLI::ValidationError(flag, "expected P1,P2,P3, got '" + text + "'");
    return out;
}

TamperSpec parse_tamper(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--tamper", "expected STEP:bitK or STEP:nonceK");
    std::string step = text.substr(0, colon);
    std::string field = text.substr(colon + 1);

    TamperSpec spec;
    if (step == "1a")
        spec.step = Step::Mask1A;
    else if (step == "1b")
        spec.step = Step::Mask1B;
    else if (step == "2a")
        spec.step = Step::Mask2A;
    else if (step == "2b")
        spec.step = Step::Mask2B;
    else
        throw CLI::ValidationError("--tamper", "unknown step '" + step + "' (1a|1b|2a|2b)");

    std::string prefix;
    if (field.rfind("bit", 0) == 0) {
        spec.field = TamperSpec::Field::Payload;
        prefix = "bit";
    } else if (field.rfind("nonce", 0) == 0) {
        spec.field = TamperSpec::Field::Nonce;
        prefix = "nonce";
    } else {
        throw CLI::ValidationError("--tamper", "field must be bitK or nonceK");
    }
    try {
        spec.bit = static_cast<unsigned>(std::stoul(field.substr(prefix.size())));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--tamper", "bad bit index in '" + field + "'");
    }
    return spec;
}

std::vector<std::uint8_t> digest_from_value(std::uint64_t value) {
    std::vector<std::uint8_t> digest(8);
    for (int i = 0; i < 8; ++i)
        digest[i] = static_cast<std::uint8_t>(value >> (8 * i));
    return digest;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

int cmd_count(const std::string& range_text, bool triangular) {
    const OddRange range = parse_odd_range(range_text);
    if (range.lo < 7)
        throw std::invalid_argument("counts are defined for odd n >= 7");
    const PrimeTable table = PrimeTable::sieve(range.hi);
    for (std::uint64_t n = range.lo; n <= range.hi; n += 2) {
        const std::uint64_t c = triangular ? count_triangular(n, table) : count_triples(n, table);
        std::cout << n << '\t' << c << '\n';
    }
    return 0;
}

int cmd_enumerate(std::uint64_t n, bool triangular) {
    const PrimeTable table = PrimeTable::sieve(n);
    const auto triples = triangular ? enumerate_triangular(n, table) : enumerate_triples(n, table);
    for (const GoldbachTriple& t : triples)
        std::cout << t.p1 << '\t' << t.p2 << '\t' << t.p3 << '\n';
    return 0;
}

int cmd_seq(const std::string& range_text, bool autocorr, const std::string& which,
            const std::string& csv_path) {
    const OddRange range = parse_odd_range(range_text);
    if (range.lo < 7)
        throw std::invalid_argument("census is defined for odd n >= 7");
    const PrimeTable table = PrimeTable::sieve(range.hi);
    const auto census = census_range(range.lo, range.hi, table);

    std::ofstream csv;
    const bool to_csv = !csv_path.empty();
    if (to_csv) {
        csv.open(csv_path);
        if (!csv)
            throw std::runtime_error("cannot open " + csv_path);
    }

    if (autocorr) {
        const CountKind kind = which == "t" ? CountKind::Triangular : CountKind::Unrestricted;
        const auto result = autocorrelation(parity_sequence(census, kind));
        if (to_csv) {
            csv << "k,c_k\n";
            for (std::size_t k = 0; k < result.c.size(); ++k)
                csv << k << ',' << format_double(result.c[k]) << '\n';
        } else {
            for (std::size_t k = 0; k < result.c.size(); ++k)
                std::cout << k << '\t' << format_double(result.c[k]) << '\n';
        }
    } else {
        if (to_csv) {
            csv << "n,g,t,parity_g,parity_t\n";
            for (const PartitionCensus& row : census)
                csv << row.n << ',' << row.total << ',' << row.triangular << ','
                    << row.parity_total << ',' << row.parity_triangular << '\n';
        } else {
            for (const PartitionCensus& row : census)
                std::cout << row.n << '\t' << row.total << '\t' << row.triangular << '\t'
                          << row.parity_total << '\t' << row.parity_triangular << '\n';
        }
    }
    if (to_csv && !csv.flush())
        throw std::runtime_error("write to " + csv_path + " failed");
    return 0;
}

void print_xor_table(const char* party, const char* title, const BitWord& top,
                     const BitWord& bottom, const BitWord& out, const char* label) {
    std::cout << "  " << party << ": " << title << '\n';
    std::cout << "    " << top.to_binary_string() << '\n';
    std::cout << "    " << bottom.to_binary_string() << '\n';
    std::cout << "    " << out.to_binary_string() << " -> " << label << '\n';
}

struct DemoOptions {
    std::string n_text;
    std::string range_text;
    std::string triple_text;
    std::string share_text;
    std::string tamper_text;
    std::string tap;
    std::string audit_path;
    std::uint64_t seed = 0;
    std::uint64_t hash_a = 0, hash_b = 0;
    bool has_hash_a = false, has_hash_b = false;
    unsigned width = 0;
    bool nonce = false;
    std::uint64_t limit = 0;
};

int cmd_demo(const DemoOptions& opt) {
    SessionConfig config;
    config.seed = opt.seed;
    config.nonce_required = opt.nonce;

    if (!opt.n_text.empty() && !opt.range_text.empty())
        throw std::invalid_argument("give --n or --range, not both");
    if (!opt.n_text.empty()) {
        config.n = std::stoull(opt.n_text);
    } else if (!opt.range_text.empty()) {
        const OddRange range = parse_odd_range(opt.range_text);
        config.n_range = {range.lo, range.hi};
    } else {
        throw std::invalid_argument("one of --n or --range is required");
    }

    if (!opt.triple_text.empty())
        config.forced_roles = parse_three(opt.triple_text, "--triple");
    if (!opt.share_text.empty())
        config.share_words = parse_three(opt.share_text, "--share-words");
    if (opt.width != 0)
        config.width = opt.width;
    if (!opt.tamper_text.empty())
        config.tamper = parse_tamper(opt.tamper_text);
    if (!opt.tap.empty()) {
        if (opt.tap != "a" && opt.tap != "b" && opt.tap != "both")
            throw std::invalid_argument("--tap takes a, b or both");
        config.tap_link_a = opt.tap != "b";
        config.tap_link_b = opt.tap != "a";
    }

    Registry registry;
    if (opt.has_hash_a)
        registry.register_party_hash("alice", digest_from_value(opt.hash_a));
    else
        registry.register_party("alice", std::span<const std::uint8_t>(
                                             reinterpret_cast<const std::uint8_t*>("alice"), 5));
    if (opt.has_hash_b)
        registry.register_party_hash("bob", digest_from_value(opt.hash_b));
    else
        registry.register_party("bob", std::span<const std::uint8_t>(
                                           reinterpret_cast<const std::uint8_t*>("bob"), 3));

    std::uint64_t limit = opt.limit;
    if (limit == 0)
        limit = config.n ? *config.n : config.n_range->second;
    const PrimeTable table = PrimeTable::sieve(limit);

    const SessionResult result = run_session(config, registry, table);
    const AuditRecord& audit = result.audit;
    const unsigned width = audit.width;

    const BitWord p1(audit.p1, width), p2(audit.p2, width), p3(audit.p3, width);
    const BitWord h_a = truncate_hash(registry.lookup("alice").key_hash, width);
    const BitWord h_b = truncate_hash(registry.lookup("bob").key_hash, width);

    std::cout << "session " << audit.session_id << ": n = " << audit.n << " = " << audit.p1
              << " + " << audit.p2 << " + " << audit.p3 << ", width " << width << '\n';
    std::cout << "P1 = " << audit.p1 << " = " << p1.to_binary_string() << '\n';
    std::cout << "P2 = " << audit.p2 << " = " << p2.to_binary_string() << '\n';
    std::cout << "P3 = " << audit.p3 << " = " << p3.to_binary_string() << '\n';
    std::cout << "h(Ka) = " << h_a.value() << " = " << h_a.to_binary_string() << '\n';
    std::cout << "h(Kb) = " << h_b.value() << " = " << h_b.to_binary_string() << '\n';

    const auto& entries = result.transcript.entries;
    const BitWord r1 = entries[0].message.payload;
    const BitWord r2 = entries[1].message.payload;
    const BitWord r3 = entries[2].message.payload;
    const BitWord r4 = entries[3].message.payload;
    const BitWord r5 = xor_mask(r1, r3);
    const BitWord r6 = xor_mask(r2, r4);
    const SessionOutcome& outcome = result.transcript.outcome;

    std::cout << "\nStep 1:\n";
    print_xor_table("Alice", "P1 ^ h(Ka)", p1, h_a, r1, "Result1");
    print_xor_table("Bob", "P2 ^ h(Kb)", p2, h_b, r2, "Result2");
    std::cout << "\nStep 2:\n";
    print_xor_table("Alice", "P1 ^ P3", p1, p3, r3, "Result3");
    print_xor_table("Bob", "P2 ^ P3", p2, p3, r4, "Result4");
    std::cout << '\n';
    print_xor_table("Alice", "Result1 ^ Result3", r1, r3, r5, "Result5");
    print_xor_table("Bob", "Result2 ^ Result4", r2, r4, r6, "Result6");
    std::cout << "\nStep 3:\n";
    print_xor_table("Alice", "h(Ka) ^ Result5", h_a, r5, outcome.derived_key_a, "Final Key");
    print_xor_table("Bob", "h(Kb) ^ Result6", h_b, r6, outcome.derived_key_b, "Final Key");

    std::cout << "\nkeys match: " << (outcome.keys_match ? "yes" : "no") << '\n';
    std::cout << "audit: " << format_audit_line(audit) << '\n';

    if (result.eve.tapped_link_a || result.eve.tapped_link_b) {
        std::cout << "eve: tapped";
        if (result.eve.tapped_link_a)
            std::cout << " " << link_name(Link::CaToAlice);
        if (result.eve.tapped_link_b)
            std::cout << " " << link_name(Link::CaToBob);
        std::cout << ", captured " << result.eve.captured.size() << " frames\n";
        if (result.eve.step2_combination)
            std::cout << "eve: step-2 combination = "
                      << result.eve.step2_combination->to_binary_string() << " (P1 ^ P2)\n";
    }

    if (!opt.audit_path.empty()) {
        append_audit(audit, std::filesystem::path(opt.audit_path));
        std::cout << "audit record appended to " << opt.audit_path << '\n';
    }
    return 0;
}

int cmd_audit_verify(const std::string& path, std::uint64_t limit) {
    const AuditLog syntactic = load_audit(std::filesystem::path(path));
    if (limit == 0) {
        limit = 1000;
        for (const AuditRecord& record : syntactic.records)
            limit = std::max(limit, record.n);
    }
    const PrimeTable table = PrimeTable::sieve(limit);
    const AuditLog checked = load_audit(std::filesystem::path(path), table);
    for (const AuditIssue& issue : checked.issues)
        std::cout << "line " << issue.line_number << ": " << issue.reason << '\n';
    std::cout << "records=" << checked.records.size() << " issues=" << checked.issues.size()
              << '\n';
    return checked.issues.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goldbach triples toolkit: partition counts, parity sequences, "
                 "and the triple-based key distribution protocol"};
    app.require_subcommand(1);

    std::string count_range;
    bool count_triangular_flag = false;
    auto* count = app.add_subcommand("count", "Partition counts for a range of odd numbers");
    count->add_option("range", count_range, "odd number N or inclusive range LO..HI")->required();
    count->add_flag("--triangular", count_triangular_flag, "count only triangular triples");

    std::uint64_t enum_n = 0;
    bool enum_triangular_flag = false;
    auto* enumerate = app.add_subcommand("enumerate", "All triples of one odd number");
    enumerate->add_option("n", enum_n, "odd number >= 7")->required();
    enumerate->add_flag("--triangular", enum_triangular_flag, "only triangular triples");

    std::string seq_range, seq_which = "g", seq_csv;
    bool seq_autocorr = false;
    auto* seq = app.add_subcommand("seq", "Census rows or autocorrelation of the parity sequence");
    seq->add_option("range", seq_range, "inclusive odd range LO..HI")->required();
    seq->add_flag("--autocorr", seq_autocorr, "emit autocorrelation (k, c_k) instead of census");
    seq->add_option("--which", seq_which, "parity source for --autocorr: g or t")
        ->check(CLI::IsMember({"g", "t"}));
    seq->add_option("--csv", seq_csv, "write CSV with header to this path instead of stdout");

    DemoOptions demo_opt;
    auto* demo = app.add_subcommand("demo", "Run one protocol session and print its transcript");
    demo->add_option("--n", demo_opt.n_text, "odd session number N");
    demo->add_option("--range", demo_opt.range_text, "draw N from inclusive odd range LO..HI");
    demo->add_option("--triple", demo_opt.triple_text, "force roles P1,P2,P3 (must sum to N)");
    demo->add_option("--share-words", demo_opt.share_text,
                     "fixture words used verbatim as P1,P2,P3 (worked-example reproduction)");
    auto* ha = demo->add_option("--hash-a", demo_opt.hash_a,
                                "fixture value for h(Ka) (default: hash of the party id)");
    auto* hb = demo->add_option("--hash-b", demo_opt.hash_b, "fixture value for h(Kb)");
    demo->add_option("--width", demo_opt.width, "session width in bits (1..64)");
    demo->add_option("--seed", demo_opt.seed, "RNG seed (default 0)");
    demo->add_flag("--nonce", demo_opt.nonce, "attach and echo-check a session nonce");
    demo->add_option("--tamper", demo_opt.tamper_text, "flip one bit in transit, e.g. 2a:bit3");
    demo->add_option("--tap", demo_opt.tap, "eavesdrop on link a, b or both");
    demo->add_option("--audit-log", demo_opt.audit_path, "append the audit record to this file");
    demo->add_option("--limit", demo_opt.limit, "prime table limit (default: N or range top)");

    auto* audit = app.add_subcommand("audit", "Audit log operations");
    std::string audit_path;
    std::uint64_t audit_limit = 0;
    auto* verify = audit->add_subcommand("verify", "Check every record of an audit log");
    verify->add_option("path", audit_path, "audit log file")->required();
    verify->add_option("--limit", audit_limit, "prime table limit (default: max n in the log)");
    audit->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed())
            return cmd_count(count_range, count_triangular_flag);
        if (enumerate->parsed())
            return cmd_enumerate(enum_n, enum_triangular_flag);
        if (seq->parsed())
            return cmd_seq(seq_range, seq_autocorr, seq_which, seq_csv);
        if (demo->parsed()) {
            demo_opt.has_hash_a = ha->count() > 0;
            demo_opt.has_hash_b = hb->count() > 0;
            return cmd_demo(demo_opt);
        }
        if (audit->parsed() && verify->parsed())
            return cmd_audit_verify(audit_path, audit_limit);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
