// Acceptance checks for the toolkit: reference-table fidelity, sequence
// properties, protocol round trips, the eavesdropper identity, and the
// wire codec. Prints one PASS/FAIL line per criterion; the exit code is
// the number of failures. All tolerances and fixtures are pinned here.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "goldbach/bitword.hpp"
#include "goldbach/harness.hpp"
#include "goldbach/partitions.hpp"
#include "goldbach/primes.hpp"
#include "goldbach/protocol.hpp"
#include "goldbach/seqanalysis.hpp"
#include "goldbach/wire.hpp"

namespace {

using namespace goldbach;
using SteadyClock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(SteadyClock::time_point start) {
    return std::chrono::duration<double>(SteadyClock::now() - start).count();
}

std::vector<std::uint8_t> le_digest(std::uint64_t value) {
    std::vector<std::uint8_t> digest(8);
    for (int i = 0; i < 8; ++i)
        digest[i] = static_cast<std::uint8_t>(value >> (8 * i));
    return digest;
}

std::uint64_t mask_for(unsigned width) {
    return width == 64 ? ~0ull : ((1ull << width) - 1);
}

// 1. Counts for all odd n in [9,37], exact; budget 1 s.
Outcome small_count_table() {
    const auto start = SteadyClock::now();
    static constexpr std::pair<std::uint64_t, std::uint64_t> kRows[] = {
        {9, 2},  {11, 2}, {13, 2}, {15, 3}, {17, 4}, {19, 3}, {21, 5}, {23, 5},
        {25, 5}, {27, 7}, {29, 7}, {31, 6}, {33, 9}, {35, 8}, {37, 9},
    };
    const PrimeTable table = PrimeTable::sieve(37);
    std::size_t good = 0;
    for (const auto& [n, expected] : kRows)
        good += count_triples(n, table) == expected;
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << good << "/15 rows exact, " << elapsed << " s (budget 1 s)";
    return {good == 15 && elapsed < 1.0, detail.str()};
}

// 2. Counts for all 38 odd n in [1925,1999], exact; budget 10 s.
Outcome near_2000_count_table() {
    const auto start = SteadyClock::now();
    static constexpr std::pair<std::uint64_t, std::uint64_t> kRows[] = {
        {1925, 2807}, {1927, 3016}, {1929, 2093}, {1931, 3131}, {1933, 3030}, {1935, 2008},
        {1937, 3180}, {1939, 2920}, {1941, 2124}, {1943, 3209}, {1945, 2836}, {1947, 2127},
        {1949, 3183}, {1951, 3033}, {1953, 2121}, {1955, 2979}, {1957, 3090}, {1959, 2132},
        {1961, 3211}, {1963, 3096}, {1965, 2055}, {1967, 3159}, {1969, 3024}, {1971, 2166},
        {1973, 3249}, {1975, 2866}, {1977, 2210}, {1979, 3255}, {1981, 3017}, {1983, 2225},
        {1985, 3068}, {1987, 3171}, {1989, 2164}, {1991, 3286}, {1993, 3182}, {1995, 2029},
        {1997, 3310}, {1999, 3105},
    };
    const PrimeTable table = PrimeTable::sieve(2000);
    std::size_t good = 0;
    for (const auto& [n, expected] : kRows)
        good += count_triples(n, table) == expected;
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << good << "/38 rows exact, " << elapsed << " s (budget 10 s)";
    return {good == 38 && elapsed < 10.0, detail.str()};
}

// 3. The worked example's partition count, exact.
Outcome count_of_181() {
    const PrimeTable table = PrimeTable::sieve(181);
    const std::uint64_t got = count_triples(181, table);
    std::ostringstream detail;
    detail << "count_triples(181) = " << got << " (expected 80)";
    return {got == 80, detail.str()};
}

// 4. Triangular enumeration over odd [9,49]: every reference triple and
//    nothing else, exact.
Outcome triangular_enumeration_table() {
    static constexpr std::array<std::uint64_t, 3> kTriples[] = {
        {3, 3, 3},    {3, 3, 5},    {3, 5, 5},    {3, 5, 7},    {5, 5, 5},    {3, 7, 7},
        {5, 5, 7},    {5, 7, 7},    {7, 7, 7},    {5, 7, 11},   {3, 11, 11},  {7, 7, 11},
        {3, 11, 13},  {5, 11, 11},  {7, 7, 13},   {3, 13, 13},  {5, 11, 13},  {7, 11, 11},
        {5, 13, 13},  {7, 11, 13},  {7, 13, 13},  {11, 11, 11}, {5, 13, 17},  {7, 11, 17},
        {11, 11, 13}, {3, 17, 17},  {7, 13, 17},  {11, 13, 13}, {3, 17, 19},  {5, 17, 17},
        {7, 13, 19},  {11, 11, 17}, {13, 13, 13}, {3, 19, 19},  {5, 17, 19},  {7, 17, 17},
        {11, 11, 19}, {11, 13, 17}, {5, 19, 19},  {7, 17, 19},  {11, 13, 19}, {13, 13, 17},
        {7, 19, 19},  {11, 17, 17}, {13, 13, 19}, {5, 19, 23},  {7, 17, 23},  {11, 13, 23},
        {11, 17, 19}, {13, 17, 17}, {3, 23, 23},  {7, 19, 23},  {11, 19, 19}, {13, 13, 23},
        {13, 17, 19},
    };
    std::map<std::uint64_t, std::vector<GoldbachTriple>> reference;
    for (const auto& [a, b, c] : kTriples)
        reference[a + b + c].push_back({a, b, c});
    for (auto& [n, list] : reference)
        std::sort(list.begin(), list.end());

    const PrimeTable table = PrimeTable::sieve(49);
    std::size_t listed = 0;
    bool exact = true;
    for (std::uint64_t n = 9; n <= 49; n += 2) {
        const auto got = enumerate_triangular(n, table);
        listed += reference[n].size();
        if (got != reference[n])
            exact = false;
    }
    std::ostringstream detail;
    detail << listed << " reference triples, per-n enumeration "
           << (exact ? "matches exactly" : "DIFFERS");
    return {exact && listed == 55, detail.str()};
}

// 5. Triangular counts for odd [971,999] (15 rows) and the parity code
//    column for odd [9,25], exact.
Outcome triangular_counts_and_parity() {
    static constexpr std::pair<std::uint64_t, std::uint64_t> kRows[] = {
        {971, 232}, {973, 210}, {975, 158}, {977, 244}, {979, 228},
        {981, 161}, {983, 251}, {985, 218}, {987, 170}, {989, 260},
        {991, 220}, {993, 167}, {995, 233}, {997, 231}, {999, 176},
    };
    const PrimeTable table = PrimeTable::sieve(999);
    std::size_t good = 0;
    for (const auto& [n, expected] : kRows)
        good += count_triangular(n, table) == expected;

    static constexpr int kParity[] = {1, 1, 1, -1, -1, 1, 1, 1, -1};
    const auto census = census_range(9, 25, table);
    bool parity_ok = census.size() == 9;
    for (std::size_t i = 0; parity_ok && i < census.size(); ++i)
        parity_ok = census[i].parity_triangular == kParity[i];

    std::ostringstream detail;
    detail << good << "/15 count rows exact, parity codes [9,25] "
           << (parity_ok ? "match" : "DIFFER");
    return {good == 15 && parity_ok, detail.str()};
}

// 6. Band inequalities over the census [9,1999] with k_min = 10: zero
//    violations; any violation is reported verbatim.
Outcome band_inequalities() {
    const PrimeTable table = PrimeTable::sieve(1999);
    const auto census = census_range(9, 1999, table);
    const auto violations = check_band_inequalities(census, 10);
    for (const BandViolation& v : violations)
        std::printf("  violation: k=%llu %s with count(%llu)=%llu, count(%llu)=%llu\n",
                    static_cast<unsigned long long>(v.k), v.inequality.c_str(),
                    static_cast<unsigned long long>(v.lhs_n),
                    static_cast<unsigned long long>(v.lhs_count),
                    static_cast<unsigned long long>(v.rhs_n),
                    static_cast<unsigned long long>(v.rhs_count));
    std::ostringstream detail;
    detail << violations.size() << " violations over [9,1999], k_min=10 (expected 0)";
    return {violations.empty(), detail.str()};
}

// 7. Strict local extrema of the count over [165,195] include the
//    known minima and maxima.
Outcome extrema_window() {
    const PrimeTable table = PrimeTable::sieve(195);
    const auto census = census_range(165, 195, table);
    const ExtremaResult extrema = local_extrema(census);
    const auto contains_all = [](const std::vector<std::uint64_t>& have,
                                 std::initializer_list<std::uint64_t> want) {
        return std::all_of(want.begin(), want.end(), [&](std::uint64_t n) {
            return std::find(have.begin(), have.end(), n) != have.end();
        });
    };
    const bool minima_ok = contains_all(extrema.minima, {171, 177, 183, 189});
    const bool maxima_ok = contains_all(extrema.maxima, {173, 179, 185, 191});
    std::ostringstream detail;
    detail << "minima 171,177,183,189 " << (minima_ok ? "present" : "MISSING")
           << "; maxima 173,179,185,191 " << (maxima_ok ? "present" : "MISSING");
    return {minima_ok && maxima_ok, detail.str()};
}

// 8. Band means over [1925,1999]: residue 3 within [2000,2250], residues
//    1 and 5 within [2800,3350] (envelope read off the reference counts).
Outcome band_means_envelope() {
    const PrimeTable table = PrimeTable::sieve(1999);
    const auto census = census_range(1925, 1999, table);
    const auto stats = band_summary(census);
    double mean1 = 0, mean3 = 0, mean5 = 0;
    for (const BandClassStats& s : stats) {
        if (s.residue == 1)
            mean1 = s.mean;
        else if (s.residue == 3)
            mean3 = s.mean;
        else if (s.residue == 5)
            mean5 = s.mean;
    }
    const bool ok = stats.size() == 3 && 2000.0 <= mean3 && mean3 <= 2250.0 &&
                    2800.0 <= mean1 && mean1 <= 3350.0 && 2800.0 <= mean5 && mean5 <= 3350.0;
    std::ostringstream detail;
    detail << "mean g by n mod 6: 1 -> " << mean1 << ", 3 -> " << mean3 << ", 5 -> " << mean5;
    return {ok, detail.str()};
}

// 9. The worked-example session reproduces all six step words and the
//    final key bit-exactly on both sides.
Outcome worked_example_session() {
    Registry registry;
    registry.register_party_hash("alice", le_digest(47));
    registry.register_party_hash("bob", le_digest(99));
    const PrimeTable table = PrimeTable::sieve(181);

    SessionConfig config;
    config.n = 181;
    config.share_words = {{63, 67, 83}};
    config.width = 7;
    config.clock = [] { return 0; };
    const SessionResult result = run_session(config, registry, table);

    const auto& entries = result.transcript.entries;
    if (entries.size() != 4)
        return {false, "expected 4 transcript entries"};
    const BitWord r1 = entries[0].message.payload;
    const BitWord r2 = entries[1].message.payload;
    const BitWord r3 = entries[2].message.payload;
    const BitWord r4 = entries[3].message.payload;
    const BitWord r5 = xor_mask(r1, r3);
    const BitWord r6 = xor_mask(r2, r4);
    const std::array<std::pair<std::string, std::string>, 7> words = {{
        {r1.to_binary_string(), "0010000"},
        {r2.to_binary_string(), "0100000"},
        {r3.to_binary_string(), "1101100"},
        {r4.to_binary_string(), "0010000"},
        {r5.to_binary_string(), "1111100"},
        {r6.to_binary_string(), "0110000"},
        {result.transcript.outcome.derived_key_a.to_binary_string(), "1010011"},
    }};
    bool exact = result.transcript.outcome.derived_key_b.to_binary_string() == "1010011";
    for (const auto& [got, want] : words)
        exact = exact && got == want;
    std::ostringstream detail;
    detail << "step words and final key " << (exact ? "bit-exact on both sides" : "DIFFER");
    return {exact, detail.str()};
}

// 10. 1,000 seeded sessions with n from odd [9,9999]: both derived keys
//     equal P3 and the audit record verifies; budget 30 s.
Outcome thousand_session_round_trip() {
    const auto start = SteadyClock::now();
    Registry registry;
    const std::uint8_t ka[] = {'k', 'e', 'y', '-', 'a'};
    const std::uint8_t kb[] = {'k', 'e', 'y', '-', 'b'};
    registry.register_party("alice", ka);
    registry.register_party("bob", kb);
    const PrimeTable table = PrimeTable::sieve(9999);

    std::size_t good = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        SessionConfig config;
        config.n_range = {{9, 9999}};
        config.seed = seed;
        const SessionResult result = run_session(config, registry, table);
        const bool keys_ok = result.transcript.outcome.keys_match &&
                             result.transcript.outcome.derived_key_a.value() == result.audit.p3;
        good += keys_ok && verify_audit(result.audit, table).ok;
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << good << "/1000 sessions key == P3 with verified audit, " << elapsed
           << " s (budget 30 s)";
    return {good == 1000 && elapsed < 30.0, detail.str()};
}

// 11. For 1,000 seeded sessions the step-2 combination equals P1 ^ P2,
//     and replacing P3 while holding (P1, P2) fixed leaves it unchanged.
Outcome eavesdropper_identity() {
    Registry registry;
    const std::uint8_t ka[] = {'k', 'e', 'y', '-', 'a'};
    const std::uint8_t kb[] = {'k', 'e', 'y', '-', 'b'};
    registry.register_party("alice", ka);
    registry.register_party("bob", kb);
    const PrimeTable table = PrimeTable::sieve(9999);

    std::size_t good = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        SessionConfig config;
        config.n_range = {{9, 9999}};
        config.seed = seed;
        config.tap_link_a = config.tap_link_b = true;
        const SessionResult result = run_session(config, registry, table);
        const unsigned width = result.audit.width;
        const BitWord expected =
            xor_mask(BitWord(result.audit.p1, width), BitWord(result.audit.p2, width));
        if (!result.eve.step2_combination || *result.eve.step2_combination != expected)
            continue;

        // Same (P1, P2) with the key slot re-assigned to another prime:
        // the observable combination must not move.
        SessionSetup altered;
        altered.session_id = result.audit.session_id;
        altered.n = result.audit.n;
        altered.p1 = BitWord(result.audit.p1, width);
        altered.p2 = BitWord(result.audit.p2, width);
        altered.p3 = BitWord(result.audit.p3 == 2 ? 3 : 2, width);
        altered.width = width;
        altered.initiator = result.audit.initiator;
        altered.responder = result.audit.responder;
        const auto [m2a, m2b] = ca_step2(altered);
        good += eavesdropper_combine(m2a.payload, m2b.payload) == expected;
    }
    std::ostringstream detail;
    detail << good << "/1000 sessions: combination == P1 ^ P2 and P3-independent";
    return {good == 1000, detail.str()};
}

// 12. Autocorrelation of the parity sequence over the first 1000 odd
//     numbers >= 9: c[0] == 1 and c[k] == c[period-k] exactly. The peak
//     off-centre magnitude is reported; above 0.25 it warns, not fails.
Outcome autocorrelation_shape() {
    const PrimeTable table = PrimeTable::sieve(2007);
    const auto census = census_range(9, 2007, table);
    const auto seq = parity_sequence(census, CountKind::Unrestricted);
    const AutocorrelationResult result = autocorrelation(seq);

    bool exact = result.period == 1000 && result.c[0] == 1.0;
    double max_offpeak = 0.0;
    for (std::size_t k = 1; k < result.period; ++k) {
        exact = exact && result.c[k] == result.c[result.period - k];
        max_offpeak = std::max(max_offpeak, std::abs(result.c[k]));
    }
    std::ostringstream detail;
    detail << "c[0] == 1 and symmetry exact over 1000 terms; max offpeak |c_k| = " << max_offpeak;
    if (max_offpeak > 0.25)
        detail << " (warning: above soft threshold 0.25)";
    return {exact, detail.str()};
}

// 13. 10,000 randomized codec round trips are lossless and every
//     malformed-frame class yields its own distinct error.
Outcome wire_codec() {
    std::mt19937_64 rng(2026);
    std::size_t good = 0;
    for (int i = 0; i < 10000; ++i) {
        const unsigned width = 1 + static_cast<unsigned>(rng() % 64);
        GtpMessage message;
        message.session_id = rng();
        message.step = std::array{Step::Mask1A, Step::Mask1B, Step::Mask2A, Step::Mask2B}[rng() % 4];
        message.payload = BitWord(rng() & mask_for(width), width);
        if (rng() % 2)
            message.nonce = rng();
        const auto decoded = decode_message(encode_message(message));
        good += std::holds_alternative<GtpMessage>(decoded) &&
                std::get<GtpMessage>(decoded) == message;
    }

    GtpMessage base;
    base.session_id = 0x0102030405060708ull;
    base.step = Step::Mask2A;
    base.payload = BitWord(0x6C, 7);
    const std::vector<std::uint8_t> plain = encode_message(base);
    GtpMessage with_nonce = base;
    with_nonce.nonce = 0x1122334455667788ull;
    const std::vector<std::uint8_t> nonced = encode_message(with_nonce);

    const auto mutate = [](std::vector<std::uint8_t> frame, std::size_t at, std::uint8_t value) {
        frame[at] = value;
        return frame;
    };
    const auto expect = [](const std::vector<std::uint8_t>& frame, DecodeError want) {
        const DecodeResult result = decode_message(frame);
        return std::holds_alternative<DecodeError>(result) && std::get<DecodeError>(result) == want;
    };

    std::vector<std::pair<std::vector<std::uint8_t>, DecodeError>> cases;
    cases.emplace_back(std::vector<std::uint8_t>{}, DecodeError::ShortFrame);
    cases.emplace_back(std::vector<std::uint8_t>(plain.begin(), plain.begin() + 5),
                       DecodeError::ShortFrame);
    cases.emplace_back(std::vector<std::uint8_t>(plain.begin(), plain.end() - 1),
                       DecodeError::ShortFrame);
    cases.emplace_back(mutate(plain, 0, 0x48), DecodeError::BadMagic);
    cases.emplace_back(mutate(plain, 1, 0x02), DecodeError::BadVersion);
    cases.emplace_back(mutate(plain, 10, 0x3A), DecodeError::UnknownStep);
    cases.emplace_back(mutate(mutate(plain, 11, 0x00), 12, 0x00), DecodeError::BadWidth);
    cases.emplace_back(mutate(plain, 12, 65), DecodeError::BadWidth);
    cases.emplace_back(mutate(plain, 13, 0xFF), DecodeError::PayloadOverflow);
    cases.emplace_back(mutate(nonced, 14, 0x4F), DecodeError::BadNonceTag);
    cases.emplace_back(mutate(nonced, 15, 0x07), DecodeError::BadNonceLength);
    cases.emplace_back(std::vector<std::uint8_t>(nonced.begin(), nonced.end() - 2),
                       DecodeError::ShortFrame);
    auto trailing = plain;
    trailing.push_back(0x00);
    // A stray byte after the payload reads as a nonce TLV with a bad tag;
    // genuine trailing garbage is whatever follows a complete nonce.
    cases.emplace_back(trailing, DecodeError::BadNonceTag);
    auto after_nonce = nonced;
    after_nonce.push_back(0x00);
    cases.emplace_back(after_nonce, DecodeError::TrailingBytes);

    bool malformed_ok = true;
    std::set<DecodeError> seen;
    for (const auto& [frame, want] : cases) {
        malformed_ok = malformed_ok && expect(frame, want);
        seen.insert(want);
    }
    std::set<std::string_view> renderings;
    for (DecodeError e : seen)
        renderings.insert(to_string(e));
    const bool distinct = seen.size() == 9 && renderings.size() == seen.size();

    std::ostringstream detail;
    detail << good << "/10000 round trips lossless; " << cases.size()
           << " malformed frames hit all " << seen.size() << " distinct error classes";
    return {good == 10000 && malformed_ok && distinct, detail.str()};
}

} // namespace

int main() {
    const struct {
        const char* name;
        Outcome (*check)();
    } criteria[] = {
        {"small count table", small_count_table},
        {"near-2000 count table", near_2000_count_table},
        {"count of 181", count_of_181},
        {"triangular enumeration [9,49]", triangular_enumeration_table},
        {"triangular counts and parity", triangular_counts_and_parity},
        {"band inequalities", band_inequalities},
        {"local extrema window", extrema_window},
        {"band means envelope", band_means_envelope},
        {"worked-example session", worked_example_session},
        {"1000-session round trip", thousand_session_round_trip},
        {"eavesdropper identity", eavesdropper_identity},
        {"autocorrelation shape", autocorrelation_shape},
        {"wire codec", wire_codec},
    };

    int failures = 0;
    int index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        const Outcome outcome = criterion.check();
        failures += outcome.pass ? 0 : 1;
        std::printf("%s %2d %-32s %s\n", outcome.pass ? "PASS" : "FAIL", index, criterion.name,
                    outcome.detail.c_str());
    }
    std::printf("%d of 13 criteria passed\n", 13 - failures);
    return failures;
}
