#ifndef GOLDBACH_PROTOCOL_HPP
#define GOLDBACH_PROTOCOL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "goldbach/bitword.hpp"
#include "goldbach/hashing.hpp"
#include "goldbach/partitions.hpp"
#include "goldbach/primes.hpp"

namespace goldbach {

/* Goldbach Triples Protocol (GTP), pure operations.
 *
 * A certification authority splits an odd N into three primes
 * P1 + P2 + P3 = N, masks P1 and P2 with the parties' key hashes
 * (step 1), sends P1^P3 and P2^P3 (step 2), and both parties recover
 * P3 as the session key (step 3). An eavesdropper on both links learns
 * only P1^P2 from step 2, which carries no information about P3.
 *
 * Security caveat, by construction of the scheme itself: h(K) is reused
 * as an XOR pad across sessions, which is unsound under known-key or
 * multi-session analysis. This module implements the protocol as
 * defined; it makes no real-world security claim.
 */

struct Registration {
    std::string party_id;
    std::vector<std::uint8_t> key_hash; // full digest; truncated to session width at use
};

/* Key-hash registry held by the CA. Read-only during session runs. */
class Registry {
public:
    // Hashes key_material with the given hasher and stores the digest.
    // Party ids are restricted to [A-Za-z0-9_.-]+ and must be unique.
    void register_party(const std::string& party_id,
                        std::span<const std::uint8_t> key_material,
                        const KeyHasher& hasher = default_key_hasher());

    // Stores a pre-computed digest. Fixture path for injected hash
    // values such as worked-example h(Ka)/h(Kb).
    void register_party_hash(const std::string& party_id, std::vector<std::uint8_t> digest);

    bool has(const std::string& party_id) const;
    const Registration& lookup(const std::string& party_id) const; // throws if absent

private:
    std::map<std::string, Registration> parties_;
};

/* Session state fixed by the CA at setup: the split N = P1 + P2 + P3
 * (arithmetic sum) and the common bit width of all session words.
 * The initiator's mask share is P1, the responder's is P2, and P3 is
 * the session key.
 */
struct SessionSetup {
    std::uint64_t session_id = 0;
    std::uint64_t n = 0;
    BitWord p1, p2, p3;
    unsigned width = 0;
    std::string initiator;
    std::string responder;
};

enum class Step : std::uint8_t {
    Mask1A = 0x1A, // P1 ^ h(Ka) to the initiator
    Mask1B = 0x1B, // P2 ^ h(Kb) to the responder
    Mask2A = 0x2A, // P1 ^ P3 to the initiator
    Mask2B = 0x2B, // P2 ^ P3 to the responder
};

const char* step_name(Step step) noexcept;

struct GtpMessage {
    std::uint64_t session_id = 0;
    Step step = Step::Mask1A;
    BitWord payload;
    std::optional<std::uint64_t> nonce; // same value on all messages of a session

    bool operator==(const GtpMessage&) const = default;
};

struct AuditRecord {
    std::uint64_t session_id = 0;
    std::uint64_t n = 0;
    std::uint64_t p1 = 0, p2 = 0, p3 = 0;
    unsigned width = 0;
    std::string initiator;
    std::string responder;
    std::int64_t timestamp = 0; // seconds since epoch, injected via clock

    bool operator==(const AuditRecord&) const = default;
};

using Clock = std::function<std::int64_t()>;
Clock system_clock_seconds();

struct SessionRequest {
    // Exactly one of n / n_range must be set (n is required when
    // share_words is used).
    std::optional<std::uint64_t> n;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> n_range; // inclusive, snapped to odd

    std::string initiator;
    std::string responder;

    // Pin the triple; roles still drawn at random unless forced_roles
    // is also given. Must be a genuine triple of the resolved n.
    std::optional<GoldbachTriple> forced_triple;

    // Pin the exact (P1, P2, P3) assignment. Must be a permutation of a
    // genuine triple of the resolved n.
    std::optional<std::array<std::uint64_t, 3>> forced_roles;

    // Fixture escape hatch: use these raw words as (P1, P2, P3) without
    // deriving them from a partition of n. Intended for reproducing
    // printed worked examples whose step tables fix the words directly;
    // such a session is only audit-valid if the words happen to form a
    // genuine triple.
    std::optional<std::array<std::uint64_t, 3>> share_words;

    std::optional<unsigned> width_override; // must hold the largest share
};

struct SessionCreation {
    SessionSetup setup;
    AuditRecord audit;
};

// Resolves N, picks a triple uniformly at random from its partitions,
// assigns roles by a uniformly random permutation, and fixes the
// session width (override, else bit length of the largest share).
// Throws std::invalid_argument on unregistered parties, invalid n,
// invalid forced values, or an insufficient width override.
SessionCreation ca_create_session(const SessionRequest& request, const Registry& registry,
                                  const PrimeTable& table, std::mt19937_64& rng,
                                  const Clock& clock = system_clock_seconds());

// Step 1: P1 and P2 under cover of the party key hashes.
std::pair<GtpMessage, GtpMessage> ca_step1(const SessionSetup& setup, const Registry& registry,
                                           std::optional<std::uint64_t> nonce = std::nullopt);

// Step 2: P1 ^ P3 and P2 ^ P3.
std::pair<GtpMessage, GtpMessage> ca_step2(const SessionSetup& setup,
                                           std::optional<std::uint64_t> nonce = std::nullopt);

// Step 3, party side: m1 ^ m2 ^ h unmasks the session key; order of the
// two messages is irrelevant. For honest inputs the result is P3.
BitWord party_derive_key(const BitWord& m_step1, const BitWord& m_step2,
                         const BitWord& own_key_hash);

// What an eavesdropper holding both step-2 payloads can compute:
// (P1 ^ P3) ^ (P2 ^ P3) = P1 ^ P2, independent of P3.
BitWord eavesdropper_combine(const BitWord& m2a, const BitWord& m2b);

struct AuditCheck {
    bool ok = false;
    std::vector<std::string> problems; // empty iff ok

    explicit operator bool() const noexcept { return ok; }
};

// True iff p1 + p2 + p3 == n, all three prime, n odd, and the width
// holds every share. Never throws; failures come back as reasons.
AuditCheck verify_audit(const AuditRecord& record, const PrimeTable& table);

} // namespace goldbach

#endif
