#ifndef GOLDBACH_HARNESS_HPP
#define GOLDBACH_HARNESS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "goldbach/protocol.hpp"
#include "goldbach/wire.hpp"

namespace goldbach {

/* Deterministic single-session orchestration over in-memory links:
 * CA -> Alice and CA -> Bob, with optional per-link eavesdropper taps
 * and an optional in-transit tamper hook. Everything is a pure function
 * of (config, seed, registry); timestamps come from an injectable
 * clock so transcripts can be byte-identical across runs.
 */

enum class Link { CaToAlice, CaToBob };

const char* link_name(Link link) noexcept;

// A message crossing the wire gets hit after encoding, so tampering is
// invisible to the CA and lands on the receiving party.
struct TamperSpec {
    enum class Field { Payload, Nonce };
    Step step = Step::Mask2A;
    Field field = Field::Payload;
    unsigned bit = 0; // bit index within the field value, 0 = LSB
};

struct TranscriptEntry {
    Link link = Link::CaToAlice;
    GtpMessage message;              // as decoded by the receiving party
    std::vector<std::uint8_t> frame; // bytes on the wire (post-tamper)
};

struct SessionOutcome {
    bool keys_match = false; // true iff both derived keys equal P3
    BitWord derived_key_a;
    BitWord derived_key_b;
};

struct Transcript {
    std::uint64_t session_id = 0;
    std::vector<TranscriptEntry> entries; // exactly 4 for a completed session
    SessionOutcome outcome;
};

struct EveView {
    bool tapped_link_a = false;
    bool tapped_link_b = false;
    std::vector<TranscriptEntry> captured; // frames seen on tapped links, decoded by Eve
    // (P1^P3) ^ (P2^P3) = P1 ^ P2; present when both step-2 frames were captured.
    std::optional<BitWord> step2_combination;
};

struct NonceMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A frame that no longer decodes after transit.
struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SessionConfig {
    std::optional<std::uint64_t> n;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> n_range;
    std::uint64_t seed = 0;
    std::optional<unsigned> width;
    bool nonce_required = false;
    bool tap_link_a = false;
    bool tap_link_b = false;
    std::optional<GoldbachTriple> forced_triple;
    std::optional<std::array<std::uint64_t, 3>> forced_roles;
    std::optional<std::array<std::uint64_t, 3>> share_words; // worked-example fixture
    std::optional<TamperSpec> tamper;
    std::string initiator = "alice";
    std::string responder = "bob";
    Clock clock; // null -> system clock
};

struct SessionResult {
    Transcript transcript;
    AuditRecord audit;
    EveView eve;
};

// Runs setup, steps 1-2, delivery, and both key derivations. Honest
// runs end with outcome.keys_match == true; a tampered payload flips
// the derived key instead of raising. Registry misses and width
// conflicts throw std::invalid_argument; a nonce echo failure (when
// required) throws NonceMismatchError.
SessionResult run_session(const SessionConfig& config, const Registry& registry,
                          const PrimeTable& table);

} // namespace goldbach

#endif
