#include "goldbach/harness.hpp"

#include <random>

namespace goldbach {

namespace {

// Flips one bit of an encoded field in place. Bit indices address the
// field *value* (0 = LSB), so high indices inside the payload's zero
// padding are reachable on purpose: flipping one produces a frame the
// receiver must reject.
void flip_field_bit(std::vector<std::uint8_t>& frame, const GtpMessage& message,
                    TamperSpec::Field field, unsigned bit) {
    const std::size_t payload_bytes = (message.payload.width() + 7) / 8;
    std::size_t byte = 0;
    if (field == TamperSpec::Field::Payload) {
        if (bit >= payload_bytes * 8)
            throw std::invalid_argument("run_session: tamper bit outside the payload field");
        byte = kFrameHeaderSize + payload_bytes - 1 - bit / 8;
    } else {
        if (!message.nonce)
            throw std::invalid_argument("run_session: nonce tamper on a session without nonces");
        if (bit >= 64)
            throw std::invalid_argument("run_session: tamper bit outside the nonce field");
        byte = kFrameHeaderSize + payload_bytes + 2 + 7 - bit / 8;
    }
    frame.at(byte) ^= static_cast<std::uint8_t>(1u << (bit % 8));
}

// Per-party receive state; the first message pins what later ones must
// echo.
struct PartyInbox {
    std::string party_id;
    std::vector<GtpMessage> received;

    void accept(const GtpMessage& message, Link link) {
        if (!received.empty()) {
            const GtpMessage& first = received.front();
            if (message.session_id != first.session_id)
                throw TransportError(std::string("run_session: session id mismatch on ") +
                                     link_name(link));
            if (message.nonce != first.nonce)
                throw NonceMismatchError(party_id + " saw nonce " +
                                         (message.nonce ? std::to_string(*message.nonce)
                                                        : std::string("<absent>")) +
                                         ", expected " +
                                         (first.nonce ? std::to_string(*first.nonce)
                                                      : std::string("<absent>")));
        }
        received.push_back(message);
    }
};

} // namespace

const char* link_name(Link link) noexcept {
    return link == Link::CaToAlice ? "ca->alice" : "ca->bob";
}

SessionResult run_session(const SessionConfig& config, const Registry& registry,
                          const PrimeTable& table) {
    std::mt19937_64 rng(config.seed);

    SessionRequest request;
    request.n = config.n;
    request.n_range = config.n_range;
    request.initiator = config.initiator;
    request.responder = config.responder;
    request.forced_triple = config.forced_triple;
    request.forced_roles = config.forced_roles;
    request.share_words = config.share_words;
    request.width_override = config.width;

    const Clock clock = config.clock ? config.clock : system_clock_seconds();
    SessionCreation creation = ca_create_session(request, registry, table, rng, clock);
    const SessionSetup& setup = creation.setup;

    std::optional<std::uint64_t> nonce;
    if (config.nonce_required)
        nonce = rng();

    const auto [m1a, m1b] = ca_step1(setup, registry, nonce);
    const auto [m2a, m2b] = ca_step2(setup, nonce);
    // Step-2 algebra holds before transit on every run, tampered or not.
    if (eavesdropper_combine(m2a.payload, m2b.payload) != xor_mask(setup.p1, setup.p2))
        throw std::logic_error("run_session: step-2 combination identity broken");

    const std::pair<GtpMessage, Link> sends[] = {
        {m1a, Link::CaToAlice},
        {m1b, Link::CaToBob},
        {m2a, Link::CaToAlice},
        {m2b, Link::CaToBob},
    };

    SessionResult result;
    result.transcript.session_id = setup.session_id;
    result.audit = creation.audit;
    result.eve.tapped_link_a = config.tap_link_a;
    result.eve.tapped_link_b = config.tap_link_b;

    PartyInbox alice{setup.initiator, {}};
    PartyInbox bob{setup.responder, {}};
    std::optional<BitWord> eve_m2a, eve_m2b;

    for (const auto& [message, link] : sends) {
        std::vector<std::uint8_t> frame = encode_message(message);

        if (config.tamper && config.tamper->step == message.step)
            flip_field_bit(frame, message, config.tamper->field, config.tamper->bit);

        const bool tapped =
            (link == Link::CaToAlice && config.tap_link_a) ||
            (link == Link::CaToBob && config.tap_link_b);
        if (tapped) {
            DecodeResult seen = decode_message(frame);
            if (const auto* decoded = std::get_if<GtpMessage>(&seen)) {
                result.eve.captured.push_back({link, *decoded, frame});
                if (decoded->step == Step::Mask2A)
                    eve_m2a = decoded->payload;
                else if (decoded->step == Step::Mask2B)
                    eve_m2b = decoded->payload;
            }
        }

        DecodeResult delivered = decode_message(frame);
        if (const auto* error = std::get_if<DecodeError>(&delivered))
            throw TransportError(std::string("run_session: undecodable frame on ") +
                                 link_name(link) + " at " + step_name(message.step) + ": " +
                                 std::string(to_string(*error)));

        const GtpMessage& received = std::get<GtpMessage>(delivered);
        (link == Link::CaToAlice ? alice : bob).accept(received, link);
        result.transcript.entries.push_back({link, received, std::move(frame)});
    }

    const BitWord h_a = truncate_hash(registry.lookup(setup.initiator).key_hash, setup.width);
    const BitWord h_b = truncate_hash(registry.lookup(setup.responder).key_hash, setup.width);

    SessionOutcome& outcome = result.transcript.outcome;
    outcome.derived_key_a =
        party_derive_key(alice.received[0].payload, alice.received[1].payload, h_a);
    outcome.derived_key_b = party_derive_key(bob.received[0].payload, bob.received[1].payload, h_b);
    outcome.keys_match =
        outcome.derived_key_a == outcome.derived_key_b && outcome.derived_key_a == setup.p3;

    if (eve_m2a && eve_m2b)
        result.eve.step2_combination = eavesdropper_combine(*eve_m2a, *eve_m2b);

    return result;
}

} // namespace goldbach
