#include "goldbach/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <stdexcept>

namespace goldbach {

namespace {

bool valid_party_id(const std::string& id) {
    if (id.empty())
        return false;
    return std::all_of(id.begin(), id.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '.' || c == '-';
    });
}

std::uint64_t snap_odd_up(std::uint64_t v) { return v % 2 == 0 ? v + 1 : v; }
std::uint64_t snap_odd_down(std::uint64_t v) { return v % 2 == 0 ? v - 1 : v; }

// The six orderings of a sorted triple, as index permutations.
constexpr std::array<std::array<int, 3>, 6> kRolePermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

void require_triple_of(std::uint64_t n, std::span<const std::uint64_t> values,
                       const PrimeTable& table, const char* what) {
    std::uint64_t sum = 0;
    for (std::uint64_t p : values) {
        if (p > table.limit() || !table.contains(p))
            throw std::invalid_argument(std::string("ca_create_session: ") + what + " component " +
                                        std::to_string(p) + " is not prime");
        sum += p;
    }
    if (sum != n)
        throw std::invalid_argument(std::string("ca_create_session: ") + what + " sums to " +
                                    std::to_string(sum) + ", not n=" + std::to_string(n));
}

} // namespace

void Registry::register_party(const std::string& party_id,
                              std::span<const std::uint8_t> key_material,
                              const KeyHasher& hasher) {
    register_party_hash(party_id, hasher(key_material));
}

void Registry::register_party_hash(const std::string& party_id, std::vector<std::uint8_t> digest) {
    if (!valid_party_id(party_id))
        throw std::invalid_argument("Registry: party id '" + party_id +
                                    "' is not [A-Za-z0-9_.-]+");
    if (digest.empty())
        throw std::invalid_argument("Registry: empty digest for '" + party_id + "'");
    auto [it, inserted] = parties_.try_emplace(party_id);
    if (!inserted)
        throw std::invalid_argument("Registry: party '" + party_id + "' already registered");
    it->second = Registration{party_id, std::move(digest)};
}

bool Registry::has(const std::string& party_id) const { return parties_.contains(party_id); }

const Registration& Registry::lookup(const std::string& party_id) const {
    auto it = parties_.find(party_id);
    if (it == parties_.end())
        throw std::invalid_argument("Registry: unknown party '" + party_id + "'");
    return it->second;
}

const char* step_name(Step step) noexcept {
    switch (step) {
    case Step::Mask1A: return "1a";
    case Step::Mask1B: return "1b";
    case Step::Mask2A: return "2a";
    case Step::Mask2B: return "2b";
    }
    return "?";
}

Clock system_clock_seconds() {
    return [] {
        using namespace std::chrono;
        return duration_cast<seconds>(system_clock::now().time_since_epoch()).count();
    };
}

SessionCreation ca_create_session(const SessionRequest& request, const Registry& registry,
                                  const PrimeTable& table, std::mt19937_64& rng,
                                  const Clock& clock) {
    if (!registry.has(request.initiator))
        throw std::invalid_argument("ca_create_session: initiator '" + request.initiator +
                                    "' is not registered");
    if (!registry.has(request.responder))
        throw std::invalid_argument("ca_create_session: responder '" + request.responder +
                                    "' is not registered");
    if (request.initiator == request.responder)
        throw std::invalid_argument("ca_create_session: initiator and responder must differ");

    const std::uint64_t session_id = rng();

    // Resolve N.
    if (request.n && request.n_range)
        throw std::invalid_argument("ca_create_session: give n or a range, not both");
    if (request.share_words && !request.n)
        throw std::invalid_argument("ca_create_session: share words need an explicit n");
    std::uint64_t n = 0;
    if (request.n) {
        n = *request.n;
    } else if (request.n_range) {
        if (request.n_range->second == 0)
            throw std::invalid_argument("ca_create_session: empty range");
        const std::uint64_t lo = snap_odd_up(request.n_range->first);
        const std::uint64_t hi = snap_odd_down(request.n_range->second);
        if (lo > hi)
            throw std::invalid_argument("ca_create_session: range [" +
                                        std::to_string(request.n_range->first) + ", " +
                                        std::to_string(request.n_range->second) +
                                        "] holds no odd number");
        const std::uint64_t slots = (hi - lo) / 2 + 1;
        std::uniform_int_distribution<std::uint64_t> pick(0, slots - 1);
        n = lo + 2 * pick(rng);
    } else {
        throw std::invalid_argument("ca_create_session: neither n nor a range was given");
    }
    if (n % 2 == 0)
        throw std::invalid_argument("ca_create_session: n=" + std::to_string(n) + " is even");
    if (n < 7)
        throw std::invalid_argument("ca_create_session: n=" + std::to_string(n) + " is below 7");

    // Resolve the role assignment (P1, P2, P3).
    std::array<std::uint64_t, 3> roles{};
    if (request.share_words) {
        roles = *request.share_words; // fixture words, used as typed
    } else {
        if (table.limit() < n)
            throw std::invalid_argument("ca_create_session: prime table limit " +
                                        std::to_string(table.limit()) +
                                        " is smaller than n=" + std::to_string(n));
        if (request.forced_roles) {
            roles = *request.forced_roles;
            require_triple_of(n, roles, table, "forced roles");
        } else {
            GoldbachTriple triple;
            if (request.forced_triple) {
                triple = *request.forced_triple;
                if (!(triple.p1 <= triple.p2 && triple.p2 <= triple.p3))
                    throw std::invalid_argument("ca_create_session: forced triple is not sorted");
                const std::array<std::uint64_t, 3> parts{triple.p1, triple.p2, triple.p3};
                require_triple_of(n, parts, table, "forced triple");
            } else {
                const auto triples = enumerate_triples(n, table);
                if (triples.empty())
                    throw std::invalid_argument("ca_create_session: no triple for n=" +
                                                std::to_string(n));
                std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
                triple = triples[pick(rng)];
            }
            std::uniform_int_distribution<std::size_t> pick_perm(0, kRolePermutations.size() - 1);
            const auto& perm = kRolePermutations[pick_perm(rng)];
            const std::array<std::uint64_t, 3> sorted{triple.p1, triple.p2, triple.p3};
            for (int i = 0; i < 3; ++i)
                roles[i] = sorted[perm[i]];
        }
    }

    const std::uint64_t largest = std::max({roles[0], roles[1], roles[2]});
    const unsigned required_width = bit_width_of(largest);
    unsigned width = required_width;
    if (request.width_override) {
        if (*request.width_override < required_width)
            throw std::invalid_argument("ca_create_session: width override " +
                                        std::to_string(*request.width_override) +
                                        " cannot hold the largest share (needs " +
                                        std::to_string(required_width) + " bits)");
        width = *request.width_override;
    }

    SessionSetup setup{
        .session_id = session_id,
        .n = n,
        .p1 = BitWord(roles[0], width),
        .p2 = BitWord(roles[1], width),
        .p3 = BitWord(roles[2], width),
        .width = width,
        .initiator = request.initiator,
        .responder = request.responder,
    };
    AuditRecord audit{
        .session_id = session_id,
        .n = n,
        .p1 = roles[0],
        .p2 = roles[1],
        .p3 = roles[2],
        .width = width,
        .initiator = request.initiator,
        .responder = request.responder,
        .timestamp = clock(),
    };
    return SessionCreation{std::move(setup), std::move(audit)};
}

std::pair<GtpMessage, GtpMessage> ca_step1(const SessionSetup& setup, const Registry& registry,
                                           std::optional<std::uint64_t> nonce) {
    const BitWord hash_a = truncate_hash(registry.lookup(setup.initiator).key_hash, setup.width);
    const BitWord hash_b = truncate_hash(registry.lookup(setup.responder).key_hash, setup.width);
    GtpMessage m1a{setup.session_id, Step::Mask1A, xor_mask(setup.p1, hash_a), nonce};
    GtpMessage m1b{setup.session_id, Step::Mask1B, xor_mask(setup.p2, hash_b), nonce};
    return {std::move(m1a), std::move(m1b)};
}

std::pair<GtpMessage, GtpMessage> ca_step2(const SessionSetup& setup,
                                           std::optional<std::uint64_t> nonce) {
    GtpMessage m2a{setup.session_id, Step::Mask2A, xor_mask(setup.p1, setup.p3), nonce};
    GtpMessage m2b{setup.session_id, Step::Mask2B, xor_mask(setup.p2, setup.p3), nonce};
    return {std::move(m2a), std::move(m2b)};
}

BitWord party_derive_key(const BitWord& m_step1, const BitWord& m_step2,
                         const BitWord& own_key_hash) {
    return xor_mask(xor_mask(m_step1, m_step2), own_key_hash);
}

BitWord eavesdropper_combine(const BitWord& m2a, const BitWord& m2b) {
    return xor_mask(m2a, m2b);
}

AuditCheck verify_audit(const AuditRecord& record, const PrimeTable& table) {
    AuditCheck check;
    if (record.n % 2 == 0)
        check.problems.push_back("n=" + std::to_string(record.n) + " is even");
    if (record.p1 + record.p2 + record.p3 != record.n)
        check.problems.push_back("shares sum to " +
                                 std::to_string(record.p1 + record.p2 + record.p3) +
                                 ", record says n=" + std::to_string(record.n));
    const std::array<std::uint64_t, 3> shares{record.p1, record.p2, record.p3};
    const std::array<const char*, 3> labels{"p1", "p2", "p3"};
    for (int i = 0; i < 3; ++i) {
        if (shares[i] > table.limit())
            check.problems.push_back(std::string(labels[i]) + "=" + std::to_string(shares[i]) +
                                     " exceeds prime table limit " +
                                     std::to_string(table.limit()));
        else if (!table.contains(shares[i]))
            check.problems.push_back(std::string(labels[i]) + "=" + std::to_string(shares[i]) +
                                     " is not prime");
    }
    if (record.width == 0 || record.width > 64) {
        check.problems.push_back("width " + std::to_string(record.width) + " outside [1, 64]");
    } else {
        for (int i = 0; i < 3; ++i)
            if (bit_width_of(shares[i]) > record.width)
                check.problems.push_back(std::string(labels[i]) + "=" +
                                         std::to_string(shares[i]) + " does not fit width " +
                                         std::to_string(record.width));
    }
    check.ok = check.problems.empty();
    return check;
}

} // namespace goldbach
