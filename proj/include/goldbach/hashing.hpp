#ifndef GOLDBACH_HASHING_HPP
#define GOLDBACH_HASHING_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace goldbach {

// Maps a party's key material to its registered digest. Pluggable so
// fixtures can inject worked-example hash values.
using KeyHasher = std::function<std::vector<std::uint8_t>(std::span<const std::uint8_t>)>;

// SHA-256 via OpenSSL; the default KeyHasher.
std::vector<std::uint8_t> sha256(std::span<const std::uint8_t> data);

KeyHasher default_key_hasher();

} // namespace goldbach

#endif
