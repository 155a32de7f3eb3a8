#ifndef GOLDBACH_WIRE_HPP
#define GOLDBACH_WIRE_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "goldbach/protocol.hpp"

namespace goldbach {

/* Wire frame, bit-exact:
 *
 *   offset  size            field
 *   0       1               magic 0x47 ('G')
 *   1       1               version 0x01
 *   2       8               session_id, big-endian
 *   10      1               step code (0x1A, 0x1B, 0x2A, 0x2B)
 *   11      2               width in bits, big-endian
 *   13      ceil(width/8)   payload, big-endian, high bits zero-padded
 *   then, optionally:
 *   +0      1               nonce tag 0x4E ('N')
 *   +1      1               nonce length, always 0x08
 *   +2      8               nonce value, big-endian
 */

inline constexpr std::uint8_t kFrameMagic = 0x47;
inline constexpr std::uint8_t kFrameVersion = 0x01;
inline constexpr std::uint8_t kNonceTag = 0x4E;
inline constexpr std::size_t kFrameHeaderSize = 13; // bytes before the payload

enum class DecodeError {
    ShortFrame,
    BadMagic,
    BadVersion,
    UnknownStep,
    BadWidth,        // zero or wider than 64
    PayloadOverflow, // padding bits above the stated width are set
    BadNonceTag,
    BadNonceLength,
    TrailingBytes,
};

std::string_view to_string(DecodeError error) noexcept;

using DecodeResult = std::variant<GtpMessage, DecodeError>;

std::vector<std::uint8_t> encode_message(const GtpMessage& message);

// Inverse of encode_message on well-formed frames; malformed frames map
// to their DecodeError class.
DecodeResult decode_message(std::span<const std::uint8_t> frame);

} // namespace goldbach

#endif
