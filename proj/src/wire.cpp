#include "goldbach/wire.hpp"

namespace goldbach {

namespace {

constexpr std::size_t kHeaderSize = kFrameHeaderSize;
constexpr std::size_t kNonceTlvSize = 10; // tag + length + 8-byte value

void put_be(std::vector<std::uint8_t>& out, std::uint64_t value, std::size_t bytes) {
    for (std::size_t i = 0; i < bytes; ++i)
        out.push_back(static_cast<std::uint8_t>(value >> (8 * (bytes - 1 - i))));
}

std::uint64_t get_be(std::span<const std::uint8_t> in, std::size_t offset, std::size_t bytes) {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < bytes; ++i)
        value = value << 8 | in[offset + i];
    return value;
}

bool known_step(std::uint8_t code) {
    switch (static_cast<Step>(code)) {
    case Step::Mask1A:
    case Step::Mask1B:
    case Step::Mask2A:
    case Step::Mask2B:
        return true;
    }
    return false;
}

} // namespace

std::string_view to_string(DecodeError error) noexcept {
    switch (error) {
    case DecodeError::ShortFrame: return "short frame";
    case DecodeError::BadMagic: return "bad magic";
    case DecodeError::BadVersion: return "bad version";
    case DecodeError::UnknownStep: return "unknown step code";
    case DecodeError::BadWidth: return "bad width";
    case DecodeError::PayloadOverflow: return "payload width overflow";
    case DecodeError::BadNonceTag: return "bad nonce tag";
    case DecodeError::BadNonceLength: return "bad nonce length";
    case DecodeError::TrailingBytes: return "trailing bytes";
    }
    return "unknown decode error";
}

std::vector<std::uint8_t> encode_message(const GtpMessage& message) {
    const unsigned width = message.payload.width();
    const std::size_t payload_bytes = (width + 7) / 8;

    std::vector<std::uint8_t> frame;
    frame.reserve(kHeaderSize + payload_bytes + (message.nonce ? kNonceTlvSize : 0));
    frame.push_back(kFrameMagic);
    frame.push_back(kFrameVersion);
    put_be(frame, message.session_id, 8);
    frame.push_back(static_cast<std::uint8_t>(message.step));
    put_be(frame, width, 2);
    put_be(frame, message.payload.value(), payload_bytes);
    if (message.nonce) {
        frame.push_back(kNonceTag);
        frame.push_back(0x08);
        put_be(frame, *message.nonce, 8);
    }
    return frame;
}

DecodeResult decode_message(std::span<const std::uint8_t> frame) {
    if (frame.size() < kHeaderSize)
        return DecodeError::ShortFrame;
    if (frame[0] != kFrameMagic)
        return DecodeError::BadMagic;
    if (frame[1] != kFrameVersion)
        return DecodeError::BadVersion;
    if (!known_step(frame[10]))
        return DecodeError::UnknownStep;

    const std::uint64_t session_id = get_be(frame, 2, 8);
    const auto width = static_cast<unsigned>(get_be(frame, 11, 2));
    if (width == 0 || width > 64)
        return DecodeError::BadWidth;

    const std::size_t payload_bytes = (width + 7) / 8;
    if (frame.size() < kHeaderSize + payload_bytes)
        return DecodeError::ShortFrame;
    const std::uint64_t payload = get_be(frame, kHeaderSize, payload_bytes);
    if (width < 64 && payload >> width != 0)
        return DecodeError::PayloadOverflow;

    std::optional<std::uint64_t> nonce;
    const std::size_t rest = frame.size() - kHeaderSize - payload_bytes;
    if (rest != 0) {
        const std::size_t at = kHeaderSize + payload_bytes;
        if (frame[at] != kNonceTag)
            return DecodeError::BadNonceTag;
        if (rest < 2 || frame[at + 1] != 0x08)
            return rest < 2 ? DecodeError::ShortFrame : DecodeError::BadNonceLength;
        if (rest < kNonceTlvSize)
            return DecodeError::ShortFrame;
        if (rest > kNonceTlvSize)
            return DecodeError::TrailingBytes;
        nonce = get_be(frame, at + 2, 8);
    }

    return GtpMessage{session_id, static_cast<Step>(frame[10]), BitWord(payload, width), nonce};
}

} // namespace goldbach
