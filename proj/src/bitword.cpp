#include "goldbach/bitword.hpp"

#include <bit>
#include <string>

namespace goldbach {

namespace {

constexpr std::uint64_t width_mask(unsigned width) noexcept {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

} // namespace

BitWord::BitWord(std::uint64_t value, unsigned width) : value_(value), width_(width) {
    if (width == 0 || width > 64)
        throw std::invalid_argument("BitWord: width " + std::to_string(width) +
                                    " outside [1, 64]");
    if ((value & ~width_mask(width)) != 0)
        throw std::invalid_argument("BitWord: value " + std::to_string(value) +
                                    " does not fit in " + std::to_string(width) + " bits");
}

std::string BitWord::to_binary_string() const {
    std::string out(width_, '0');
    for (unsigned i = 0; i < width_; ++i)
        if (value_ >> (width_ - 1 - i) & 1)
            out[i] = '1';
    return out;
}

BitWord xor_mask(const BitWord& a, const BitWord& b) {
    if (a.width() != b.width())
        throw WidthMismatchError("xor_mask: width " + std::to_string(a.width()) + " vs " +
                                 std::to_string(b.width()));
    return BitWord(a.value() ^ b.value(), a.width());
}

unsigned bit_width_of(std::uint64_t v) noexcept {
    const unsigned bits = static_cast<unsigned>(std::bit_width(v));
    return bits == 0 ? 1 : bits;
}

BitWord truncate_hash(std::span<const std::uint8_t> full_hash, unsigned width) {
    if (width == 0 || width > 64)
        throw std::invalid_argument("truncate_hash: width " + std::to_string(width) +
                                    " outside [1, 64]");
    if (full_hash.size() * 8 < width)
        throw std::invalid_argument("truncate_hash: digest has " +
                                    std::to_string(full_hash.size() * 8) +
                                    " bits, need at least " + std::to_string(width));
    // Digest bytes as a little-endian integer; only the low 8 bytes can
    // contribute to a <=64-bit word.
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < full_hash.size() && i < 8; ++i)
        value |= static_cast<std::uint64_t>(full_hash[i]) << (8 * i);
    return BitWord(value & width_mask(width), width);
}

} // namespace goldbach
