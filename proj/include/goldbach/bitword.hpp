#ifndef GOLDBACH_BITWORD_HPP
#define GOLDBACH_BITWORD_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace goldbach {

struct WidthMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* A fixed-width binary word: value < 2^width, 1 <= width <= 64. All
 * masking operations require equal widths.
 */
class BitWord {
public:
    BitWord() noexcept : value_(0), width_(1) {} // narrowest zero word
    BitWord(std::uint64_t value, unsigned width);

    std::uint64_t value() const noexcept { return value_; }
    unsigned width() const noexcept { return width_; }

    // MSB-first, exactly width() characters, e.g. 16@7 -> "0010000".
    std::string to_binary_string() const;

    bool operator==(const BitWord&) const = default;

private:
    std::uint64_t value_;
    unsigned width_;
};

// Bitwise exclusive-or of two equal-width words. Throws
// WidthMismatchError otherwise.
BitWord xor_mask(const BitWord& a, const BitWord& b);

// Smallest width that can hold v (bit length); at least 1.
unsigned bit_width_of(std::uint64_t v) noexcept;

// The low `width` bits of a digest, with the digest bytes read as a
// little-endian integer (byte 0 least significant). The digest must
// carry at least `width` bits.
BitWord truncate_hash(std::span<const std::uint8_t> full_hash, unsigned width);

} // namespace goldbach

#endif
