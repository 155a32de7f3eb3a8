#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

#include "goldbach/bitword.hpp"
#include "goldbach/hashing.hpp"

using namespace goldbach;

TEST_SUITE("bitword") {

TEST_CASE("construction enforces the width invariant") {
    const BitWord w(83, 7);
    CHECK(w.value() == 83);
    CHECK(w.width() == 7);

    CHECK_NOTHROW(BitWord(127, 7));
    CHECK_THROWS_AS(BitWord(128, 7), std::invalid_argument);
    CHECK_THROWS_AS(BitWord(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(BitWord(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BitWord(0, 65), std::invalid_argument);
    CHECK_NOTHROW(BitWord(~std::uint64_t{0}, 64));

    const BitWord zero;
    CHECK(zero.value() == 0);
    CHECK(zero.width() == 1);
}

TEST_CASE("binary rendering is MSB-first at exact width") {
    CHECK(BitWord(83, 7).to_binary_string() == "1010011");
    CHECK(BitWord(31, 7).to_binary_string() == "0011111");
    CHECK(BitWord(63, 7).to_binary_string() == "0111111");
    CHECK(BitWord(67, 7).to_binary_string() == "1000011");
    CHECK(BitWord(47, 7).to_binary_string() == "0101111");
    CHECK(BitWord(99, 7).to_binary_string() == "1100011");
    CHECK(BitWord(16, 7).to_binary_string() == "0010000");
    CHECK(BitWord(0, 3).to_binary_string() == "000");
    CHECK(BitWord(1, 1).to_binary_string() == "1");
}

TEST_CASE("equality is width-sensitive") {
    CHECK(BitWord(5, 3) == BitWord(5, 3));
    CHECK(BitWord(1, 1) != BitWord(1, 2));
    CHECK(BitWord(0, 4) != BitWord(0, 5));
}

TEST_CASE("xor_mask on the worked-example words") {
    CHECK(xor_mask(BitWord(63, 7), BitWord(47, 7)) == BitWord(16, 7));
    CHECK(xor_mask(BitWord(67, 7), BitWord(99, 7)) == BitWord(32, 7));
    CHECK(xor_mask(BitWord(63, 7), BitWord(83, 7)) == BitWord(108, 7));
    CHECK(xor_mask(BitWord(67, 7), BitWord(83, 7)) == BitWord(16, 7));
    CHECK(xor_mask(BitWord(31, 7), BitWord(47, 7)) == BitWord(48, 7));
    CHECK(xor_mask(BitWord(31, 7), BitWord(83, 7)) == BitWord(76, 7));
}

TEST_CASE("xor identities and involution") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned width = 1 + static_cast<unsigned>(rng() % 64);
        const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
        const BitWord a(rng() & mask, width), b(rng() & mask, width);
        const BitWord zero(0, width);
        CHECK(xor_mask(a, zero) == a);
        CHECK(xor_mask(a, a) == zero);
        CHECK(xor_mask(xor_mask(a, b), b) == a);
        CHECK(xor_mask(a, b) == xor_mask(b, a));
    }
}

TEST_CASE("xor_mask rejects width mismatches") {
    CHECK_THROWS_AS((void)xor_mask(BitWord(1, 3), BitWord(1, 4)), WidthMismatchError);
    CHECK_THROWS_AS((void)xor_mask(BitWord(0, 64), BitWord(0, 1)), WidthMismatchError);
}

TEST_CASE("bit_width_of") {
    CHECK(bit_width_of(0) == 1);
    CHECK(bit_width_of(1) == 1);
    CHECK(bit_width_of(2) == 2);
    CHECK(bit_width_of(3) == 2);
    CHECK(bit_width_of(4) == 3);
    CHECK(bit_width_of(83) == 7);
    CHECK(bit_width_of(99) == 7);
    CHECK(bit_width_of(127) == 7);
    CHECK(bit_width_of(128) == 8);
    CHECK(bit_width_of(~std::uint64_t{0}) == 64);
}

TEST_CASE("truncate_hash keeps the low bits, digest read little-endian") {
    const std::vector<std::uint8_t> one_byte{0xAF}; // 0b1_0101111
    CHECK(truncate_hash(one_byte, 7) == BitWord(47, 7));
    CHECK(truncate_hash(one_byte, 8) == BitWord(0xAF, 8)); // full length: identity

    const std::vector<std::uint8_t> two_bytes{0x34, 0x12}; // LE for 0x1234
    CHECK(truncate_hash(two_bytes, 16) == BitWord(0x1234, 16));
    CHECK(truncate_hash(two_bytes, 4) == BitWord(0x4, 4));

    CHECK_THROWS_AS((void)truncate_hash(one_byte, 9), std::invalid_argument);
    CHECK_THROWS_AS((void)truncate_hash({}, 1), std::invalid_argument);
}

TEST_CASE("sha256 standard vectors") {
    const std::vector<std::uint8_t> abc{'a', 'b', 'c'};
    const std::vector<std::uint8_t> want_abc{
        0xba, 0x78, 0x16, 0xbf, 0x8f, 0x01, 0xcf, 0xea, 0x41, 0x41, 0x40,
        0xde, 0x5d, 0xae, 0x22, 0x23, 0xb0, 0x03, 0x61, 0xa3, 0x96, 0x17,
        0x7a, 0x9c, 0xb4, 0x10, 0xff, 0x61, 0xf2, 0x00, 0x15, 0xad};
    CHECK(sha256(abc) == want_abc);

    const std::vector<std::uint8_t> want_empty{
        0xe3, 0xb0, 0xc4, 0x42, 0x98, 0xfc, 0x1c, 0x14, 0x9a, 0xfb, 0xf4,
        0xc8, 0x99, 0x6f, 0xb9, 0x24, 0x27, 0xae, 0x41, 0xe4, 0x64, 0x9b,
        0x93, 0x4c, 0xa4, 0x95, 0x99, 0x1b, 0x78, 0x52, 0xb8, 0x55};
    CHECK(sha256({}) == want_empty);

    CHECK(default_key_hasher()(abc) == want_abc);

    // Low-bit truncation of the digest as a little-endian integer.
    CHECK(truncate_hash(want_abc, 7) == BitWord(58, 7));
    CHECK(truncate_hash(want_abc, 16) == BitWord(30906, 16));
    CHECK(truncate_hash(want_abc, 64) == BitWord(16919744041952114874ULL, 64));
}

} // TEST_SUITE
