#ifndef GOLDBACH_PARTITIONS_HPP
#define GOLDBACH_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "goldbach/primes.hpp"

namespace goldbach {

/* An unordered multiset of three primes summing to an odd number,
 * stored sorted: p1 <= p2 <= p3. Repetition allowed, 2 allowed.
 */
struct GoldbachTriple {
    std::uint64_t p1 = 0;
    std::uint64_t p2 = 0;
    std::uint64_t p3 = 0;

    std::uint64_t n() const noexcept { return p1 + p2 + p3; }
    auto operator<=>(const GoldbachTriple&) const = default;
};

// Triangle test: the largest side must be shorter than the sum of the
// other two. For odd n the boundary case p3 == p1 + p2 cannot occur,
// so strict and non-strict are indistinguishable on valid triples.
constexpr bool is_triangular(const GoldbachTriple& t) noexcept {
    return t.p3 < t.p1 + t.p2;
}

/* Per-odd-number record of partition counts. Parity codes map an odd
 * count to +1 and an even count to -1.
 */
struct PartitionCensus {
    std::uint64_t n = 0;
    std::uint64_t total = 0;       // number of triples of n
    std::uint64_t triangular = 0;  // number of triangular triples of n
    int parity_total = 0;
    int parity_triangular = 0;

    bool operator==(const PartitionCensus&) const = default;
};

// All triples of n in lexicographic order, each multiset exactly once.
// Preconditions (violations throw std::invalid_argument naming the
// offender): n odd, n >= 7, table.limit() >= n.
std::vector<GoldbachTriple> enumerate_triples(std::uint64_t n, const PrimeTable& table);

// Same count as enumerate_triples(n).size(), computed by a two-pointer
// sweep over the prime list per smallest element.
std::uint64_t count_triples(std::uint64_t n, const PrimeTable& table);

std::vector<GoldbachTriple> enumerate_triangular(std::uint64_t n, const PrimeTable& table);
std::uint64_t count_triangular(std::uint64_t n, const PrimeTable& table);

// One census per odd n in [lo, hi], ascending. lo and hi must be odd,
// lo >= 7, lo <= hi, hi <= table.limit().
std::vector<PartitionCensus> census_range(std::uint64_t lo, std::uint64_t hi,
                                          const PrimeTable& table);

} // namespace goldbach

#endif
