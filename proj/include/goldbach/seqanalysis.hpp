#ifndef GOLDBACH_SEQANALYSIS_HPP
#define GOLDBACH_SEQANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "goldbach/partitions.hpp"

namespace goldbach {

enum class CountKind { Unrestricted, Triangular };

/* A +/-1 sequence derived from partition-count parities. */
struct BipolarSequence {
    std::vector<int> values; // each +1 or -1
    std::string origin;      // which count, which n-range
};

// Element i is +1 if the selected count of census[i] is odd, else -1.
// Empty census throws std::invalid_argument.
BipolarSequence parity_sequence(std::span<const PartitionCensus> census, CountKind which);

/* Circular autocorrelation of a bipolar sequence:
 *   c[k] = (1/period) * sum_j a[j] * a[(j+k) mod period]
 * Each c[k] is an exact integer sum divided by the period, so c[0] == 1
 * exactly and c[k] == c[period-k] bit-for-bit.
 */
struct AutocorrelationResult {
    std::size_t period = 0;
    std::vector<double> c;
};

AutocorrelationResult autocorrelation(const BipolarSequence& seq);

/* One record per failed band inequality at a given k. */
struct BandViolation {
    std::uint64_t k = 0;
    std::string inequality; // which rule failed, e.g. "count(6k+3) <= count(6k+7)"
    std::uint64_t lhs_n = 0, rhs_n = 0;
    std::uint64_t lhs_count = 0, rhs_count = 0;
};

// Checks count(6k+3) <= count(6k+7) and count(6k+5) >= count(6k+3) for
// every k > k_min whose operands fall inside the census range. A gap in
// the census (needed n missing) throws std::invalid_argument naming it.
std::vector<BandViolation> check_band_inequalities(std::span<const PartitionCensus> census,
                                                   std::uint64_t k_min);

struct ExtremaResult {
    std::vector<std::uint64_t> minima;
    std::vector<std::uint64_t> maxima;
};

// Strict local extrema of the unrestricted count over a contiguous odd
// range (census[i+1].n == census[i].n + 2, length >= 3); endpoints are
// excluded and ties produce neither a minimum nor a maximum.
ExtremaResult local_extrema(std::span<const PartitionCensus> census);

/* Unrestricted-count statistics for one residue class of n mod 6. */
struct BandClassStats {
    unsigned residue = 0; // 1, 3 or 5
    std::size_t count = 0;
    double mean = 0.0;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
};

// Stats per residue class present in the census, ascending by residue.
// Exposes the low band (n == 3 mod 6) against the high bands (1, 5).
std::vector<BandClassStats> band_summary(std::span<const PartitionCensus> census);

} // namespace goldbach

#endif
