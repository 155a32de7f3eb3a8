#include "goldbach/partitions.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace goldbach {

namespace {

void check_preconditions(std::uint64_t n, const PrimeTable& table, const char* op) {
    if (n % 2 == 0)
        throw std::invalid_argument(std::string(op) + ": n=" + std::to_string(n) + " is even");
    if (n < 7)
        throw std::invalid_argument(std::string(op) + ": n=" + std::to_string(n) +
                                    " is below 7, the smallest odd number with a triple");
    if (table.limit() < n)
        throw std::invalid_argument(std::string(op) + ": prime table limit " +
                                    std::to_string(table.limit()) + " is smaller than n=" +
                                    std::to_string(n));
}

// Index of the last prime <= bound, or -1.
std::ptrdiff_t last_prime_at_most(std::span<const std::uint64_t> primes, std::uint64_t bound) {
    auto it = std::upper_bound(primes.begin(), primes.end(), bound);
    return static_cast<std::ptrdiff_t>(it - primes.begin()) - 1;
}

// Pairs (p[lo], p[hi]) with lo in [first, ...], lo <= hi, hi <= hi_cap,
// summing to target. Two-pointer sweep over the sorted prime list.
std::uint64_t count_prime_pairs(std::span<const std::uint64_t> primes, std::ptrdiff_t first,
                                std::ptrdiff_t hi_cap, std::uint64_t target) {
    std::ptrdiff_t lo = first;
    std::ptrdiff_t hi = std::min(hi_cap, last_prime_at_most(primes, target - primes[first]));
    std::uint64_t count = 0;
    while (lo <= hi) {
        const std::uint64_t sum = primes[lo] + primes[hi];
        if (sum == target) {
            ++count;
            ++lo;
            --hi;
        } else if (sum < target) {
            ++lo;
        } else {
            --hi;
        }
    }
    return count;
}

std::uint64_t count_with_cap(std::uint64_t n, const PrimeTable& table,
                             std::uint64_t largest_allowed) {
    const auto primes = table.primes();
    const std::ptrdiff_t hi_cap = last_prime_at_most(primes, largest_allowed);
    std::uint64_t count = 0;
    for (std::ptrdiff_t i = 0; i <= hi_cap && i < std::ssize(primes) && 3 * primes[i] <= n; ++i)
        count += count_prime_pairs(primes, i, hi_cap, n - primes[i]);
    return count;
}

} // namespace

std::vector<GoldbachTriple> enumerate_triples(std::uint64_t n, const PrimeTable& table) {
    check_preconditions(n, table, "enumerate_triples");
    const auto primes = table.primes();
    std::vector<GoldbachTriple> out;
    for (std::size_t i = 0; i < primes.size() && 3 * primes[i] <= n; ++i) {
        const std::uint64_t p1 = primes[i];
        for (std::size_t j = i; j < primes.size() && p1 + 2 * primes[j] <= n; ++j) {
            const std::uint64_t p2 = primes[j];
            const std::uint64_t p3 = n - p1 - p2; // >= p2 by the loop bound
            if (table.contains(p3))
                out.push_back({p1, p2, p3});
        }
    }
    return out;
}

std::uint64_t count_triples(std::uint64_t n, const PrimeTable& table) {
    check_preconditions(n, table, "count_triples");
    return count_with_cap(n, table, n);
}

std::vector<GoldbachTriple> enumerate_triangular(std::uint64_t n, const PrimeTable& table) {
    check_preconditions(n, table, "enumerate_triangular");
    std::vector<GoldbachTriple> out;
    for (const GoldbachTriple& t : enumerate_triples(n, table))
        if (is_triangular(t))
            out.push_back(t);
    return out;
}

std::uint64_t count_triangular(std::uint64_t n, const PrimeTable& table) {
    check_preconditions(n, table, "count_triangular");
    // p3 < p1 + p2 for the sorted triple is exactly 2*p3 < n.
    return count_with_cap(n, table, (n - 1) / 2);
}

std::vector<PartitionCensus> census_range(std::uint64_t lo, std::uint64_t hi,
                                          const PrimeTable& table) {
    if (lo > hi)
        throw std::invalid_argument("census_range: lo=" + std::to_string(lo) + " exceeds hi=" +
                                    std::to_string(hi));
    if (lo % 2 == 0 || hi % 2 == 0)
        throw std::invalid_argument("census_range: bounds must be odd, got [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    check_preconditions(lo, table, "census_range");
    check_preconditions(hi, table, "census_range");

    std::vector<PartitionCensus> out;
    out.reserve((hi - lo) / 2 + 1);
    for (std::uint64_t n = lo; n <= hi; n += 2) {
        const std::uint64_t total = count_triples(n, table);
        const std::uint64_t triangular = count_triangular(n, table);
        out.push_back({
            .n = n,
            .total = total,
            .triangular = triangular,
            .parity_total = total % 2 == 1 ? +1 : -1,
            .parity_triangular = triangular % 2 == 1 ? +1 : -1,
        });
    }
    return out;
}

} // namespace goldbach
