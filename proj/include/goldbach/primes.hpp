#ifndef GOLDBACH_PRIMES_HPP
#define GOLDBACH_PRIMES_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace goldbach {

/* Sieve result: the ordered primes up to an inclusive limit plus a
 * constant-time membership bitmap over [0, limit]. Immutable after
 * construction; safe to share across threads.
 */
class PrimeTable {
public:
    static PrimeTable sieve(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }

    // Throws std::out_of_range for q > limit(); never silently reports
    // an out-of-range query as composite.
    bool contains(std::uint64_t q) const;

private:
    PrimeTable() = default;

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
    std::vector<bool> mask_; // mask_[q] == q is prime, size limit_+1
};

inline PrimeTable sieve_up_to(std::uint64_t limit) { return PrimeTable::sieve(limit); }

inline bool is_prime(std::uint64_t q, const PrimeTable& table) { return table.contains(q); }

} // namespace goldbach

#endif
