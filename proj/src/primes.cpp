#include "goldbach/primes.hpp"

#include <stdexcept>
#include <string>

namespace goldbach {

PrimeTable PrimeTable::sieve(std::uint64_t limit) {
    PrimeTable table;
    table.limit_ = limit;
    table.mask_.assign(limit + 1, true);
    table.mask_[0] = false;
    if (limit >= 1)
        table.mask_[1] = false;
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!table.mask_[p])
            continue;
        for (std::uint64_t q = p * p; q <= limit; q += p)
            table.mask_[q] = false;
    }
    for (std::uint64_t q = 2; q <= limit; ++q)
        if (table.mask_[q])
            table.primes_.push_back(q);
    return table;
}

bool PrimeTable::contains(std::uint64_t q) const {
    if (q > limit_)
        throw std::out_of_range("PrimeTable::contains: " + std::to_string(q) +
                                " exceeds table limit " + std::to_string(limit_));
    return mask_[q];
}

} // namespace goldbach
