#include "goldbach/seqanalysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace goldbach {

namespace {

std::uint64_t selected_count(const PartitionCensus& census, CountKind which) {
    return which == CountKind::Unrestricted ? census.total : census.triangular;
}

} // namespace

BipolarSequence parity_sequence(std::span<const PartitionCensus> census, CountKind which) {
    if (census.empty())
        throw std::invalid_argument("parity_sequence: empty census");
    BipolarSequence seq;
    seq.values.reserve(census.size());
    for (const PartitionCensus& entry : census)
        seq.values.push_back(selected_count(entry, which) % 2 == 1 ? +1 : -1);
    seq.origin = std::string(which == CountKind::Unrestricted ? "unrestricted" : "triangular") +
                 " counts, n in [" + std::to_string(census.front().n) + ", " +
                 std::to_string(census.back().n) + "]";
    return seq;
}

AutocorrelationResult autocorrelation(const BipolarSequence& seq) {
    const std::size_t period = seq.values.size();
    if (period == 0)
        throw std::invalid_argument("autocorrelation: empty sequence");

    AutocorrelationResult result;
    result.period = period;
    result.c.resize(period);
    for (std::size_t k = 0; k < period; ++k) {
        std::int64_t sum = 0; // every term is +/-1, so the sum is exact
        for (std::size_t j = 0; j < period; ++j)
            sum += seq.values[j] * seq.values[(j + k) % period];
        result.c[k] = static_cast<double>(sum) / static_cast<double>(period);
    }
    return result;
}

std::vector<BandViolation> check_band_inequalities(std::span<const PartitionCensus> census,
                                                   std::uint64_t k_min) {
    if (census.empty())
        throw std::invalid_argument("check_band_inequalities: empty census");

    std::map<std::uint64_t, std::uint64_t> counts;
    for (const PartitionCensus& entry : census)
        counts.emplace(entry.n, entry.total);
    const std::uint64_t n_min = census.front().n;
    const std::uint64_t n_max = census.back().n;

    auto in_range = [&](std::uint64_t n) { return n >= n_min && n <= n_max; };
    auto count_at = [&](std::uint64_t n) {
        auto it = counts.find(n);
        if (it == counts.end())
            throw std::invalid_argument("check_band_inequalities: census gap, missing n=" +
                                        std::to_string(n));
        return it->second;
    };

    std::vector<BandViolation> violations;
    for (std::uint64_t k = k_min + 1; 6 * k + 3 <= n_max; ++k) {
        const std::uint64_t n3 = 6 * k + 3;
        const std::uint64_t n5 = 6 * k + 5;
        const std::uint64_t n7 = 6 * k + 7;
        if (in_range(n3) && in_range(n7)) {
            const std::uint64_t lhs = count_at(n3);
            const std::uint64_t rhs = count_at(n7);
            if (!(lhs <= rhs))
                violations.push_back({k, "count(6k+3) <= count(6k+7)", n3, n7, lhs, rhs});
        }
        if (in_range(n3) && in_range(n5)) {
            const std::uint64_t lhs = count_at(n5);
            const std::uint64_t rhs = count_at(n3);
            if (!(lhs >= rhs))
                violations.push_back({k, "count(6k+5) >= count(6k+3)", n5, n3, lhs, rhs});
        }
    }
    return violations;
}

ExtremaResult local_extrema(std::span<const PartitionCensus> census) {
    if (census.size() < 3)
        throw std::invalid_argument("local_extrema: need at least 3 census entries");
    for (std::size_t i = 1; i < census.size(); ++i)
        if (census[i].n != census[i - 1].n + 2)
            throw std::invalid_argument("local_extrema: census not a contiguous odd range at n=" +
                                        std::to_string(census[i].n));

    ExtremaResult result;
    for (std::size_t i = 1; i + 1 < census.size(); ++i) {
        const std::uint64_t here = census[i].total;
        const std::uint64_t prev = census[i - 1].total;
        const std::uint64_t next = census[i + 1].total;
        if (here < prev && here < next)
            result.minima.push_back(census[i].n);
        else if (here > prev && here > next)
            result.maxima.push_back(census[i].n);
    }
    return result;
}

std::vector<BandClassStats> band_summary(std::span<const PartitionCensus> census) {
    if (census.empty())
        throw std::invalid_argument("band_summary: empty census");

    std::map<unsigned, BandClassStats> classes;
    std::map<unsigned, std::uint64_t> sums;
    for (const PartitionCensus& entry : census) {
        const unsigned residue = static_cast<unsigned>(entry.n % 6);
        auto [it, fresh] = classes.try_emplace(residue);
        BandClassStats& stats = it->second;
        if (fresh) {
            stats.residue = residue;
            stats.min = entry.total;
            stats.max = entry.total;
        }
        ++stats.count;
        stats.min = std::min(stats.min, entry.total);
        stats.max = std::max(stats.max, entry.total);
        sums[residue] += entry.total;
    }

    std::vector<BandClassStats> out;
    out.reserve(classes.size());
    for (auto& [residue, stats] : classes) {
        stats.mean = static_cast<double>(sums[residue]) / static_cast<double>(stats.count);
        out.push_back(stats);
    }
    return out;
}

} // namespace goldbach
