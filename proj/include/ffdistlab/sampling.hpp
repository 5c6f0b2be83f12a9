#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ffdistlab/ambient.hpp"

namespace ffd {

// splitmix64: tiny deterministic generator used for all sampling, so results
// are stable across platforms and standard-library versions.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; exact, no modulo bias.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

// One generator state per experiment cell. Extending the replicate range
// leaves earlier cells' draws untouched (the superset property audits rely
// on: doubling sample_count never changes existing samples).
std::uint64_t cell_seed(std::uint64_t seed, std::uint64_t size, std::uint64_t replicate);

// Uniform random s-subset of `universe` (distinct ranks), deterministic in
// (seed, size=s, replicate). The returned set lives in [0, rank_space).
PointSet sample_subset(const std::vector<Rank>& universe, std::uint64_t rank_space,
                       std::uint64_t s, std::uint64_t seed, std::uint64_t replicate);

// C(n, s) with saturation at `cap` (returns cap + 1 when exceeded).
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t s, std::uint64_t cap);

// Visits every s-subset of `universe` in lexicographic order. The caller is
// responsible for ensuring the count is tractable (binomial_capped).
void for_each_subset(const std::vector<Rank>& universe, std::uint64_t rank_space,
                     std::uint64_t s, const std::function<void(const PointSet&)>& fn);

} // namespace ffd
