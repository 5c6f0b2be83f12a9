#include "ffdistlab/sampling.hpp"

#include <unordered_map>

namespace ffd {

namespace {

std::uint64_t fmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t SplitMix::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    if ((n & (n - 1)) == 0) return next() & (n - 1);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
}

std::uint64_t cell_seed(std::uint64_t seed, std::uint64_t size, std::uint64_t replicate) {
    return fmix(fmix(fmix(seed) ^ size) ^ replicate);
}

PointSet sample_subset(const std::vector<Rank>& universe, std::uint64_t rank_space,
                       std::uint64_t s, std::uint64_t seed, std::uint64_t replicate) {
    const std::uint64_t n = universe.size();
    if (s > n) throw HypothesisError("sample size exceeds the universe");
    SplitMix rng(cell_seed(seed, s, replicate));

    // Partial Fisher-Yates over virtual positions; only displaced entries are
    // materialized, so sampling s of n costs O(s) memory.
    std::unordered_map<std::uint64_t, std::uint64_t> displaced;
    auto value_at = [&](std::uint64_t pos) {
        const auto it = displaced.find(pos);
        return it == displaced.end() ? pos : it->second;
    };
    PointSet out(rank_space);
    for (std::uint64_t i = 0; i < s; ++i) {
        const std::uint64_t j = i + rng.below(n - i);
        const std::uint64_t chosen = value_at(j);
        displaced[j] = value_at(i);
        out.insert(universe[chosen]);
    }
    return out;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t s, std::uint64_t cap) {
    if (s > n) return 0;
    if (s > n - s) s = n - s;
    std::uint64_t acc = 1;
    for (std::uint64_t i = 1; i <= s; ++i) {
        if (acc > cap) return cap + 1;
        acc = acc * (n - s + i) / i;
    }
    return acc > cap ? cap + 1 : acc;
}

void for_each_subset(const std::vector<Rank>& universe, std::uint64_t rank_space,
                     std::uint64_t s, const std::function<void(const PointSet&)>& fn) {
    const std::uint64_t n = universe.size();
    if (s > n) throw HypothesisError("subset size exceeds the universe");
    PointSet set(rank_space);
    if (s == 0) {
        fn(set);
        return;
    }
    std::vector<std::uint64_t> idx(s);
    for (std::uint64_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        set.clear();
        for (std::uint64_t i : idx) set.insert(universe[i]);
        fn(set);
        // advance the combination odometer
        std::uint64_t i = s;
        while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::uint64_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace ffd
