#include "ffdistlab/combinatorics.hpp"

#include <sstream>

namespace ffd {

namespace {

constexpr std::uint64_t kPairLoopBudget = 4'000'000'000ull;

std::vector<Rank> support_of(const std::vector<std::uint64_t>& counts) {
    std::vector<Rank> support;
    for (Rank r = 0; r < counts.size(); ++r)
        if (counts[r] > 0) support.push_back(r);
    return support;
}

// One convolution step: out[y + a] += in[y] over supp(in) x A.
void convolve_with_set(const Ambient& amb, const std::vector<std::uint64_t>& in,
                       const std::vector<Rank>& in_support, const std::vector<Rank>& a_ranks,
                       std::vector<std::uint64_t>& out) {
    std::fill(out.begin(), out.end(), 0);
    for (Rank y : in_support) {
        const std::uint64_t c = in[y];
        for (Rank a : a_ranks) {
            std::uint64_t& slot = out[amb.add(y, a)];
            if (__builtin_add_overflow(slot, c, &slot))
                throw BudgetError("representation count exceeds 64-bit range");
        }
    }
}

BigInt sum_of_squares(const std::vector<std::uint64_t>& counts) {
    BigInt acc = 0;
    for (std::uint64_t c : counts)
        if (c > 0) acc += BigInt(c) * c;
    return acc;
}

std::string witness_ranks(const PointSet& a) {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (Rank r : a) {
        if (!first) out << ',';
        out << r;
        first = false;
    }
    out << ']';
    return out.str();
}

} // namespace

BigInt pow_big(BigInt base, std::uint32_t exp) {
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

std::vector<RepCount> sumset_levels(const Ambient& amb, const PointSet& a, std::uint32_t l) {
    if (l < 1) throw HypothesisError("sumset level must be at least 1");
    const std::vector<Rank> a_ranks = a.to_ranks();
    std::vector<RepCount> levels;
    levels.reserve(l);

    RepCount first;
    first.level = 1;
    first.counts.assign(amb.size(), 0);
    for (Rank r : a_ranks) first.counts[r] = 1;
    first.support = a_ranks;
    levels.push_back(std::move(first));

    for (std::uint32_t lev = 2; lev <= l; ++lev) {
        RepCount next;
        next.level = lev;
        next.counts.assign(amb.size(), 0);
        convolve_with_set(amb, levels.back().counts, levels.back().support, a_ranks,
                          next.counts);
        next.support = support_of(next.counts);
        levels.push_back(std::move(next));
    }
    return levels;
}

RepCount sumset_iterate(const Ambient& amb, const PointSet& a, std::uint32_t l) {
    if (l < 1) throw HypothesisError("sumset level must be at least 1");
    const std::vector<Rank> a_ranks = a.to_ranks();
    RepCount cur;
    cur.level = 1;
    cur.counts.assign(amb.size(), 0);
    for (Rank r : a_ranks) cur.counts[r] = 1;
    cur.support = a_ranks;

    std::vector<std::uint64_t> buf(l > 1 ? amb.size() : 0, 0);
    for (std::uint32_t lev = 2; lev <= l; ++lev) {
        convolve_with_set(amb, cur.counts, cur.support, a_ranks, buf);
        cur.counts.swap(buf);
        cur.support = support_of(cur.counts);
        cur.level = lev;
    }
    return cur;
}

EnergyValue energy_pair(const Ambient& amb, const PointSet& a, const PointSet& b) {
    if (a.size() * b.size() > kPairLoopBudget)
        throw BudgetError("pair energy loop exceeds operation budget");
    std::vector<std::uint64_t> counts(amb.size(), 0);
    for (Rank ra : a)
        for (Rank rb : b) ++counts[amb.add(ra, rb)];
    return EnergyValue{sum_of_squares(counts), 2};
}

BigInt energy_k_brute(const Ambient& amb, const PointSet& a, std::uint32_t k) {
    if (k < 1) throw HypothesisError("energy level k must be at least 1");
    const std::vector<Rank> ranks = a.to_ranks();
    BigInt count = 0;
    // Depth-first over the first 2k-1 tuple slots, carrying the running value
    // of (x^1+...+x^k) - (x^{k+1}+...); the last slot is forced.
    const std::uint32_t depth_max = 2 * k - 1;
    std::vector<std::uint32_t> idx(depth_max, 0);
    std::vector<Rank> partial(depth_max + 1, 0);
    std::uint32_t depth = 0;
    while (true) {
        if (idx[depth] < ranks.size()) {
            const Rank x = ranks[idx[depth]];
            partial[depth + 1] = depth < k ? amb.add(partial[depth], x)
                                           : amb.sub(partial[depth], x);
            if (depth + 1 == depth_max) {
                if (a.contains(partial[depth + 1])) ++count;
                ++idx[depth];
            } else {
                ++depth;
                idx[depth] = 0;
            }
        } else {
            if (depth == 0) break;
            --depth;
            ++idx[depth];
        }
    }
    return count;
}

EnergyValue energy_k(const Ambient& amb, const PointSet& a, std::uint32_t k) {
    if (k < 1) throw HypothesisError("energy level k must be at least 1");
    const RepCount mu = sumset_iterate(amb, a, k);
    EnergyValue energy{sum_of_squares(mu.counts), k};

    // Independent oracle on small instances: |A|^{2k} <= 10^6.
    BigInt tuple_space = pow_big(BigInt(a.size()), 2 * k);
    if (tuple_space <= 1'000'000) {
        const BigInt brute = energy_k_brute(amb, a, k);
        if (brute != energy.value) {
            std::ostringstream witness;
            witness << "{\"check\":\"energy-brute\",\"k\":" << k
                    << ",\"convolution\":\"" << energy.value.str() << "\",\"brute\":\""
                    << brute.str() << "\",\"ranks\":" << witness_ranks(a) << "}";
            throw IdentityViolation("exact energy disagrees with brute-force oracle",
                                    witness.str());
        }
    }
    return energy;
}

DistanceSet k_distance_set(const Ambient& amb, const PointSet& a, std::uint32_t k) {
    if (k < 2) throw HypothesisError("k-distance sets need k >= 2");
    const RepCount mu = sumset_iterate(amb, a, k);
    DistanceSet values(amb.field().q());
    for (Rank y : mu.support) values.insert(amb.norm(y));
    return values;
}

DistanceSet distance_set_sum(const Ambient& amb, const PointSet& a, const PointSet& b) {
    if (a.size() * b.size() > kPairLoopBudget)
        throw BudgetError("distance-set loop exceeds operation budget");
    DistanceSet values(amb.field().q());
    for (Rank ra : a)
        for (Rank rb : b) values.insert(amb.norm(amb.add(ra, rb)));
    return values;
}

DistanceSet distance_set_diff(const Ambient& amb, const PointSet& a, bool include_diagonal) {
    if (a.size() * a.size() > kPairLoopBudget)
        throw BudgetError("distance-set loop exceeds operation budget");
    DistanceSet values(amb.field().q());
    for (Rank x : a)
        for (Rank y : a) {
            if (!include_diagonal && x == y) continue;
            values.insert(amb.dist_diff(x, y));
        }
    return values;
}

DistanceSet dot_product_set(const Ambient& amb, const PointSet& a) {
    if (a.size() * a.size() > kPairLoopBudget)
        throw BudgetError("dot-product-set loop exceeds operation budget");
    DistanceSet values(amb.field().q());
    for (Rank x : a)
        for (Rank y : a) values.insert(amb.dot(x, y));
    return values;
}

std::optional<std::string> repcount_inconsistency(std::uint64_t set_size, const RepCount& mu) {
    BigInt total = 0;
    std::vector<Rank> support;
    for (Rank r = 0; r < mu.counts.size(); ++r) {
        if (mu.counts[r] > 0) {
            total += mu.counts[r];
            support.push_back(r);
        }
    }
    const BigInt expected = pow_big(BigInt(set_size), mu.level);
    if (total != expected) {
        std::ostringstream out;
        out << "{\"check\":\"repcount-total\",\"level\":" << mu.level << ",\"sum\":\""
            << total.str() << "\",\"expected\":\"" << expected.str() << "\"}";
        return out.str();
    }
    if (support != mu.support) {
        std::ostringstream out;
        out << "{\"check\":\"repcount-support\",\"level\":" << mu.level << "}";
        return out.str();
    }
    return std::nullopt;
}

BigRat cardak_bound(const Ambient& amb, const PointSet& a, std::uint32_t l) {
    if (a.empty()) throw HypothesisError("sumset lower bound needs a non-empty set");
    if (l < 1) throw HypothesisError("sumset level must be at least 1");
    const EnergyValue el = energy_k(amb, a, l);
    return BigRat(pow_big(BigInt(a.size()), 2 * l), el.value);
}

} // namespace ffd
