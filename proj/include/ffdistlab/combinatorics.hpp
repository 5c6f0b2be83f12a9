#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffdistlab/ambient.hpp"
#include "ffdistlab/spectral.hpp"

namespace ffd {

using BigRat = boost::multiprecision::cpp_rational;

// mu_l over the rank space: counts[y] = number of ordered l-tuples of A
// summing to y. support lists the ranks with positive count in ascending
// order (that is the sumset A_l).
struct RepCount {
    std::uint32_t level = 0;
    std::vector<std::uint64_t> counts;
    std::vector<Rank> support;

    std::uint64_t sumset_size() const { return support.size(); }
};

struct EnergyValue {
    BigInt value;
    std::uint32_t k = 0;
};

// Subset of F_q (the values a distance/dot-product set attains), as a bitset
// over element indices.
using DistanceSet = PointSet;

// mu_1 = indicator of A; mu_l = mu_{l-1} convolved with mu_1 over (F_q^d, +),
// exact in integers. Counts that would overflow 64 bits raise BudgetError.
RepCount sumset_iterate(const Ambient& ambient, const PointSet& a, std::uint32_t l);

// All levels 1..l in one pass (level i at index i-1).
std::vector<RepCount> sumset_levels(const Ambient& ambient, const PointSet& a, std::uint32_t l);

// E(A,B) = |{(a,a',b,b') : a+b = a'+b'}| = sum_y r_{A+B}(y)^2, exact.
EnergyValue energy_pair(const Ambient& ambient, const PointSet& a, const PointSet& b);

// E_k(A) = sum_y mu_k(y)^2, exact. When |A|^{2k} <= 10^6 an independent
// brute-force tuple enumeration is run as an oracle and must agree.
EnergyValue energy_k(const Ambient& ambient, const PointSet& a, std::uint32_t k);

// Forced-last-coordinate tuple enumeration: count (2k-1)-tuples over A whose
// balancing 2k-th element lies in A. O(|A|^{2k-1}); the naive oracle.
BigInt energy_k_brute(const Ambient& ambient, const PointSet& a, std::uint32_t k);

// Delta_k(A) = { |y| : y in A_k }, k >= 2.
DistanceSet k_distance_set(const Ambient& ambient, const PointSet& a, std::uint32_t k);

// Delta_2(A,B) = { |x+y| : x in A, y in B }.
DistanceSet distance_set_sum(const Ambient& ambient, const PointSet& a, const PointSet& b);

// { ||x-y|| : x,y in A }; include_diagonal=false drops the x = y pairs
// (0 may still appear from distinct points at vanishing distance).
DistanceSet distance_set_diff(const Ambient& ambient, const PointSet& a,
                              bool include_diagonal = true);

// Pi_2(A) = { x.y : x,y in A }.
DistanceSet dot_product_set(const Ambient& ambient, const PointSet& a);

// |A|^{2l} / E_l(A) as an exact rational; the sumset lower bound that |A_l|
// must meet.
BigRat cardak_bound(const Ambient& ambient, const PointSet& a, std::uint32_t l);

BigInt pow_big(BigInt base, std::uint32_t exp);

// Internal-consistency audit of a representation count: the counts must sum
// to |A|^level and the support list must match the positive entries. Returns
// a witness description on failure, nothing when consistent.
std::optional<std::string> repcount_inconsistency(std::uint64_t set_size, const RepCount& mu);

} // namespace ffd
