#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffdistlab/errors.hpp"

namespace ffd {

using Rational = boost::multiprecision::cpp_rational;

// The five threshold families: |A| >> q^exponent guarantees a large (or full)
// k-distance set under each family's hypotheses.
enum class TheoremId {
    regular_baseline, // regular variety, k >= 3: (d-1)/2 + 1/(k-1)
    dim_generic,      // dim V >= (d+1)/2, k >= 3: (d+1)/2 - eps(c, beta)
    subspace,         // dim V >= (d+1)/2, k in {3,4}: (d+1)/2 - gamma-correction(alpha)
    sphere_even,      // sphere, even d >= 4: k > 3 and k = 3 branches
    sphere_odd,       // sphere, odd d, primitive radius: k > 3 and k = 3 branches
};

const char* theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);

struct TheoremParams {
    std::uint32_t d = 2;
    std::uint32_t n = 0;     // declared variety dimension (dim_generic, subspace)
    std::uint32_t k = 3;
    Rational alpha = 0;      // t_V = q^alpha, in [0, (d+1)/2]
    Rational c = 1;          // in (0, 1]; most conservative default
    Rational beta = 0;       // in [4^{-n}, 2^{-n+1}]; defaults to 4^{-n} when 0
    // sphere_odd cares about q mod 4 when d = 3 mod 4
    std::uint64_t q_mod_4 = 1;

    Rational gamma() const; // (2^{n+1} - n - 5)^{-1}; requires n >= 2
    Rational epsilon() const; // (d+1)c*beta / (2(4 + c*beta))
};

// Exact rational exponent for the given family; throws HypothesisError naming
// the failed hypothesis when the parameters violate the family's conditions.
Rational threshold_exponent(TheoremId id, const TheoremParams& params);

} // namespace ffd
