#pragma once

#include <cstdint>
#include <vector>

#include "ffdistlab/errors.hpp"

namespace ffd {

// Arithmetic in F_q, q = p^e with p an odd prime.
//
// Elements are integer indices in [0, q): the little-endian base-p digits of
// an index are the coefficients of the residue polynomial, so index 0 is the
// additive identity, index 1 the multiplicative identity, and for e > 1 the
// generator "t" of the polynomial basis has index p.
//
// Immutable after construction; all methods are const.
class Field {
public:
    using Elt = std::uint32_t;

    // Prime field F_p.
    explicit Field(std::uint32_t p);

    // Extension field F_{p^e}. `modulus` holds the e+1 little-endian
    // coefficients of a monic irreducible polynomial over Z_p; irreducibility
    // is verified at construction by trial division against every monic
    // polynomial of degree <= e/2.
    Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    // Factors q = p^e and uses `modulus` if given, else default_modulus.
    static Field make(std::uint64_t q, std::vector<std::uint32_t> modulus = {});

    // Smallest monic irreducible polynomial of degree e over Z_p, ordered by
    // the little-endian integer encoding of its coefficient vector.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const; // throws std::domain_error for a == 0
    Elt pow(Elt a, long long n) const;

    // Embeds an arbitrary integer into the prime subfield (value mod p).
    Elt from_int(long long v) const;

    // Tr(a) = a + a^p + ... + a^{p^{e-1}}, always an element of the prime
    // subfield; returned as an integer in [0, p).
    std::uint32_t trace(Elt a) const;

    // True iff a = b^2 for some b; true for a = 0.
    bool is_square(Elt a) const;

    // Smallest index that generates the multiplicative group F_q^*.
    Elt primitive_element() const { return primitive_; }

    bool is_primitive(Elt a) const;

    // i-th base-p digit of the index (coefficient of t^i).
    std::uint32_t digit(Elt a, std::uint32_t i) const;

    void check_elt(Elt a) const {
        if (a >= q_) throw std::out_of_range("field element index out of range");
    }

private:
    std::uint32_t p_ = 0;
    std::uint32_t e_ = 1;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_; // e+1 little-endian coefficients; empty for e == 1
    Elt primitive_ = 0;

    // Lookup tables for extension fields with q <= kTableLimit.
    static constexpr std::uint32_t kTableLimit = 1u << 10;
    std::vector<Elt> add_table_;
    std::vector<Elt> mul_table_;

    std::vector<std::uint32_t> prime_factors_of_order_;

    Elt add_slow(Elt a, Elt b) const;
    Elt mul_slow(Elt a, Elt b) const;
    Elt find_primitive() const;
    void init();
};

} // namespace ffd
