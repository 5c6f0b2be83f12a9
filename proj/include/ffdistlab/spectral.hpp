#pragma once

#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffdistlab/ambient.hpp"
#include "ffdistlab/variety.hpp"

namespace ffd {

using BigInt = boost::multiprecision::cpp_int;

// Canonical additive character chi(x) = exp(2*pi*i*Tr(x)/p): trace exponents
// for every field element plus the p complex p-th roots of unity, so that all
// character sums reduce to integer exponent classes before any float math.
struct CharacterTable {
    explicit CharacterTable(const Field& field);

    std::vector<std::uint32_t> exponents;     // Tr(x) in [0, p), indexed by element
    std::vector<std::complex<double>> roots;  // roots[r] = exp(2*pi*i*r/p)
};

// Normalized transform values 1^_S(m) = q^{-d} sum_x chi(-m.x) 1_S(x),
// indexed by rank(m).
struct Spectrum {
    std::vector<std::complex<double>> values;

    double max_nonzero_abs() const; // max over m != 0 of |values[m]|
};

// Fast path: dimension-by-dimension radix-p decimation over Z_p^{d*e},
// O(q^d * d*e*p). For e > 1 the output frequencies are reindexed through the
// Gram matrix of the trace form so the result matches the trace character.
Spectrum fourier_indicator(const Ambient& ambient, const PointSet& s);

// Direct path: per frequency, accumulate integer counts of the p exponent
// classes of Tr(m.x) over x in S, then combine with the root cache — one
// rounding step total. O(q^d * |S| * d); guarded by an operation budget.
Spectrum fourier_indicator_direct(const Ambient& ambient, const PointSet& s);

struct RegularAudit {
    double size_ratio = 0.0;     // |V| / q^{d-1}
    double decay_constant = 0.0; // q^{(d+1)/2} * max_{m != 0} |1^_V(m)|
};

// Always uses the direct path so recorded constants are reproducible
// bit-for-bit. No verdict: the caller compares against its own threshold.
RegularAudit regular_audit(const Variety& v, const Ambient& ambient);

// E_k(A) = q^{(2k-1)d} * sum_m |1^_A(m)|^{2k}, rounded to an integer. The
// rounding residue must be within 1e-6 relative or NumericError is thrown —
// never silently rounded.
BigInt energy_via_spectrum(const Ambient& ambient, const PointSet& a, std::uint32_t k);

// Absolute residue |sum_m |1^_S(m)|^2 - |S|/q^d|; expected < 1e-9 relative.
double parseval_check(const Ambient& ambient, const PointSet& s);

} // namespace ffd
