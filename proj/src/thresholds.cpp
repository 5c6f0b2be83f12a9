#include "ffdistlab/thresholds.hpp"

namespace ffd {

namespace {

using boost::multiprecision::cpp_int;

void require(bool ok, const char* hypothesis) {
    if (!ok) throw HypothesisError(std::string("hypothesis failed: ") + hypothesis);
}

} // namespace

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::regular_baseline: return "baseline";
        case TheoremId::dim_generic: return "dim-generic";
        case TheoremId::subspace: return "subspace";
        case TheoremId::sphere_even: return "sphere-even";
        case TheoremId::sphere_odd: return "sphere-odd";
    }
    throw std::logic_error("unknown theorem id");
}

TheoremId theorem_from_name(const std::string& name) {
    for (TheoremId id : {TheoremId::regular_baseline, TheoremId::dim_generic,
                         TheoremId::subspace, TheoremId::sphere_even, TheoremId::sphere_odd})
        if (name == theorem_name(id)) return id;
    throw HypothesisError("unknown threshold family: '" + name + "'");
}

Rational TheoremParams::gamma() const {
    require(n >= 2, "variety dimension n >= 2 for the gamma exponent");
    const cpp_int denom = (cpp_int(1) << (n + 1)) - n - 5;
    require(denom > 0, "2^(n+1) - n - 5 > 0");
    return Rational(1, denom);
}

Rational TheoremParams::epsilon() const {
    Rational b = beta;
    if (b == 0) b = Rational(1, cpp_int(1) << (2 * n)); // default 4^{-n}
    require(c > 0 && c <= 1, "c in (0, 1]");
    require(b >= Rational(1, cpp_int(1) << (2 * n)), "beta >= 4^{-n}");
    require(b <= Rational(2, cpp_int(1) << n), "beta <= 2^{-n+1}");
    const Rational cb = c * b;
    return Rational(d + 1) * cb / (2 * (4 + cb));
}

Rational threshold_exponent(TheoremId id, const TheoremParams& p) {
    switch (id) {
        case TheoremId::regular_baseline:
            require(p.d >= 2, "d >= 2");
            require(p.k >= 3, "k >= 3");
            return Rational(p.d - 1, 2) + Rational(1, p.k - 1);

        case TheoremId::dim_generic:
            require(p.d >= 2, "d >= 2");
            require(p.k >= 3, "k >= 3");
            require(2 * p.n >= p.d + 1, "dim V >= (d+1)/2");
            return Rational(p.d + 1, 2) - p.epsilon();

        case TheoremId::subspace: {
            require(p.d >= 2, "d >= 2");
            require(2 * p.n >= p.d + 1, "dim V >= (d+1)/2");
            require(p.k == 3 || p.k == 4, "k in {3, 4}");
            require(p.alpha >= 0, "alpha >= 0");
            require(p.alpha <= Rational(p.d + 1, 2), "alpha <= (d+1)/2");
            const Rational g = p.gamma();
            const Rational numer = g * (Rational(p.d + 1) - 2 * p.alpha);
            const Rational denom = p.k == 3 ? 2 * (2 + g) : 2 * (1 + g);
            return Rational(p.d + 1, 2) - numer / denom;
        }

        case TheoremId::sphere_even:
            require(p.d >= 4, "d >= 4");
            require(p.d % 2 == 0, "d even");
            require(p.k >= 3, "k >= 3");
            if (p.k == 3) return Rational(p.d, 2) - Rational(1, 4);
            return Rational(p.d - 1, 2) + Rational(1, 4 * (p.k - 2));

        case TheoremId::sphere_odd:
            require(p.d >= 3, "d >= 3");
            require(p.d % 2 == 1, "d odd");
            require(p.d % 4 == 1 || p.q_mod_4 == 1,
                    "d = 1 mod 4, or d = 3 mod 4 with q = 1 mod 4");
            require(p.k >= 3, "k >= 3");
            if (p.k == 3) return Rational(p.d, 2) - Rational(1, 3);
            return Rational(p.d - 1, 2) + Rational(1, 2 * (2 * p.k - 3));
    }
    throw std::logic_error("unknown theorem id");
}

} // namespace ffd
