#include "ffdistlab/spectral.hpp"

#include <cmath>
#include <numbers>

namespace ffd {

CharacterTable::CharacterTable(const Field& field) {
    exponents.resize(field.q());
    for (Field::Elt x = 0; x < field.q(); ++x) exponents[x] = field.trace(x);
    roots.resize(field.p());
    for (std::uint32_t r = 0; r < field.p(); ++r) {
        const double angle = 2.0 * std::numbers::pi * r / field.p();
        roots[r] = {std::cos(angle), std::sin(angle)};
    }
}

double Spectrum::max_nonzero_abs() const {
    double best = 0.0;
    for (std::size_t m = 1; m < values.size(); ++m) best = std::max(best, std::abs(values[m]));
    return best;
}

namespace {

// Little-endian base-p digit rank of the Gram-mapped frequency: for e > 1 the
// trace pairing Tr(m.x) equals the Z_p inner product of digits(x) with
// G*digits(m) per coordinate, G[j][k] = Tr(t^{j+k}).
std::vector<std::vector<std::uint32_t>> gram_matrix(const Field& f) {
    std::vector<std::vector<std::uint32_t>> g(f.e(), std::vector<std::uint32_t>(f.e()));
    const Field::Elt t = f.p(); // index of the polynomial-basis generator
    for (std::uint32_t j = 0; j < f.e(); ++j)
        for (std::uint32_t k = 0; k < f.e(); ++k)
            g[j][k] = f.trace(f.pow(t, j + k));
    return g;
}

} // namespace

Spectrum fourier_indicator(const Ambient& ambient, const PointSet& s) {
    const Field& f = ambient.field();
    const std::uint64_t n = ambient.size();
    const std::uint32_t p = f.p();
    const std::uint32_t axes = ambient.dim() * f.e();
    const CharacterTable chars(f);

    std::vector<std::complex<double>> work(n, 0.0);
    for (Rank r : s) work[r] = 1.0;

    // Radix-p decimation along each of the d*e digit axes of the rank space.
    std::vector<std::complex<double>> stripe(p), transformed(p);
    std::uint64_t stride = 1;
    for (std::uint32_t axis = 0; axis < axes; ++axis, stride *= p) {
        const std::uint64_t block = stride * p;
        for (std::uint64_t hi = 0; hi < n; hi += block) {
            for (std::uint64_t lo = 0; lo < stride; ++lo) {
                const std::uint64_t base = hi + lo;
                for (std::uint32_t t = 0; t < p; ++t) stripe[t] = work[base + t * stride];
                for (std::uint32_t j = 0; j < p; ++j) {
                    std::complex<double> acc = 0.0;
                    for (std::uint32_t t = 0; t < p; ++t) {
                        const std::uint32_t r =
                            (p - static_cast<std::uint32_t>(
                                     (static_cast<std::uint64_t>(j) * t) % p)) % p;
                        acc += stripe[t] * chars.roots[r];
                    }
                    transformed[j] = acc;
                }
                for (std::uint32_t j = 0; j < p; ++j) work[base + j * stride] = transformed[j];
            }
        }
    }
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : work) v *= scale;

    if (f.e() == 1) return Spectrum{std::move(work)};

    // Permute digit-space frequencies into trace-character frequencies.
    const auto g = gram_matrix(f);
    const std::uint32_t e = f.e();
    Spectrum out;
    out.values.resize(n);
    std::vector<std::uint32_t> digits(axes);
    for (Rank m = 0; m < n; ++m) {
        Rank mm = m;
        for (std::uint32_t i = 0; i < axes; ++i) {
            digits[i] = static_cast<std::uint32_t>(mm % p);
            mm /= p;
        }
        Rank nu = 0;
        std::uint64_t sc = 1;
        for (std::uint32_t i = 0; i < ambient.dim(); ++i) {
            for (std::uint32_t j = 0; j < e; ++j) {
                std::uint64_t acc = 0;
                for (std::uint32_t kk = 0; kk < e; ++kk)
                    acc += static_cast<std::uint64_t>(g[j][kk]) * digits[i * e + kk];
                nu += sc * (acc % p);
                sc *= p;
            }
        }
        out.values[m] = work[nu];
    }
    return out;
}

Spectrum fourier_indicator_direct(const Ambient& ambient, const PointSet& s) {
    const Field& f = ambient.field();
    const std::uint64_t n = ambient.size();
    const std::uint32_t p = f.p();
    const std::uint32_t d = ambient.dim();
    const CharacterTable chars(f);

    const std::uint64_t ops = n * s.size() * d;
    if (ops > 2'000'000'000ull)
        throw BudgetError("direct transform operation budget exceeded");

    std::vector<Field::Elt> coords;
    coords.reserve(s.size() * d);
    for (Rank r : s) {
        const Point pt = ambient.unrank(r);
        coords.insert(coords.end(), pt.begin(), pt.end());
    }

    Spectrum out;
    out.values.resize(n);
    const double scale = 1.0 / static_cast<double>(n);
    std::vector<std::uint64_t> class_count(p);
    for (Rank m = 0; m < n; ++m) {
        const Point mc = ambient.unrank(m);
        std::fill(class_count.begin(), class_count.end(), 0);
        for (std::size_t xi = 0; xi < s.size(); ++xi) {
            Field::Elt dot = 0;
            const Field::Elt* x = &coords[xi * d];
            for (std::uint32_t i = 0; i < d; ++i) dot = f.add(dot, f.mul(mc[i], x[i]));
            ++class_count[chars.exponents[dot]];
        }
        std::complex<double> acc = 0.0;
        for (std::uint32_t r = 0; r < p; ++r) {
            if (class_count[r] == 0) continue;
            acc += static_cast<double>(class_count[r]) * std::conj(chars.roots[r]);
        }
        out.values[m] = acc * scale;
    }
    return out;
}

RegularAudit regular_audit(const Variety& v, const Ambient& ambient) {
    const std::uint32_t q = ambient.field().q();
    const Spectrum spec = fourier_indicator_direct(ambient, v.points);
    RegularAudit audit;
    audit.size_ratio = static_cast<double>(v.points.size()) /
                       (static_cast<double>(ambient.size()) / q);
    audit.decay_constant =
        std::pow(static_cast<double>(q), (ambient.dim() + 1) / 2.0) * spec.max_nonzero_abs();
    return audit;
}

BigInt energy_via_spectrum(const Ambient& ambient, const PointSet& a, std::uint32_t k) {
    if (k < 1) throw HypothesisError("energy level k must be at least 1");
    const Spectrum spec = fourier_indicator(ambient, a);
    long double sum = 0.0L;
    for (const auto& v : spec.values) {
        const long double sq = static_cast<long double>(std::norm(v));
        long double term = sq;
        for (std::uint32_t i = 1; i < k; ++i) term *= sq;
        sum += term;
    }
    long double factor = 1.0L;
    for (std::uint32_t i = 0; i < 2 * k - 1; ++i) factor *= static_cast<long double>(ambient.size());
    const long double value = sum * factor;
    const long double nearest = std::round(value);
    if (std::fabs(value - nearest) > 1e-6L * std::max(1.0L, std::fabs(value)))
        throw NumericError("spectral energy failed the integer rounding contract");
    if (nearest < 0.0L || nearest > 9.0e18L)
        throw NumericError("spectral energy outside exact rounding range");
    return BigInt(static_cast<std::uint64_t>(nearest));
}

double parseval_check(const Ambient& ambient, const PointSet& s) {
    const Spectrum spec = fourier_indicator(ambient, s);
    long double sum = 0.0L;
    for (const auto& v : spec.values) sum += static_cast<long double>(std::norm(v));
    const long double target =
        static_cast<long double>(s.size()) / static_cast<long double>(ambient.size());
    return static_cast<double>(std::fabs(sum - target));
}

} // namespace ffd
