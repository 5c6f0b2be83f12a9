#include "ffdistlab/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffd {

namespace {

bool is_odd_prime(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

std::vector<std::uint32_t> digits_of(std::uint64_t v, std::uint32_t p, std::uint32_t n) {
    std::vector<std::uint32_t> d(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        d[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return d;
}

// Remainder of `a` modulo monic `m`, both little-endian coefficient vectors
// over Z_p. Degree of a vector is its last index with a nonzero entry.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& m,
                                    std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t j = 0; j <= dm; ++j) {
                std::uint64_t v = a[shift + j] + static_cast<std::uint64_t>(lead) * (p - m[j]) % p;
                a[shift + j] = static_cast<std::uint32_t>(v % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool is_zero(const std::vector<std::uint32_t>& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Trial division against every monic polynomial of degree 1..deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& m, std::uint32_t p) {
    const std::uint32_t deg = static_cast<std::uint32_t>(m.size()) - 1;
    for (std::uint32_t dg = 1; dg <= deg / 2; ++dg) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < dg; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            std::vector<std::uint32_t> g = digits_of(c, p, dg);
            g.push_back(1);
            if (is_zero(poly_mod(m, g, p))) return false;
        }
    }
    return true;
}

} // namespace

Field::Field(std::uint32_t p) : p_(p), e_(1) { init(); }

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    init();
}

Field Field::make(std::uint64_t q, std::vector<std::uint32_t> modulus) {
    if (q < 3) throw HypothesisError("field order must be an odd prime power >= 3");
    std::uint64_t p = 0;
    for (std::uint64_t f = 3; f * f <= q; f += 2) {
        if (q % f == 0) { p = f; break; }
    }
    if (p == 0) p = q; // q itself is prime (oddness checked below)
    if (q % 2 == 0 || !is_odd_prime(p))
        throw HypothesisError("field order must be a power of an odd prime");
    std::uint32_t e = 0;
    std::uint64_t t = q;
    while (t > 1) {
        if (t % p != 0) throw HypothesisError("field order must be a prime power");
        t /= p;
        ++e;
    }
    if (e == 1) {
        if (!modulus.empty())
            throw HypothesisError("a modulus polynomial only applies to extension fields");
        return Field(static_cast<std::uint32_t>(p));
    }
    if (modulus.empty()) modulus = default_modulus(static_cast<std::uint32_t>(p), e);
    return Field(static_cast<std::uint32_t>(p), e, std::move(modulus));
}

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p, std::uint32_t e) {
    if (!is_odd_prime(p)) throw HypothesisError("characteristic must be an odd prime");
    if (e < 2) throw HypothesisError("extension degree must be at least 2");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
        std::vector<std::uint32_t> m = digits_of(c, p, e);
        m.push_back(1);
        if (is_irreducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

void Field::init() {
    if (!is_odd_prime(p_)) throw HypothesisError("characteristic must be an odd prime");
    if (e_ < 1) throw HypothesisError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        q *= p_;
        if (q > (1ull << 31)) throw BudgetError("field order exceeds 2^31");
    }
    q_ = static_cast<std::uint32_t>(q);

    if (e_ == 1) {
        modulus_.clear();
    } else {
        if (modulus_.size() != e_ + 1)
            throw HypothesisError("modulus must have degree equal to the extension degree");
        for (auto& c : modulus_) c %= p_;
        if (modulus_.back() != 1) throw HypothesisError("modulus must be monic");
        if (!is_irreducible(modulus_, p_))
            throw HypothesisError("modulus polynomial is reducible");
    }

    // Prime factors of the multiplicative group order, for primitivity tests.
    std::uint64_t n = q_ - 1;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            prime_factors_of_order_.push_back(static_cast<std::uint32_t>(f));
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) prime_factors_of_order_.push_back(static_cast<std::uint32_t>(n));

    if (e_ > 1 && q_ <= kTableLimit) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Elt a = 0; a < q_; ++a)
            for (Elt b = 0; b < q_; ++b) {
                add_table_[static_cast<std::size_t>(a) * q_ + b] = add_slow(a, b);
                mul_table_[static_cast<std::size_t>(a) * q_ + b] = mul_slow(a, b);
            }
    }

    primitive_ = find_primitive();
}

Field::Elt Field::add(Elt a, Elt b) const {
    if (e_ == 1) return (a + b) % p_;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return add_slow(a, b);
}

Field::Elt Field::add_slow(Elt a, Elt b) const {
    Elt r = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Field::Elt Field::neg(Elt a) const {
    if (e_ == 1) return (p_ - a) % p_;
    Elt r = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Field::Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Field::Elt Field::mul(Elt a, Elt b) const {
    if (e_ == 1) return static_cast<Elt>(static_cast<std::uint64_t>(a) * b % p_);
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
    return mul_slow(a, b);
}

Field::Elt Field::mul_slow(Elt a, Elt b) const {
    std::vector<std::uint64_t> buf(2 * e_ - 1, 0);
    {
        std::uint32_t ai = a;
        for (std::uint32_t i = 0; i < e_; ++i, ai /= p_) {
            const std::uint64_t da = ai % p_;
            if (da == 0) continue;
            std::uint32_t bj = b;
            for (std::uint32_t j = 0; j < e_; ++j, bj /= p_) buf[i + j] += da * (bj % p_);
        }
    }
    for (auto& v : buf) v %= p_;
    // Fold t^i for i >= e back down using t^e = -(m_0 + ... + m_{e-1} t^{e-1}).
    for (std::size_t i = buf.size(); i-- > e_;) {
        const std::uint64_t c = buf[i];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            buf[i - e_ + j] = (buf[i - e_ + j] + c * (p_ - modulus_[j])) % p_;
        buf[i] = 0;
    }
    Elt r = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += static_cast<Elt>(buf[i]) * scale;
        scale *= p_;
    }
    return r;
}

Field::Elt Field::pow(Elt a, long long n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    Elt r = 1;
    Elt base = a;
    auto k = static_cast<unsigned long long>(n);
    while (k > 0) {
        if (k & 1ull) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

Field::Elt Field::inv(Elt a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
    return pow(a, static_cast<long long>(q_) - 2);
}

Field::Elt Field::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elt>(r);
}

std::uint32_t Field::trace(Elt a) const {
    Elt acc = a;
    Elt frob = a;
    for (std::uint32_t i = 1; i < e_; ++i) {
        frob = pow(frob, p_);
        acc = add(acc, frob);
    }
    if (acc >= p_) throw std::logic_error("trace left the prime subfield");
    return acc;
}

bool Field::is_square(Elt a) const {
    if (a == 0) return true;
    return pow(a, (static_cast<long long>(q_) - 1) / 2) == 1;
}

bool Field::is_primitive(Elt a) const {
    if (a == 0) return false;
    for (std::uint32_t f : prime_factors_of_order_)
        if (pow(a, (static_cast<long long>(q_) - 1) / f) == 1) return false;
    return true;
}

Field::Elt Field::find_primitive() const {
    for (Elt a = 2; a < q_; ++a)
        if (is_primitive(a)) return a;
    throw std::logic_error("no primitive element found"); // unreachable for q >= 3
}

std::uint32_t Field::digit(Elt a, std::uint32_t i) const {
    for (std::uint32_t k = 0; k < i; ++k) a /= p_;
    return a % p_;
}

} // namespace ffd
