#include "ffdistlab/ambient.hpp"

#include <string>

namespace ffd {

Ambient::Ambient(Field field, std::uint32_t d) : field_(std::move(field)), d_(d) {
    if (d_ == 0) throw HypothesisError("ambient dimension must be positive");
    const std::uint64_t budget = rank_space_budget();
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        if (n > budget / field_.q())
            throw BudgetError("rank space q^d exceeds budget of " + std::to_string(budget));
        n *= field_.q();
    }
    size_ = n;
}

Rank Ambient::rank(const Point& x) const {
    if (x.size() != d_) throw std::invalid_argument("point has wrong dimension");
    Rank r = 0;
    for (std::uint32_t i = d_; i-- > 0;) {
        field_.check_elt(x[i]);
        r = r * field_.q() + x[i];
    }
    return r;
}

Point Ambient::unrank(Rank r) const {
    check_rank(r);
    Point x(d_);
    for (std::uint32_t i = 0; i < d_; ++i) {
        x[i] = static_cast<Field::Elt>(r % field_.q());
        r /= field_.q();
    }
    return x;
}

Field::Elt Ambient::coord(Rank r, std::uint32_t i) const {
    for (std::uint32_t k = 0; k < i; ++k) r /= field_.q();
    return static_cast<Field::Elt>(r % field_.q());
}

Rank Ambient::add(Rank x, Rank y) const {
    const std::uint64_t q = field_.q();
    Rank r = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        r += scale * field_.add(static_cast<Field::Elt>(x % q), static_cast<Field::Elt>(y % q));
        x /= q;
        y /= q;
        scale *= q;
    }
    return r;
}

Rank Ambient::sub(Rank x, Rank y) const {
    const std::uint64_t q = field_.q();
    Rank r = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        r += scale * field_.sub(static_cast<Field::Elt>(x % q), static_cast<Field::Elt>(y % q));
        x /= q;
        y /= q;
        scale *= q;
    }
    return r;
}

Rank Ambient::neg(Rank x) const {
    const std::uint64_t q = field_.q();
    Rank r = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        r += scale * field_.neg(static_cast<Field::Elt>(x % q));
        x /= q;
        scale *= q;
    }
    return r;
}

Rank Ambient::scale(Field::Elt c, Rank x) const {
    const std::uint64_t q = field_.q();
    Rank r = 0;
    std::uint64_t sc = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        r += sc * field_.mul(c, static_cast<Field::Elt>(x % q));
        x /= q;
        sc *= q;
    }
    return r;
}

Field::Elt Ambient::dot(Rank x, Rank y) const {
    const std::uint64_t q = field_.q();
    Field::Elt acc = 0;
    for (std::uint32_t i = 0; i < d_; ++i) {
        acc = field_.add(acc, field_.mul(static_cast<Field::Elt>(x % q),
                                         static_cast<Field::Elt>(y % q)));
        x /= q;
        y /= q;
    }
    return acc;
}

Field::Elt Ambient::dist_diff(Rank x, Rank y) const {
    const std::uint64_t q = field_.q();
    Field::Elt acc = 0;
    for (std::uint32_t i = 0; i < d_; ++i) {
        const Field::Elt di = field_.sub(static_cast<Field::Elt>(x % q),
                                         static_cast<Field::Elt>(y % q));
        acc = field_.add(acc, field_.mul(di, di));
        x /= q;
        y /= q;
    }
    return acc;
}

} // namespace ffd
