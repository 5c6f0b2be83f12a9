#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "ffdistlab/field.hpp"

namespace ffd {

using Rank = std::uint64_t;
using Point = std::vector<Field::Elt>;

// The vector space F_q^d. Points are addressed by rank: the little-endian
// mixed-radix integer sum_i x_i * q^i in [0, q^d). Construction enforces the
// global rank-space budget so downstream dense structures stay in memory.
class Ambient {
public:
    Ambient(Field field, std::uint32_t d);

    const Field& field() const { return field_; }
    std::uint32_t dim() const { return d_; }
    std::uint64_t size() const { return size_; } // q^d

    Rank rank(const Point& x) const;
    Point unrank(Rank r) const;
    Field::Elt coord(Rank r, std::uint32_t i) const;

    // Coordinatewise group operations, expressed on ranks.
    Rank add(Rank x, Rank y) const;
    Rank sub(Rank x, Rank y) const;
    Rank neg(Rank x) const;
    Rank scale(Field::Elt c, Rank x) const;

    Field::Elt dot(Rank x, Rank y) const;
    Field::Elt norm(Rank x) const { return dot(x, x); }

    // Quadratic-form distance ||x - y|| = sum_i (x_i - y_i)^2.
    Field::Elt dist_diff(Rank x, Rank y) const;

    void check_rank(Rank r) const {
        if (r >= size_) throw std::out_of_range("rank out of range");
    }

private:
    Field field_;
    std::uint32_t d_;
    std::uint64_t size_;
};

// Dense subset of the rank space [0, n), bit per rank, with a maintained
// cardinality. Iteration visits members in ascending rank order.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::uint64_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::uint64_t universe() const { return universe_; }
    std::uint64_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Rank r) const {
        return (words_[r >> 6] >> (r & 63)) & 1u;
    }

    void insert(Rank r) {
        std::uint64_t& w = words_[r >> 6];
        const std::uint64_t bit = 1ull << (r & 63);
        if (!(w & bit)) {
            w |= bit;
            ++count_;
        }
    }

    void erase(Rank r) {
        std::uint64_t& w = words_[r >> 6];
        const std::uint64_t bit = 1ull << (r & 63);
        if (w & bit) {
            w &= ~bit;
            --count_;
        }
    }

    void clear() {
        std::fill(words_.begin(), words_.end(), 0);
        count_ = 0;
    }

    bool operator==(const PointSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    class const_iterator {
    public:
        using value_type = Rank;
        using difference_type = std::ptrdiff_t;

        const_iterator() = default;
        const_iterator(const std::vector<std::uint64_t>* words, std::size_t wi, std::uint64_t pending)
            : words_(words), wi_(wi), pending_(pending) {
            settle();
        }

        Rank operator*() const {
            return (static_cast<Rank>(wi_) << 6) + std::countr_zero(pending_);
        }

        const_iterator& operator++() {
            pending_ &= pending_ - 1;
            settle();
            return *this;
        }

        const_iterator operator++(int) {
            const_iterator t = *this;
            ++*this;
            return t;
        }

        bool operator==(const const_iterator& o) const {
            return wi_ == o.wi_ && pending_ == o.pending_;
        }

    private:
        void settle() {
            while (pending_ == 0 && words_ && wi_ + 1 < words_->size())
                pending_ = (*words_)[++wi_];
            if (pending_ == 0) wi_ = words_ ? words_->size() : 0;
        }

        const std::vector<std::uint64_t>* words_ = nullptr;
        std::size_t wi_ = 0;
        std::uint64_t pending_ = 0;
    };

    const_iterator begin() const {
        if (words_.empty()) return end();
        return const_iterator(&words_, 0, words_[0]);
    }
    const_iterator end() const { return const_iterator(&words_, words_.size(), 0); }

    std::vector<Rank> to_ranks() const {
        std::vector<Rank> out;
        out.reserve(count_);
        for (Rank r : *this) out.push_back(r);
        return out;
    }

private:
    std::uint64_t universe_ = 0;
    std::uint64_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ffd
