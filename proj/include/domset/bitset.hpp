#ifndef DOMSET_BITSET_HPP
#define DOMSET_BITSET_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "domset/kernels.hpp"

namespace domset {

// Fixed-width bit vector with the tail word kept zero past size(). Bulk
// operations route through the kernel dispatch table.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), w_(words_for(nbits), 0) {}

    static constexpr std::size_t words_for(std::size_t nbits) { return (nbits + 63) / 64; }

    std::size_t size() const { return nbits_; }
    std::size_t word_count() const { return w_.size(); }
    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < nbits_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < nbits_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void set_all() {
        if (nbits_ == 0) return;
        std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
        trim_tail();
    }

    std::size_t count() const { return kernels::active().popcount(w_.data(), w_.size()); }
    bool full() const { return count() == nbits_; }
    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(o.nbits_ == nbits_);
        kernels::active().or_accumulate(w_.data(), o.w_.data(), w_.size());
        return *this;
    }
    void or_row(std::span<const std::uint64_t> row) {
        assert(row.size() == w_.size());
        kernels::active().or_accumulate(w_.data(), row.data(), w_.size());
    }

    bool intersects(const Bitset& o) const {
        assert(o.nbits_ == nbits_);
        return kernels::active().and_any(w_.data(), o.w_.data(), w_.size());
    }
    // any bit of *this outside o
    bool any_outside(const Bitset& o) const {
        assert(o.nbits_ == nbits_);
        return kernels::active().andnot_any(w_.data(), o.w_.data(), w_.size());
    }
    std::size_t count_outside(const Bitset& o) const {
        assert(o.nbits_ == nbits_);
        return kernels::active().andnot_popcount(w_.data(), o.w_.data(), w_.size());
    }

    // first set bit at index >= from, or size() if none
    std::size_t find_next(std::size_t from) const {
        if (from >= nbits_) return nbits_;
        std::size_t wi = from >> 6;
        std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (wi << 6) + static_cast<std::size_t>(__builtin_ctzll(cur));
            if (++wi == w_.size()) return nbits_;
            cur = w_[wi];
        }
    }
    std::size_t find_first() const { return find_next(0); }

    bool operator==(const Bitset& o) const = default;

private:
    void trim_tail() {
        const std::size_t rem = nbits_ & 63;
        if (rem != 0 && !w_.empty()) w_.back() &= (~std::uint64_t{0} >> (64 - rem));
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace domset

#endif
