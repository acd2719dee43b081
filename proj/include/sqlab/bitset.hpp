#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sqlab {

/// Fixed-size dynamic bitset over vertex indices, used by the clique and
/// independent-set searches.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    [[nodiscard]] std::size_t universe() const { return n_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] bool any() const {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    /// Index of the lowest set bit at or after `from`, or universe() if none.
    [[nodiscard]] std::size_t next(std::size_t from = 0) const {
        if (from >= n_)
            return n_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size())
                return n_;
            w = words_[wi];
        }
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = next(0); i < n_; i = next(i + 1))
            f(i);
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace sqlab
