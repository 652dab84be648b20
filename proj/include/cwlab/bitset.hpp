#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace cwlab {

/// Dynamically sized bit set over 0..size()-1. Bits beyond size() are
/// always zero, so word-wise comparison is value comparison.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void set_all()
    {
        for (auto & w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }
    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return ! any(); }

    /// First set bit at index >= from, or -1.
    int next(int from) const
    {
        if (from >= size_)
            return -1;
        int wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + std::countr_zero(w);
            if (++wi >= static_cast<int>(words_.size()))
                return -1;
            w = words_[wi];
        }
    }
    int first() const { return next(0); }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i + 1))
            out.push_back(i);
        return out;
    }

    bool is_subset_of(const Bitset & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }
    bool intersects(const Bitset & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    Bitset & operator&=(const Bitset & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset & operator|=(const Bitset & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    Bitset & operator^=(const Bitset & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
        return *this;
    }
    /// Set difference.
    Bitset & operator-=(const Bitset & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    Bitset operator~() const
    {
        Bitset r = *this;
        for (auto & w : r.words_)
            w = ~w;
        r.trim();
        return r;
    }

    friend Bitset operator&(Bitset a, const Bitset & b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset & b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset & b) { return a ^= b; }
    friend Bitset operator-(Bitset a, const Bitset & b) { return a -= b; }

    friend bool operator==(const Bitset &, const Bitset &) = default;
    friend auto operator<=>(const Bitset &, const Bitset &) = default;

    const std::vector<std::uint64_t> & words() const { return words_; }

private:
    void trim()
    {
        if (size_ & 63)
            words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace cwlab
