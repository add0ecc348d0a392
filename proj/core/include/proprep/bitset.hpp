#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace proprep {

class WidthMismatch : public std::logic_error {
public:
    WidthMismatch(std::size_t lhs, std::size_t rhs)
        : std::logic_error("bit vector width mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
    {
    }
};

/// Fixed-width set of small integers backed by 64-bit words.
///
/// The width is chosen at construction and never changes; bits at or beyond
/// the width are always zero. Binary operations require equal widths and
/// throw WidthMismatch otherwise. The tag parameter keeps candidate sets and
/// voter sets from being mixed up.
template <typename Tag>
class BitVector {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;

    explicit BitVector(std::size_t width) : width_(width), words_(word_count(width), 0) {}

    BitVector(std::size_t width, std::initializer_list<std::size_t> members) : BitVector(width)
    {
        for (auto i : members)
            set(i);
    }

    static BitVector from_indices(std::size_t width, std::span<const std::size_t> members)
    {
        BitVector out(width);
        for (auto i : members)
            out.set(i);
        return out;
    }

    static BitVector full(std::size_t width)
    {
        BitVector out(width);
        std::fill(out.words_.begin(), out.words_.end(), ~word_type{0});
        out.trim();
        return out;
    }

    std::size_t width() const noexcept { return width_; }
    std::span<const word_type> words() const noexcept { return words_; }

    bool test(std::size_t i) const
    {
        check_index(i);
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }

    void set(std::size_t i)
    {
        check_index(i);
        words_[i / word_bits] |= word_type{1} << (i % word_bits);
    }

    void reset(std::size_t i)
    {
        check_index(i);
        words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
    }

    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept
    {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }

    bool any() const noexcept { return !none(); }

    BitVector& operator&=(const BitVector& o)
    {
        same_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    BitVector& operator|=(const BitVector& o)
    {
        same_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    /// Set difference: removes every member of `o`.
    BitVector& operator-=(const BitVector& o)
    {
        same_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    friend BitVector operator-(BitVector a, const BitVector& b) { return a -= b; }

    /// |*this ∩ o| without materialising the intersection.
    std::size_t intersection_count(const BitVector& o) const
    {
        same_width(o);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    bool intersects(const BitVector& o) const
    {
        same_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const BitVector& o) const
    {
        same_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            auto w = words_[wi];
            while (w) {
                auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(wi * word_bits + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    /// Lowest member, or width() for the empty set.
    std::size_t lowest() const noexcept
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi])
                return wi * word_bits + static_cast<std::size_t>(std::countr_zero(words_[wi]));
        return width_;
    }

    /// Highest set index plus one, or zero for the empty set.
    std::size_t extent() const noexcept
    {
        for (std::size_t wi = words_.size(); wi-- > 0;)
            if (words_[wi])
                return wi * word_bits + word_bits - static_cast<std::size_t>(std::countl_zero(words_[wi]));
        return 0;
    }

    /// Copy into a vector of a different width. Members must fit.
    BitVector resized(std::size_t width) const
    {
        if (extent() > width)
            throw std::out_of_range("bit vector member does not fit in width " + std::to_string(width));
        BitVector out(width);
        std::copy_n(words_.begin(), std::min(words_.size(), out.words_.size()), out.words_.begin());
        return out;
    }

    /// Orders sets by reading them as unsigned binary numbers, bit i worth 2^i.
    std::strong_ordering compare_as_integer(const BitVector& o) const
    {
        same_width(o);
        for (std::size_t wi = words_.size(); wi-- > 0;)
            if (words_[wi] != o.words_[wi])
                return words_[wi] <=> o.words_[wi];
        return std::strong_ordering::equal;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) noexcept
    {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }

    std::size_t hash() const noexcept
    {
        std::size_t h = std::hash<std::size_t>{}(width_);
        for (auto w : words_)
            h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    static constexpr std::size_t word_count(std::size_t width) { return (width + word_bits - 1) / word_bits; }

    void check_index(std::size_t i) const
    {
        if (i >= width_)
            throw std::out_of_range("bit index " + std::to_string(i) + " out of range for width " + std::to_string(width_));
    }

    void same_width(const BitVector& o) const
    {
        if (o.width_ != width_)
            throw WidthMismatch(width_, o.width_);
    }

    void trim() noexcept
    {
        if (auto tail = width_ % word_bits; tail != 0 && !words_.empty())
            words_.back() &= (word_type{1} << tail) - 1;
    }

    std::size_t width_ = 0;
    std::vector<word_type> words_;
};

using CandidateSet = BitVector<struct CandidateTag>;
using VoterSet = BitVector<struct VoterTag>;

template <typename Tag>
struct BitVectorHash {
    std::size_t operator()(const BitVector<Tag>& v) const noexcept { return v.hash(); }
};

} // namespace proprep
