#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace packlab {

/// Runtime-sized bitset over vertex ids. Sized once; all binary operations
/// require operands of equal size.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const Word* data() const noexcept { return words_.data(); }
    Word* data() noexcept { return words_.data(); }

    bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

    void set_all() noexcept {
        std::fill(words_.begin(), words_.end(), ~Word{0});
        trim();
    }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const noexcept {
        return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
    }
    bool none() const noexcept { return !any(); }

    /// Index of the lowest set bit at or after `from`, or npos.
    std::size_t find_next(std::size_t from) const noexcept {
        if (from >= size_) return npos;
        std::size_t wi = from / kWordBits;
        Word w = words_[wi] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return npos;
            w = words_[wi];
        }
    }
    std::size_t find_first() const noexcept { return find_next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w != 0) {
                f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_vector() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    Bitset& operator-=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) noexcept { return a -= b; }

    bool intersects(const Bitset& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    std::size_t intersection_count(const Bitset& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }
    bool is_subset_of(const Bitset& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;
    friend auto operator<=>(const Bitset& a, const Bitset& b) noexcept {
        // Lexicographic on the word representation; used only for sorting signatures.
        return a.words_ <=> b.words_;
    }

private:
    void trim() noexcept {
        if (size_ % kWordBits != 0 && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace packlab
