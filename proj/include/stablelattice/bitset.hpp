#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace stablelattice {

// Fixed-size bitset whose width is chosen at runtime. Rotation posets are
// small (at most n(n-1)/2 + 2 elements) but their size is only known after
// construction, so std::bitset does not fit. All binary operations require
// operands of equal size.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const {
        assert(i >= 0 && i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < size_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < size_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Index of the lowest set bit, or -1 when empty.
    int find_first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
        return -1;
    }

    DynBitset& operator|=(const DynBitset& o) {
        assert(size_ == o.size_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    DynBitset& operator&=(const DynBitset& o) {
        assert(size_ == o.size_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    // Set difference: removes every bit present in o.
    DynBitset& operator-=(const DynBitset& o) {
        assert(size_ == o.size_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator-(DynBitset a, const DynBitset& b) { return a -= b; }

    bool operator==(const DynBitset&) const = default;
    // Lexicographic on words, lowest indices most significant last; used only
    // to impose a deterministic order on collections of sets.
    std::strong_ordering operator<=>(const DynBitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t k = words_.size(); k-- > 0;)
            if (words_[k] != o.words_[k]) return words_[k] <=> o.words_[k];
        return std::strong_ordering::equal;
    }

    bool is_subset_of(const DynBitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }
    bool intersects(const DynBitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    // Calls f(i) for every set bit, in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(static_cast<int>(k * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    static DynBitset full(int size) {
        DynBitset b(size);
        for (int i = 0; i < size; ++i) b.set(i);
        return b;
    }

    // Usable as a hash-map key for oracle caches.
    struct Hash {
        std::size_t operator()(const DynBitset& b) const {
            std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(b.size_);
            for (auto w : b.words_) {
                h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace stablelattice
