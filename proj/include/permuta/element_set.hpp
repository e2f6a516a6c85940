#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstddef>

namespace permuta {

/// Hard cap on group order. Largest census group is Z_256; the cap leaves
/// headroom while keeping the O(n^3) associativity check cheap.
inline constexpr int kOrderCap = 512;

/// Fixed-capacity bitset over element indices 0..kOrderCap-1.
class ElementSet {
    static constexpr int kWords = kOrderCap / 64;
    std::array<std::uint64_t, kWords> w_{};

public:
    ElementSet() = default;

    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Smallest set bit >= from, or -1.
    int next(int from = 0) const {
        if (from >= kOrderCap) return -1;
        int wi = from >> 6;
        std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return wi * 64 + std::countr_zero(cur);
            if (++wi == kWords) return -1;
            cur = w_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }

    ElementSet operator&(const ElementSet& o) const {
        ElementSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    ElementSet operator|(const ElementSet& o) const {
        ElementSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    bool operator==(const ElementSet&) const = default;
    auto operator<=>(const ElementSet& o) const {
        // lexicographic on low words first: deterministic canonical order
        for (int i = 0; i < kWords; ++i)
            if (w_[i] != o.w_[i]) return w_[i] <=> o.w_[i];
        return std::strong_ordering::equal;
    }

    bool subset_of(const ElementSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::uint64_t word(int i) const { return w_[static_cast<std::size_t>(i)]; }
    static constexpr int words() { return kWords; }
};

} // namespace permuta
