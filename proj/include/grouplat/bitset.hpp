#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace grouplat {

// Fixed-capacity element set. Element i of a group maps to bit i; all
// subgroup set algebra (meet = AND, containment, canonical ordering) is
// word-wise. Capacity bounds the lattice order cap.
class ElementSet {
public:
    static constexpr int kCapacity = 256;
    static constexpr int kWords = kCapacity / 64;

    constexpr ElementSet() : w_{} {}

    static ElementSet single(int i) {
        ElementSet s;
        s.set(i);
        return s;
    }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    // true iff *this is a subset of other
    bool subset_of(const ElementSet& other) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & ~other.w_[i]) return false;
        return true;
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

    int min_element() const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < kWords; ++i) {
            uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(i * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<size_t>(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    size_t hash() const {
        uint64_t h = 0xcbf29ce484222325ull;
        for (uint64_t w : w_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<size_t>(h);
    }

    // Canonical order: the set whose smallest differing element is present
    // comes first. Matches lexicographic order of sorted member lists.
    static int compare(const ElementSet& a, const ElementSet& b) {
        for (int i = 0; i < kWords; ++i) {
            uint64_t x = a.w_[i] ^ b.w_[i];
            if (x) {
                int bit = std::countr_zero(x);
                return ((a.w_[i] >> bit) & 1u) ? -1 : 1;
            }
        }
        return 0;
    }

private:
    std::array<uint64_t, kWords> w_;
};

struct ElementSetHash {
    size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace grouplat
