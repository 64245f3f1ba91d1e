#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace sntrank {

// Fixed-width dynamic bitset. Vertex sets and edge sets are stored as
// Bitsets; all comparisons below treat the set as its ascending member
// sequence, which is what the canonical component order needs.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size_bits() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // -1 when empty / no further bit.
    int find_first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64) + __builtin_ctzll(w_[k]);
        return -1;
    }
    int find_next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        std::size_t k = std::size_t(i) >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(k * 64) + __builtin_ctzll(w);
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }
    friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int v = find_first(); v >= 0; v = find_next(v)) out.push_back(v);
        return out;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(nbits_);
        for (auto w : w_) h = h * 1099511628211ull + std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

// Orders sets by cardinality first, then by the ascending member sequence
// ({1,4} < {2,5} because (1,4) < (2,5) lexicographically). At the first
// index where membership differs, the set containing it compares smaller.
inline int compare_sets(const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb ? -1 : 1;
    int ia = a.find_first(), ib = b.find_first();
    while (ia >= 0 && ib >= 0) {
        if (ia != ib) return ia < ib ? -1 : 1;
        ia = a.find_next(ia);
        ib = b.find_next(ib);
    }
    return 0;
}

inline bool set_less(const Bitset& a, const Bitset& b) { return compare_sets(a, b) < 0; }

}  // namespace sntrank
