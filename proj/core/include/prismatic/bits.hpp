#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace prismatic {

// Fixed-width set of vertex ids 0..511.  One adjacency row of a Graph.
// Fixed width keeps every set operation a handful of word ops regardless of
// the graph order.
class VertexSet {
  public:
    static constexpr int kMaxBits = 512;
    static constexpr int kWords = kMaxBits / 64;

    constexpr VertexSet() : w_{} {}

    static VertexSet universe(int n) {
        VertexSet s;
        for (int i = 0; i < kWords; ++i) {
            if (n >= (i + 1) * 64)
                s.w_[i] = ~0ULL;
            else if (n > i * 64)
                s.w_[i] = (1ULL << (n - i * 64)) - 1;
        }
        return s;
    }

    void set(int v) { w_[v >> 6] |= 1ULL << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(1ULL << (v & 63)); }
    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }

    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    // First set bit, or -1.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    // First set bit strictly above v, or -1.
    int next(int v) const {
        int i = (v + 1) >> 6;
        if (i >= kWords) return -1;
        std::uint64_t word = w_[i] & (~0ULL << ((v + 1) & 63));
        while (true) {
            if (word) return i * 64 + std::countr_zero(word);
            if (++i >= kWords) return -1;
            word = w_[i];
        }
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }

  private:
    std::array<std::uint64_t, kWords> w_;
};

}  // namespace prismatic
