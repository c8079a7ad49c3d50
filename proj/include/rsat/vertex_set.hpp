#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace rsat {

using Vertex = int;

inline constexpr int kMaxVertices = 256;

// Fixed-capacity vertex bitset. Capacity covers every input the verifiers
// accept; the search side never comes close to it.
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;

    static VertexSet range(int n)
    {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    [[nodiscard]] bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

    [[nodiscard]] int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    [[nodiscard]] bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    // Lowest member, or -1.
    [[nodiscard]] Vertex first() const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w])
                return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    // Lowest member strictly greater than v, or -1.
    [[nodiscard]] Vertex next(Vertex v) const
    {
        ++v;
        if (v >= kMaxVertices)
            return -1;
        int w = v >> 6;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (bits)
                return w * 64 + std::countr_zero(bits);
            if (++w == kWords)
                return -1;
            bits = words_[w];
        }
    }

    // Members strictly greater than v.
    [[nodiscard]] VertexSet after(Vertex v) const
    {
        VertexSet out = *this;
        const int cut = v + 1;
        for (int w = 0; w < kWords; ++w) {
            const int lo = w * 64;
            if (cut >= lo + 64)
                out.words_[w] = 0;
            else if (cut > lo)
                out.words_[w] &= ~std::uint64_t{0} << (cut - lo);
        }
        return out;
    }

    [[nodiscard]] std::vector<Vertex> members() const
    {
        std::vector<Vertex> out;
        for (Vertex v = first(); v != -1; v = next(v))
            out.push_back(v);
        return out;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    [[nodiscard]] int intersection_count(const VertexSet& o) const
    {
        int c = 0;
        for (int w = 0; w < kWords; ++w)
            c += std::popcount(words_[w] & o.words_[w]);
        return c;
    }

    [[nodiscard]] const std::array<std::uint64_t, kWords>& words() const { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::array<std::uint64_t, kWords> words_{};
};

} // namespace rsat
