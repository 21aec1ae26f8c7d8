#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gemc/colour.hpp"

namespace gemc {

/// Dense bitset over the vertices 0..order-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    template <typename Range>
    VertexSet(std::size_t universe, const Range& vertices) : VertexSet(universe) {
        for (Vertex v : vertices) insert(v);
    }

    void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= bit(v); }
    bool contains(Vertex v) const { return (words_[static_cast<std::size_t>(v) >> 6] & bit(v)) != 0; }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    std::size_t universe() const { return universe_; }

    VertexSet& operator|=(const VertexSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63u); }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace gemc
