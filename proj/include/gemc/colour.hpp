#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace gemc {

using Colour = int;
using Vertex = std::int32_t;

inline constexpr int kColourCount = 4;

/// Subset of the colour set {0,1,2,3}, stored as a 4-bit mask.
class ColourSet {
public:
    constexpr ColourSet() = default;
    constexpr ColourSet(std::initializer_list<Colour> colours) {
        for (Colour c : colours) mask_ |= static_cast<std::uint8_t>(1u << c);
    }

    static constexpr ColourSet from_mask(std::uint8_t mask) {
        ColourSet s;
        s.mask_ = mask & 0xF;
        return s;
    }
    static constexpr ColourSet all() { return from_mask(0xF); }

    constexpr bool contains(Colour c) const { return (mask_ >> c) & 1u; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const {
        int n = 0;
        for (Colour c = 0; c < kColourCount; ++c) n += contains(c) ? 1 : 0;
        return n;
    }
    constexpr ColourSet complement() const { return from_mask(static_cast<std::uint8_t>(~mask_)); }
    constexpr std::uint8_t mask() const { return mask_; }

    std::vector<Colour> colours() const {
        std::vector<Colour> out;
        for (Colour c = 0; c < kColourCount; ++c)
            if (contains(c)) out.push_back(c);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        for (Colour c : colours()) {
            if (s.size() > 1) s += ",";
            s += std::to_string(c);
        }
        return s + "}";
    }

    friend constexpr bool operator==(ColourSet, ColourSet) = default;

private:
    std::uint8_t mask_ = 0;
};

/// {0,1,2,3} minus one colour.
constexpr ColourSet all_but(Colour c) { return ColourSet::from_mask(static_cast<std::uint8_t>(0xF & ~(1u << c))); }

/// The six unordered colour pairs in the fixed order 01, 02, 03, 12, 13, 23.
inline constexpr std::array<std::pair<Colour, Colour>, 6> kColourPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int pair_index(Colour a, Colour b) {
    if (a > b) std::swap(a, b);
    for (int k = 0; k < 6; ++k)
        if (kColourPairs[k].first == a && kColourPairs[k].second == b) return k;
    return -1;
}

}  // namespace gemc
