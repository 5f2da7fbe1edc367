#pragma once

// The four circle self-maps {z, -z, zbar, -zbar} that act per torus
// coordinate, as a Klein four-group with two projections onto F2.

#include <cstdint>
#include <stdexcept>

namespace hwcoho {

// Encoded by index i of g_i.  The bit pair (p2, p3) of an index is
// g0=(0,0), g1=(1,1), g2=(1,0), g3=(0,1); this map is linear, so the
// group sum is plain XOR of indices.
class DictElem {
public:
    constexpr DictElem() = default;

    static constexpr DictElem from_index(int i) {
        if (i < 0 || i > 3)
            throw std::invalid_argument("dictionary index out of range 0..3");
        return DictElem(static_cast<std::uint8_t>(i));
    }

    constexpr int index() const { return v_; }

    // Sign projections: p2 kills g0,g3; p3 kills g0,g2.
    constexpr bool p2() const { return ((v_ ^ (v_ >> 1)) & 1) != 0; }
    constexpr bool p3() const { return (v_ & 1) != 0; }

    // Swap g2 <-> g3, fix g0 and g1 (column conjugation acts entrywise by this).
    constexpr DictElem conjugated() const {
        return DictElem(static_cast<std::uint8_t>(v_ ^ ((v_ >> 1) & 1)));
    }

    friend constexpr DictElem operator+(DictElem a, DictElem b) {
        return DictElem(static_cast<std::uint8_t>(a.v_ ^ b.v_));
    }
    DictElem& operator+=(DictElem o) { v_ ^= o.v_; return *this; }

    friend constexpr bool operator==(DictElem a, DictElem b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(DictElem a, DictElem b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(DictElem a, DictElem b) { return a.v_ < b.v_; }

private:
    constexpr explicit DictElem(std::uint8_t v) : v_(v) {}
    std::uint8_t v_ = 0;
};

inline constexpr DictElem g0{};
inline constexpr DictElem g1 = DictElem::from_index(1);
inline constexpr DictElem g2 = DictElem::from_index(2);
inline constexpr DictElem g3 = DictElem::from_index(3);

inline constexpr DictElem dict_add(DictElem a, DictElem b) { return a + b; }
inline constexpr bool p2_of(DictElem a) { return a.p2(); }
inline constexpr bool p3_of(DictElem a) { return a.p3(); }

// Map an affine circle map t -> sign*t + shift onto the dictionary:
// (+1,0) -> g0, (+1,1/2) -> g1, (-1,0) -> g2, (-1,1/2) -> g3.
inline constexpr DictElem dict_from_affine(int sign, bool half_shift) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("affine sign must be +1 or -1");
    if (sign == 1)
        return half_shift ? g1 : g0;
    return half_shift ? g3 : g2;
}

// Inverse of the (p2, p3) bit pair.
inline constexpr DictElem dict_from_bits(bool p2, bool p3) {
    std::uint8_t idx = p2 ? (p3 ? 1 : 2) : (p3 ? 3 : 0);
    return DictElem::from_index(idx);
}

} // namespace hwcoho
