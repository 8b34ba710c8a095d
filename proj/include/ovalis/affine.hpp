#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ovalis {

// Integer value that may depend linearly on the free parameter L0.
// Exact integer arithmetic throughout; no rounding anywhere.
struct Affine {
    std::int64_t c0 = 0;  // constant term
    std::int64_t c1 = 0;  // multiplier of L0

    constexpr Affine() = default;
    constexpr Affine(std::int64_t constant, std::int64_t coeff = 0) : c0(constant), c1(coeff) {}

    static constexpr Affine l0() { return Affine{0, 1}; }

    constexpr bool is_constant() const { return c1 == 0; }

    std::int64_t as_int() const {
        if (!is_constant()) throw std::logic_error("affine value is not constant: " + str());
        return c0;
    }

    // value with L0 substituted
    constexpr std::int64_t at(std::int64_t l0_value) const { return c0 + c1 * l0_value; }

    friend constexpr Affine operator+(Affine a, Affine b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend constexpr Affine operator-(Affine a, Affine b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
    friend constexpr Affine operator-(Affine a) { return {-a.c0, -a.c1}; }
    friend constexpr bool operator==(Affine a, Affine b) { return a.c0 == b.c0 && a.c1 == b.c1; }
    friend constexpr bool operator!=(Affine a, Affine b) { return !(a == b); }
    friend constexpr bool operator<(Affine a, Affine b) {
        return a.c1 != b.c1 ? a.c1 < b.c1 : a.c0 < b.c0;
    }

    std::string str() const;
};

// Parses cells like "-4", "L0", "-L0", "L0+3", "1-L0", "2L0-1".
Affine parse_affine(const std::string& text);

}  // namespace ovalis
