#pragma once

#include "ovalis/codes.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace ovalis {

// Exact rational on 64-bit parts. All systems here are tiny with entries in
// [-10, 10], so overflow is not a practical concern; normalize keeps parts small.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rat operator+(Rat a, Rat b) { return Rat{a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rat operator-(Rat a, Rat b) { return Rat{a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rat operator*(Rat a, Rat b) { return Rat{a.num * b.num, a.den * b.den}; }
    friend Rat operator/(Rat a, Rat b) { return Rat{a.num * b.den, a.den * b.num}; }
    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }

    std::string str() const {
        return is_integer() ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// One linear equation over named unknowns, tagged with its provenance so a
// failed fit can name the offending table cell.
struct Equation {
    std::map<std::string, Rat> coeffs;
    Rat rhs;
    std::string tag;
};

struct Solution {
    std::map<std::string, Rat> values;
    bool unique = false;                     // true iff every unknown is pinned
    std::vector<std::string> free_unknowns;  // unknowns not determined by the system
};

// Exact Gauss-Jordan elimination. Throws FitError naming the violated
// equation's tag when the system is inconsistent.
Solution solve_exact(const std::vector<Equation>& equations);

}  // namespace ovalis
