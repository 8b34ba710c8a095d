#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ovalis {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct CoefficientError : Error {
    using Error::Error;
};
struct FitError : Error {
    using Error::Error;
};

// Sign of the outer oval. Joint stands for the paired sign choice (pm,mp):
// the two concrete readings (+,-) and (-,+) of one table row.
enum class Sign : std::int8_t { Plus = +1, Minus = -1, Joint = 0 };

enum class Parity : std::int8_t { Even, Odd };

// Code class used to key all fitted per-code coefficients. The two concrete
// readings of (pm,mp) share the class OddMixed.
enum class CodeClass : std::int8_t {
    EvenPlus,   // +
    EvenMinus,  // -
    OddPP,      // (+,+)
    OddMixed,   // (+,-), (-,+), (pm,mp)
    OddMM,      // (-,-)
    JumpPMM,    // (+,-,-)
    JumpMPP,    // (-,+,+)
    JumpPPP,    // (+,+,+)   admissible syntax, eliminated by the jump filter
    JumpMMM,    // (-,-,-)
};

// One nest's code: outer-oval sign and the signed interior count delta.
// |delta| == 2 marks a jump nest; delta == +-1 an odd nest; 0 an even nest.
// A joint code carries delta as the (+,-)-reading; sign*delta is well defined.
struct NestCode {
    Sign sign = Sign::Plus;
    std::int8_t delta = 0;

    constexpr bool jump() const { return delta == 2 || delta == -2; }
    constexpr bool joint() const { return sign == Sign::Joint; }
    Parity parity() const { return (delta == 1 || delta == -1) ? Parity::Odd : Parity::Even; }

    // sign(outer) * delta; the only combination the invariants consume.
    int sign_delta() const {
        if (joint()) return -1;  // both readings give -1
        return static_cast<int>(sign) * delta;
    }

    int outer_sign() const {
        if (joint()) throw PreconditionError("joint code has no concrete outer sign");
        return static_cast<int>(sign);
    }

    CodeClass cls() const;
    // total order used everywhere a canonical arrangement is needed
    int rank() const;

    friend bool operator==(NestCode a, NestCode b) { return a.sign == b.sign && a.delta == b.delta; }
    friend bool operator!=(NestCode a, NestCode b) { return !(a == b); }
    friend bool operator<(NestCode a, NestCode b) { return a.rank() < b.rank(); }
};

inline constexpr NestCode kEvenPlus{Sign::Plus, 0};
inline constexpr NestCode kEvenMinus{Sign::Minus, 0};
inline constexpr NestCode kOddPP{Sign::Plus, +1};
inline constexpr NestCode kOddPM{Sign::Plus, -1};
inline constexpr NestCode kOddMP{Sign::Minus, +1};
inline constexpr NestCode kOddMM{Sign::Minus, -1};
inline constexpr NestCode kOddJoint{Sign::Joint, -1};  // (pm,mp)
inline constexpr NestCode kJumpPMM{Sign::Plus, -2};
inline constexpr NestCode kJumpMPP{Sign::Minus, +2};
inline constexpr NestCode kJumpPPP{Sign::Plus, +2};
inline constexpr NestCode kJumpMMM{Sign::Minus, -2};

Parity parity(NestCode code);

// Nest attributes. Up/Down only for even nests, Sep only for odd ones,
// Crossing/NonCrossing only for jump nests. None = bare code in a table cell.
enum class Attr : std::int8_t { None, NonSep, Sep, Up, Down, Crossing, NonCrossing };

enum class Laterality : std::int8_t { Unspecified, Left, Right };

int attr_rank(Attr a);
bool attr_valid_for(NestCode code, Attr attr);

// Code plus optional attribute: one table cell.
struct NestTok {
    NestCode code;
    Attr attr = Attr::None;

    std::pair<int, int> key() const { return {code.rank(), attr_rank(attr)}; }
    friend bool operator==(const NestTok& a, const NestTok& b) {
        return a.code == b.code && a.attr == b.attr;
    }
    friend bool operator!=(const NestTok& a, const NestTok& b) { return !(a == b); }
    friend bool operator<(const NestTok& a, const NestTok& b) { return a.key() < b.key(); }
};

std::string to_token(NestCode code);
std::string to_token(const NestTok& tok);
NestTok parse_nest_token(const std::string& text);

std::string class_name(CodeClass c);
std::string attr_name(Attr a);

}  // namespace ovalis
