#pragma once

#include "ovalis/codes.hpp"

#include <array>
#include <vector>

namespace ovalis {

// Parity class of the three interior counts, as a multiset.
enum class ParityClass : std::int8_t { EEO, EOO, OOO };

// Concrete interior counts of one real scheme: three nests 1<alpha_i> plus
// beta outer empty ovals, 25 empty ovals in total for the degree-9 case.
struct RealSchemeParams {
    std::array<int, 3> alpha{};
    int beta = 0;

    bool valid() const;
    ParityClass parity_class() const;
};

// Ordered triple of nest codes. Slot convention: even nests first, then odd
// nests, jump nest last; within equal parity the fixed code order applies.
// At most one jump nest; not all three nests even.
struct ComplexScheme {
    std::array<NestCode, 3> codes;

    bool has_jump() const;
    int jump_slot() const;  // -1 when no jump nest
    ParityClass parity_class() const;
    bool valid() const;

    friend bool operator==(const ComplexScheme& a, const ComplexScheme& b) {
        return a.codes == b.codes;
    }
    friend bool operator<(const ComplexScheme& a, const ComplexScheme& b);
};

// Scheme plus one attribute per nest.
struct ComplexType {
    ComplexScheme scheme;
    std::array<Attr, 3> attrs{Attr::NonSep, Attr::NonSep, Attr::NonSep};

    std::array<NestTok, 3> toks() const {
        return {NestTok{scheme.codes[0], attrs[0]}, NestTok{scheme.codes[1], attrs[1]},
                NestTok{scheme.codes[2], attrs[2]}};
    }
    bool all_nonseparating() const;

    friend bool operator==(const ComplexType& a, const ComplexType& b) {
        return a.scheme == b.scheme && a.attrs == b.attrs;
    }
    friend bool operator<(const ComplexType& a, const ComplexType& b);
};

// Sorts equal-parity nests into the fixed slot order. Idempotent. Returns the
// permutation applied: perm[new_slot] = old_slot.
ComplexScheme canonicalize(const ComplexScheme& scheme, std::array<int, 3>* perm = nullptr);
ComplexType canonicalize(const ComplexType& type);

// Collapses the concrete (+,-)/(-,+) readings to the joint (pm,mp) token and
// re-canonicalizes. Tables outside the even-even-odd family print this form.
ComplexScheme to_joint(const ComplexScheme& scheme);
ComplexType to_joint(const ComplexType& type);

// Expands every joint code to its two concrete readings (canonical, deduped).
std::vector<ComplexScheme> expand_joint(const ComplexScheme& scheme);

// All candidate schemes of a parity class, duplicate-free under canonicalize.
// Granularity follows the corresponding table's printing convention: concrete
// codes for even-even-odd and for the jump classes, joint codes otherwise.
// Jump candidates are pre-filtered to the admissible jump budget (see
// pipeline::filter_jump for the rule).
std::vector<ComplexScheme> enumerate_schemes(ParityClass pc, bool with_jump);

// Attribute product for one scheme: even nests range over {n,u,d}, odd nests
// over {n,s}, a jump nest over {crossing,non-crossing}.
std::vector<ComplexType> expand_types(const ComplexScheme& scheme);

// The counts realize the scheme's codes: parities match slot by slot and
// every nest is non-empty.
bool compatible(const RealSchemeParams& params, const ComplexScheme& scheme);

}  // namespace ovalis
