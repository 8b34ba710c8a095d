#pragma once

#include "ovalis/affine.hpp"
#include "ovalis/coefficients.hpp"
#include "ovalis/corpus.hpp"
#include "ovalis/scheme.hpp"

#include <array>
#include <map>
#include <optional>

namespace ovalis {

// Pi_+ - Pi_- of a scheme: the unique affine form in the codes consistent
// with every printed capital-Lambda cell (checked table-wide by the tests).
int pi_difference(const ComplexScheme& scheme);

// capital Lambda = Pi_+ - Pi_- - 4.
int capital_lambda(const ComplexScheme& scheme);

std::array<int, 4> e_params(const ComplexScheme& scheme, const OrientationCoefficients& coeffs);

// For a jump nest under the tight budget (Pi = 3) the sweep mode is forced by
// the outer-oval sign: positive = crossing, negative = non-crossing.
std::optional<Attr> forced_jump_mode(const ComplexScheme& scheme);

// Zones whose triangles may contain exterior ovals: { i : E_i = 0 }, further
// cut down for a forced jump mode (crossing empties T3, non-crossing empties
// T0, T1 and T2).
Zones zone_set(const ComplexScheme& scheme, const OrientationCoefficients& coeffs);

// F_i - G_j - G_k for a separating, up or down nest i (0-based slot).
int fg_deficit(const ComplexType& type, int i, const OrientationCoefficients& coeffs);

// lambda_i = lambda_{i+3} - lambda_0 for i = 1, 2, 3.
std::array<Affine, 3> lambda_identities(Affine l0, Affine l4, Affine l5, Affine l6);

struct LambdaProfile {
    std::array<Affine, 7> l{};  // lambda_0 .. lambda_6
    int lambda = 0;             // capital Lambda of the scheme
    // true when the zone freedom needs more symbols than the single L0; such
    // profiles are used for feasibility decisions only, never printed
    bool multi_free = false;

    friend bool operator==(const LambdaProfile& a, const LambdaProfile& b) {
        return a.l == b.l && a.lambda == b.lambda && a.multi_free == b.multi_free;
    }
};

// mu = lambda_1 + lambda_2 - lambda_3.
Affine mu(const LambdaProfile& profile);

// Sign of the jump-nest outer oval. Throws PreconditionError without a jump.
int epsilon3(const ComplexScheme& scheme);
int epsilon3(NestCode jump_code);

// Where an interior chain sits and what it contributes. For an even
// separating nest the base-oval convention pins the chain to one triangle and
// the leftover contribution is +-1; an odd separating chain can be steered to
// either triangle of its pair and its leftover contribution is 0.
enum class Occupancy : std::int8_t { None, TriangleOwn, TriangleZero, Movable };

struct ChainPlacement {
    // keyed by (code class, attribute); only even up/down entries are nonzero
    std::map<std::pair<CodeClass, Attr>, std::pair<int, int>> delta;  // (to T_i, to T_0)

    int delta_t(NestCode code, Attr attr) const;
    int delta_0(NestCode code, Attr attr) const;
    Occupancy occupancy(NestCode code, Attr attr) const;
};

// Determines the up/down contributions by exact fit against the lambda
// columns of tables 5 and 10, then re-checks every row of the two tables.
ChainPlacement fit_chain_placement(const Corpus& corpus, const OrientationCoefficients& coeffs);

}  // namespace ovalis
