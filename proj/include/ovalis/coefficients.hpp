#pragma once

#include "ovalis/codes.hpp"
#include "ovalis/corpus.hpp"

#include <map>
#include <optional>
#include <string>

namespace ovalis {

// Per-code constants reconstructed from the table corpus by an exact integer
// fit. They reproduce every E tuple and every F-G deficit cell.
//
//   E0 = sum_l phi0(code_l)
//   Ei = psi(code_i) + sum_{l != i} chi(code_l)
//   deficit(i) = F(code_i, attr_i) - G(code_j) - G(code_k)
//
// The decomposition has a two-parameter gauge: shifting chi by c and psi by
// -2c, or G by c and F by 2c, changes no observable. The fit pins
// chi(pm,mp) = 0 and G(+) = gauge_g (1 by default).
struct OrientationCoefficients {
    std::map<CodeClass, int> phi0;
    std::map<CodeClass, int> psi;
    std::map<CodeClass, int> chi;
    std::map<CodeClass, std::optional<int>> g;       // nullopt = undetermined by the corpus
    std::map<std::pair<CodeClass, Attr>, int> f;

    int phi0_of(NestCode c) const;
    int psi_of(NestCode c) const;
    int chi_of(NestCode c) const;
    int g_of(NestCode c) const;               // throws CoefficientError when undetermined
    int f_of(NestCode c, Attr attr) const;

    std::string dump() const;                  // plain-text key=value lines
    static OrientationCoefficients parse(const std::string& text);
};

// Solves the integer linear system built from every E row of tables 1, 7, 11,
// 17 and every deficit row of tables 2, 3, 4, 8, 9, 12..15 under the stated
// gauge, then re-checks every corpus cell exactly. Throws FitError (naming the
// offending cell) on any inconsistency, non-integer entry, or rank deficiency
// beyond the expected undetermined G entries.
OrientationCoefficients fit_coefficients(const Corpus& corpus, int gauge_g = 1);

}  // namespace ovalis
