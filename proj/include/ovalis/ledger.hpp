#pragma once

#include "ovalis/codes.hpp"
#include "ovalis/pipeline.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ovalis {

struct CertificateError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Bezout budgets against the degree-18 image curve.
//
// An auxiliary conic meets the curve in at most 2*18 = 36 real points. A
// maximal position with respect to one base line contributes 8 points on the
// two principal images away from that line; each empty oval on the conic
// contributes 2.
// ---------------------------------------------------------------------------

inline constexpr int kConicBudget = 36;

struct ConicSpec {
    int ovals_on_conic = 0;   // empty ovals the conic passes through
    int o_crossings = 0;      // intersections with the odd-branch image
    int maximal_lines = 0;    // base lines the conic is maximal against
    int extra_principal = 0;  // further principal-image points (jump cases)
};

struct BudgetResult {
    int total = 0;
    bool contradiction = false;  // total exceeds the budget
};

// Throws PreconditionError when a closed-curve crossing count is odd.
BudgetResult conic_budget(const ConicSpec& spec);

// A portion of a pencil of conics; totally real exactly at the full budget.
struct PortionSpec {
    int base_ovals = 0;  // ovals carrying the pencil's base points
    int o_crossings = 0;
    int maximal_lines = 0;
    int extra_principal = 0;
};

enum class Reality : std::int8_t { TotallyReal, NotForced };

Reality portion_reality(const PortionSpec& spec);

// ---------------------------------------------------------------------------
// Sweep sequences. One entry per oval met by a pencil, in sweep order.
// ---------------------------------------------------------------------------

enum class OvalZone : std::int8_t { Quad, CenterT, OwnT1, OwnT3 };

struct SweptOval {
    OvalZone zone;
    int sign;  // +1 / -1

    friend bool operator==(SweptOval a, SweptOval b) { return a.zone == b.zone && a.sign == b.sign; }
};

using SweepSequence = std::vector<SweptOval>;

// One Fiedler chain: consecutive ovals must alternate orientation.
// Throws PreconditionError on an empty sequence.
bool fiedler_check(const SweepSequence& seq);

// Deletion procedure over a multi-chain sweep: chains are the maximal
// alternating same-zone runs. Even chains are removed (their signed sum is
// zero); removals may merge neighbouring odd chains of one zone into an even
// chain, which removes cancelling pairs; each remaining odd chain collapses to
// a single oval carrying the chain's extremity sign. Per-zone signed sums are
// preserved exactly and the operation is idempotent.
SweepSequence reduce_sequences(const SweepSequence& seq);

std::map<OvalZone, int> zone_sums(const SweepSequence& seq);

// ---------------------------------------------------------------------------
// The two-portion bookkeeping for the jump pencil: the quadrangular sweep is
// split by the base chord and the two parts contribute (1, 0) for a crossing
// jump and (0, -1) for a non-crossing one, matching mu = epsilon_3.
// ---------------------------------------------------------------------------

struct MuSplit {
    bool crossing = true;
    int part_before = 0;  // contribution of the portion swept before the chord
    int part_after = 0;
};

bool mu_bookkeeping(const MuSplit& split);

// ---------------------------------------------------------------------------
// Certificates: one file per lemma, sections OBJECTS / CANDIDATES /
// ASSUMPTIONS / CLAIMS. Every candidate verdict is recomputed, never trusted.
// ---------------------------------------------------------------------------

struct Candidate {
    enum class Kind : std::int8_t {
        Conic,      // budget check
        Portion,    // totally-real check
        Reality,    // excluded because it would sit in a totally-real portion
        Sweep,      // Fiedler alternation
        Reduction,  // deletion procedure preserves the zone sums
        ParityChk,  // an even chain cannot end an odd one
        Axiom,      // excluded by citing an external statement
        System,     // linear consistency of a claimed oval distribution
        Mu,         // two-portion contribution split against epsilon_3
    };
    Kind kind;
    std::string name;
    std::string expected;  // verdict the certificate claims
    std::map<std::string, std::string> fields;
};

// A labeled participant of one argument. Base lines and the six principal
// images are part of the fixed stage; the empty ovals carry the case split.
struct LedgerObject {
    enum class Kind : std::int8_t { EmptyOval, PrincipalImage, BaseLine, OddBranch };
    std::string name;
    Kind kind;
    std::string zone;  // zone label plus free notes (cr(T0), quadrangular, ...)
};

struct Certificate {
    std::string id;
    std::string title;
    std::vector<std::string> depends;
    std::vector<LedgerObject> objects;
    std::vector<Candidate> candidates;
    std::vector<std::string> assumptions;
    std::vector<std::string> conclusions;  // machine-actionable effect lines
};

Certificate parse_certificate(const std::string& text);

struct CandidateOutcome {
    std::string name;
    std::string expected;
    std::string recomputed;
    bool pass = false;
    std::string detail;
};

struct CertReport {
    std::string id;
    bool pass = false;
    std::vector<CandidateOutcome> candidates;
    std::vector<std::string> axioms_cited;
    std::vector<std::string> assumptions;
    std::string failure;
};

CertReport check_certificate(const Certificate& cert);

struct LedgerReport {
    std::map<std::string, CertReport> reports;
    std::map<std::string, std::vector<std::string>> depends;
    std::vector<CertEffect> effects;  // from every certificate, verified or not

    bool all_pass() const;
    // a certificate counts as verified only with its dependency closure green
    bool verified(const std::string& id) const;
    std::vector<std::string> failed_certificates() const;  // incl. dependency failures
    // axiom id -> certificates citing it
    std::map<std::string, std::vector<std::string>> axiom_report() const;
    std::string summary() const;
};

LedgerReport check_certificates(const std::string& dir);
LedgerReport check_certificate_files(const std::vector<std::string>& files);

}  // namespace ovalis
