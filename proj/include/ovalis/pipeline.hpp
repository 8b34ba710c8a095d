#pragma once

#include "ovalis/coefficients.hpp"
#include "ovalis/corpus.hpp"
#include "ovalis/orientation.hpp"
#include "ovalis/scheme.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ovalis {

// Fitted engine state: corpus plus the two reconstructed coefficient sets.
// Immutable after load; safe to share across threads.
struct Engine {
    Corpus corpus;
    OrientationCoefficients coeffs;
    ChainPlacement placement;

    static Engine load(const std::string& corpus_dir);
};

// Restriction rules applied by the structural stage. Pure predicates; the
// admissible set does not depend on their application order.
enum class RuleId : std::int8_t {
    JumpBudget,      // jump schemes keep only the admissible budget
    ZoneRule,        // nonzero E_i forbids exterior ovals in T_i (inside zone_set)
    SeparatingFit,   // separating/up/down nest must have zero deficit
    NonSepEmpty,     // all-non-separating with empty zones only for the two listed schemes
    CrossingMode,    // forced sweep mode; non-crossing leaves no room for chains
    TriangleBound,   // exterior-triangle bound with the equality branch
    CenterBound,     // central-zone bound when it holds only exterior ovals
    Identities,      // lambda_i = lambda_{i+3} - lambda_0
};

struct FilterRule {
    RuleId id;
    std::string name;
    std::string description;
};
const std::vector<FilterRule>& filter_rules();

// Jump filter over schemes: budget 3 or 4, with 4 exactly for even-odd-odd.
std::vector<ComplexScheme> filter_jump(const std::vector<ComplexScheme>& schemes);

// Tri-state deficit check: Keep (deficit zero or nest non-separating), Reject
// (nonzero deficit), Unknown (an undetermined G is needed; another rule must
// discharge the type, otherwise the pipeline errors out).
enum class DeficitState : std::int8_t { Keep, Reject, Unknown };
DeficitState separating_state(const ComplexType& type, const Engine& engine);
std::vector<ComplexType> filter_separating(const std::vector<ComplexType>& types,
                                           const Engine& engine);
std::vector<ComplexType> filter_nonseparating(const std::vector<ComplexType>& types,
                                              const Engine& engine);
std::vector<ComplexType> filter_crossing(const std::vector<ComplexType>& types,
                                         const Engine& engine);
// All structural filters in any order (used by the order-invariance property).
std::vector<ComplexType> structural_filters(std::vector<ComplexType> types, const Engine& engine,
                                            const std::vector<int>& order = {0, 1, 2, 3});

// How the exterior-triangle and central-zone bounds are applied.
//   None         - zone/Lambda consistency only (the pre-bound tables)
//   Full         - bounds on every zone (two-even and three-odd analyses)
//   SingletonOnly- bounds only when at most one zone is free (one-even-two-odd
//                  analysis; a separating base oval can be re-chosen there, so
//                  multi-zone bounds are not sound)
enum class BoundPolicy : std::int8_t { None, Full, SingletonOnly };

struct Feasibility {
    std::vector<LambdaProfile> profiles;  // empty = type eliminated
    std::vector<int> l0_values;           // pinned L0 values when bounded
    bool symbolic = false;                // true when L0 stays a free symbol
    std::vector<std::string> notes;       // e.g. equality-branch usage
};

Feasibility lambda_feasibility(const ComplexType& type, const Engine& engine, BoundPolicy policy);

// Reproduces table `id` from enumeration plus filters (never by copying the
// corpus). Derived rows come out in canonical order.
Table derive_table(int id, const Engine& engine);

// Machine-actionable conclusion of a verified certificate.
struct CertEffect {
    enum class Kind : std::int8_t { EliminateType, ConstrainL0, ConstrainLaterality, EliminateClass };
    Kind kind;
    std::string cert_id;
    std::array<NestTok, 3> pattern{};      // type-level effects; Attr::None matches any attr
    std::array<bool, 3> any_attr{false, false, false};
    std::vector<int> l0_values;
    Laterality laterality = Laterality::Unspecified;
    std::string target_class;  // EliminateClass: "eeo-nojump-types"
};

struct AdmissibleType {
    ComplexType type;
    Feasibility feas;
    Laterality laterality = Laterality::Unspecified;
};

struct PipelineResult {
    std::vector<AdmissibleType> eeo_nojump;  // empty iff the jump-free statement holds
    std::vector<AdmissibleType> eeo_jump;
    std::vector<std::string> disabled_rules;  // effects skipped for failed certificates
};

// Applies certificate-gated eliminations on top of the formula-level tables.
// effects == nullptr runs with certificates disabled (gating property).
// An effect whose certificate did not verify is never applied; in strict mode
// that raises an error naming the certificate.
PipelineResult run_pipeline(const Engine& engine, const std::vector<CertEffect>* effects,
                            const std::vector<std::string>& failed_certs = {}, bool strict = true);

}  // namespace ovalis
