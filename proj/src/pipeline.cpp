#include "ovalis/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ovalis {

Engine Engine::load(const std::string& corpus_dir) {
    Engine e;
    e.corpus = load_corpus(corpus_dir);
    e.coeffs = fit_coefficients(e.corpus);
    e.placement = fit_chain_placement(e.corpus, e.coeffs);
    return e;
}

const std::vector<FilterRule>& filter_rules() {
    static const std::vector<FilterRule> rules = {
        {RuleId::JumpBudget, "R-L18", "jump schemes carry budget 3, or 4 for even-odd-odd"},
        {RuleId::ZoneRule, "R-L19", "a zone with nonzero E holds no exterior ovals"},
        {RuleId::SeparatingFit, "R-L20", "separating/up/down nest needs zero F-G deficit"},
        {RuleId::NonSepEmpty, "R-L21",
         "all-non-separating with all triangles empty happens only for the two jump schemes"},
        {RuleId::CrossingMode, "R-L9",
         "crossing empties the jump triangle, non-crossing the other three"},
        {RuleId::TriangleBound, "R-P1", "exterior triangle bound with the equality branch"},
        {RuleId::CenterBound, "R-P2", "central zone bound when it holds only exterior ovals"},
        {RuleId::Identities, "R-ID", "lambda_i = lambda_{i+3} - lambda_0"},
    };
    return rules;
}

std::vector<ComplexScheme> filter_jump(const std::vector<ComplexScheme>& schemes) {
    std::vector<ComplexScheme> out;
    for (const auto& s : schemes) {
        if (!s.has_jump()) continue;
        int pi = pi_difference(s);
        if (pi != 3 && pi != 4) continue;
        if ((pi == 4) != (s.parity_class() == ParityClass::EOO)) continue;
        out.push_back(s);
    }
    return out;
}

DeficitState separating_state(const ComplexType& type, const Engine& engine) {
    DeficitState state = DeficitState::Keep;
    for (int i = 0; i < 3; ++i) {
        Attr a = type.attrs[static_cast<std::size_t>(i)];
        if (a != Attr::Sep && a != Attr::Up && a != Attr::Down) continue;
        try {
            if (fg_deficit(type, i, engine.coeffs) != 0) return DeficitState::Reject;
        } catch (const CoefficientError&) {
            state = DeficitState::Unknown;
        }
    }
    return state;
}

std::vector<ComplexType> filter_separating(const std::vector<ComplexType>& types,
                                           const Engine& engine) {
    std::vector<ComplexType> out;
    for (const auto& t : types)
        if (separating_state(t, engine) != DeficitState::Reject) out.push_back(t);
    return out;
}

namespace {

bool is_lemma21_exempt(const ComplexScheme& scheme) {
    ComplexScheme j = to_joint(scheme);
    const ComplexScheme a{{kOddJoint, kOddJoint, kJumpPMM}};
    const ComplexScheme b{{kOddJoint, kOddJoint, kJumpMPP}};
    return j == a || j == b;
}

}  // namespace

std::vector<ComplexType> filter_nonseparating(const std::vector<ComplexType>& types,
                                              const Engine& engine) {
    std::vector<ComplexType> out;
    for (const auto& t : types) {
        if (t.all_nonseparating() && zone_set(t.scheme, engine.coeffs).empty() &&
            !is_lemma21_exempt(t.scheme))
            continue;
        out.push_back(t);
    }
    return out;
}

std::vector<ComplexType> filter_crossing(const std::vector<ComplexType>& types,
                                         const Engine& engine) {
    std::vector<ComplexType> out;
    for (const auto& t : types) {
        int js = t.scheme.jump_slot();
        if (js < 0) {
            out.push_back(t);
            continue;
        }
        Attr mode = t.attrs[static_cast<std::size_t>(js)];
        if (auto forced = forced_jump_mode(t.scheme); forced && mode != *forced) continue;
        if (mode == Attr::NonCrossing) {
            // chains of the other two nests would land in an emptied triangle
            bool blocked = false;
            for (int i = 0; i < 3; ++i) {
                if (i == js) continue;
                if (engine.placement.occupancy(t.scheme.codes[static_cast<std::size_t>(i)],
                                               t.attrs[static_cast<std::size_t>(i)]) !=
                    Occupancy::None)
                    blocked = true;
            }
            if (blocked) continue;
        }
        out.push_back(t);
    }
    return out;
}

std::vector<ComplexType> structural_filters(std::vector<ComplexType> types, const Engine& engine,
                                            const std::vector<int>& order) {
    for (int which : order) {
        switch (which) {
            case 0: types = filter_separating(types, engine); break;
            case 1: types = filter_nonseparating(types, engine); break;
            case 2: types = filter_crossing(types, engine); break;
            case 3: {
                std::vector<ComplexType> out;
                for (const auto& t : types) {
                    if (t.scheme.has_jump() && filter_jump({t.scheme}).empty()) continue;
                    out.push_back(t);
                }
                types = std::move(out);
                break;
            }
            default: throw Error("unknown structural filter index");
        }
    }
    return types;
}

namespace {

constexpr int kScanRadius = 25;

struct SymbolicLambda {
    // lambda_{i+3} = chain_t[i] + x_i (x_i free only when zone i is open);
    // lambda_0 = chain_0_sum + x_0
    std::array<int, 3> chain_t{};
    int chain_0_sum = 0;
    Zones open;     // refined zone set
    int elim = -1;  // zone index whose x is solved from the Lambda equation
    int lambda = 0;
};

// exterior value of the eliminated zone for a given assignment of the others
int eliminated_x(const SymbolicLambda& sym, const std::map<int, int>& xs) {
    auto x_of = [&](int i) {
        auto it = xs.find(i);
        return it == xs.end() ? 0 : it->second;
    };
    if (sym.elim == 0) {
        int sum_tri = 0;
        for (int i = 1; i <= 3; ++i) sum_tri += sym.chain_t[static_cast<std::size_t>(i - 1)] + x_of(i);
        return sym.lambda + sum_tri - sym.chain_0_sum;
    }
    int l0 = sym.chain_0_sum + x_of(0);
    int others = 0;
    for (int i = 1; i <= 3; ++i) {
        if (i == sym.elim) continue;
        others += sym.chain_t[static_cast<std::size_t>(i - 1)] + x_of(i);
    }
    return l0 - others - sym.lambda - sym.chain_t[static_cast<std::size_t>(sym.elim - 1)];
}

struct Assignment {
    std::array<int, 4> x{};  // exterior values per zone, zero when closed
    std::array<int, 4> lam{};  // l0, l4, l5, l6
};

Assignment realize(const SymbolicLambda& sym, const std::map<int, int>& xs) {
    Assignment a;
    for (const auto& [zone, v] : xs) a.x[static_cast<std::size_t>(zone)] = v;
    if (sym.elim >= 0) a.x[static_cast<std::size_t>(sym.elim)] = eliminated_x(sym, xs);
    a.lam[0] = sym.chain_0_sum + a.x[0];
    for (int i = 1; i <= 3; ++i)
        a.lam[static_cast<std::size_t>(i)] =
            sym.chain_t[static_cast<std::size_t>(i - 1)] + a.x[static_cast<std::size_t>(i)];
    return a;
}

struct BoundCheck {
    bool ok = false;
    bool used_equality_branch = false;
};

BoundCheck check_bounds(const SymbolicLambda& sym, const Assignment& a, BoundPolicy policy,
                        bool center_bound_applicable) {
    BoundCheck r;
    bool apply = policy == BoundPolicy::Full ||
                 (policy == BoundPolicy::SingletonOnly && sym.open.size() <= 1);
    if (!apply) {
        r.ok = true;
        return r;
    }
    if (center_bound_applicable && std::abs(a.lam[0]) > 2) return r;
    for (int i = 1; i <= 3; ++i) {
        if (a.x[static_cast<std::size_t>(i)] == 0) continue;  // possibly no exterior ovals at all
        int v = a.lam[static_cast<std::size_t>(i)];
        if (std::abs(v) > 3) return r;
        if (std::abs(v) == 3) {
            if (v != 3 || sym.lambda != -2) return r;
            r.used_equality_branch = true;
        }
    }
    r.ok = true;
    return r;
}

Affine substitute(const Affine& a, int l0) { return Affine{a.at(l0)}; }

LambdaProfile substitute(const LambdaProfile& p, int l0) {
    LambdaProfile out = p;
    for (auto& v : out.l) v = substitute(v, l0);
    return out;
}

}  // namespace

Feasibility lambda_feasibility(const ComplexType& type, const Engine& engine, BoundPolicy policy) {
    Feasibility result;
    const ComplexScheme& scheme = type.scheme;
    SymbolicLambda sym;
    sym.lambda = capital_lambda(scheme);
    sym.open = zone_set(scheme, engine.coeffs);

    int js = scheme.jump_slot();
    if (js >= 0) {
        Attr mode = type.attrs[static_cast<std::size_t>(js)];
        if (auto forced = forced_jump_mode(scheme); forced && mode != *forced) return result;
        if (mode == Attr::Crossing) {
            sym.open.erase(3);
        } else if (mode == Attr::NonCrossing) {
            sym.open.erase(0);
            sym.open.erase(1);
            sym.open.erase(2);
            for (int i = 0; i < 3; ++i) {
                if (i == js) continue;
                if (engine.placement.occupancy(scheme.codes[static_cast<std::size_t>(i)],
                                               type.attrs[static_cast<std::size_t>(i)]) !=
                    Occupancy::None)
                    return result;
            }
        }
    }

    bool center_blocked = false;
    for (int i = 0; i < 3; ++i) {
        sym.chain_t[static_cast<std::size_t>(i)] = engine.placement.delta_t(
            scheme.codes[static_cast<std::size_t>(i)], type.attrs[static_cast<std::size_t>(i)]);
        int d0 = engine.placement.delta_0(scheme.codes[static_cast<std::size_t>(i)],
                                          type.attrs[static_cast<std::size_t>(i)]);
        sym.chain_0_sum += d0;
        if (d0 != 0) center_blocked = true;  // a fixed chain keeps the central zone non-exterior
    }

    for (int i = 3; i >= 0 && sym.elim < 0; --i)
        if (sym.open.contains(i)) sym.elim = i;

    std::vector<int> frees;
    for (int i = 0; i < 4; ++i)
        if (sym.open.contains(i) && i != sym.elim) frees.push_back(i);

    // closed-form consistency when nothing is free
    if (sym.elim < 0) {
        int base = sym.chain_0_sum;
        for (int i = 0; i < 3; ++i) base -= sym.chain_t[static_cast<std::size_t>(i)];
        if (base != sym.lambda) return result;
    }

    // scan for the feasible set; track whether the L0 freedom escapes the window
    std::set<int> l0_values;
    bool any = false;
    bool l0_unbounded = false;
    bool equality_branch = false;
    auto visit = [&](const std::map<int, int>& assignment) {
        Assignment a = realize(sym, assignment);
        if (sym.elim >= 0 && std::abs(a.x[static_cast<std::size_t>(sym.elim)]) > 3 * kScanRadius)
            return;  // keep the eliminated zone within a sane window
        BoundCheck bc = check_bounds(sym, a, policy, !center_blocked);
        if (!bc.ok) return;
        any = true;
        equality_branch = equality_branch || bc.used_equality_branch;
        l0_values.insert(a.lam[0]);
        if (auto it = assignment.find(0); it != assignment.end() && std::abs(it->second) == kScanRadius)
            l0_unbounded = true;
    };
    if (frees.empty()) {
        visit({});
    } else {
        std::vector<int> stack(frees.size(), -kScanRadius);
        while (true) {
            std::map<int, int> m;
            for (std::size_t k = 0; k < frees.size(); ++k) m[frees[k]] = stack[k];
            visit(m);
            std::size_t k = 0;
            while (k < stack.size() && stack[k] == kScanRadius) {
                stack[k] = -kScanRadius;
                ++k;
            }
            if (k == stack.size()) break;
            ++stack[k];
        }
    }
    if (!any) return result;
    if (equality_branch)
        result.notes.push_back("triangle bound met at +3 (equality branch) for type " +
                               to_token(type.toks()[0]) + " " + to_token(type.toks()[1]) + " " +
                               to_token(type.toks()[2]));

    // symbolic profile in L0 (exact when at most L0 itself is free)
    LambdaProfile prof;
    prof.lambda = sym.lambda;
    bool l0_open = sym.open.contains(0);
    prof.l[0] = l0_open ? Affine::l0() : Affine{sym.chain_0_sum};
    for (int i = 1; i <= 3; ++i) {
        if (i == sym.elim) continue;
        if (sym.open.contains(i)) {
            prof.multi_free = true;  // a second free symbol would be needed
            prof.l[static_cast<std::size_t>(i) + 3] = Affine{0};
        } else {
            prof.l[static_cast<std::size_t>(i) + 3] =
                Affine{sym.chain_t[static_cast<std::size_t>(i - 1)]};
        }
    }
    if (sym.elim > 0) {
        Affine others{0};
        for (int i = 1; i <= 3; ++i)
            if (i != sym.elim) others = others + prof.l[static_cast<std::size_t>(i) + 3];
        prof.l[static_cast<std::size_t>(sym.elim) + 3] = prof.l[0] - others - Affine{sym.lambda};
    } else if (sym.elim == 0) {
        Affine tri{0};
        for (int i = 1; i <= 3; ++i) tri = tri + prof.l[static_cast<std::size_t>(i) + 3];
        prof.l[0] = tri + Affine{sym.lambda};
    }
    auto ident = lambda_identities(prof.l[0], prof.l[4], prof.l[5], prof.l[6]);
    prof.l[1] = ident[0];
    prof.l[2] = ident[1];
    prof.l[3] = ident[2];

    if (l0_unbounded) {
        result.symbolic = true;
        result.profiles.push_back(prof);
        return result;
    }
    result.l0_values.assign(l0_values.begin(), l0_values.end());
    for (int v : result.l0_values) result.profiles.push_back(substitute(prof, v));
    return result;
}

namespace {

Cell int_cell(int v) { return Cell{Affine{v}}; }

TableRow scheme_row(const ComplexScheme& s, const Engine& e) {
    TableRow row;
    for (int i = 0; i < 3; ++i) row.nests[static_cast<std::size_t>(i)] = {s.codes[static_cast<std::size_t>(i)], Attr::None};
    auto ep = e_params(s, e.coeffs);
    for (int v : ep) row.cells.push_back(int_cell(v));
    row.cells.push_back(Cell{zone_set(s, e.coeffs)});
    row.cells.push_back(int_cell(capital_lambda(s)));
    return row;
}

std::vector<ComplexScheme> joint_schemes(ParityClass pc, bool jump) {
    std::set<ComplexScheme> out;
    for (const auto& s : enumerate_schemes(pc, jump)) out.insert(to_joint(s));
    return {out.begin(), out.end()};
}

// jump nests print bare; a stripped slot prints bare as well
NestTok display_tok(const ComplexType& t, int slot, bool strip) {
    NestCode c = t.scheme.codes[static_cast<std::size_t>(slot)];
    Attr a = t.attrs[static_cast<std::size_t>(slot)];
    if (c.jump() || strip) return {c, Attr::None};
    return {c, a};
}

struct TypeDerivation {
    ComplexType type;
    Feasibility feas;
};

std::vector<TypeDerivation> derive_types(ParityClass pc, bool jump, const Engine& engine,
                                         BoundPolicy policy, std::vector<std::string>* notes) {
    std::set<ComplexType> typeset;
    for (const auto& scheme : joint_schemes(pc, jump))
        for (const auto& t : expand_types(scheme)) typeset.insert(canonicalize(t));
    std::vector<ComplexType> types(typeset.begin(), typeset.end());
    types = structural_filters(std::move(types), engine);
    std::vector<TypeDerivation> out;
    for (const auto& t : types) {
        if (separating_state(t, engine) == DeficitState::Unknown)
            throw CoefficientError("type survived all filters with an undetermined deficit");
        Feasibility f = lambda_feasibility(t, engine, policy);
        if (f.profiles.empty()) continue;
        if (notes)
            for (const auto& n : f.notes) notes->push_back(n);
        out.push_back({t, std::move(f)});
    }
    return out;
}

Cell affine_cell(const Affine& a) { return Cell{a}; }

Table derive_deficit_table(int id, const Engine& engine) {
    Table t;
    t.id = id;
    auto add_row = [&](const std::array<NestTok, 3>& nests, int sep_slot) {
        ComplexType type{ComplexScheme{{nests[0].code, nests[1].code, nests[2].code}},
                         {nests[0].attr == Attr::None ? Attr::NonSep : nests[0].attr,
                          nests[1].attr == Attr::None ? Attr::NonSep : nests[1].attr,
                          nests[2].attr == Attr::None ? Attr::NonSep : nests[2].attr}};
        int value;
        try {
            value = fg_deficit(type, sep_slot, engine.coeffs);
        } catch (const CoefficientError&) {
            return;  // rows needing an undetermined G are not listed
        }
        TableRow row;
        row.nests = nests;
        row.cells.push_back(int_cell(value));
        t.rows.push_back(row);
    };

    if (id == 2 || id == 3 || id == 4) {
        for (const auto& s : joint_schemes(ParityClass::EEO, false)) {
            NestCode e1 = s.codes[0], e2 = s.codes[1], odd = s.codes[2];
            if (id == 2) {
                for (Attr a : {Attr::Up, Attr::Down})
                    add_row({NestTok{e1, a}, NestTok{e2, Attr::None}, NestTok{odd, Attr::None}}, 0);
            } else if (id == 3) {
                if (e1 == e2) continue;  // the separating twin already sits in slot one
                for (Attr a : {Attr::Up, Attr::Down})
                    add_row({NestTok{e1, Attr::None}, NestTok{e2, a}, NestTok{odd, Attr::None}}, 1);
            } else {
                add_row({NestTok{e1, Attr::None}, NestTok{e2, Attr::None}, NestTok{odd, Attr::Sep}}, 2);
            }
        }
    } else if (id == 8 || id == 9) {
        for (ParityClass pc : {ParityClass::EEO, ParityClass::EOO}) {
            for (const auto& s : joint_schemes(pc, true)) {
                NestCode n1 = s.codes[0], n2 = s.codes[1], j = s.codes[2];
                bool first_even = n1.parity() == Parity::Even;
                if (id == 8) {
                    if (first_even)
                        for (Attr a : {Attr::Up, Attr::Down})
                            add_row({NestTok{n1, a}, NestTok{n2, Attr::None}, NestTok{j, Attr::None}}, 0);
                    else
                        add_row({NestTok{n1, Attr::Sep}, NestTok{n2, Attr::None}, NestTok{j, Attr::None}}, 0);
                } else if (first_even) {
                    add_row({NestTok{n1, Attr::None}, NestTok{n2, Attr::Sep}, NestTok{j, Attr::None}}, 1);
                }
                // equal odd codes: the slot-two variant repeats slot one
            }
        }
    } else {
        for (const auto& s : joint_schemes(ParityClass::EOO, false)) {
            NestCode e = s.codes[0], o1 = s.codes[1], o2 = s.codes[2];
            if (id == 12) {
                add_row({NestTok{e, Attr::None}, NestTok{o1, Attr::None}, NestTok{o2, Attr::Sep}}, 2);
            } else if (id == 13) {
                if (o1 == o2) continue;
                add_row({NestTok{e, Attr::None}, NestTok{o1, Attr::Sep}, NestTok{o2, Attr::None}}, 1);
            } else {
                Attr a = id == 14 ? Attr::Up : Attr::Down;
                add_row({NestTok{e, a}, NestTok{o1, Attr::None}, NestTok{o2, Attr::None}}, 0);
            }
        }
    }
    return canonical(t);
}

}  // namespace

Table derive_table(int id, const Engine& engine) {
    Table t;
    t.id = id;
    switch (id) {
        case 1:
            for (const auto& s : enumerate_schemes(ParityClass::EEO, false))
                t.rows.push_back(scheme_row(s, engine));
            break;
        case 7:
            for (ParityClass pc : {ParityClass::EEO, ParityClass::EOO})
                for (const auto& s : enumerate_schemes(pc, true))
                    t.rows.push_back(scheme_row(s, engine));
            break;
        case 11:
            for (const auto& s : enumerate_schemes(ParityClass::EOO, false))
                t.rows.push_back(scheme_row(s, engine));
            break;
        case 17:
            for (const auto& s : enumerate_schemes(ParityClass::OOO, false))
                t.rows.push_back(scheme_row(s, engine));
            break;
        case 18:
            for (const auto& s : enumerate_schemes(ParityClass::OOO, false)) {
                bool alive = false;
                std::vector<ComplexType> types = expand_types(s);
                types = structural_filters(std::move(types), engine);
                for (const auto& ty : types)
                    if (!lambda_feasibility(ty, engine, BoundPolicy::Full).profiles.empty())
                        alive = true;
                if (alive) t.rows.push_back(scheme_row(s, engine));
            }
            break;
        case 2:
        case 3:
        case 4:
        case 8:
        case 9:
        case 12:
        case 13:
        case 14:
        case 15:
            return derive_deficit_table(id, engine);
        case 5: {
            for (const auto& d :
                 derive_types(ParityClass::EEO, false, engine, BoundPolicy::None, &t.notes)) {
                const LambdaProfile& p = d.feas.profiles.front();
                TableRow row;
                for (int i = 0; i < 3; ++i) row.nests[static_cast<std::size_t>(i)] = display_tok(d.type, i, false);
                row.cells.push_back(Cell{zone_set(d.type.scheme, engine.coeffs)});
                for (int li : {0, 4, 5, 6}) row.cells.push_back(affine_cell(p.l[static_cast<std::size_t>(li)]));
                t.rows.push_back(row);
            }
            break;
        }
        case 6: {
            std::set<std::string> seen;
            for (const auto& d :
                 derive_types(ParityClass::EEO, false, engine, BoundPolicy::Full, &t.notes)) {
                for (const auto& p : d.feas.profiles) {
                    TableRow row;
                    // the odd nest's separating flag does not affect the
                    // admissible profiles; the printed row merges both
                    for (int i = 0; i < 3; ++i) row.nests[static_cast<std::size_t>(i)] = display_tok(d.type, i, i == 2);
                    for (int li = 0; li <= 6; ++li) row.cells.push_back(affine_cell(p.l[static_cast<std::size_t>(li)]));
                    std::string key = emit_tsv(Table{6, {row}, {}});
                    if (seen.insert(key).second) t.rows.push_back(row);
                }
            }
            break;
        }
        case 10: {
            for (const auto& d :
                 derive_types(ParityClass::EEO, true, engine, BoundPolicy::None, &t.notes)) {
                const LambdaProfile& p = d.feas.profiles.front();
                TableRow row;
                for (int i = 0; i < 3; ++i) row.nests[static_cast<std::size_t>(i)] = display_tok(d.type, i, false);
                row.cells.push_back(Cell{zone_set(d.type.scheme, engine.coeffs)});
                for (int li : {0, 4, 5, 6, 1, 2, 3}) row.cells.push_back(affine_cell(p.l[static_cast<std::size_t>(li)]));
                t.rows.push_back(row);
            }
            break;
        }
        case 16: {
            for (const auto& d : derive_types(ParityClass::EOO, false, engine,
                                              BoundPolicy::SingletonOnly, &t.notes)) {
                TableRow row;
                for (int i = 0; i < 3; ++i) row.nests[static_cast<std::size_t>(i)] = display_tok(d.type, i, false);
                row.cells.push_back(Cell{zone_set(d.type.scheme, engine.coeffs)});
                row.cells.push_back(int_cell(capital_lambda(d.type.scheme)));
                t.rows.push_back(row);
            }
            break;
        }
        default:
            throw Error("table id out of range: " + std::to_string(id));
    }
    return canonical(t);
}

namespace {

bool pattern_matches(const CertEffect& eff, const ComplexType& type) {
    auto toks = to_joint(type).toks();
    for (int i = 0; i < 3; ++i) {
        const NestTok& want = eff.pattern[static_cast<std::size_t>(i)];
        const NestTok& got = toks[static_cast<std::size_t>(i)];
        if (!(want.code == got.code)) return false;
        if (eff.any_attr[static_cast<std::size_t>(i)]) continue;
        Attr g = got.code.jump() ? Attr::None : got.attr;  // jump attr is mode, pattern is bare
        if (want.attr != g) return false;
    }
    return true;
}

}  // namespace

PipelineResult run_pipeline(const Engine& engine, const std::vector<CertEffect>* effects,
                            const std::vector<std::string>& failed_certs, bool strict) {
    PipelineResult result;
    for (const auto& d : derive_types(ParityClass::EEO, false, engine, BoundPolicy::Full, nullptr))
        result.eeo_nojump.push_back({d.type, d.feas, Laterality::Unspecified});
    for (const auto& d : derive_types(ParityClass::EEO, true, engine, BoundPolicy::None, nullptr))
        result.eeo_jump.push_back({d.type, d.feas, Laterality::Unspecified});
    if (!effects) return result;

    for (const auto& eff : *effects) {
        bool disabled =
            std::find(failed_certs.begin(), failed_certs.end(), eff.cert_id) != failed_certs.end();
        if (disabled) {
            result.disabled_rules.push_back(eff.cert_id);
            if (strict)
                throw Error("rule disabled: certificate " + eff.cert_id + " did not verify");
            continue;
        }
        auto apply_list = [&](std::vector<AdmissibleType>& list) {
            std::vector<AdmissibleType> next;
            for (auto& at : list) {
                if (eff.kind != CertEffect::Kind::EliminateClass && !pattern_matches(eff, at.type)) {
                    next.push_back(std::move(at));
                    continue;
                }
                switch (eff.kind) {
                    case CertEffect::Kind::EliminateType: break;  // dropped
                    case CertEffect::Kind::ConstrainLaterality:
                        at.laterality = eff.laterality;
                        next.push_back(std::move(at));
                        break;
                    case CertEffect::Kind::ConstrainL0: {
                        Feasibility f;
                        for (int v : eff.l0_values) {
                            bool allowed = at.feas.symbolic ||
                                           std::find(at.feas.l0_values.begin(), at.feas.l0_values.end(),
                                                     v) != at.feas.l0_values.end();
                            if (!allowed) continue;
                            f.l0_values.push_back(v);
                            f.profiles.push_back(substitute(at.feas.profiles.front(), v));
                        }
                        if (!f.profiles.empty()) {
                            at.feas = std::move(f);
                            next.push_back(std::move(at));
                        }
                        break;
                    }
                    case CertEffect::Kind::EliminateClass: break;
                }
            }
            list = std::move(next);
        };
        if (eff.kind == CertEffect::Kind::EliminateClass) {
            if (eff.target_class == "eeo-nojump-types")
                result.eeo_nojump.clear();
            else
                throw Error("unknown elimination class " + eff.target_class);
            continue;
        }
        apply_list(result.eeo_nojump);
        apply_list(result.eeo_jump);
    }
    return result;
}

}  // namespace ovalis
