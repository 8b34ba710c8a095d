#include "ovalis/orientation.hpp"

#include "ovalis/linsolve.hpp"

namespace ovalis {

int pi_difference(const ComplexScheme& scheme) {
    int acc = 0;
    for (const auto& c : scheme.codes) acc += c.sign_delta();
    return -acc;
}

int capital_lambda(const ComplexScheme& scheme) { return pi_difference(scheme) - 4; }

std::array<int, 4> e_params(const ComplexScheme& scheme, const OrientationCoefficients& coeffs) {
    std::array<int, 4> e{};
    for (const auto& c : scheme.codes) e[0] += coeffs.phi0_of(c);
    for (int i = 0; i < 3; ++i) {
        int v = coeffs.psi_of(scheme.codes[static_cast<std::size_t>(i)]);
        for (int l = 0; l < 3; ++l)
            if (l != i) v += coeffs.chi_of(scheme.codes[static_cast<std::size_t>(l)]);
        e[static_cast<std::size_t>(i) + 1] = v;
    }
    return e;
}

std::optional<Attr> forced_jump_mode(const ComplexScheme& scheme) {
    int slot = scheme.jump_slot();
    if (slot < 0 || pi_difference(scheme) != 3) return std::nullopt;
    return scheme.codes[static_cast<std::size_t>(slot)].outer_sign() > 0 ? Attr::Crossing
                                                                         : Attr::NonCrossing;
}

Zones zone_set(const ComplexScheme& scheme, const OrientationCoefficients& coeffs) {
    auto e = e_params(scheme, coeffs);
    Zones z;
    for (int i = 0; i < 4; ++i)
        if (e[static_cast<std::size_t>(i)] == 0) z.insert(i);
    if (auto mode = forced_jump_mode(scheme)) {
        if (*mode == Attr::Crossing) {
            z.erase(3);
        } else {
            z.erase(0);
            z.erase(1);
            z.erase(2);
        }
    }
    return z;
}

int fg_deficit(const ComplexType& type, int i, const OrientationCoefficients& coeffs) {
    if (i < 0 || i > 2) throw PreconditionError("nest index out of range");
    Attr attr = type.attrs[static_cast<std::size_t>(i)];
    if (attr != Attr::Sep && attr != Attr::Up && attr != Attr::Down)
        throw PreconditionError("fg_deficit needs a separating, up or down nest, got " +
                                attr_name(attr).substr(0, 2) + " at slot " + std::to_string(i + 1));
    int v = coeffs.f_of(type.scheme.codes[static_cast<std::size_t>(i)], attr);
    for (int l = 0; l < 3; ++l)
        if (l != i) v -= coeffs.g_of(type.scheme.codes[static_cast<std::size_t>(l)]);
    return v;
}

std::array<Affine, 3> lambda_identities(Affine l0, Affine l4, Affine l5, Affine l6) {
    return {l4 - l0, l5 - l0, l6 - l0};
}

Affine mu(const LambdaProfile& p) { return p.l[1] + p.l[2] - p.l[3]; }

int epsilon3(NestCode jump_code) {
    if (!jump_code.jump()) throw PreconditionError("epsilon3 needs a jump nest");
    return jump_code.outer_sign();
}

int epsilon3(const ComplexScheme& scheme) {
    int slot = scheme.jump_slot();
    if (slot < 0) throw PreconditionError("epsilon3 needs a jump nest");
    return epsilon3(scheme.codes[static_cast<std::size_t>(slot)]);
}

namespace {

bool has_delta_entry(Attr attr) { return attr == Attr::Up || attr == Attr::Down; }

}  // namespace

int ChainPlacement::delta_t(NestCode code, Attr attr) const {
    if (!has_delta_entry(attr)) return 0;
    auto it = delta.find({code.cls(), attr});
    if (it == delta.end())
        throw CoefficientError("chain placement missing for " + to_token(NestTok{code, attr}));
    return it->second.first;
}

int ChainPlacement::delta_0(NestCode code, Attr attr) const {
    if (!has_delta_entry(attr)) return 0;
    auto it = delta.find({code.cls(), attr});
    if (it == delta.end())
        throw CoefficientError("chain placement missing for " + to_token(NestTok{code, attr}));
    return it->second.second;
}

Occupancy ChainPlacement::occupancy(NestCode code, Attr attr) const {
    if (attr == Attr::Sep) return Occupancy::Movable;
    if (!has_delta_entry(attr)) return Occupancy::None;
    return delta_t(code, attr) != 0 ? Occupancy::TriangleOwn : Occupancy::TriangleZero;
}

namespace {

std::string var_dt(CodeClass c, Attr a) { return "dT." + class_name(c) + "." + attr_name(a); }
std::string var_d0(CodeClass c, Attr a) { return "d0." + class_name(c) + "." + attr_name(a); }

std::string placement_tag(int table, const TableRow& row, const std::string& col) {
    std::string s = "table " + std::to_string(table) + " row [";
    for (int i = 0; i < 3; ++i) {
        if (i) s += ' ';
        s += to_token(row.nests[i]);
    }
    return s + "] " + col;
}

}  // namespace

ChainPlacement fit_chain_placement(const Corpus& corpus, const OrientationCoefficients& coeffs) {
    std::vector<Equation> eqs;
    struct RowRef {
        int table;
        const TableRow* row;
        Zones z;
        std::array<Affine, 4> l;  // l0, l4, l5, l6
    };
    std::vector<RowRef> refs;

    for (int id : {5, 10}) {
        const Table& t = corpus.at(id);
        const auto& cols = t.schema().columns;
        auto col_of = [&](const std::string& name) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                if (cols[i] == name) return i;
            throw Error("column " + name + " missing");
        };
        for (const auto& row : t.rows) {
            ComplexScheme scheme{{row.nests[0].code, row.nests[1].code, row.nests[2].code}};
            RowRef ref{id, &row, zone_set(scheme, coeffs),
                       {std::get<Affine>(row.cells[col_of("L0")]),
                        std::get<Affine>(row.cells[col_of("L4")]),
                        std::get<Affine>(row.cells[col_of("L5")]),
                        std::get<Affine>(row.cells[col_of("L6")])}};
            refs.push_back(ref);
        }
    }

    auto term = [&](Equation& eq, const NestTok& tok, bool own_triangle) {
        if (has_delta_entry(tok.attr)) {
            auto name = own_triangle ? var_dt(tok.code.cls(), tok.attr) : var_d0(tok.code.cls(), tok.attr);
            eq.coeffs[name] = eq.coeffs[name] + Rat{1};
        }
        // every other attribute contributes a fixed 0
    };

    for (const auto& ref : refs) {
        for (int i = 1; i <= 3; ++i) {
            if (ref.z.contains(i)) continue;  // exterior freedom hides the chain term
            const Affine& cell = ref.l[static_cast<std::size_t>(i)];
            if (!cell.is_constant())
                throw FitError("non-constant lambda in a chain-pinned zone at " +
                               placement_tag(ref.table, *ref.row, "L" + std::to_string(i + 3)));
            Equation eq;
            term(eq, ref.row->nests[static_cast<std::size_t>(i - 1)], true);
            eq.rhs = Rat{cell.as_int()};
            eq.tag = placement_tag(ref.table, *ref.row, "L" + std::to_string(i + 3));
            eqs.push_back(std::move(eq));
        }
        if (!ref.z.contains(0)) {
            const Affine& cell = ref.l[0];
            if (!cell.is_constant())
                throw FitError("non-constant L0 in a chain-pinned zone at " +
                               placement_tag(ref.table, *ref.row, "L0"));
            Equation eq;
            for (const auto& tok : ref.row->nests) term(eq, tok, false);
            eq.rhs = Rat{cell.as_int()};
            eq.tag = placement_tag(ref.table, *ref.row, "L0");
            eqs.push_back(std::move(eq));
        }
    }

    Solution sol = solve_exact(eqs);
    ChainPlacement out;
    for (CodeClass c : {CodeClass::EvenPlus, CodeClass::EvenMinus}) {
        for (Attr a : {Attr::Up, Attr::Down}) {
            auto get = [&](const std::string& name) -> std::optional<int> {
                auto it = sol.values.find(name);
                if (it == sol.values.end()) return std::nullopt;
                if (!it->second.is_integer())
                    throw FitError("non-integer chain placement for " + name);
                return static_cast<int>(it->second.num);
            };
            auto dt = get(var_dt(c, a));
            auto d0 = get(var_d0(c, a));
            // the interior chain occupies a single triangle: |dT| + |d0| <= 1,
            // so one determined nonzero entry pins the other to zero
            if (dt && d0) {
                if (std::abs(*dt) + std::abs(*d0) > 1)
                    throw FitError("chain placement violates the single-triangle bound for " +
                                   class_name(c) + "," + attr_name(a));
            } else if (dt && !d0) {
                d0 = 0;
            } else if (!dt && d0) {
                dt = 0;
            } else {
                throw FitError("chain placement undetermined for " + class_name(c) + "," +
                               attr_name(a));
            }
            if (std::abs(*dt) > 1 || std::abs(*d0) > 1)
                throw FitError("chain placement out of range for " + class_name(c) + "," +
                               attr_name(a));
            out.delta[{c, a}] = {*dt, *d0};
        }
    }

    // re-check every row of tables 5 and 10, including the affine identity
    // L0 - L4 - L5 - L6 = Lambda coefficient-wise
    for (const auto& ref : refs) {
        ComplexScheme scheme{{ref.row->nests[0].code, ref.row->nests[1].code, ref.row->nests[2].code}};
        Affine lam = ref.l[0] - ref.l[1] - ref.l[2] - ref.l[3];
        if (lam != Affine{capital_lambda(scheme)})
            throw FitError("lambda identity fails at " + placement_tag(ref.table, *ref.row, "Lam"));
        for (int i = 1; i <= 3; ++i) {
            if (ref.z.contains(i)) continue;
            const NestTok& tok = ref.row->nests[static_cast<std::size_t>(i - 1)];
            if (ref.l[static_cast<std::size_t>(i)] != Affine{out.delta_t(tok.code, tok.attr)})
                throw FitError("placement does not reproduce " +
                               placement_tag(ref.table, *ref.row, "L" + std::to_string(i + 3)));
        }
        if (!ref.z.contains(0)) {
            int d = 0;
            for (const auto& tok : ref.row->nests) d += out.delta_0(tok.code, tok.attr);
            if (ref.l[0] != Affine{d})
                throw FitError("placement does not reproduce " + placement_tag(ref.table, *ref.row, "L0"));
        }
    }
    return out;
}

}  // namespace ovalis
