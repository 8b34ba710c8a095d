#include "ovalis/coefficients.hpp"

#include "ovalis/linsolve.hpp"

#include <array>
#include <sstream>

namespace ovalis {

namespace {

int lookup(const std::map<CodeClass, int>& m, NestCode c, const char* what) {
    auto it = m.find(c.cls());
    if (it == m.end())
        throw CoefficientError(std::string(what) + " coefficient missing for code " + to_token(c));
    return it->second;
}

std::string var_phi0(CodeClass c) { return "phi0." + class_name(c); }
std::string var_psi(CodeClass c) { return "psi." + class_name(c); }
std::string var_chi(CodeClass c) { return "chi." + class_name(c); }
std::string var_g(CodeClass c) { return "G." + class_name(c); }
std::string var_f(CodeClass c, Attr a) { return "F." + class_name(c) + "." + attr_name(a); }

int cell_int(const Cell& c) { return static_cast<int>(std::get<Affine>(c).as_int()); }

std::string row_tag(int table, const TableRow& r, const std::string& column) {
    std::string s = "table " + std::to_string(table) + " row [";
    for (int i = 0; i < 3; ++i) {
        if (i) s += ' ';
        s += to_token(r.nests[i]);
    }
    return s + "] " + column;
}

}  // namespace

int OrientationCoefficients::phi0_of(NestCode c) const { return lookup(phi0, c, "phi0"); }
int OrientationCoefficients::psi_of(NestCode c) const { return lookup(psi, c, "psi"); }
int OrientationCoefficients::chi_of(NestCode c) const { return lookup(chi, c, "chi"); }

int OrientationCoefficients::g_of(NestCode c) const {
    auto it = g.find(c.cls());
    if (it == g.end() || !it->second)
        throw CoefficientError("G undetermined for code " + to_token(c));
    return *it->second;
}

int OrientationCoefficients::f_of(NestCode c, Attr attr) const {
    auto it = f.find({c.cls(), attr});
    if (it == f.end())
        throw CoefficientError("F coefficient missing for " + to_token(NestTok{c, attr}));
    return it->second;
}

std::string OrientationCoefficients::dump() const {
    std::ostringstream out;
    for (const auto& [c, v] : phi0) out << var_phi0(c) << " = " << v << '\n';
    for (const auto& [c, v] : psi) out << var_psi(c) << " = " << v << '\n';
    for (const auto& [c, v] : chi) out << var_chi(c) << " = " << v << '\n';
    for (const auto& [c, v] : g) {
        out << var_g(c) << " = ";
        if (v)
            out << *v << '\n';
        else
            out << "undetermined\n";
    }
    for (const auto& [key, v] : f) out << var_f(key.first, key.second) << " = " << v << '\n';
    return out.str();
}

namespace {

const std::array<CodeClass, 9> kAllClasses{
    CodeClass::EvenPlus, CodeClass::EvenMinus, CodeClass::OddPP,
    CodeClass::OddMixed, CodeClass::OddMM,     CodeClass::JumpPMM,
    CodeClass::JumpMPP,  CodeClass::JumpPPP,   CodeClass::JumpMMM};

CodeClass class_from_name(const std::string& name) {
    for (CodeClass c : kAllClasses)
        if (class_name(c) == name) return c;
    throw ParseError("unknown code class '" + name + "'");
}

Attr attr_from_name(const std::string& name) {
    for (Attr a : {Attr::NonSep, Attr::Sep, Attr::Up, Attr::Down, Attr::Crossing, Attr::NonCrossing})
        if (attr_name(a) == name) return a;
    throw ParseError("unknown attribute '" + name + "'");
}

}  // namespace

OrientationCoefficients OrientationCoefficients::parse(const std::string& text) {
    OrientationCoefficients out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("bad coefficient line '" + line + "'");
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            s.erase(0, s.find_first_not_of(' '));
            s.erase(s.find_last_not_of(' ') + 1);
        };
        trim(key);
        trim(val);
        auto dot = key.find('.');
        if (dot == std::string::npos) throw ParseError("bad coefficient key '" + key + "'");
        std::string head = key.substr(0, dot);
        std::string rest = key.substr(dot + 1);
        if (head == "F") {
            auto dot2 = rest.rfind('.');
            if (dot2 == std::string::npos) throw ParseError("bad coefficient key '" + key + "'");
            out.f[{class_from_name(rest.substr(0, dot2)), attr_from_name(rest.substr(dot2 + 1))}] =
                std::stoi(val);
        } else if (head == "G") {
            if (val == "undetermined")
                out.g[class_from_name(rest)] = std::nullopt;
            else
                out.g[class_from_name(rest)] = std::stoi(val);
        } else if (head == "phi0") {
            out.phi0[class_from_name(rest)] = std::stoi(val);
        } else if (head == "psi") {
            out.psi[class_from_name(rest)] = std::stoi(val);
        } else if (head == "chi") {
            out.chi[class_from_name(rest)] = std::stoi(val);
        } else {
            throw ParseError("bad coefficient key '" + key + "'");
        }
    }
    return out;
}

namespace {

constexpr std::array<int, 4> kSchemeTables{1, 7, 11, 17};
constexpr std::array<int, 9> kDeficitTables{2, 3, 4, 8, 9, 12, 13, 14, 15};

void require_integer(const std::string& name, const Rat& v) {
    if (!v.is_integer())
        throw FitError("fitted value for " + name + " is not an integer: " + v.str());
}

}  // namespace

OrientationCoefficients fit_coefficients(const Corpus& corpus, int gauge_g) {
    std::vector<Equation> e0_eqs, ei_eqs, fg_eqs;

    for (int id : kSchemeTables) {
        const Table& t = corpus.at(id);
        for (const auto& row : t.rows) {
            std::array<CodeClass, 3> cls{row.nests[0].code.cls(), row.nests[1].code.cls(),
                                         row.nests[2].code.cls()};
            Equation e0;
            for (auto c : cls) e0.coeffs[var_phi0(c)] = e0.coeffs[var_phi0(c)] + Rat{1};
            e0.rhs = Rat{cell_int(row.cells[0])};
            e0.tag = row_tag(id, row, "E0");
            e0_eqs.push_back(std::move(e0));
            for (int i = 1; i <= 3; ++i) {
                Equation ei;
                ei.coeffs[var_psi(cls[i - 1])] = ei.coeffs[var_psi(cls[i - 1])] + Rat{1};
                for (int l = 0; l < 3; ++l)
                    if (l != i - 1) ei.coeffs[var_chi(cls[l])] = ei.coeffs[var_chi(cls[l])] + Rat{1};
                ei.rhs = Rat{cell_int(row.cells[static_cast<std::size_t>(i)])};
                ei.tag = row_tag(id, row, "E" + std::to_string(i));
                ei_eqs.push_back(std::move(ei));
            }
        }
    }

    for (int id : kDeficitTables) {
        const Table& t = corpus.at(id);
        int sep = t.schema().sep_slot - 1;
        for (const auto& row : t.rows) {
            Equation eq;
            eq.coeffs[var_f(row.nests[sep].code.cls(), row.nests[sep].attr)] = Rat{1};
            for (int l = 0; l < 3; ++l) {
                if (l == sep) continue;
                auto name = var_g(row.nests[l].code.cls());
                eq.coeffs[name] = eq.coeffs[name] - Rat{1};
            }
            eq.rhs = Rat{cell_int(row.cells[0])};
            eq.tag = row_tag(id, row, "FG");
            fg_eqs.push_back(std::move(eq));
        }
    }

    // gauge rows
    ei_eqs.push_back(Equation{{{var_chi(CodeClass::OddMixed), Rat{1}}}, Rat{0}, "gauge chi(pm,mp)=0"});
    fg_eqs.push_back(Equation{{{var_g(CodeClass::EvenPlus), Rat{1}}}, Rat{gauge_g},
                              "gauge G(+)=" + std::to_string(gauge_g)});

    Solution s_phi = solve_exact(e0_eqs);
    Solution s_ei = solve_exact(ei_eqs);
    Solution s_fg = solve_exact(fg_eqs);
    if (!s_phi.unique || !s_ei.unique || !s_fg.unique) {
        std::string missing;
        for (const auto* s : {&s_phi, &s_ei, &s_fg})
            for (const auto& n : s->free_unknowns) missing += " " + n;
        throw FitError("system is rank-deficient beyond the gauge; undetermined:" + missing);
    }

    OrientationCoefficients out;
    auto assign = [](const Solution& sol, const std::string& prefix,
                     auto&& store) {
        for (const auto& [name, value] : sol.values) {
            if (name.rfind(prefix, 0) != 0) continue;
            require_integer(name, value);
            store(name.substr(prefix.size()), static_cast<int>(value.num));
        }
    };
    assign(s_phi, "phi0.", [&](const std::string& k, int v) { out.phi0[class_from_name(k)] = v; });
    assign(s_ei, "psi.", [&](const std::string& k, int v) { out.psi[class_from_name(k)] = v; });
    assign(s_ei, "chi.", [&](const std::string& k, int v) { out.chi[class_from_name(k)] = v; });
    assign(s_fg, "G.", [&](const std::string& k, int v) { out.g[class_from_name(k)] = v; });
    assign(s_fg, "F.", [&](const std::string& k, int v) {
        auto dot = k.rfind('.');
        out.f[{class_from_name(k.substr(0, dot)), attr_from_name(k.substr(dot + 1))}] = v;
    });
    // G entries never mentioned by any deficit row stay undetermined
    for (CodeClass c : kAllClasses)
        if (!out.g.count(c)) out.g[c] = std::nullopt;

    // exhaustive re-check of every corpus cell against the fitted solution
    for (int id : kSchemeTables) {
        const Table& t = corpus.at(id);
        for (const auto& row : t.rows) {
            std::array<NestCode, 3> c{row.nests[0].code, row.nests[1].code, row.nests[2].code};
            int e0 = out.phi0_of(c[0]) + out.phi0_of(c[1]) + out.phi0_of(c[2]);
            if (e0 != cell_int(row.cells[0]))
                throw FitError("fit does not reproduce " + row_tag(id, row, "E0"));
            for (int i = 0; i < 3; ++i) {
                int ei = out.psi_of(c[static_cast<std::size_t>(i)]);
                for (int l = 0; l < 3; ++l)
                    if (l != i) ei += out.chi_of(c[static_cast<std::size_t>(l)]);
                if (ei != cell_int(row.cells[static_cast<std::size_t>(i) + 1]))
                    throw FitError("fit does not reproduce " + row_tag(id, row, "E" + std::to_string(i + 1)));
            }
        }
    }
    for (int id : kDeficitTables) {
        const Table& t = corpus.at(id);
        int sep = t.schema().sep_slot - 1;
        for (const auto& row : t.rows) {
            int v = out.f_of(row.nests[sep].code, row.nests[sep].attr);
            for (int l = 0; l < 3; ++l)
                if (l != sep) v -= out.g_of(row.nests[l].code);
            if (v != cell_int(row.cells[0]))
                throw FitError("fit does not reproduce " + row_tag(id, row, "FG"));
        }
    }
    return out;
}

}  // namespace ovalis
