#include "ovalis/ledger.hpp"

#include "ovalis/linsolve.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace ovalis {

BudgetResult conic_budget(const ConicSpec& spec) {
    if (spec.o_crossings < 0 || spec.o_crossings % 2 != 0)
        throw PreconditionError("odd crossing count with a closed curve: " +
                                std::to_string(spec.o_crossings));
    if (spec.extra_principal % 2 != 0)
        throw PreconditionError("odd principal-image crossing count");
    BudgetResult r;
    r.total = 2 * spec.ovals_on_conic + spec.o_crossings + 8 * spec.maximal_lines +
              spec.extra_principal;
    r.contradiction = r.total > kConicBudget;
    return r;
}

Reality portion_reality(const PortionSpec& spec) {
    if (spec.o_crossings % 2 != 0 || spec.extra_principal % 2 != 0)
        throw PreconditionError("odd crossing count with a closed curve");
    int total = 2 * spec.base_ovals + spec.o_crossings + 8 * spec.maximal_lines +
                spec.extra_principal;
    if (total > kConicBudget)
        throw PreconditionError("portion total " + std::to_string(total) + " exceeds the budget");
    return total == kConicBudget ? Reality::TotallyReal : Reality::NotForced;
}

bool fiedler_check(const SweepSequence& seq) {
    if (seq.empty()) throw PreconditionError("empty sweep sequence");
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].sign == seq[i - 1].sign) return false;
    return true;
}

namespace {

struct Chain {
    std::size_t begin;
    std::size_t end;  // half open
    std::size_t len() const { return end - begin; }
};

std::vector<Chain> split_chains(const SweepSequence& seq) {
    std::vector<Chain> chains;
    std::size_t i = 0;
    while (i < seq.size()) {
        std::size_t j = i + 1;
        while (j < seq.size() && seq[j].zone == seq[i].zone && seq[j].sign != seq[j - 1].sign) ++j;
        chains.push_back({i, j});
        i = j;
    }
    return chains;
}

}  // namespace

SweepSequence reduce_sequences(const SweepSequence& seq) {
    SweepSequence cur = seq;
    for (;;) {
        auto chains = split_chains(cur);
        SweepSequence next;
        bool removed = false;
        for (const auto& c : chains) {
            if (c.len() % 2 == 0) {
                removed = true;  // even chain sums to zero
                continue;
            }
            next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(c.begin),
                        cur.begin() + static_cast<std::ptrdiff_t>(c.end));
        }
        cur = std::move(next);
        if (!removed) break;
    }
    SweepSequence out;
    for (const auto& c : split_chains(cur)) out.push_back(cur[c.begin]);  // odd chain extremity
    return out;
}

std::map<OvalZone, int> zone_sums(const SweepSequence& seq) {
    std::map<OvalZone, int> sums{{OvalZone::Quad, 0},
                                 {OvalZone::CenterT, 0},
                                 {OvalZone::OwnT1, 0},
                                 {OvalZone::OwnT3, 0}};
    for (const auto& o : seq) sums[o.zone] += o.sign;
    return sums;
}

bool mu_bookkeeping(const MuSplit& s) {
    int eps3 = s.crossing ? +1 : -1;
    if (s.part_before + s.part_after != eps3) return false;
    if (s.crossing) return s.part_before == 1 && s.part_after == 0;
    return s.part_before == 0 && s.part_after == -1;
}

// ---------------------------------------------------------------------------
// certificate parsing
// ---------------------------------------------------------------------------

namespace {

std::string trim(std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

LedgerObject parse_object(const std::string& line) {
    std::istringstream in(line);
    LedgerObject obj;
    std::string kind;
    in >> obj.name >> kind;
    if (kind == "empty-oval")
        obj.kind = LedgerObject::Kind::EmptyOval;
    else if (kind == "principal-image")
        obj.kind = LedgerObject::Kind::PrincipalImage;
    else if (kind == "base-line")
        obj.kind = LedgerObject::Kind::BaseLine;
    else if (kind == "odd-branch")
        obj.kind = LedgerObject::Kind::OddBranch;
    else
        throw ParseError("unknown object kind '" + kind + "' in: " + line);
    std::getline(in, obj.zone);
    obj.zone = trim(obj.zone);
    return obj;
}

Candidate::Kind kind_from(const std::string& word) {
    if (word == "conic") return Candidate::Kind::Conic;
    if (word == "portion") return Candidate::Kind::Portion;
    if (word == "reality") return Candidate::Kind::Reality;
    if (word == "sweep") return Candidate::Kind::Sweep;
    if (word == "reduction") return Candidate::Kind::Reduction;
    if (word == "parity") return Candidate::Kind::ParityChk;
    if (word == "axiom") return Candidate::Kind::Axiom;
    if (word == "system") return Candidate::Kind::System;
    if (word == "mu") return Candidate::Kind::Mu;
    throw ParseError("unknown candidate kind '" + word + "'");
}

}  // namespace

Certificate parse_certificate(const std::string& text) {
    Certificate cert;
    std::istringstream in(text);
    std::string line;
    enum class Section { Head, Objects, Candidates, Assumptions, Claims } section = Section::Head;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line == "[objects]") {
            section = Section::Objects;
            continue;
        }
        if (line == "[candidates]") {
            section = Section::Candidates;
            continue;
        }
        if (line == "[assumptions]") {
            section = Section::Assumptions;
            continue;
        }
        if (line == "[claims]") {
            section = Section::Claims;
            continue;
        }
        switch (section) {
            case Section::Head: {
                auto colon = line.find(':');
                if (colon == std::string::npos) throw ParseError("bad header line '" + line + "'");
                std::string key = trim(line.substr(0, colon));
                std::string val = trim(line.substr(colon + 1));
                if (key == "cert")
                    cert.id = val;
                else if (key == "title")
                    cert.title = val;
                else if (key == "depends") {
                    std::istringstream deps(val);
                    std::string d;
                    while (deps >> d) cert.depends.push_back(d);
                } else
                    throw ParseError("unknown header key '" + key + "'");
                break;
            }
            case Section::Objects:
                cert.objects.push_back(parse_object(line));
                break;
            case Section::Candidates: {
                auto sep = line.find("::");
                if (sep == std::string::npos)
                    throw ParseError("candidate without expected verdict: " + line);
                std::string head = trim(line.substr(0, sep));
                Candidate cand;
                cand.expected = trim(line.substr(sep + 2));
                std::istringstream hs(head);
                std::string kind_word;
                hs >> kind_word >> cand.name;
                if (cand.name.empty()) throw ParseError("candidate without a name: " + line);
                cand.kind = kind_from(kind_word);
                std::string field;
                while (hs >> field) {
                    auto eq = field.find('=');
                    if (eq == std::string::npos)
                        throw ParseError("bad candidate field '" + field + "'");
                    cand.fields[field.substr(0, eq)] = field.substr(eq + 1);
                }
                cert.candidates.push_back(std::move(cand));
                break;
            }
            case Section::Assumptions:
                if (line.rfind("- ", 0) == 0) line = line.substr(2);
                cert.assumptions.push_back(line);
                break;
            case Section::Claims: {
                if (line.rfind("conclusion:", 0) != 0)
                    throw ParseError("bad claims line '" + line + "'");
                cert.conclusions.push_back(trim(line.substr(11)));
                break;
            }
        }
    }
    if (cert.id.empty()) throw ParseError("certificate without an id");
    return cert;
}

namespace {

int field_int(const Candidate& c, const std::string& key, std::optional<int> fallback = {}) {
    auto it = c.fields.find(key);
    if (it == c.fields.end()) {
        if (fallback) return *fallback;
        throw ParseError("candidate " + c.name + " misses field '" + key + "'");
    }
    return std::stoi(it->second);
}

std::string field_str(const Candidate& c, const std::string& key) {
    auto it = c.fields.find(key);
    if (it == c.fields.end())
        throw ParseError("candidate " + c.name + " misses field '" + key + "'");
    return it->second;
}

OvalZone zone_from(const std::string& z) {
    if (z == "Q") return OvalZone::Quad;
    if (z == "T0") return OvalZone::CenterT;
    if (z == "T1") return OvalZone::OwnT1;
    if (z == "T3") return OvalZone::OwnT3;
    throw ParseError("unknown sweep zone '" + z + "'");
}

std::string zone_name(OvalZone z) {
    switch (z) {
        case OvalZone::Quad: return "Q";
        case OvalZone::CenterT: return "T0";
        case OvalZone::OwnT1: return "T1";
        case OvalZone::OwnT3: return "T3";
    }
    return "?";
}

SweepSequence parse_sweep(const std::string& text) {
    SweepSequence seq;
    for (const auto& item : split(text, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("bad sweep item '" + item + "'");
        std::string sgn = item.substr(colon + 1);
        if (sgn != "+" && sgn != "-") throw ParseError("bad sweep sign '" + item + "'");
        seq.push_back({zone_from(item.substr(0, colon)), sgn == "+" ? +1 : -1});
    }
    return seq;
}

// "l2-l3=1" over the profile variables l0..l6 (affine in L0) and free
// auxiliary names; returns the equation over {"L0"} + auxiliaries.
Equation system_equation(const std::string& text, const std::map<std::string, Affine>& profile) {
    auto eq_pos = text.find('=');
    if (eq_pos == std::string::npos) throw ParseError("bad equation '" + text + "'");
    std::string lhs = text.substr(0, eq_pos);
    long long rhs = std::stoll(text.substr(eq_pos + 1));
    Equation eq;
    eq.tag = text;
    Affine acc{0};
    std::string term;
    int sign = +1;
    auto flush = [&]() {
        if (term.empty()) return;
        auto it = profile.find(term);
        if (it != profile.end()) {
            acc = acc + (sign > 0 ? it->second : -it->second);
        } else {
            // bare l<digit> must come from the profile; anything else is a
            // declared split variable (l3x, l3qd, ...)
            if (term.size() == 2 && term[0] == 'l' && std::isdigit(static_cast<unsigned char>(term[1])))
                throw ParseError("equation '" + text + "' uses " + term +
                                 " which the profile does not define");
            eq.coeffs[term] = eq.coeffs[term] + Rat{sign};
        }
        term.clear();
    };
    for (char c : lhs) {
        if (c == ' ') continue;
        if (c == '+' || c == '-') {
            flush();
            sign = c == '+' ? +1 : -1;
        } else {
            term += c;
        }
    }
    flush();
    eq.coeffs["L0"] = eq.coeffs["L0"] + Rat{acc.c1};
    eq.rhs = Rat{rhs - acc.c0};
    return eq;
}

std::string check_system(const Candidate& cand) {
    std::map<std::string, Affine> profile;
    for (const auto& item : split(field_str(cand, "profile"), ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("bad profile item '" + item + "'");
        profile[item.substr(0, colon)] = parse_affine(item.substr(colon + 1));
    }
    std::vector<Equation> eqs;
    for (const auto& eq : split(field_str(cand, "require"), ';'))
        eqs.push_back(system_equation(eq, profile));
    Solution sol;
    try {
        sol = solve_exact(eqs);
    } catch (const FitError&) {
        return "infeasible";
    }
    auto it = sol.values.find("L0");
    if (it == sol.values.end()) return "feasible";
    if (!it->second.is_integer()) return "infeasible";
    return "feasible:l0=" + std::to_string(it->second.num);
}

}  // namespace

CertReport check_certificate(const Certificate& cert) {
    CertReport report;
    report.id = cert.id;
    report.assumptions = cert.assumptions;
    std::set<std::string> real_portions;
    bool all_ok = true;
    for (const auto& cand : cert.candidates) {
        CandidateOutcome out;
        out.name = cand.name;
        out.expected = cand.expected;
        try {
            switch (cand.kind) {
                case Candidate::Kind::Conic: {
                    ConicSpec spec{field_int(cand, "ovals"), field_int(cand, "o"),
                                   field_int(cand, "max"), field_int(cand, "xp", 0)};
                    BudgetResult r = conic_budget(spec);
                    out.recomputed = r.contradiction ? "budget-exceeded" : "admissible";
                    out.detail = std::to_string(r.total) + " of " + std::to_string(kConicBudget);
                    break;
                }
                case Candidate::Kind::Portion: {
                    PortionSpec spec{field_int(cand, "base"), field_int(cand, "o"),
                                     field_int(cand, "max"), field_int(cand, "xp", 0)};
                    Reality r = portion_reality(spec);
                    out.recomputed = r == Reality::TotallyReal ? "totally-real" : "not-forced";
                    if (r == Reality::TotallyReal) real_portions.insert(cand.name);
                    break;
                }
                case Candidate::Kind::Reality: {
                    std::string portion = field_str(cand, "portion");
                    out.recomputed =
                        real_portions.count(portion) ? "excluded" : "portion-not-real";
                    out.detail = "rides a totally real portion: " + portion;
                    break;
                }
                case Candidate::Kind::Sweep: {
                    out.recomputed =
                        fiedler_check(parse_sweep(field_str(cand, "seq"))) ? "alternating" : "fail";
                    break;
                }
                case Candidate::Kind::Reduction: {
                    SweepSequence input = parse_sweep(field_str(cand, "input"));
                    SweepSequence reduced = reduce_sequences(input);
                    bool ok = zone_sums(input) == zone_sums(reduced) &&
                              reduce_sequences(reduced) == reduced;
                    if (ok && cand.fields.count("expect")) {
                        std::map<OvalZone, int> want;
                        for (const auto& item : split(cand.fields.at("expect"), ',')) {
                            auto colon = item.find(':');
                            want[zone_from(item.substr(0, colon))] =
                                std::stoi(item.substr(colon + 1));
                        }
                        auto got = zone_sums(reduced);
                        for (const auto& [z, v] : want)
                            if (got[z] != v) ok = false;
                    }
                    out.recomputed = ok ? "sums-preserved" : "sums-broken";
                    std::string r;
                    for (const auto& o : reduced)
                        r += zone_name(o.zone) + (o.sign > 0 ? ":+ " : ":- ");
                    out.detail = "reduced to " + (r.empty() ? std::string("(empty)") : r);
                    break;
                }
                case Candidate::Kind::ParityChk: {
                    out.recomputed = field_int(cand, "count") % 2 == 0 ? "even" : "odd";
                    break;
                }
                case Candidate::Kind::Axiom: {
                    std::string ax = field_str(cand, "cites");
                    report.axioms_cited.push_back(ax);
                    out.recomputed = "excluded";
                    out.detail = "accepted as external statement " + ax;
                    break;
                }
                case Candidate::Kind::System: {
                    out.recomputed = check_system(cand);
                    break;
                }
                case Candidate::Kind::Mu: {
                    auto parts = split(field_str(cand, "parts"), ',');
                    if (parts.size() != 2) throw ParseError("mu candidate needs parts=a,b");
                    MuSplit ms{field_str(cand, "mode") == "crossing", std::stoi(parts[0]),
                               std::stoi(parts[1])};
                    out.recomputed = mu_bookkeeping(ms) ? "consistent" : "inconsistent";
                    break;
                }
            }
            out.pass = out.recomputed == out.expected;
        } catch (const Error& e) {
            out.recomputed = "error";
            out.detail = e.what();
            out.pass = false;
        }
        if (!out.pass && report.failure.empty())
            report.failure = "candidate " + out.name + ": expected " + out.expected + ", got " +
                             out.recomputed;
        all_ok = all_ok && out.pass;
        report.candidates.push_back(std::move(out));
    }
    report.pass = all_ok;
    return report;
}

namespace {

std::optional<CertEffect> parse_effect(const std::string& line, const std::string& cert_id) {
    std::istringstream in(line);
    std::string verb;
    in >> verb;
    if (verb == "support" || verb == "refute-config") return std::nullopt;
    CertEffect eff;
    eff.cert_id = cert_id;
    auto parse_pattern = [&](const std::string& pat) {
        auto toks = split(pat, ';');
        if (toks.size() != 3) throw ParseError("bad type pattern '" + pat + "'");
        for (int i = 0; i < 3; ++i) {
            std::string tok = toks[static_cast<std::size_t>(i)];
            if (auto star = tok.find(",*)"); star != std::string::npos) {
                eff.any_attr[static_cast<std::size_t>(i)] = true;
                tok = tok.substr(0, star) + ")";
            }
            eff.pattern[static_cast<std::size_t>(i)] = parse_nest_token(tok);
        }
    };
    std::string rest;
    std::getline(in, rest);
    rest = trim(rest);
    if (verb == "eliminate-class") {
        eff.kind = CertEffect::Kind::EliminateClass;
        eff.target_class = rest;
        return eff;
    }
    auto sep = rest.find("::");
    std::string pat = sep == std::string::npos ? rest : trim(rest.substr(0, sep));
    std::string arg = sep == std::string::npos ? "" : trim(rest.substr(sep + 2));
    parse_pattern(pat);
    if (verb == "eliminate-type") {
        eff.kind = CertEffect::Kind::EliminateType;
    } else if (verb == "constrain-l0") {
        eff.kind = CertEffect::Kind::ConstrainL0;
        for (const auto& v : split(arg, ',')) eff.l0_values.push_back(std::stoi(v));
    } else if (verb == "constrain-laterality") {
        eff.kind = CertEffect::Kind::ConstrainLaterality;
        if (arg == "left")
            eff.laterality = Laterality::Left;
        else if (arg == "right")
            eff.laterality = Laterality::Right;
        else
            throw ParseError("bad laterality '" + arg + "'");
    } else {
        throw ParseError("unknown conclusion verb '" + verb + "'");
    }
    return eff;
}

}  // namespace

bool LedgerReport::all_pass() const {
    for (const auto& [id, r] : reports)
        if (!r.pass) return false;
    return true;
}

bool LedgerReport::verified(const std::string& id) const {
    std::set<std::string> visiting;
    std::function<bool(const std::string&)> rec = [&](const std::string& cur) -> bool {
        auto it = reports.find(cur);
        if (it == reports.end() || !it->second.pass) return false;
        if (!visiting.insert(cur).second) return false;  // dependency cycle
        auto dep = depends.find(cur);
        if (dep != depends.end())
            for (const auto& d : dep->second)
                if (!rec(d)) return false;
        visiting.erase(cur);
        return true;
    };
    return rec(id);
}

std::vector<std::string> LedgerReport::failed_certificates() const {
    std::vector<std::string> out;
    for (const auto& [id, r] : reports)
        if (!verified(id)) out.push_back(id);
    return out;
}

std::map<std::string, std::vector<std::string>> LedgerReport::axiom_report() const {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& [id, r] : reports)
        for (const auto& ax : r.axioms_cited) out[ax].push_back(id);
    for (auto& [ax, ids] : out) std::sort(ids.begin(), ids.end());
    return out;
}

std::string LedgerReport::summary() const {
    std::ostringstream out;
    int assumptions = 0;
    for (const auto& [id, r] : reports) {
        out << id << ": " << (r.pass ? "pass" : "FAIL");
        if (!r.pass) out << " (" << r.failure << ")";
        out << '\n';
        assumptions += static_cast<int>(r.assumptions.size());
    }
    auto axioms = axiom_report();
    out << "axioms:";
    if (axioms.empty()) out << " none";
    out << '\n';
    for (const auto& [ax, ids] : axioms) {
        out << "  " << ax << " cited by";
        for (const auto& id : ids) out << ' ' << id;
        out << '\n';
    }
    out << "assumptions recorded: " << assumptions << '\n';
    return out.str();
}

LedgerReport check_certificate_files(const std::vector<std::string>& files) {
    LedgerReport report;
    for (const auto& file : files) {
        std::ifstream f(file);
        if (!f) throw Error("cannot open certificate " + file);
        std::stringstream buf;
        buf << f.rdbuf();
        Certificate cert = parse_certificate(buf.str());
        report.depends[cert.id] = cert.depends;
        for (const auto& line : cert.conclusions)
            if (auto eff = parse_effect(line, cert.id)) report.effects.push_back(*eff);
        report.reports[cert.id] = check_certificate(cert);
    }
    return report;
}

LedgerReport check_certificates(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".cert") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error("no certificates found in " + dir);
    return check_certificate_files(files);
}

}  // namespace ovalis
