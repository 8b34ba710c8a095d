#include "ovalis/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ovalis {

bool RealSchemeParams::valid() const {
    int sum = beta;
    for (int a : alpha) {
        if (a < 1) return false;  // a nest has at least one interior oval
        sum += a;
    }
    return beta >= 0 && sum == 25;
}

ParityClass RealSchemeParams::parity_class() const {
    int odd = 0;
    for (int a : alpha) odd += a % 2;
    switch (odd) {
        case 1: return ParityClass::EEO;
        case 2: return ParityClass::EOO;
        case 3: return ParityClass::OOO;
    }
    throw PreconditionError("all three interior counts even");
}

bool compatible(const RealSchemeParams& params, const ComplexScheme& scheme) {
    if (!params.valid()) return false;
    for (int i = 0; i < 3; ++i) {
        Parity want = params.alpha[static_cast<std::size_t>(i)] % 2 ? Parity::Odd : Parity::Even;
        if (scheme.codes[static_cast<std::size_t>(i)].parity() != want) return false;
    }
    return true;
}

bool ComplexScheme::has_jump() const { return jump_slot() >= 0; }

int ComplexScheme::jump_slot() const {
    for (int i = 0; i < 3; ++i)
        if (codes[i].jump()) return i;
    return -1;
}

ParityClass ComplexScheme::parity_class() const {
    int odd = 0;
    for (const auto& c : codes)
        if (c.parity() == Parity::Odd) ++odd;
    switch (odd) {
        case 1: return ParityClass::EEO;
        case 2: return ParityClass::EOO;
        case 3: return ParityClass::OOO;
    }
    throw PreconditionError("all three nests even: " + to_token(codes[0]) + " " +
                            to_token(codes[1]) + " " + to_token(codes[2]));
}

bool ComplexScheme::valid() const {
    int jumps = 0;
    int odd = 0;
    for (const auto& c : codes) {
        if (c.jump()) ++jumps;
        if (c.parity() == Parity::Odd) ++odd;
    }
    return jumps <= 1 && odd >= 1;
}

bool operator<(const ComplexScheme& a, const ComplexScheme& b) {
    std::array<int, 3> ka{a.codes[0].rank(), a.codes[1].rank(), a.codes[2].rank()};
    std::array<int, 3> kb{b.codes[0].rank(), b.codes[1].rank(), b.codes[2].rank()};
    return ka < kb;
}

bool ComplexType::all_nonseparating() const {
    for (int i = 0; i < 3; ++i)
        if (!scheme.codes[i].jump() && attrs[i] != Attr::NonSep) return false;
    return true;
}

bool operator<(const ComplexType& a, const ComplexType& b) {
    auto ta = a.toks();
    auto tb = b.toks();
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
}

namespace {

// slot sort key: parity group, jump last, then code/attr order
std::array<int, 3> nest_sort_key(NestCode code, Attr attr) {
    int group = code.jump() ? 2 : (code.parity() == Parity::Even ? 0 : 1);
    return {group, code.rank(), attr_rank(attr)};
}

std::array<int, 3> sorted_permutation(const std::array<std::array<int, 3>, 3>& keys) {
    std::array<int, 3> perm{0, 1, 2};
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) { return keys[x] < keys[y]; });
    return perm;
}

}  // namespace

ComplexScheme canonicalize(const ComplexScheme& scheme, std::array<int, 3>* perm_out) {
    std::array<std::array<int, 3>, 3> keys;
    for (int i = 0; i < 3; ++i) keys[i] = nest_sort_key(scheme.codes[i], Attr::None);
    auto perm = sorted_permutation(keys);
    ComplexScheme out;
    for (int i = 0; i < 3; ++i) out.codes[i] = scheme.codes[perm[i]];
    if (perm_out) *perm_out = perm;
    return out;
}

ComplexType canonicalize(const ComplexType& type) {
    std::array<std::array<int, 3>, 3> keys;
    for (int i = 0; i < 3; ++i) keys[i] = nest_sort_key(type.scheme.codes[i], type.attrs[i]);
    auto perm = sorted_permutation(keys);
    ComplexType out;
    for (int i = 0; i < 3; ++i) {
        out.scheme.codes[i] = type.scheme.codes[perm[i]];
        out.attrs[i] = type.attrs[perm[i]];
    }
    return out;
}

namespace {
NestCode joint_code(NestCode c) {
    return (c == kOddPM || c == kOddMP) ? kOddJoint : c;
}
}  // namespace

ComplexScheme to_joint(const ComplexScheme& scheme) {
    ComplexScheme out = scheme;
    for (auto& c : out.codes) c = joint_code(c);
    return canonicalize(out);
}

ComplexType to_joint(const ComplexType& type) {
    ComplexType out = type;
    for (auto& c : out.scheme.codes) c = joint_code(c);
    return canonicalize(out);
}

std::vector<ComplexScheme> expand_joint(const ComplexScheme& scheme) {
    std::vector<ComplexScheme> acc{scheme};
    for (int i = 0; i < 3; ++i) {
        if (scheme.codes[i] != kOddJoint) continue;
        std::vector<ComplexScheme> next;
        for (const auto& s : acc)
            for (NestCode c : {kOddPM, kOddMP}) {
                ComplexScheme t = s;
                t.codes[i] = c;
                next.push_back(t);
            }
        acc = std::move(next);
    }
    std::set<ComplexScheme> dedup;
    for (const auto& s : acc) dedup.insert(canonicalize(s));
    return {dedup.begin(), dedup.end()};
}

namespace {

const std::vector<NestCode> kEvenCodes{kEvenPlus, kEvenMinus};
const std::vector<NestCode> kOddConcrete{kOddPP, kOddPM, kOddMP, kOddMM};
const std::vector<NestCode> kOddJointLevel{kOddPP, kOddJoint, kOddMM};
const std::vector<NestCode> kJumpCodes{kJumpPMM, kJumpMPP, kJumpPPP, kJumpMMM};

int pi_of(const ComplexScheme& s) {
    int acc = 0;
    for (const auto& c : s.codes) acc += c.sign_delta();
    return -acc;
}

// admissible jump budget: 3 for even-even-odd and odd-odd-odd, 4 for
// even-odd-odd (the only class that can carry the full budget)
bool jump_admissible(const ComplexScheme& s) {
    int pi = pi_of(s);
    if (pi != 3 && pi != 4) return false;
    return (pi == 4) == (s.parity_class() == ParityClass::EOO);
}

}  // namespace

std::vector<ComplexScheme> enumerate_schemes(ParityClass pc, bool with_jump) {
    std::set<ComplexScheme> out;
    auto add = [&](NestCode a, NestCode b, NestCode c) {
        ComplexScheme s{{a, b, c}};
        if (!s.valid()) return;
        if (with_jump && !jump_admissible(s)) return;
        out.insert(canonicalize(s));
    };

    if (!with_jump) {
        switch (pc) {
            case ParityClass::EEO:
                for (auto e1 : kEvenCodes)
                    for (auto e2 : kEvenCodes)
                        for (auto o : kOddConcrete) add(e1, e2, o);
                break;
            case ParityClass::EOO:
                for (auto e : kEvenCodes)
                    for (auto o1 : kOddJointLevel)
                        for (auto o2 : kOddJointLevel) add(e, o1, o2);
                break;
            case ParityClass::OOO:
                for (auto o1 : kOddJointLevel)
                    for (auto o2 : kOddJointLevel)
                        for (auto o3 : kOddJointLevel) add(o1, o2, o3);
                break;
        }
    } else {
        switch (pc) {
            case ParityClass::EEO:
                // one even nest, one odd nest, the jump nest (interior count even)
                for (auto e : kEvenCodes)
                    for (auto o : kOddConcrete)
                        for (auto j : kJumpCodes) add(e, o, j);
                break;
            case ParityClass::EOO:
                for (auto o1 : kOddConcrete)
                    for (auto o2 : kOddConcrete)
                        for (auto j : kJumpCodes) add(o1, o2, j);
                break;
            case ParityClass::OOO:
                // no odd-jump code exists here; the jump is carried by an odd
                // nest and only the all-(pm,mp) budget survives
                for (auto o1 : kOddConcrete)
                    for (auto o2 : kOddConcrete)
                        for (auto o3 : kOddConcrete) {
                            ComplexScheme s{{o1, o2, o3}};
                            if (pi_of(s) == 3) out.insert(canonicalize(s));
                        }
                break;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<ComplexType> expand_types(const ComplexScheme& scheme) {
    std::array<std::vector<Attr>, 3> domains;
    for (int i = 0; i < 3; ++i) {
        const NestCode c = scheme.codes[i];
        if (c.jump())
            domains[i] = {Attr::Crossing, Attr::NonCrossing};
        else if (c.parity() == Parity::Even)
            domains[i] = {Attr::NonSep, Attr::Up, Attr::Down};
        else
            domains[i] = {Attr::NonSep, Attr::Sep};
    }
    std::vector<ComplexType> result;
    for (Attr a0 : domains[0])
        for (Attr a1 : domains[1])
            for (Attr a2 : domains[2]) result.push_back(ComplexType{scheme, {a0, a1, a2}});
    return result;
}

}  // namespace ovalis
