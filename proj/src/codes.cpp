#include "ovalis/codes.hpp"

#include "ovalis/affine.hpp"

#include <charconv>
#include <vector>

namespace ovalis {

std::string Affine::str() const {
    if (c1 == 0) return std::to_string(c0);
    std::string l0 = (c1 == 1) ? "L0" : (c1 == -1 ? "-L0" : std::to_string(c1) + "L0");
    if (c0 == 0) return l0;
    if (c1 > 0) return l0 + (c0 > 0 ? "+" : "") + std::to_string(c0);
    // constant first for negative coefficient: "1-L0"
    return std::to_string(c0) + (c1 == -1 ? "-L0" : std::to_string(c1) + "L0");
}

Affine parse_affine(const std::string& text) {
    if (text.empty()) throw ParseError("empty affine cell");
    auto pos = text.find("L0");
    if (pos == std::string::npos) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || p != text.data() + text.size())
            throw ParseError("bad integer cell '" + text + "'");
        return Affine{v};
    }
    std::string head = text.substr(0, pos);   // coefficient part, may end in +/-
    std::string tail = text.substr(pos + 2);  // constant part, starts with +/- if present
    std::int64_t coeff = 1;
    std::int64_t constant = 0;
    if (!head.empty()) {
        if (head == "-") {
            coeff = -1;
        } else if (head == "+") {
            coeff = 1;
        } else if (head.back() == '+' || head.back() == '-') {
            // "1-" in "1-L0": leading constant, signed coefficient
            auto [p, ec] = std::from_chars(head.data(), head.data() + head.size() - 1, constant);
            if (ec != std::errc() || p != head.data() + head.size() - 1)
                throw ParseError("bad affine cell '" + text + "'");
            coeff = head.back() == '-' ? -1 : 1;
        } else {
            auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), coeff);
            if (ec != std::errc() || p != head.data() + head.size())
                throw ParseError("bad affine cell '" + text + "'");
        }
    }
    if (!tail.empty()) {
        if (constant != 0) throw ParseError("bad affine cell '" + text + "'");
        const char* b = tail.data();
        if (tail[0] == '+') ++b;
        auto [p, ec] = std::from_chars(b, tail.data() + tail.size(), constant);
        if (ec != std::errc() || p != tail.data() + tail.size())
            throw ParseError("bad affine cell '" + text + "'");
    }
    return Affine{constant, coeff};
}

CodeClass NestCode::cls() const {
    if (joint()) return CodeClass::OddMixed;
    switch (delta) {
        case 0: return sign == Sign::Plus ? CodeClass::EvenPlus : CodeClass::EvenMinus;
        case +1: return sign == Sign::Plus ? CodeClass::OddPP : CodeClass::OddMixed;
        case -1: return sign == Sign::Plus ? CodeClass::OddMixed : CodeClass::OddMM;
        case +2: return sign == Sign::Plus ? CodeClass::JumpPPP : CodeClass::JumpMPP;
        case -2: return sign == Sign::Plus ? CodeClass::JumpPMM : CodeClass::JumpMMM;
    }
    throw PreconditionError("invalid nest code delta");
}

int NestCode::rank() const {
    // evens, then odds with the joint token leading its concrete readings,
    // then jump codes; matches the slot conventions of the printed tables
    if (*this == kEvenPlus) return 0;
    if (*this == kEvenMinus) return 1;
    if (*this == kOddJoint) return 2;
    if (*this == kOddPM) return 3;
    if (*this == kOddMP) return 4;
    if (*this == kOddPP) return 5;
    if (*this == kOddMM) return 6;
    if (*this == kJumpPMM) return 7;
    if (*this == kJumpMPP) return 8;
    if (*this == kJumpPPP) return 9;
    if (*this == kJumpMMM) return 10;
    throw PreconditionError("invalid nest code");
}

Parity parity(NestCode code) { return code.parity(); }

int attr_rank(Attr a) {
    switch (a) {
        case Attr::Up: return 0;
        case Attr::Down: return 1;
        case Attr::NonSep: return 2;
        case Attr::Sep: return 3;
        case Attr::Crossing: return 4;
        case Attr::NonCrossing: return 5;
        case Attr::None: return 6;
    }
    return 7;
}

bool attr_valid_for(NestCode code, Attr attr) {
    switch (attr) {
        case Attr::None: return true;
        case Attr::NonSep: return !code.jump();
        case Attr::Sep: return code.parity() == Parity::Odd;
        case Attr::Up:
        case Attr::Down: return code.parity() == Parity::Even && !code.jump();
        case Attr::Crossing:
        case Attr::NonCrossing: return code.jump();
    }
    return false;
}

namespace {

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

std::string attr_suffix(Attr a) {
    switch (a) {
        case Attr::None: return "";
        case Attr::NonSep: return "n";
        case Attr::Sep: return "s";
        case Attr::Up: return "u";
        case Attr::Down: return "d";
        case Attr::Crossing: return "c";
        case Attr::NonCrossing: return "nc";
    }
    return "?";
}

}  // namespace

std::string to_token(NestCode code) {
    if (code.joint()) return "(pm,mp)";
    char s = sign_char(code.sign);
    if (code.delta == 0) return std::string(1, s);
    char chain = code.delta > 0 ? '+' : '-';
    std::string t = "(";
    t += s;
    t += ',';
    t += chain;
    if (code.jump()) {
        t += ',';
        t += chain;
    }
    t += ')';
    return t;
}

std::string to_token(const NestTok& tok) {
    std::string base = to_token(tok.code);
    if (tok.attr == Attr::None) return base;
    std::string suffix = attr_suffix(tok.attr);
    if (base[0] != '(') return "(" + base + "," + suffix + ")";
    return base.substr(0, base.size() - 1) + "," + suffix + ")";
}

NestTok parse_nest_token(const std::string& text) {
    auto bad = [&] { return ParseError("bad nest token '" + text + "'"); };
    if (text == "+") return {kEvenPlus, Attr::None};
    if (text == "-") return {kEvenMinus, Attr::None};
    if (text.size() < 3 || text.front() != '(' || text.back() != ')') throw bad();
    std::string body = text.substr(1, text.size() - 2);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : body) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.empty()) throw bad();

    Attr attr = Attr::None;
    auto take_attr = [&](const std::string& p) -> bool {
        if (p == "n") attr = Attr::NonSep;
        else if (p == "s") attr = Attr::Sep;
        else if (p == "u") attr = Attr::Up;
        else if (p == "d") attr = Attr::Down;
        else if (p == "c") attr = Attr::Crossing;
        else if (p == "nc") attr = Attr::NonCrossing;
        else return false;
        return true;
    };
    if (parts.size() > 1 && take_attr(parts.back())) parts.pop_back();

    NestCode code;
    if (parts.size() == 1 && (parts[0] == "+" || parts[0] == "-")) {
        code = parts[0] == "+" ? kEvenPlus : kEvenMinus;
    } else if (parts.size() == 2 && parts[0] == "pm" && parts[1] == "mp") {
        code = kOddJoint;
    } else if (parts.size() == 2) {
        if ((parts[0] != "+" && parts[0] != "-") || (parts[1] != "+" && parts[1] != "-")) throw bad();
        code.sign = parts[0] == "+" ? Sign::Plus : Sign::Minus;
        code.delta = parts[1] == "+" ? +1 : -1;
    } else if (parts.size() == 3) {
        if (parts[1] != parts[2] || (parts[1] != "+" && parts[1] != "-")) throw bad();
        code.sign = parts[0] == "+" ? Sign::Plus : Sign::Minus;
        code.delta = parts[1] == "+" ? +2 : -2;
    } else {
        throw bad();
    }
    if (!attr_valid_for(code, attr))
        throw ParseError("attribute '" + attr_suffix(attr) + "' not valid for " + to_token(code));
    return {code, attr};
}

std::string class_name(CodeClass c) {
    switch (c) {
        case CodeClass::EvenPlus: return "+";
        case CodeClass::EvenMinus: return "-";
        case CodeClass::OddPP: return "(+,+)";
        case CodeClass::OddMixed: return "(pm,mp)";
        case CodeClass::OddMM: return "(-,-)";
        case CodeClass::JumpPMM: return "(+,-,-)";
        case CodeClass::JumpMPP: return "(-,+,+)";
        case CodeClass::JumpPPP: return "(+,+,+)";
        case CodeClass::JumpMMM: return "(-,-,-)";
    }
    return "?";
}

std::string attr_name(Attr a) { return attr_suffix(a); }

}  // namespace ovalis
