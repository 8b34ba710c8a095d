#pragma once

#include "ovalis/ledger.hpp"
#include "ovalis/pipeline.hpp"

#include <string>

namespace ovalis::testing {

inline std::string corpus_dir() { return std::string(OVALIS_SOURCE_DIR) + "/corpus"; }
inline std::string certs_dir() { return std::string(OVALIS_SOURCE_DIR) + "/certs"; }

inline const Engine& engine() {
    static Engine e = Engine::load(corpus_dir());
    return e;
}

inline const LedgerReport& ledger() {
    static LedgerReport r = check_certificates(certs_dir());
    return r;
}

inline ComplexScheme scheme(const std::string& a, const std::string& b, const std::string& c) {
    return ComplexScheme{
        {parse_nest_token(a).code, parse_nest_token(b).code, parse_nest_token(c).code}};
}

inline ComplexType type(const std::string& a, const std::string& b, const std::string& c) {
    auto ta = parse_nest_token(a);
    auto tb = parse_nest_token(b);
    auto tc = parse_nest_token(c);
    auto fix = [](NestTok t) {
        if (t.attr != Attr::None) return t.attr;
        if (t.code.jump()) {
            // bare jump token: the forced sweep mode
            return t.code.outer_sign() > 0 ? Attr::Crossing : Attr::NonCrossing;
        }
        return Attr::NonSep;
    };
    return ComplexType{ComplexScheme{{ta.code, tb.code, tc.code}}, {fix(ta), fix(tb), fix(tc)}};
}

}  // namespace ovalis::testing
