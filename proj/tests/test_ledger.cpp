#include "ovalis/ledger.hpp"

#include "doctest.h"

#include "test_support.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ovalis;

TEST_CASE("conic budgets") {
    // five ovals, four odd-branch crossings, maximal against all three lines
    BudgetResult r = conic_budget({5, 4, 3, 0});
    CHECK(r.total == 38);
    CHECK(r.contradiction);

    // two maximal lines leave room
    r = conic_budget({5, 4, 2, 0});
    CHECK(r.total == 30);
    CHECK_FALSE(r.contradiction);

    r = conic_budget({});
    CHECK(r.total == 0);
    CHECK_FALSE(r.contradiction);

    CHECK_THROWS_AS(conic_budget({5, 3, 3, 0}), PreconditionError);  // odd closed-curve count
}

TEST_CASE("portion reality") {
    CHECK(portion_reality({4, 4, 3, 0}) == Reality::TotallyReal);
    CHECK(portion_reality({4, 4, 2, 0}) == Reality::NotForced);  // 28 < 36
    CHECK(portion_reality({4, 2, 3, 2}) == Reality::TotallyReal);
    CHECK_THROWS_AS(portion_reality({5, 4, 3, 0}), PreconditionError);  // over budget
}

TEST_CASE("fiedler alternation") {
    SweepSequence good{{OvalZone::OwnT3, +1},
                       {OvalZone::Quad, -1},
                       {OvalZone::OwnT3, +1},
                       {OvalZone::Quad, -1},
                       {OvalZone::CenterT, +1}};
    CHECK(fiedler_check(good));
    CHECK_FALSE(fiedler_check({{OvalZone::Quad, +1}, {OvalZone::Quad, +1}}));
    CHECK_THROWS_AS(fiedler_check({}), PreconditionError);
}

TEST_CASE("reduction removes even material and keeps the sums") {
    SweepSequence all_even{{OvalZone::Quad, +1},
                           {OvalZone::Quad, -1},
                           {OvalZone::OwnT3, -1},
                           {OvalZone::OwnT3, +1}};
    CHECK(reduce_sequences(all_even).empty());

    SweepSequence mixed{{OvalZone::OwnT3, +1}, {OvalZone::Quad, -1},   {OvalZone::OwnT3, -1},
                        {OvalZone::OwnT3, +1}, {OvalZone::Quad, +1},   {OvalZone::Quad, -1},
                        {OvalZone::OwnT3, +1}, {OvalZone::Quad, -1},   {OvalZone::CenterT, +1}};
    SweepSequence reduced = reduce_sequences(mixed);
    CHECK(zone_sums(reduced) == zone_sums(mixed));
    CHECK(zone_sums(reduced)[OvalZone::OwnT3] == 2);
    CHECK(zone_sums(reduced)[OvalZone::CenterT] == 1);
    CHECK(reduce_sequences(reduced) == reduced);
    // the reduced run alternates zones the way the five-oval pattern demands
    REQUIRE(reduced.size() == 5);
    CHECK(reduced[0].zone == OvalZone::OwnT3);
    CHECK(reduced[1].zone == OvalZone::Quad);
    CHECK(reduced[4].zone == OvalZone::CenterT);
}

TEST_CASE("mu bookkeeping") {
    CHECK(mu_bookkeeping({true, 1, 0}));
    CHECK(mu_bookkeeping({false, 0, -1}));
    CHECK_FALSE(mu_bookkeeping({true, 0, 0}));
    CHECK_FALSE(mu_bookkeeping({true, 0, 1}));
    CHECK_FALSE(mu_bookkeeping({false, -1, 0}));
}

TEST_CASE("certificate parsing") {
    Certificate cert = parse_certificate(
        "cert: demo\n"
        "title: two candidates\n"
        "depends: other\n"
        "[objects]\n"
        "D empty-oval cr(Q2) base\n"
        "[candidates]\n"
        "conic DPQRS ovals=5 o=4 max=3 :: budget-exceeded\n"
        "system s profile=l0:0,l1:1,l2:1,l3:1,l4:0,l5:0,l6:0 require=l2-l3=1 :: infeasible\n"
        "[assumptions]\n"
        "- candidate list assumed exhaustive\n"
        "[claims]\n"
        "conclusion: support\n");
    CHECK(cert.id == "demo");
    CHECK(cert.depends == std::vector<std::string>{"other"});
    REQUIRE(cert.objects.size() == 1);
    CHECK(cert.objects[0].name == "D");
    CHECK(cert.objects[0].kind == LedgerObject::Kind::EmptyOval);
    CHECK(cert.objects[0].zone == "cr(Q2) base");
    REQUIRE(cert.candidates.size() == 2);
    CHECK(cert.candidates[0].kind == Candidate::Kind::Conic);
    CHECK(cert.candidates[1].kind == Candidate::Kind::System);
    CHECK(cert.assumptions.size() == 1);

    CHECK_THROWS_AS(parse_certificate("title: headless\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate("cert: x\n[candidates]\nconic A ovals=5\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate("cert: x\n[objects]\nD mystery-thing cr(Q2)\n"), ParseError);
}

TEST_CASE("checking recomputes every verdict") {
    Certificate cert = parse_certificate(
        "cert: demo\n"
        "[candidates]\n"
        "conic C1 ovals=5 o=4 max=3 :: budget-exceeded\n"
        "portion P1 base=4 o=4 max=3 :: totally-real\n"
        "reality R1 portion=P1 :: excluded\n"
        "mu M1 mode=crossing parts=1,0 :: consistent\n"
        "[claims]\n"
        "conclusion: support\n");
    CertReport report = check_certificate(cert);
    CHECK(report.pass);

    // a tampered crossing count drops the budget below the bound
    Certificate bad = cert;
    bad.candidates[0].fields["o"] = "2";
    CertReport bad_report = check_certificate(bad);
    CHECK_FALSE(bad_report.pass);
    CHECK(bad_report.failure.find("C1") != std::string::npos);
    CHECK(bad_report.candidates[0].recomputed == "admissible");

    // a reality exclusion without its totally-real portion fails
    Certificate orphan = parse_certificate(
        "cert: orphan\n[candidates]\nreality R portion=missing :: excluded\n[claims]\nconclusion: support\n");
    CHECK_FALSE(check_certificate(orphan).pass);

    // a system equation over an undeclared profile entry is a transcription
    // error, not a free variable
    Certificate typo = parse_certificate(
        "cert: typo\n[candidates]\n"
        "system s profile=l0:0,l1:1,l2:1,l3:1,l4:0,l5:0,l6:0 require=l9=1 :: feasible\n"
        "[claims]\nconclusion: support\n");
    CertReport typo_report = check_certificate(typo);
    CHECK_FALSE(typo_report.pass);
    CHECK(typo_report.candidates[0].recomputed == "error");
}

TEST_CASE("shipped certificate corpus passes with the exact axiom report") {
    const LedgerReport& lr = ovalis::testing::ledger();
    CHECK(lr.all_pass());
    CHECK(lr.reports.size() == 21);
    auto axioms = lr.axiom_report();
    REQUIRE(axioms.size() == 1);
    CHECK(axioms.count("external-lemma-15") == 1);
    CHECK(axioms.at("external-lemma-15") == std::vector<std::string>{"lemma-04", "lemma-06"});
    CHECK(lr.verified("theorem-1"));
    CHECK(lr.failed_certificates().empty());
}

TEST_CASE("dependency failures propagate to dependents") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ovalis-tampered-certs";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& entry : fs::directory_iterator(ovalis::testing::certs_dir()))
        fs::copy_file(entry.path(), dir / entry.path().filename());
    {
        std::ifstream in(dir / "lemma-02.cert");
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        auto pos = text.find("conic DPQRS ovals=5 o=4");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 23, "conic DPQRS ovals=5 o=2");
        std::ofstream out(dir / "lemma-02.cert");
        out << text;
    }
    LedgerReport lr = check_certificates(dir.string());
    CHECK_FALSE(lr.all_pass());
    CHECK_FALSE(lr.reports.at("lemma-02").pass);
    CHECK(lr.reports.at("lemma-03").pass);      // its own arithmetic is fine
    CHECK_FALSE(lr.verified("lemma-03"));       // but the chain is broken
    CHECK_FALSE(lr.verified("theorem-1"));
    auto failed = lr.failed_certificates();
    CHECK(std::find(failed.begin(), failed.end(), "theorem-1") != failed.end());
    fs::remove_all(dir);
}

TEST_CASE("lemma certificates carry the expected budget arithmetic") {
    const LedgerReport& lr = ovalis::testing::ledger();
    const CertReport& l1 = lr.reports.at("lemma-01");
    REQUIRE(l1.candidates.size() == 3);
    for (const auto& c : l1.candidates) {
        CHECK(c.recomputed == "budget-exceeded");
        CHECK(c.detail == "38 of 36");
    }
    const CertReport& l2 = lr.reports.at("lemma-02");
    int real_portions = 0;
    for (const auto& c : l2.candidates)
        if (c.recomputed == "totally-real") ++real_portions;
    CHECK(real_portions == 2);
}
