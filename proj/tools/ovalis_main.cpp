#include "ovalis/corpus.hpp"
#include "ovalis/coefficients.hpp"
#include "ovalis/ledger.hpp"
#include "ovalis/pipeline.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

ovalis::ParityClass parity_class_from(const std::string& name) {
    if (name == "EEO") return ovalis::ParityClass::EEO;
    if (name == "EOO") return ovalis::ParityClass::EOO;
    if (name == "OOO") return ovalis::ParityClass::OOO;
    throw ovalis::ParseError("unknown parity class '" + name + "' (want EEO, EOO or OOO)");
}

int run(int argc, char** argv) {
    CLI::App app{"ovalis: complex-orientation tables and proof ledger for three-nest curves"};
    app.require_subcommand(1);
    std::string corpus_dir = ovalis::corpus_path_from_env("corpus");
    app.add_option("--corpus", corpus_dir, "corpus directory (overrides OVALIS_CORPUS)");

    auto* enumerate = app.add_subcommand("enumerate", "list candidate schemes of a parity class");
    std::string parity_name;
    bool with_jump = false;
    enumerate->add_option("class", parity_name, "EEO, EOO or OOO")->required();
    enumerate->add_flag("--jump", with_jump, "schemes with a jump nest");

    auto* derive = app.add_subcommand("derive-table", "derive one table from the engine");
    int table_id = 0;
    std::string format = "tsv";
    derive->add_option("id", table_id, "table id, 1..18")->required();
    derive->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    auto* diff_all = app.add_subcommand("diff-all", "derive all tables and diff against the corpus");

    auto* fit = app.add_subcommand("fit-coefficients", "fit and print the orientation coefficients");
    std::string fit_out;
    fit->add_option("--out", fit_out, "write the coefficient file here");

    auto* check = app.add_subcommand("check-certificates", "verify ledger certificates");
    std::vector<std::string> cert_files;
    std::string certs_dir = "certs";
    check->add_option("files", cert_files, "certificate files (default: all in --certs)");
    check->add_option("--certs", certs_dir, "certificate directory");

    auto* emit = app.add_subcommand("emit", "emit all derived tables");
    std::string emit_format = "tsv";
    std::string emit_out;
    emit->add_option("--format", emit_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    emit->add_option("--out", emit_out, "directory to write into (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (enumerate->parsed()) {
        for (const auto& s : ovalis::enumerate_schemes(parity_class_from(parity_name), with_jump))
            std::cout << ovalis::to_token(s.codes[0]) << '\t' << ovalis::to_token(s.codes[1])
                      << '\t' << ovalis::to_token(s.codes[2]) << '\n';
        return 0;
    }

    if (derive->parsed()) {
        auto engine = ovalis::Engine::load(corpus_dir);
        ovalis::Table t = ovalis::derive_table(table_id, engine);
        std::cout << (format == "tsv" ? ovalis::emit_tsv(t) : ovalis::emit_json(t));
        return 0;
    }

    if (diff_all->parsed()) {
        auto engine = ovalis::Engine::load(corpus_dir);
        for (const auto& w : engine.corpus.warnings) std::cerr << w << '\n';
        bool clean = true;
        for (int id = 1; id <= 18; ++id) {
            ovalis::Table derived = ovalis::derive_table(id, engine);
            auto diffs = ovalis::diff_tables(derived, engine.corpus.at(id));
            if (diffs.empty()) {
                std::cout << "table " << id << ": ok (" << derived.rows.size() << " rows)\n";
            } else {
                clean = false;
                for (const auto& d : diffs) std::cout << d.str() << '\n';
            }
        }
        return clean ? 0 : 1;
    }

    if (fit->parsed()) {
        auto corpus = ovalis::load_corpus(corpus_dir);
        auto coeffs = ovalis::fit_coefficients(corpus);
        std::string text = coeffs.dump();
        if (fit_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(fit_out);
            if (!f) throw ovalis::Error("cannot write " + fit_out);
            f << text;
        }
        return 0;
    }

    if (check->parsed()) {
        ovalis::LedgerReport report = cert_files.empty()
                                          ? ovalis::check_certificates(certs_dir)
                                          : ovalis::check_certificate_files(cert_files);
        std::cout << report.summary();
        return report.all_pass() ? 0 : 1;
    }

    if (emit->parsed()) {
        auto engine = ovalis::Engine::load(corpus_dir);
        for (int id = 1; id <= 18; ++id) {
            ovalis::Table t = ovalis::derive_table(id, engine);
            std::string text =
                emit_format == "tsv" ? ovalis::emit_tsv(t) : ovalis::emit_json(t);
            if (emit_out.empty()) {
                std::cout << text;
            } else {
                char name[32];
                std::snprintf(name, sizeof name, "table-%02d.%s", id,
                              emit_format == "tsv" ? "tsv" : "json");
                std::filesystem::path p = std::filesystem::path(emit_out) / name;
                std::ofstream f(p);
                if (!f) throw ovalis::Error("cannot write " + p.string());
                f << text;
            }
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ovalis::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
