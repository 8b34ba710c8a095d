#include "ovalis/corpus.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace ovalis {

int Zones::size() const {
    int n = 0;
    for (int i = 0; i < 4; ++i) n += contains(i);
    return n;
}

Zones Zones::permuted(const std::array<int, 3>& perm) const {
    Zones out;
    if (contains(0)) out.insert(0);
    for (int new_slot = 0; new_slot < 3; ++new_slot)
        if (contains(perm[new_slot] + 1)) out.insert(new_slot + 1);
    return out;
}

std::string Zones::str() const {
    std::string s = "(";
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (!contains(i)) continue;
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + ")";
}

Zones Zones::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError("bad zone cell '" + text + "'");
    Zones z;
    for (char c : text.substr(1, text.size() - 2)) {
        if (c == ',' || c == ' ') continue;
        if (c < '0' || c > '3') throw ParseError("bad zone cell '" + text + "'");
        z.insert(c - '0');
    }
    return z;
}

std::string cell_str(const Cell& c) {
    if (std::holds_alternative<Affine>(c)) return std::get<Affine>(c).str();
    return std::get<Zones>(c).str();
}

bool cell_eq(const Cell& a, const Cell& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<Affine>(a)) return std::get<Affine>(a) == std::get<Affine>(b);
    return std::get<Zones>(a) == std::get<Zones>(b);
}

bool operator==(const TableRow& a, const TableRow& b) {
    if (a.nests != b.nests || a.cells.size() != b.cells.size()) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i)
        if (!cell_eq(a.cells[i], b.cells[i])) return false;
    return true;
}

namespace {

const std::array<TableSchema, 18> kSchemas = {{
    {1, TableKind::Scheme, "short complex schemes, two even nests and one odd, no jump",
     {"E0", "E1", "E2", "E3", "Z", "Lam"}, 12, 0},
    {2, TableKind::Deficit, "two even nests and one odd, no jump, first nest separating",
     {"FG"}, 18, 1},
    {3, TableKind::Deficit, "two even nests and one odd, no jump, second nest separating",
     {"FG"}, 6, 2},
    {4, TableKind::Deficit, "two even nests and one odd, no jump, third nest separating",
     {"FG"}, 9, 3},
    {5, TableKind::TypeLambda5, "complex types, two even nests and one odd, no jump",
     {"Z", "L0", "L4", "L5", "L6"}, 14, 0},
    {6, TableKind::TypeLambda6, "two even nests and one odd, no jump, remaining cases",
     {"L0", "L1", "L2", "L3", "L4", "L5", "L6"}, 3, 0},
    {7, TableKind::Scheme, "short complex schemes with odd jump",
     {"E0", "E1", "E2", "E3", "Z", "Lam"}, 14, 0},
    {8, TableKind::Deficit, "odd jump, first nest separating", {"FG"}, 5, 1},
    {9, TableKind::Deficit, "odd jump, second nest separating", {"FG"}, 2, 2},
    {10, TableKind::TypeLambda10, "complex types, two even nests and one odd, with jump",
     {"Z", "L0", "L4", "L5", "L6", "L1", "L2", "L3"}, 7, 0},
    {11, TableKind::Scheme, "short complex schemes, one even nest and two odd, no jump",
     {"E0", "E1", "E2", "E3", "Z", "Lam"}, 12, 0},
    {12, TableKind::Deficit, "one even nest and two odd, third nest separating", {"FG"}, 12, 3},
    {13, TableKind::Deficit, "one even nest and two odd, second nest separating", {"FG"}, 7, 2},
    {14, TableKind::Deficit, "one even nest and two odd, first nest up", {"FG"}, 12, 1},
    {15, TableKind::Deficit, "one even nest and two odd, first nest down", {"FG"}, 12, 1},
    {16, TableKind::TypeZL, "complex types, one even nest and two odd, no jump",
     {"Z", "Lam"}, 12, 0},
    {17, TableKind::Scheme, "short complex schemes, three odd nests",
     {"E0", "E1", "E2", "E3", "Z", "Lam"}, 10, 0},
    {18, TableKind::Scheme, "short complex schemes, three odd nests, remaining cases",
     {"E0", "E1", "E2", "E3", "Z", "Lam"}, 2, 0},
}};

}  // namespace

const TableSchema& table_schema(int id) {
    if (id < 1 || id > 18) throw Error("table id out of range: " + std::to_string(id));
    return kSchemas[static_cast<std::size_t>(id - 1)];
}

namespace {

// Column order within a row never changes; what a slot permutation moves are
// the per-nest values E1..E3, L1..L3 (quadrants), L4..L6 (triangles) and Z.
Cell remap_cell(const std::string& column, const TableRow& row, const TableSchema& schema,
                const std::array<int, 3>& perm) {
    auto find = [&](const std::string& name) -> const Cell& {
        for (std::size_t i = 0; i < schema.columns.size(); ++i)
            if (schema.columns[i] == name) return row.cells[i];
        throw Error("column " + name + " missing in table " + std::to_string(schema.id));
    };
    if (column == "Z") return Cell{std::get<Zones>(find("Z")).permuted(perm)};
    if (column.size() == 2 && (column[0] == 'E' || column[0] == 'L')) {
        int idx = column[1] - '0';
        if (column[0] == 'E' && idx >= 1 && idx <= 3)
            return find(std::string("E") + char('0' + perm[idx - 1] + 1));
        if (column[0] == 'L' && idx >= 1 && idx <= 3)
            return find(std::string("L") + char('0' + perm[idx - 1] + 1));
        if (column[0] == 'L' && idx >= 4 && idx <= 6)
            return find(std::string("L") + char('0' + perm[idx - 4] + 4));
    }
    return find(column);
}

std::array<int, 3> nest_perm(const std::array<NestTok, 3>& nests) {
    std::array<int, 3> perm{0, 1, 2};
    auto key = [&](int i) {
        int group = nests[i].code.jump() ? 2 : (nests[i].code.parity() == Parity::Even ? 0 : 1);
        return std::array<int, 3>{group, nests[i].code.rank(), attr_rank(nests[i].attr)};
    };
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int x, int y) { return key(x) < key(y); });
    return perm;
}

}  // namespace

TableRow canonical_row(int table_id, const TableRow& row) {
    const TableSchema& schema = table_schema(table_id);
    if (schema.kind == TableKind::Deficit) return row;  // deficit column is slot-anchored
    auto perm = nest_perm(row.nests);
    TableRow out;
    for (int i = 0; i < 3; ++i) out.nests[i] = row.nests[perm[i]];
    out.cells.reserve(row.cells.size());
    for (const auto& col : schema.columns) out.cells.push_back(remap_cell(col, row, schema, perm));
    return out;
}

namespace {

std::string row_sort_key(const TableRow& r) {
    std::string k;
    for (const auto& n : r.nests) {
        k += char('A' + n.code.rank());
        k += char('a' + attr_rank(n.attr));
    }
    for (const auto& c : r.cells) {
        k += '|';
        k += cell_str(c);
    }
    return k;
}

std::string row_label(const TableRow& r) {
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (i) s += ' ';
        s += to_token(r.nests[i]);
    }
    return s;
}

}  // namespace

Table canonical(const Table& t, std::vector<std::string>* dedup_notes) {
    Table out;
    out.id = t.id;
    out.notes = t.notes;
    out.rows.reserve(t.rows.size());
    for (const auto& r : t.rows) out.rows.push_back(canonical_row(t.id, r));
    std::stable_sort(out.rows.begin(), out.rows.end(), [](const TableRow& a, const TableRow& b) {
        return row_sort_key(a) < row_sort_key(b);
    });
    std::vector<TableRow> unique;
    for (auto& r : out.rows) {
        if (!unique.empty() && unique.back() == r) {
            if (dedup_notes)
                dedup_notes->push_back("table " + std::to_string(t.id) + ": duplicate row " +
                                       row_label(r));
            continue;
        }
        unique.push_back(std::move(r));
    }
    out.rows = std::move(unique);
    return out;
}

std::string DiffEntry::str() const {
    return "table " + std::to_string(table_id) + " [" + row_key + "] " + column + ": expected " +
           expected + ", got " + got;
}

std::vector<DiffEntry> diff_tables(const Table& derived, const Table& corpus) {
    if (derived.id != corpus.id) throw Error("diff across different table ids");
    Table a = canonical(derived);
    Table b = canonical(corpus);
    std::vector<DiffEntry> diffs;
    if (a.rows.size() != b.rows.size()) {
        diffs.push_back({derived.id, "row-count", "rows", std::to_string(b.rows.size()),
                         std::to_string(a.rows.size())});
    }
    const TableSchema& schema = table_schema(derived.id);
    std::size_t n = std::min(a.rows.size(), b.rows.size());
    for (std::size_t r = 0; r < n; ++r) {
        const TableRow& ra = a.rows[r];
        const TableRow& rb = b.rows[r];
        if (ra.nests != rb.nests) {
            diffs.push_back({derived.id, row_label(rb), "nests", row_label(rb), row_label(ra)});
            continue;
        }
        for (std::size_t c = 0; c < schema.columns.size(); ++c) {
            if (!cell_eq(ra.cells[c], rb.cells[c]))
                diffs.push_back({derived.id, row_label(rb), schema.columns[c],
                                 cell_str(rb.cells[c]), cell_str(ra.cells[c])});
        }
    }
    for (std::size_t r = n; r < a.rows.size(); ++r)
        diffs.push_back({derived.id, row_label(a.rows[r]), "row", "absent", "present"});
    for (std::size_t r = n; r < b.rows.size(); ++r)
        diffs.push_back({derived.id, row_label(b.rows[r]), "row", "present", "absent"});
    return diffs;
}

const Table& Corpus::at(int id) const {
    auto it = tables.find(id);
    if (it == tables.end()) throw Error("corpus is missing table " + std::to_string(id));
    return it->second;
}

namespace {

Cell parse_cell(const TableSchema& schema, const std::string& column, const std::string& text) {
    if (column == "Z") return Cell{Zones::parse(text)};
    (void)schema;
    return Cell{parse_affine(text)};
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Table parse_tsv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool have_id = false;
    std::vector<std::string> cols;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("#table", 0) == 0) {
            std::istringstream h(line.substr(6));
            h >> t.id;
            if (!h || t.id < 1 || t.id > 18) throw ParseError("bad #table header: " + line);
            have_id = true;
            continue;
        }
        if (line.rfind("#columns", 0) == 0) {
            cols = split_ws(line.substr(8));
            continue;
        }
        if (line[0] == '#') {
            auto pos = line.find_first_not_of("# ");
            if (pos != std::string::npos) t.notes.push_back(line.substr(pos));
            continue;
        }
        if (!have_id) throw ParseError("row before #table header");
        const TableSchema& schema = table_schema(t.id);
        if (!cols.empty()) {
            std::vector<std::string> want;
            want.insert(want.end(), {"O1", "O2", "O3"});
            want.insert(want.end(), schema.columns.begin(), schema.columns.end());
            if (cols != want) throw ParseError("column header mismatch for table " + std::to_string(t.id));
            cols.clear();
        }
        auto fields = split_ws(line);
        if (fields.size() != 3 + schema.columns.size())
            throw ParseError("table " + std::to_string(t.id) + ": row has " +
                             std::to_string(fields.size()) + " fields, want " +
                             std::to_string(3 + schema.columns.size()) + ": " + line);
        TableRow row;
        for (int i = 0; i < 3; ++i) row.nests[i] = parse_nest_token(fields[i]);
        for (std::size_t c = 0; c < schema.columns.size(); ++c)
            row.cells.push_back(parse_cell(schema, schema.columns[c], fields[3 + c]));
        t.rows.push_back(std::move(row));
    }
    if (!have_id) throw ParseError("missing #table header");
    return t;
}

std::string emit_tsv(const Table& t) {
    const TableSchema& schema = table_schema(t.id);
    std::string out = "#table " + std::to_string(t.id) + " \"" + schema.caption + "\"\n";
    out += "#columns O1 O2 O3";
    for (const auto& c : schema.columns) out += " " + c;
    out += '\n';
    for (const auto& r : t.rows) {
        for (int i = 0; i < 3; ++i) {
            if (i) out += '\t';
            out += to_token(r.nests[i]);
        }
        for (const auto& c : r.cells) {
            out += '\t';
            out += cell_str(c);
        }
        out += '\n';
    }
    for (const auto& n : t.notes) out += "# " + n + "\n";
    return out;
}

std::string emit_json(const Table& t) {
    const TableSchema& schema = table_schema(t.id);
    nlohmann::json j;
    j["id"] = t.id;
    j["caption"] = schema.caption;
    j["columns"] = schema.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json row;
        row["nests"] = {to_token(r.nests[0]), to_token(r.nests[1]), to_token(r.nests[2])};
        nlohmann::json cells = nlohmann::json::object();
        for (std::size_t c = 0; c < schema.columns.size(); ++c)
            cells[schema.columns[c]] = cell_str(r.cells[c]);
        row["cells"] = cells;
        j["rows"].push_back(row);
    }
    if (!t.notes.empty()) j["notes"] = t.notes;
    return j.dump(2) + "\n";
}

Corpus load_corpus(const std::string& dir) {
    Corpus corpus;
    for (int id = 1; id <= 18; ++id) {
        char name[32];
        std::snprintf(name, sizeof name, "table-%02d.tsv", id);
        std::filesystem::path p = std::filesystem::path(dir) / name;
        std::ifstream f(p);
        if (!f) throw Error("cannot open corpus table " + std::to_string(id) + " at " + p.string());
        std::stringstream buf;
        buf << f.rdbuf();
        Table t = parse_tsv(buf.str());
        if (t.id != id)
            throw ParseError("file " + p.string() + " declares table " + std::to_string(t.id));
        const TableSchema& schema = table_schema(id);
        if (static_cast<int>(t.rows.size()) != schema.expected_rows)
            throw ParseError("table " + std::to_string(id) + ": " + std::to_string(t.rows.size()) +
                             " rows, expected " + std::to_string(schema.expected_rows));
        std::vector<std::string> dups;
        canonical(t, &dups);
        for (const auto& d : dups) corpus.warnings.push_back("warning: " + d);
        corpus.tables.emplace(id, std::move(t));
    }
    return corpus;
}

std::string corpus_path_from_env(const std::string& fallback) {
    if (const char* p = std::getenv("OVALIS_CORPUS"); p && *p) return p;
    return fallback;
}

std::vector<ComplexScheme> schemes_of(const Table& t) {
    std::vector<ComplexScheme> out;
    out.reserve(t.rows.size());
    for (const auto& r : t.rows)
        out.push_back(ComplexScheme{{r.nests[0].code, r.nests[1].code, r.nests[2].code}});
    return out;
}

}  // namespace ovalis
