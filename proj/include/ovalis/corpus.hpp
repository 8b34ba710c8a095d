#pragma once

#include "ovalis/affine.hpp"
#include "ovalis/codes.hpp"
#include "ovalis/scheme.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ovalis {

// Subset of the zone indices {0,1,2,3}: the triangles that may hold exterior
// ovals. Printed as "(0,3)"; "()" when empty.
struct Zones {
    std::uint8_t mask = 0;

    static Zones none() { return {}; }
    static Zones of(std::initializer_list<int> zs) {
        Zones z;
        for (int i : zs) z.insert(i);
        return z;
    }
    bool contains(int i) const { return (mask >> i) & 1; }
    void insert(int i) { mask |= std::uint8_t(1u << i); }
    void erase(int i) { mask &= std::uint8_t(~(1u << i)); }
    bool empty() const { return mask == 0; }
    int size() const;

    // zone 0 is fixed; zones 1..3 follow their nests under slot permutation
    Zones permuted(const std::array<int, 3>& perm) const;

    std::string str() const;
    static Zones parse(const std::string& text);

    friend bool operator==(Zones a, Zones b) { return a.mask == b.mask; }
    friend bool operator!=(Zones a, Zones b) { return !(a == b); }
};

using Cell = std::variant<Affine, Zones>;

std::string cell_str(const Cell& c);
bool cell_eq(const Cell& a, const Cell& b);

enum class TableKind : std::int8_t {
    Scheme,       // E0..E3, Z, Lam        (tables 1, 7, 11, 17, 18)
    Deficit,      // FG                    (tables 2, 3, 4, 8, 9, 12..15)
    TypeLambda5,  // Z, L0, L4, L5, L6     (table 5)
    TypeLambda6,  // L0..L6                (table 6)
    TypeLambda10, // Z, L0, L4..L6, L1..L3 (table 10)
    TypeZL,       // Z, Lam                (table 16)
};

struct TableSchema {
    int id = 0;
    TableKind kind = TableKind::Scheme;
    std::string caption;
    std::vector<std::string> columns;  // value columns, after the three nest tokens
    int expected_rows = 0;
    int sep_slot = 0;  // deficit tables: which nest the F term belongs to (1..3)
};

const TableSchema& table_schema(int id);

struct TableRow {
    std::array<NestTok, 3> nests;
    std::vector<Cell> cells;

    friend bool operator==(const TableRow& a, const TableRow& b);
};

struct Table {
    int id = 0;
    std::vector<TableRow> rows;
    std::vector<std::string> notes;  // emitted as trailing comments, ignored by diff

    const TableSchema& schema() const { return table_schema(id); }
};

// Fixed slot order for the nests, value columns permuted along; rows sorted;
// duplicate rows removed (reported through *dedup_notes when given).
Table canonical(const Table& t, std::vector<std::string>* dedup_notes = nullptr);
TableRow canonical_row(int table_id, const TableRow& row);

struct DiffEntry {
    int table_id = 0;
    std::string row_key;  // nest tokens of the expected row, or "row-count"
    std::string column;
    std::string expected;
    std::string got;

    std::string str() const;
};

// Cell-for-cell comparison after canonicalization. Empty result means equal.
std::vector<DiffEntry> diff_tables(const Table& derived, const Table& corpus);

struct Corpus {
    std::map<int, Table> tables;
    std::vector<std::string> warnings;

    const Table& at(int id) const;
};

// Reads table-01.tsv .. table-18.tsv from a directory; schema-validates, checks
// row counts, flags duplicate rows as warnings.
Corpus load_corpus(const std::string& dir);

// Location given by OVALIS_CORPUS, falling back to the provided default.
std::string corpus_path_from_env(const std::string& fallback);

std::string emit_tsv(const Table& t);
std::string emit_json(const Table& t);
Table parse_tsv(const std::string& text);

std::vector<ComplexScheme> schemes_of(const Table& t);

}  // namespace ovalis
