#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "higher_jones/jones_algebras.hpp"

namespace hj {

enum class Table { T1 = 1, T2, T3, T4, T5, T6 };

inline constexpr std::array<Table, 6> kTables = {Table::T1, Table::T2, Table::T3,
                                                 Table::T4, Table::T5, Table::T6};
inline constexpr int kTableRows = 10;

std::string table_id(Table t);
Table parse_table(std::string_view s);
std::string_view table_caption(Table t);

// One number as printed in the source tables. `group` selects the algebra:
// part count for T1/T5, symplectic rank for T2, delta for T3/T4, n for T6.
struct PrintedCell {
    Table table;
    int group;
    int r;
    std::string_view column;
    std::string_view weight;  // label, see Weight::label
    long printed;
};

struct Erratum {
    Table table;
    int r;
    std::string column;
    BigInt printed;
    BigInt computed;

    bool operator==(const Erratum&) const = default;
};

std::span<const PrintedCell> printed_cells();
std::vector<PrintedCell> printed_cells(Table t);
// Frozen list of printed values that disagree with the recursion.
std::vector<Erratum> recorded_errata();

AlgebraConfig group_config(Table t, int group);
std::vector<AlgebraConfig> table_configs(Table t);

struct FixtureRow {
    int r;
    Weight weight;
    BigInt dim;

    bool operator==(const FixtureRow&) const = default;
};

std::vector<FixtureRow> compute_table(Table t);

struct CellCheck {
    PrintedCell cell;
    BigInt computed;
    bool confirmed = false;  // walk, altsum and a brute-force oracle agree
    std::string detail;

    bool matches() const { return computed == cell.printed; }
};

// confirmed is only filled in for mismatching cells
std::vector<CellCheck> check_printed(Table t);

// walk == altsum == (transfer matrix | path enumeration) == value
bool triple_confirm(Table t, int group, int r, const Weight& w, const BigInt& value,
                    std::string* detail = nullptr);

std::string render_csv(const std::vector<FixtureRow>& rows);
std::vector<FixtureRow> parse_csv(std::string_view text);  // throws on schema errors
std::string render_errata(const std::vector<Erratum>& errata);
std::vector<Erratum> parse_errata(std::string_view text);

// printed vs computed, as a discrepancy list in table order
std::vector<Erratum> computed_errata();

struct Report {
    bool ok = true;
    std::vector<std::string> lines;
};

// every printed cell matches or is a recorded, triple-confirmed erratum
Report verify_printed_tables();

void emit_fixtures(const std::filesystem::path& dir);
// problems name the table, row and weight (and column when it was printed)
Report diff_fixtures(const std::filesystem::path& dir);

}  // namespace hj
