#include "higher_jones/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "higher_jones/oracle.hpp"

namespace hj {

std::string table_id(Table t) { return "T" + std::to_string(static_cast<int>(t)); }

Table parse_table(std::string_view s) {
    for (Table t : kTables)
        if (s == table_id(t)) return t;
    throw std::invalid_argument("unknown table '" + std::string(s) + "'");
}

std::string_view table_caption(Table t) {
    switch (t) {
    case Table::T1: return "simple kS_r-modules, p=5";
    case Table::T2: return "simple B_r(delta)-modules, delta=5,3,1, p=7";
    case Table::T3: return "simple B_r(delta)-modules, delta=4,6, p=7";
    case Table::T4: return "simple B_r(10)-modules, p=11";
    case Table::T5: return "simple H_r(q)-modules, ell=12";
    case Table::T6: return "simple BMW_r-modules, ell=10, n=1,2,3";
    }
    return "";
}

std::vector<PrintedCell> printed_cells(Table t) {
    std::vector<PrintedCell> out;
    for (const auto& c : printed_cells())
        if (c.table == t) out.push_back(c);
    return out;
}

AlgebraConfig group_config(Table t, int group) {
    switch (t) {
    case Table::T1: return AlgebraConfig::symmetric_group(5);
    case Table::T2: return AlgebraConfig::brauer(7 - 2 * group, 7);
    case Table::T3: return AlgebraConfig::brauer(group, 7);
    case Table::T4: return AlgebraConfig::brauer(group, 11);
    case Table::T5: return AlgebraConfig::hecke(12);
    case Table::T6: return AlgebraConfig::bmw(group, 10);
    }
    throw std::invalid_argument("unknown table");
}

std::vector<AlgebraConfig> table_configs(Table t) {
    switch (t) {
    case Table::T1:
    case Table::T4:
    case Table::T5: return {group_config(t, t == Table::T4 ? 10 : 1)};
    case Table::T2: return {group_config(t, 1), group_config(t, 2), group_config(t, 3)};
    case Table::T3: return {group_config(t, 4), group_config(t, 6)};
    case Table::T6: return {group_config(t, 1), group_config(t, 2), group_config(t, 3)};
    }
    return {};
}

namespace {

// rows[config][r-1]
std::vector<std::vector<DimensionRow>> table_rows(Table t) {
    std::vector<std::vector<DimensionRow>> out;
    for (const auto& cfg : table_configs(t)) out.push_back(simple_dims_rows(cfg, kTableRows));
    return out;
}

int config_index(Table t, int group) {
    switch (t) {
    case Table::T2:
    case Table::T6: return group - 1;
    case Table::T3: return group == 4 ? 0 : 1;
    default: return 0;
    }
}

BigInt engine_value(Table t, int group, int r, const Weight& w, const char* which) {
    auto cfg = group_config(t, group);
    RootSystemSpec spec = cfg.partition_labels() ? cfg.spec_for_rank(w.rank()) : cfg.spec();
    const std::string_view k(which);
    if (k == "walk") return minuscule_walk_mults(spec, cfg.params(), r).at(w);
    if (k == "altsum") return fusion_mults_altsum(spec, cfg.params(), r).at(w);
    if (spec.rank == 1) return oracle::transfer_matrix_count(oracle::rank_one_graph(spec, cfg.params()), r, w);
    return oracle::enumerate_paths(spec, cfg.params(), r, w);
}

}  // namespace

bool triple_confirm(Table t, int group, int r, const Weight& w, const BigInt& value, std::string* detail) {
    std::ostringstream os;
    bool ok = true;
    for (const char* k : {"walk", "altsum", "oracle"}) {
        BigInt v = engine_value(t, group, r, w, k);
        os << (k[0] == 'w' ? "" : " ") << k << "=" << v;
        ok = ok && v == value;
    }
    if (detail) *detail = os.str();
    return ok;
}

std::vector<FixtureRow> compute_table(Table t) {
    std::vector<FixtureRow> out;
    auto rows = table_rows(t);
    for (int r = 1; r <= kTableRows; ++r)
        for (const auto& cfg_rows : rows)
            for (const auto& [w, d] : cfg_rows[r - 1].entries) out.push_back({r, w, d});
    return out;
}

std::vector<CellCheck> check_printed(Table t) {
    auto rows = table_rows(t);
    std::vector<CellCheck> out;
    for (const auto& c : printed_cells(t)) {
        CellCheck chk{c, 0, false, ""};
        Weight w = Weight::parse_label(c.weight);
        auto v = rows[config_index(t, c.group)][c.r - 1].find(w);
        if (!v) throw std::logic_error(table_id(t) + ": printed label " + w.label() + " missing from row " +
                                       std::to_string(c.r));
        chk.computed = *v;
        if (!chk.matches()) chk.confirmed = triple_confirm(t, c.group, c.r, w, chk.computed, &chk.detail);
        out.push_back(std::move(chk));
    }
    return out;
}

std::vector<Erratum> computed_errata() {
    std::vector<Erratum> out;
    for (Table t : kTables)
        for (const auto& c : check_printed(t))
            if (!c.matches()) out.push_back({t, c.cell.r, std::string(c.cell.column), c.cell.printed, c.computed});
    return out;
}

std::string render_csv(const std::vector<FixtureRow>& rows) {
    std::string s = "r,weight,dim\n";
    for (const auto& row : rows) s += std::to_string(row.r) + "," + row.weight.label() + "," + row.dim.str() + "\n";
    return s;
}

namespace {

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        out.emplace_back(text.substr(pos, end - pos));
        pos = end + 1;
    }
    return out;
}

BigInt parse_big(const std::string& s) {
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
        throw std::invalid_argument("bad integer '" + s + "'");
    return BigInt(s);
}

}  // namespace

std::vector<FixtureRow> parse_csv(std::string_view text) {
    auto lines = lines_of(text);
    if (lines.empty() || lines[0] != "r,weight,dim") throw std::invalid_argument("missing header r,weight,dim");
    std::vector<FixtureRow> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        auto a = l.find(','), b = l.rfind(',');
        if (a == std::string::npos || a == b)
            throw std::invalid_argument("line " + std::to_string(i + 1) + ": expected three fields");
        int r = std::stoi(l.substr(0, a));
        out.push_back({r, Weight::parse_label(l.substr(a + 1, b - a - 1)), parse_big(l.substr(b + 1))});
    }
    return out;
}

std::string render_errata(const std::vector<Erratum>& errata) {
    std::string s;
    for (const auto& e : errata)
        s += table_id(e.table) + " " + std::to_string(e.r) + " " + e.column + " " + e.printed.str() + " " +
             e.computed.str() + "\n";
    return s;
}

std::vector<Erratum> parse_errata(std::string_view text) {
    std::vector<Erratum> out;
    int n = 0;
    for (const auto& l : lines_of(text)) {
        ++n;
        if (l.empty()) continue;
        std::istringstream is(l);
        std::string t, col, pr, cp, extra;
        int r = 0;
        if (!(is >> t >> r >> col >> pr >> cp) || (is >> extra))
            throw std::invalid_argument("errata line " + std::to_string(n) + ": expected 5 fields");
        out.push_back({parse_table(t), r, col, parse_big(pr), parse_big(cp)});
    }
    return out;
}

Report verify_printed_tables() {
    Report rep;
    const auto recorded = recorded_errata();
    std::set<std::tuple<int, int, std::string>> used;
    int tables_ok = 0;
    for (Table t : kTables) {
        int bad = 0, applied = 0, cells = 0;
        for (const auto& c : check_printed(t)) {
            ++cells;
            if (c.matches()) continue;
            const Erratum e{t, c.cell.r, std::string(c.cell.column), c.cell.printed, c.computed};
            bool listed = false;
            for (const auto& x : recorded) listed = listed || x == e;
            if (listed && c.confirmed) {
                ++applied;
                used.insert({static_cast<int>(t), e.r, e.column});
                continue;
            }
            ++bad;
            rep.lines.push_back(table_id(t) + " row " + std::to_string(c.cell.r) + " " + std::string(c.cell.column) +
                                ": printed " + std::to_string(c.cell.printed) + ", computed " + c.computed.str() +
                                (listed ? "" : " (not in errata)") + (c.confirmed ? "" : " (engines disagree: " + c.detail + ")"));
        }
        if (bad == 0) ++tables_ok;
        rep.lines.push_back(table_id(t) + ": " + std::to_string(cells) + " printed cells, " + std::to_string(applied) +
                            " errata applied, " + (bad ? std::to_string(bad) + " unexplained" : std::string("ok")));
    }
    for (const auto& e : recorded)
        if (!used.count({static_cast<int>(e.table), e.r, e.column})) {
            rep.lines.push_back("stale erratum: " + render_errata({e}).substr(0, render_errata({e}).size() - 1));
            rep.ok = false;
        }
    if (tables_ok != static_cast<int>(kTables.size())) rep.ok = false;
    rep.lines.push_back(std::to_string(tables_ok) + "/6 tables match (" + std::to_string(used.size()) +
                        " errata entries applied)");
    return rep;
}

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out || !(out << text)) throw std::runtime_error("cannot write " + p.string());
}

std::string printed_column(Table t, int r, const Weight& w) {
    for (const auto& c : printed_cells(t))
        if (c.r == r && Weight::parse_label(c.weight) == w) return std::string(c.column);
    return "";
}

}  // namespace

void emit_fixtures(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    for (Table t : kTables) write_file(dir / (table_id(t) + ".csv"), render_csv(compute_table(t)));
    write_file(dir / "errata.txt", render_errata(computed_errata()));
}

Report diff_fixtures(const std::filesystem::path& dir) {
    Report rep;
    for (Table t : kTables) {
        const auto path = dir / (table_id(t) + ".csv");
        auto stored = parse_csv(read_file(path));
        auto fresh = compute_table(t);
        std::map<std::pair<int, Weight>, BigInt> want, have;
        for (const auto& row : fresh) want[{row.r, row.weight}] = row.dim;
        for (const auto& row : stored) {
            if (have.count({row.r, row.weight}))
                throw std::invalid_argument(path.string() + ": duplicate entry row " + std::to_string(row.r) +
                                            " weight " + row.weight.label());
            have[{row.r, row.weight}] = row.dim;
        }
        int problems = 0;
        auto where = [&](int r, const Weight& w) {
            std::string col = printed_column(t, r, w);
            return table_id(t) + " row " + std::to_string(r) + " weight " + w.label() +
                   (col.empty() ? "" : " (column " + col + ")");
        };
        for (const auto& [k, v] : want) {
            auto it = have.find(k);
            if (it == have.end()) {
                rep.lines.push_back(where(k.first, k.second) + ": missing from file");
                ++problems;
            } else if (it->second != v) {
                rep.lines.push_back(where(k.first, k.second) + ": file has " + it->second.str() + ", computed " +
                                    v.str());
                ++problems;
            }
        }
        for (const auto& [k, v] : have)
            if (!want.count(k)) {
                rep.lines.push_back(where(k.first, k.second) + ": not a computed label");
                ++problems;
            }
        if (!problems && render_csv(stored) != read_file(path)) {
            rep.lines.push_back(table_id(t) + ": same values but not byte-identical (ordering or formatting)");
            ++problems;
        }
        if (problems) rep.ok = false;
        rep.lines.push_back(table_id(t) + ".csv: " + (problems ? std::to_string(problems) + " difference(s)" : "ok"));
    }
    const auto path = dir / "errata.txt";
    auto stored = parse_errata(read_file(path));
    auto fresh = computed_errata();
    int problems = 0;
    for (const auto& e : fresh)
        if (std::find(stored.begin(), stored.end(), e) == stored.end()) {
            rep.lines.push_back("errata.txt: missing " + render_errata({e}).substr(0, render_errata({e}).size() - 1));
            ++problems;
        }
    for (const auto& e : stored)
        if (std::find(fresh.begin(), fresh.end(), e) == fresh.end()) {
            rep.lines.push_back("errata.txt: unexpected " + render_errata({e}).substr(0, render_errata({e}).size() - 1));
            ++problems;
        }
    if (!problems && render_errata(fresh) != read_file(path)) {
        rep.lines.push_back("errata.txt: same entries but not byte-identical");
        ++problems;
    }
    if (problems) rep.ok = false;
    rep.lines.push_back(std::string("errata.txt: ") + (problems ? std::to_string(problems) + " difference(s)" : "ok"));
    return rep;
}

}  // namespace hj
