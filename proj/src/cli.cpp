#include "higher_jones/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "higher_jones/fixtures.hpp"
#include "higher_jones/suites.hpp"

namespace hj {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigFlags {
    std::string algebra;
    std::optional<int> p, ell, delta, n, m;

    void attach(CLI::App* app) {
        app->add_option("--algebra", algebra, "symmetric | hecke | brauer | brauer-b | bmw")
            ->required()
            ->check(CLI::IsMember({"symmetric", "hecke", "brauer", "brauer-b", "bmw"}));
        app->add_option("--p", p, "characteristic (prime >= 3)");
        app->add_option("--ell", ell, "order of q");
        app->add_option("--delta", delta, "Brauer parameter");
        app->add_option("--n", n, "BMW rank");
        app->add_option("--m", m, "type B rank");
    }

    AlgebraConfig resolve() const {
        auto need = [&](const std::optional<int>& v, const char* flag) {
            if (!v) throw UsageError("--algebra " + algebra + " needs " + flag);
            return *v;
        };
        auto forbid = [&](std::initializer_list<std::pair<const std::optional<int>*, const char*>> xs) {
            for (auto [v, flag] : xs)
                if (v->has_value()) throw UsageError(std::string(flag) + " is not used by --algebra " + algebra);
        };
        try {
            if (algebra == "symmetric") {
                forbid({{&ell, "--ell"}, {&delta, "--delta"}, {&n, "--n"}, {&m, "--m"}});
                return AlgebraConfig::symmetric_group(need(p, "--p"));
            }
            if (algebra == "hecke") {
                forbid({{&p, "--p"}, {&delta, "--delta"}, {&n, "--n"}, {&m, "--m"}});
                return AlgebraConfig::hecke(need(ell, "--ell"));
            }
            if (algebra == "brauer") {
                forbid({{&ell, "--ell"}, {&n, "--n"}, {&m, "--m"}});
                return AlgebraConfig::brauer(need(delta, "--delta"), need(p, "--p"));
            }
            if (algebra == "brauer-b") {
                forbid({{&ell, "--ell"}, {&n, "--n"}, {&delta, "--delta"}});
                return AlgebraConfig::brauer_type_b(need(m, "--m"), need(p, "--p"));
            }
            forbid({{&p, "--p"}, {&delta, "--delta"}, {&m, "--m"}});
            return AlgebraConfig::bmw(need(n, "--n"), need(ell, "--ell"));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

std::string bracket(const Weight& w) {
    std::ostringstream os;
    os << w;
    return os.str();
}

std::string render_rows(const AlgebraConfig& cfg, const std::vector<DimensionRow>& rows, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "r,weight,dim\n";
        for (const auto& row : rows)
            for (const auto& [w, d] : row.entries) os << row.r << "," << w.label() << "," << d << "\n";
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["algebra"] = cfg.name();
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json jr;
            jr["r"] = row.r;
            jr["entries"] = nlohmann::ordered_json::array();
            for (const auto& [w, d] : row.entries)
                jr["entries"].push_back({{"weight", w.coords()}, {"label", w.label()}, {"dim", d.str()}});
            j["rows"].push_back(jr);
        }
        os << j.dump(2) << "\n";
    } else {
        std::size_t wl = 6, dl = 3;
        for (const auto& row : rows)
            for (const auto& [w, d] : row.entries) {
                wl = std::max(wl, bracket(w).size());
                dl = std::max(dl, d.str().size());
            }
        os << "# " << cfg.name() << "\n";
        os << std::setw(3) << "r" << "  " << std::left << std::setw(static_cast<int>(wl)) << "weight" << std::right
           << "  " << std::setw(static_cast<int>(dl)) << "dim" << "\n";
        for (const auto& row : rows)
            for (const auto& [w, d] : row.entries)
                os << std::setw(3) << row.r << "  " << std::left << std::setw(static_cast<int>(wl)) << bracket(w)
                   << std::right << "  " << std::setw(static_cast<int>(dl)) << d.str() << "\n";
    }
    return os.str();
}

int report(const Report& rep, std::ostream& out) {
    for (const auto& l : rep.lines) out << l << "\n";
    return rep.ok ? kExitOk : kExitVerifyFailed;
}

Report merge(std::initializer_list<Report> parts) {
    Report all;
    for (const auto& p : parts) {
        all.lines.insert(all.lines.end(), p.lines.begin(), p.lines.end());
        all.ok = all.ok && p.ok;
    }
    return all;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dimensions of simple modules for higher Jones algebras", "hjones"};
    app.require_subcommand(1);

    ConfigFlags table_flags, dim_flags, dec_flags;
    int rmax = 10, r_dim = 0, r_dec = 0, rank_dec = 0;
    std::string format = "text", weight_text, suite, action, path, verify_dir;

    auto* table = app.add_subcommand("table", "rows 1..rmax of simple-module dimensions");
    table_flags.attach(table);
    table->add_option("--rmax", rmax, "last row")->check(CLI::Range(1, 1000));
    table->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));

    auto* dim = app.add_subcommand("dim", "one dimension");
    dim_flags.attach(dim);
    dim->add_option("--r", r_dim)->required()->check(CLI::Range(1, 1000));
    dim->add_option("--weight", weight_text, "comma separated, e.g. 4,2")->required();

    auto* dec = app.add_subcommand("decompose", "matrix blocks of the quotient algebra");
    dec_flags.attach(dec);
    dec->add_option("--r", r_dec)->required()->check(CLI::Range(0, 1000));
    dec->add_option("--rank", rank_dec, "A-GL rank for symmetric and hecke");

    auto* verify = app.add_subcommand("verify", "run a check suite");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember({"fixtures", "oracles", "laws"}));
    verify->add_option("--dir", verify_dir, "also diff stored fixture files in this directory");

    auto* fixtures = app.add_subcommand("fixtures", "write or compare golden files");
    fixtures->add_option("action", action)->required()->check(CLI::IsMember({"emit", "diff"}));
    fixtures->add_option("path", path)->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*table) {
            auto cfg = table_flags.resolve();
            out << render_rows(cfg, simple_dims_rows(cfg, rmax), format);
            return kExitOk;
        }
        if (*dim) {
            auto cfg = dim_flags.resolve();
            Weight w;
            try {
                w = Weight::parse_list(weight_text);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--weight: ") + e.what());
            }
            auto row = simple_dims(cfg, r_dim);
            auto d = row.find(w);
            if (!d) {
                std::string labels;
                for (const auto& [x, v] : row.entries) labels += (labels.empty() ? "" : " ") + bracket(x);
                throw UsageError(bracket(w) + " is not a label at r=" + std::to_string(r_dim) + "; valid: " + labels);
            }
            out << *d << "\n";
            return kExitOk;
        }
        if (*dec) {
            auto cfg = dec_flags.resolve();
            if (cfg.partition_labels() && rank_dec < 1) throw UsageError("--rank >= 1 is required for " + cfg.name());
            auto d = algebra_decomposition(cfg, r_dec, rank_dec);
            std::ostringstream os;
            for (const auto& [w, m] : d.blocks) os << bracket(w) << " " << m << "\n";
            os << "total " << d.total << "\n";
            out << os.str();
            return kExitOk;
        }
        if (*verify) {
            Report rep;
            if (suite == "fixtures") {
                rep = verify_printed_tables();
                if (!verify_dir.empty()) rep = merge({rep, diff_fixtures(verify_dir)});
            } else if (suite == "oracles") {
                rep = merge({suites::oracle_equivalence(), suites::conservation(), suites::brute_force()});
            } else {
                rep = merge({suites::laws(), suites::type_b_crosscheck()});
            }
            return report(rep, out);
        }
        if (*fixtures) {
            if (action == "emit") {
                emit_fixtures(path);
                out << "wrote 6 tables and errata.txt to " << path << "\n";
                return kExitOk;
            }
            return report(diff_fixtures(path), out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace hj
