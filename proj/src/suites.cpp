#include "higher_jones/suites.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "higher_jones/oracle.hpp"

namespace hj::suites {

namespace {

struct Setting {
    Family f;
    int n;
    AlcoveParams params;
};

std::string describe(const Setting& s) {
    return "family " + std::string(family_name(s.f)) + " rank " + std::to_string(s.n) + " " + s.params.describe();
}

void add(Report& rep, const std::string& what, bool ok, const std::string& why = "") {
    rep.lines.push_back(what + ": " + (ok ? "ok" : "FAIL" + (why.empty() ? "" : " (" + why + ")")));
    if (!ok) rep.ok = false;
}

std::string diff_note(const MultiplicityTable& a, const MultiplicityTable& b) {
    for (const auto& [w, m] : a.entries)
        if (b.at(w) != m) return "at " + w.label() + ": " + m.str() + " vs " + b.at(w).str();
    for (const auto& [w, m] : b.entries)
        if (a.at(w) != m) return "at " + w.label() + ": " + a.at(w).str() + " vs " + m.str();
    return "";
}

}  // namespace

Report oracle_equivalence(int rmax) {
    Report rep;
    auto p5 = AlcoveParams::modular(5), p7 = AlcoveParams::modular(7);
    auto q10 = AlcoveParams::quantum(10), q12 = AlcoveParams::quantum(12);
    std::vector<Setting> minuscule = {{Family::GL, 1, p5}, {Family::GL, 2, p5}, {Family::GL, 1, q12},
                                      {Family::GL, 2, q12}, {Family::C, 1, p7}, {Family::C, 2, p7},
                                      {Family::C, 1, q10}, {Family::C, 2, q10}, {Family::D, 1, p7},
                                      {Family::D, 2, p7}};
    // remaining table configs
    for (int n = 3; n <= 4; ++n) minuscule.push_back({Family::GL, n, p5});
    for (int n = 3; n <= 5; ++n) minuscule.push_back({Family::GL, n, q12});
    minuscule.push_back({Family::C, 3, p7});
    minuscule.push_back({Family::C, 3, q10});
    minuscule.push_back({Family::D, 3, p7});
    minuscule.push_back({Family::D, 5, AlcoveParams::modular(11)});
    // altsum against walk directly, pooled over every setting of a family and rank
    std::map<std::pair<Family, int>, bool> alt_walk;
    for (const auto& s : minuscule) {
        auto spec = make_root_system(s.f, s.n);
        alt_walk.try_emplace({s.f, s.n}, true);
        FusionTower tower(spec, s.params, rmax);
        bool alt = true, walk = true, paths = true;
        std::string why;
        for (int r = 0; r <= rmax; ++r) {
            const auto& f = tower.level(r);
            auto a = fusion_mults_altsum(spec, s.params, r);
            auto w = minuscule_walk_mults(spec, s.params, r);
            if (a != f && alt) alt = false, why = "altsum r=" + std::to_string(r) + " " + diff_note(f, a);
            if (w != f && walk) walk = false, why = "walk r=" + std::to_string(r) + " " + diff_note(f, w);
            if (a != w) alt_walk[{s.f, s.n}] = false;
            for (const auto& x : alcove_weights(spec, s.params, r)) {
                auto e = oracle::enumerate_paths(spec, s.params, r, x);
                if (e != f.at(x) && paths)
                    paths = false, why = "paths r=" + std::to_string(r) + " at " + x.label();
            }
        }
        add(rep, "fusion==altsum==walk==paths, " + describe(s) + ", r<=" + std::to_string(rmax), alt && walk && paths,
            why);
    }
    for (const auto& [key, ok] : alt_walk)
        add(rep,
            "altsum==walk, family " + std::string(family_name(key.first)) + " rank " + std::to_string(key.second) +
                ", r<=" + std::to_string(rmax),
            ok);
    for (int n = 1; n <= 2; ++n) {
        Setting s{Family::B, n, p7};
        auto spec = make_root_system(s.f, s.n);
        FusionTower tower(spec, s.params, rmax);
        bool ok = true;
        std::string why;
        for (int r = 0; r <= rmax && ok; ++r) {
            auto a = fusion_mults_altsum(spec, s.params, r);
            if (a != tower.level(r)) ok = false, why = "r=" + std::to_string(r) + " " + diff_note(tower.level(r), a);
        }
        add(rep, "fusion==altsum, " + describe(s) + ", r<=" + std::to_string(rmax), ok, why);
    }
    return rep;
}

Report conservation(int max_rank, int rmax) {
    Report rep;
    for (Family f : {Family::GL, Family::B, Family::C, Family::D})
        for (int n = 1; n <= max_rank; ++n) {
            auto spec = make_root_system(f, n);
            auto levels = delta_levels(spec, rmax);
            bool ok = true;
            std::string why;
            BigInt pw = 1;
            for (int r = 0; r <= rmax; ++r) {
                BigInt s = 0;
                for (const auto& [w, m] : levels[r].entries) s += m * weyl_dim(spec, w);
                if (s != pw && ok) ok = false, why = "r=" + std::to_string(r) + ": " + s.str() + " != " + pw.str();
                pw *= spec.dim_v();
            }
            add(rep,
                "conservation, family " + std::string(family_name(f)) + " rank " + std::to_string(n) + ", r<=" +
                    std::to_string(rmax),
                ok, why);
        }
    return rep;
}

Report brute_force(int rmax) {
    Report rep;
    for (Family f : {Family::GL, Family::B, Family::C, Family::D})
        for (int n = 1; n <= 2; ++n) {
            auto spec = make_root_system(f, n);
            bool ok = true;
            std::string why;
            for (int r = 0; r <= rmax && ok; ++r)
                for (const auto& [w, m] : delta_mults(spec, r).entries)
                    if (oracle::char_product_decompose(spec, r, w) != m)
                        ok = false, why = "r=" + std::to_string(r) + " at " + w.label();
            add(rep,
                "delta==characters, family " + std::string(family_name(f)) + " rank " + std::to_string(n) +
                    ", r<=" + std::to_string(rmax),
                ok, why);
        }
    std::vector<Setting> ones = {{Family::GL, 1, AlcoveParams::modular(5)},
                                 {Family::C, 1, AlcoveParams::modular(7)},
                                 {Family::C, 1, AlcoveParams::quantum(10)},
                                 {Family::B, 1, AlcoveParams::modular(7)},
                                 {Family::D, 1, AlcoveParams::modular(7)}};
    for (const auto& s : ones) {
        auto spec = make_root_system(s.f, s.n);
        auto g = oracle::rank_one_graph(spec, s.params);
        FusionTower tower(spec, s.params, oracle::kMaxPathLength);
        bool ok = true;
        std::string why;
        for (int r = 0; r <= oracle::kMaxPathLength; ++r)
            for (const auto& w : g.states)
                if (oracle::transfer_matrix_count(g, r, w) != tower.level(r).at(w))
                    ok = false, why = "r=" + std::to_string(r) + " at " + w.label();
        add(rep, "fusion==transfer matrix, " + describe(s) + ", r<=14", ok, why);
    }
    return rep;
}

namespace {

// a^j(r) of the p=5 example: two-part labels as pairs, possibly with a zero
BigInt fib_entry(const std::vector<DimensionRow>& rows, int j, int r) {
    Weight lam = r % 2 == 0 ? (j == 1 ? Weight{(r + 2) / 2, (r - 2) / 2} : Weight{r / 2, r / 2})
                            : (j == 1 ? Weight{(r + 3) / 2, (r - 3) / 2} : Weight{(r + 1) / 2, (r - 1) / 2});
    if (lam[1] < 0) return 0;
    auto d = rows[r - 1].find(lam.stripped());
    return d ? *d : BigInt(0);
}

}  // namespace

Report laws() {
    Report rep;
    {
        auto rows = simple_dims_rows(AlgebraConfig::symmetric_group(5), 30);
        BigInt a = 1, b = 1;
        bool ok = true;
        std::string why;
        for (int r = 1; r <= 30; ++r) {
            BigInt got = fib_entry(rows, r % 2 ? 2 : 1, r);
            if (got != a && ok) ok = false, why = "r=" + std::to_string(r) + ": " + got.str() + " != " + a.str();
            BigInt c = a + b;
            a = b;
            b = c;
        }
        add(rep, "(a) fibonacci p=5 r<=30", ok, why);
    }
    {
        auto rows = simple_dims_rows(AlgebraConfig::hecke(8), 20);
        bool ok = true;
        std::string why;
        for (int r = 1; r <= 20; ++r) {
            const int s = (r + 1) / 2;
            const BigInt want = BigInt(1) << s;
            for (const auto& [w, d] : rows[r - 1].entries)
                if (w.rank() == 2 && d != want && ok)
                    ok = false, why = "r=" + std::to_string(r) + " " + w.label() + ": " + d.str() + " != 2^" +
                                      std::to_string(s);
        }
        add(rep, "(b) hecke ell=8 two-part dims = 2^s, r<=20", ok, why);
    }
    {
        bool ok = true;
        std::string why;
        for (const auto& row : simple_dims_rows(AlgebraConfig::symmetric_group(3), 20))
            for (const auto& [w, d] : row.entries)
                if (d != 1 && ok) ok = false, why = "r=" + std::to_string(row.r) + " " + w.label();
        add(rep, "(c) p=3 rows all 1, r<=20", ok, why);
    }
    auto single_one = [](const RootSystemSpec& spec, const AlcoveParams& pr, std::string& why) {
        FusionTower tower(spec, pr, 20);
        for (int r = 0; r <= 20; ++r) {
            const auto& t = tower.level(r);
            if (t.entries.size() != 1 || t.entries.begin()->second != 1) {
                why = pr.describe() + " r=" + std::to_string(r);
                return false;
            }
        }
        return true;
    };
    {
        bool ok = true;
        std::string why;
        for (int p : {5, 7, 11})
            ok = ok && single_one(make_root_system(Family::GL, p - 1), AlcoveParams::modular(p), why);
        add(rep, "(d) A-GL rank p-1 is k, p in {5,7,11}, r<=20", ok, why);
    }
    {
        bool ok = true;
        std::string why;
        for (int p : {5, 7, 11})
            ok = ok && single_one(make_root_system(Family::C, (p - 1) / 2), AlcoveParams::modular(p), why);
        add(rep, "(e) symplectic rank (p-1)/2 is k, p in {5,7,11}, r<=20", ok, why);
    }
    {
        bool ok = true;
        std::string why;
        for (int p : {3, 5, 7})
            for (int m = p; m <= p + 2; ++m) {
                FusionTower tower(make_root_system(Family::GL, m), AlcoveParams::modular(p), 10);
                for (int r = 1; r <= 10; ++r)
                    if (!tower.level(r).empty() && ok)
                        ok = false, why = "p=" + std::to_string(p) + " m=" + std::to_string(m);
            }
        add(rep, "(f) A-GL rank >= p is zero, r<=10", ok, why);
    }
    {
        bool ok = true;
        std::string why;
        for (int p : {3, 5, 7, 11})
            for (const auto& row : simple_dims_rows(AlgebraConfig::symmetric_group(p), 20))
                for (const auto& [w, d] : row.entries)
                    if (!is_e_regular(w, p) && ok) ok = false, why = "p=" + std::to_string(p) + " " + w.label();
        for (int ell : {5, 8, 9, 10, 12}) {
            const int e = AlcoveParams::quantum(ell).ell_prime();
            for (const auto& row : simple_dims_rows(AlgebraConfig::hecke(ell), 20))
                for (const auto& [w, d] : row.entries)
                    if (!is_e_regular(w, e) && ok) ok = false, why = "ell=" + std::to_string(ell) + " " + w.label();
        }
        add(rep, "(g) symmetric/hecke labels are e-regular, r<=20", ok, why);
    }
    return rep;
}

namespace {

// Finds, per parity of r, one bijection between the two label sets under which
// every row of that parity agrees.
bool relabel(const std::vector<DimensionRow>& a, const std::vector<DimensionRow>& b, int parity,
             std::string& why) {
    std::vector<Weight> la, lb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].r % 2 != parity) continue;
        for (const auto& [w, d] : a[i].entries)
            if (std::find(la.begin(), la.end(), w) == la.end()) la.push_back(w);
        for (const auto& [w, d] : b[i].entries)
            if (std::find(lb.begin(), lb.end(), w) == lb.end()) lb.push_back(w);
    }
    if (la.size() != lb.size()) {
        why = "label counts differ for parity " + std::to_string(parity);
        return false;
    }
    std::vector<std::size_t> perm(lb.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) {
            if (a[i].r % 2 != parity) continue;
            if (a[i].entries.size() != b[i].entries.size()) ok = false;
            for (std::size_t k = 0; k < la.size() && ok; ++k) {
                auto x = a[i].find(la[k]);
                auto y = b[i].find(lb[perm[k]]);
                if (x.has_value() != y.has_value() || (x && *x != *y)) ok = false;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    why = "no bijection for parity " + std::to_string(parity);
    return false;
}

}  // namespace

Report type_b_crosscheck(int rmax) {
    Report rep;
    for (int m : {1, 2}) {
        auto b = simple_dims_rows(AlgebraConfig::brauer_type_b(m, 7), rmax);
        auto c = simple_dims_rows(AlgebraConfig::brauer(2 * m + 1, 7), rmax);
        std::string why;
        bool ok = relabel(b, c, 0, why) && relabel(b, c, 1, why);
        add(rep, "brauer-b m=" + std::to_string(m) + " p=7 vs delta=" + std::to_string(2 * m + 1) + " column, r<=" +
                     std::to_string(rmax),
            ok, why);
    }
    return rep;
}

}  // namespace hj::suites
