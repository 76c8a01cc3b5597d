#include "higher_jones/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hj::oracle {

namespace {

using Vec = std::vector<int>;

struct Geometry {
    std::vector<Vec> roots;    // positive roots
    std::vector<Vec> coroots;  // matching coroots
    Vec rho2;                  // sum of positive roots
    std::vector<Vec> steps;
};

Vec basis(int n, std::initializer_list<std::pair<int, int>> e) {
    Vec v(n, 0);
    for (auto [i, x] : e) v[i] += x;
    return v;
}

// Built from the textbook root lists, not from RootSystemSpec.
Geometry geometry(Family f, int n) {
    Geometry g;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            g.roots.push_back(basis(n, {{i, 1}, {j, -1}}));
            if (f != Family::GL) g.roots.push_back(basis(n, {{i, 1}, {j, 1}}));
        }
    for (int i = 0; i < n; ++i) {
        if (f == Family::C || (f == Family::D && n == 1)) g.roots.push_back(basis(n, {{i, 2}}));
        if (f == Family::B) g.roots.push_back(basis(n, {{i, 1}}));
    }
    for (const auto& a : g.roots) {
        int len2 = 0;
        for (int x : a) len2 += x * x;
        Vec c(n);
        for (int i = 0; i < n; ++i) c[i] = 2 * a[i] / len2;
        g.coroots.push_back(c);
    }
    g.rho2.assign(n, 0);
    for (const auto& a : g.roots)
        for (int i = 0; i < n; ++i) g.rho2[i] += a[i];
    for (int i = 0; i < n; ++i) {
        g.steps.push_back(basis(n, {{i, 1}}));
        if (f != Family::GL) g.steps.push_back(basis(n, {{i, -1}}));
    }
    if (f == Family::B) g.steps.push_back(Vec(n, 0));
    return g;
}

long dot(const Vec& a, const Vec& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += long(a[i]) * b[i];
    return s;
}

Vec shifted(const Geometry& g, const Vec& l) {
    Vec x(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) x[i] = 2 * l[i] + g.rho2[i];
    return x;
}

// Open alcove: every positive coroot pairs positively with lambda + rho and the
// highest one stays below the level. For even ell in type C the long roots set
// the level instead of the coroots.
bool inside(Family f, const AlcoveParams& params, const Geometry& g, const Vec& l) {
    Vec x = shifted(g, l);
    long top = 0;
    for (const auto& c : g.coroots) {
        long v = dot(x, c);
        if (v <= 0) return false;
        top = std::max(top, v);
    }
    if (f == Family::GL) {
        int level = params.quantum_mode() ? params.ell_prime() : params.value();
        return top < 2L * level;
    }
    if (f == Family::C && params.even_ell()) {
        long toproot = 0;
        for (const auto& a : g.roots) toproot = std::max(toproot, dot(x, a));
        return toproot < 2L * params.ell();
    }
    return top < 2L * params.value();
}

void check_family(const RootSystemSpec& spec, const AlcoveParams& params) {
    if (params.quantum_mode() && (spec.family == Family::B || spec.family == Family::D))
        throw std::invalid_argument("oracle: quantum mode only for A-GL and C");
}

BigInt dfs(Family f, const AlcoveParams& params, const Geometry& g, Vec& cur, int left,
           const Vec& target) {
    if (left == 0) return cur == target ? 1 : 0;
    BigInt total = 0;
    for (const auto& s : g.steps) {
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += s[i];
        if (inside(f, params, g, cur)) total += dfs(f, params, g, cur, left - 1, target);
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= s[i];
    }
    return total;
}

}  // namespace

bool in_open_alcove(const RootSystemSpec& spec, const AlcoveParams& params, const Weight& lambda) {
    check_family(spec, params);
    if (lambda.rank() != spec.rank) throw std::invalid_argument("oracle: rank mismatch");
    return inside(spec.family, params, geometry(spec.family, spec.rank), lambda.coords());
}

BigInt enumerate_paths(const RootSystemSpec& spec, const AlcoveParams& params, int r,
                       const Weight& lambda) {
    if (r < 0 || r > kMaxPathLength)
        throw std::invalid_argument("enumerate_paths: r must lie in [0, " +
                                    std::to_string(kMaxPathLength) + "]");
    if (spec.family == Family::B)
        throw std::invalid_argument("enumerate_paths: type B is not minuscule");
    check_family(spec, params);
    if (lambda.rank() != spec.rank) throw std::invalid_argument("oracle: rank mismatch");
    Geometry g = geometry(spec.family, spec.rank);
    Vec cur(spec.rank, 0);
    if (!inside(spec.family, params, g, cur)) return 0;
    return dfs(spec.family, params, g, cur, r, lambda.coords());
}

WalkGraph rank_one_graph(const RootSystemSpec& spec, const AlcoveParams& params) {
    if (spec.rank != 1) throw std::invalid_argument("rank_one_graph: rank must be 1");
    check_family(spec, params);
    WalkGraph g;
    if (spec.family == Family::GL) {
        // no upper wall in rank one: a one-way chain, long enough for the guard
        const int len = 4 * kMaxPathLength + 1;
        for (int i = 0; i < len; ++i) g.states.push_back(Weight{i});
        g.adjacency.assign(len, std::vector<int>(len, 0));
        for (int i = 0; i + 1 < len; ++i) g.adjacency[i][i + 1] = 1;
        return g;
    }
    // SL2 at level k, tensoring with L(d): keep c = |a-d|, ..., min(a+d, 2k-a-d).
    int k = 0;
    if (params.quantum_mode())
        k = params.even_ell() ? params.ell_prime() - 2 : params.ell() - 2;
    else
        k = params.p() - 2;
    const int d = spec.family == Family::B ? 2 : 1;
    // type B labels are half the SL2 highest weight
    const int scale = spec.family == Family::B ? 2 : 1;
    std::vector<int> sl2;
    for (int a = 0; a <= k; a += scale) sl2.push_back(a);
    for (int a : sl2) g.states.push_back(Weight{a / scale});
    const std::size_t m = sl2.size();
    g.adjacency.assign(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        const int a = sl2[i];
        for (int c = std::abs(a - d); c <= std::min(a + d, 2 * k - a - d); c += 2) {
            auto it = std::find(sl2.begin(), sl2.end(), c);
            if (it != sl2.end()) g.adjacency[i][it - sl2.begin()] += 1;
        }
    }
    return g;
}

BigInt transfer_matrix_count(const WalkGraph& graph, int r, const Weight& target) {
    if (graph.states.empty()) throw std::invalid_argument("transfer_matrix_count: empty state set");
    if (r < 0) throw std::invalid_argument("transfer_matrix_count: negative length");
    const std::size_t m = graph.states.size();
    std::size_t origin = m, goal = m;
    for (std::size_t i = 0; i < m; ++i) {
        if (graph.states[i].is_zero()) origin = i;
        if (graph.states[i] == target) goal = i;
    }
    if (origin == m) throw std::invalid_argument("transfer_matrix_count: no zero state");
    if (goal == m) return 0;
    std::vector<BigInt> v(m, 0);
    v[origin] = 1;
    for (int step = 0; step < r; ++step) {
        std::vector<BigInt> w(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (v[i] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    if (graph.adjacency[i][j]) w[j] += v[i] * graph.adjacency[i][j];
        v.swap(w);
    }
    return v[goal];
}

namespace {

struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> signs;
    int det;
};

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

std::vector<SignedPerm> weyl_group(Family f, int n) {
    std::vector<SignedPerm> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        const int ps = perm_sign(p);
        if (f == Family::GL) {
            out.push_back({p, std::vector<int>(n, 1), ps});
            continue;
        }
        for (int mask = 0; mask < (1 << n); ++mask) {
            int flips = __builtin_popcount(static_cast<unsigned>(mask));
            if (f == Family::D && n >= 2 && flips % 2) continue;
            std::vector<int> s(n);
            for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
            out.push_back({p, s, flips % 2 ? -ps : ps});
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Vec act(const SignedPerm& w, const Vec& x) {
    Vec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[w.perm[i]] = w.signs[i] * x[i];
    return y;
}

}  // namespace

BigInt char_product_decompose(const RootSystemSpec& spec, int r, const Weight& lambda) {
    const int n = spec.rank;
    if (n > kMaxCharRank || r < 0 || r > kMaxCharLevel)
        throw std::invalid_argument("char_product_decompose: needs rank <= " +
                                    std::to_string(kMaxCharRank) + " and r <= " +
                                    std::to_string(kMaxCharLevel));
    if (lambda.rank() != n) throw std::invalid_argument("oracle: rank mismatch");
    Geometry g = geometry(spec.family, n);
    auto W = weyl_group(spec.family, n);

    // character of V^r, doubled so the rho shift stays integral
    std::map<Vec, BigInt> ch;
    ch[Vec(n, 0)] = 1;
    for (int i = 0; i < r; ++i) {
        std::map<Vec, BigInt> next;
        for (const auto& [mu, m] : ch)
            for (const auto& s : g.steps) {
                Vec nu(mu);
                for (int j = 0; j < n; ++j) nu[j] += 2 * s[j];
                next[nu] += m;
            }
        ch.swap(next);
    }
    // times the Weyl denominator
    std::map<Vec, BigInt> alt;
    for (const auto& [mu, m] : ch)
        for (const auto& w : W) {
            Vec y = act(w, g.rho2);
            for (int j = 0; j < n; ++j) y[j] += mu[j];
            alt[y] += w.det * m;
        }
    std::erase_if(alt, [](const auto& kv) { return kv.second == 0; });

    Vec target = shifted(g, lambda.coords());
    BigInt found = 0;
    while (!alt.empty()) {
        auto top = std::prev(alt.end());
        const Vec x = top->first;
        const BigInt m = top->second;
        if (m < 0) throw std::logic_error("char_product_decompose: negative coefficient");
        if (x == target) found = m;
        for (const auto& w : W) {
            auto it = alt.find(act(w, x));
            if (it == alt.end()) throw std::logic_error("char_product_decompose: orbit not present");
            it->second -= w.det * m;
            if (it->second == 0) alt.erase(it);
        }
    }
    return found;
}

}  // namespace hj::oracle
