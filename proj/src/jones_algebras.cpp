#include "higher_jones/jones_algebras.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hj {

namespace {

std::string str(int x) { return std::to_string(x); }

// size descending, then lexicographically descending
bool brauer_order(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
}

std::vector<Weight> partitions_with_parts(int r, int m) {
    std::vector<Weight> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int hi) {
        if (static_cast<int>(cur.size()) == m) {
            if (left == 0) out.emplace_back(cur);
            return;
        }
        const int slots = m - static_cast<int>(cur.size());
        for (int v = std::min(hi, left - (slots - 1)); v >= 1; --v) {
            if (v * slots < left) break;
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    if (m >= 1 && r >= m) rec(r, r);
    return out;
}

// Labels of the semisimple quotients of kS_r or H_r(q) for P = p or ell'.
std::vector<Weight> partition_labels(int P, int r) {
    std::vector<Weight> out;
    for (int m = 1; m < P && m <= r; ++m)
        for (auto& l : partitions_with_parts(r, m))
            if (l[0] - l[m - 1] <= P - m) out.push_back(std::move(l));
    return out;
}

// dim D_r(lambda) from the lambda - eps_i recursion. The predecessor is read as
// an m-tuple, m = #parts(lambda), so it must itself sit in A_m.
std::vector<DimensionRow> partition_rows(int P, int rmax) {
    std::vector<DimensionRow> rows;
    std::map<Weight, BigInt> prev;
    for (int r = 1; r <= rmax; ++r) {
        DimensionRow row;
        row.r = r;
        std::map<Weight, BigInt> cur;
        for (const auto& lam : partition_labels(P, r)) {
            BigInt d = 0;
            if (r == 1) {
                d = 1;
            } else {
                const int m = lam.rank();
                for (int i = 0; i < m; ++i) {
                    std::vector<int> mu(lam.coords());
                    --mu[i];
                    bool ok = mu[m - 1] >= 0 && mu[0] - mu[m - 1] <= P - m;
                    for (int j = 0; ok && j + 1 < m; ++j) ok = mu[j] >= mu[j + 1];
                    if (!ok) continue;
                    auto it = prev.find(Weight(mu).stripped());
                    if (it != prev.end()) d += it->second;
                }
            }
            if (d == 0) throw std::logic_error("label " + lam.label() + " has no predecessor");
            cur[lam] = d;
            row.entries.emplace_back(lam, d);
        }
        prev.swap(cur);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Weight> sorted_support(const MultiplicityTable& t) {
    std::vector<Weight> out;
    for (const auto& [w, m] : t.entries) out.push_back(w);
    std::sort(out.begin(), out.end(), brauer_order);
    return out;
}

std::vector<Weight> alcove_labels(const RootSystemSpec& spec, const AlcoveParams& params, int r) {
    std::vector<Weight> out;
    for (auto& w : alcove_weights(spec, params, r))
        if ((r - w.size()) % 2 == 0) out.push_back(std::move(w));
    std::sort(out.begin(), out.end(), brauer_order);
    return out;
}

DimensionRow row_from_tower(const AlgebraConfig& config, const FusionTower& tower, int r) {
    DimensionRow row;
    row.r = r;
    const auto& level = tower.level(r);
    for (const auto& w : weight_set(config, r)) {
        BigInt d = level.at(w);
        if (d == 0) throw std::logic_error(config.name() + ": label " + w.label() + " has dimension 0");
        row.entries.emplace_back(w, d);
    }
    if (row.entries.size() != level.entries.size())
        throw std::logic_error(config.name() + ": fusion support differs from the weight set");
    return row;
}

}  // namespace

AlgebraConfig AlgebraConfig::symmetric_group(int p) {
    return AlgebraConfig(AlgebraKind::SymmetricGroup, AlcoveParams::modular(p));
}

AlgebraConfig AlgebraConfig::hecke(int ell) {
    return AlgebraConfig(AlgebraKind::Hecke, AlcoveParams::quantum(ell));
}

AlgebraConfig AlgebraConfig::brauer(int delta, int p) {
    auto params = AlcoveParams::modular(p);
    if (delta % 2 != 0) {
        if (delta <= 0 || delta > p - 1)
            throw std::invalid_argument("odd delta must satisfy 0 < delta <= p-1 (got " + str(delta) + ")");
        AlgebraConfig c(AlgebraKind::BrauerOdd, params);
        c.delta_ = delta;
        c.spec_ = make_root_system(Family::C, (p - delta) / 2);
        return c;
    }
    if (delta < 2 || delta > p + 1)
        throw std::invalid_argument("even delta must satisfy 2 <= delta <= p+1 (got " + str(delta) + ")");
    AlgebraConfig c(AlgebraKind::BrauerEven, params);
    c.delta_ = delta;
    c.spec_ = make_root_system(Family::D, delta / 2);
    return c;
}

AlgebraConfig AlgebraConfig::brauer_type_b(int m, int p) {
    auto params = AlcoveParams::modular(p);
    if (m < 1 || m > (p - 3) / 2)
        throw std::invalid_argument("type B rank must satisfy 1 <= m <= (p-3)/2 (got " + str(m) + ")");
    AlgebraConfig c(AlgebraKind::BrauerTypeB, params);
    c.delta_ = 2 * m + 1;
    c.spec_ = make_root_system(Family::B, m);
    return c;
}

AlgebraConfig AlgebraConfig::bmw(int n, int ell) {
    if (ell == 1)
        throw std::invalid_argument("BMW at q=1 is the Brauer algebra; use --algebra brauer");
    auto params = AlcoveParams::quantum(ell);
    const int top = ell % 2 ? (ell - 1) / 2 : (ell - 4) / 2;
    if (n < 1 || n > top)
        throw std::invalid_argument("BMW rank must satisfy 1 <= n <= " + str(top) + " for ell=" +
                                    str(ell) + " (got " + str(n) + ")");
    AlgebraConfig c(AlgebraKind::BMW, params);
    c.spec_ = make_root_system(Family::C, n);
    return c;
}

bool AlgebraConfig::partition_labels() const {
    return kind_ == AlgebraKind::SymmetricGroup || kind_ == AlgebraKind::Hecke;
}

const RootSystemSpec& AlgebraConfig::spec() const {
    if (!spec_) throw std::logic_error(name() + " has one root system per rank; use spec_for_rank");
    return *spec_;
}

RootSystemSpec AlgebraConfig::spec_for_rank(int m) const {
    if (!partition_labels()) {
        if (m != rank()) throw std::invalid_argument(name() + " has rank " + str(rank()));
        return spec();
    }
    return make_root_system(Family::GL, m);
}

int AlgebraConfig::max_parts() const {
    if (!partition_labels()) return 0;
    return (kind_ == AlgebraKind::Hecke ? params_.ell_prime() : params_.p()) - 1;
}

int AlgebraConfig::rank() const { return spec_ ? spec_->rank : 0; }

int AlgebraConfig::delta() const { return delta_; }

std::string AlgebraConfig::name() const {
    switch (kind_) {
    case AlgebraKind::SymmetricGroup: return "symmetric p=" + str(params_.value());
    case AlgebraKind::Hecke: return "hecke ell=" + str(params_.value());
    case AlgebraKind::BrauerOdd:
    case AlgebraKind::BrauerEven:
        return "brauer delta=" + str(delta_) + " p=" + str(params_.value());
    case AlgebraKind::BrauerTypeB: return "brauer-b m=" + str(rank()) + " p=" + str(params_.value());
    case AlgebraKind::BMW: return "bmw n=" + str(rank()) + " ell=" + str(params_.value());
    }
    return "?";
}

std::optional<BigInt> DimensionRow::find(const Weight& w) const {
    for (const auto& [l, d] : entries)
        if (l == w) return d;
    return std::nullopt;
}

std::vector<Weight> weight_set(const AlgebraConfig& config, int r) {
    if (r < 1) throw std::invalid_argument("weight_set needs r >= 1");
    switch (config.kind()) {
    case AlgebraKind::SymmetricGroup:
    case AlgebraKind::Hecke: return partition_labels(config.max_parts() + 1, r);
    case AlgebraKind::BrauerTypeB:
        return sorted_support(fusion_mults(config.spec(), config.params(), r));
    default: return alcove_labels(config.spec(), config.params(), r);
    }
}

DimensionRow symmetric_simple_dims(int p, int r) {
    AlcoveParams::modular(p);
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    return partition_rows(p, r).back();
}

DimensionRow hecke_simple_dims(int ell, int r) {
    auto params = AlcoveParams::quantum(ell);
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    return partition_rows(params.ell_prime(), r).back();
}

DimensionRow brauer_simple_dims(const AlgebraConfig& config, int r) {
    if (config.kind() != AlgebraKind::BrauerOdd && config.kind() != AlgebraKind::BrauerEven &&
        config.kind() != AlgebraKind::BrauerTypeB)
        throw std::invalid_argument(config.name() + " is not a Brauer configuration");
    return simple_dims(config, r);
}

DimensionRow bmw_simple_dims(int n, int ell, int r) { return simple_dims(AlgebraConfig::bmw(n, ell), r); }

DimensionRow simple_dims(const AlgebraConfig& config, int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    return simple_dims_rows(config, r).back();
}

std::vector<DimensionRow> simple_dims_rows(const AlgebraConfig& config, int rmax) {
    if (rmax < 1) throw std::invalid_argument("rmax must be >= 1");
    if (config.partition_labels()) return partition_rows(config.max_parts() + 1, rmax);
    std::vector<DimensionRow> rows;
    if (config.kind() == AlgebraKind::BrauerTypeB) {
        // labels are the fusion support itself, read off once per level
        FusionTower tower(config.spec(), config.params(), rmax);
        for (int r = 1; r <= rmax; ++r) {
            DimensionRow row;
            row.r = r;
            for (const auto& w : sorted_support(tower.level(r))) row.entries.emplace_back(w, tower.level(r).at(w));
            rows.push_back(std::move(row));
        }
        return rows;
    }
    FusionTower tower(config.spec(), config.params(), rmax);
    for (int r = 1; r <= rmax; ++r) rows.push_back(row_from_tower(config, tower, r));
    return rows;
}

Decomposition algebra_decomposition(const RootSystemSpec& spec, const AlcoveParams& params, int r) {
    if (r < 0) throw std::invalid_argument("r must be >= 0");
    Decomposition d;
    auto t = fusion_mults(spec, params, r);
    for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it) {
        d.blocks.emplace_back(it->first, it->second);
        d.total += it->second * it->second;
    }
    return d;
}

Decomposition algebra_decomposition(const AlgebraConfig& config, int r, int rank) {
    if (config.partition_labels()) {
        if (rank < 1) throw std::invalid_argument(config.name() + ": a rank m >= 1 is required");
        return algebra_decomposition(config.spec_for_rank(rank), config.params(), r);
    }
    return algebra_decomposition(config.spec(), config.params(), r);
}

bool is_e_regular(const Weight& lambda, int e) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    std::map<int, int> count;
    for (int x : lambda.coords())
        if (x != 0 && ++count[x] >= e) return false;
    return true;
}

namespace {

std::pair<int, int> rank_range(BrauerForm form, int p) {
    switch (form) {
    case BrauerForm::Symplectic: return {1, (p - 1) / 2};
    case BrauerForm::EvenOrthogonal: return {1, (p + 1) / 2};
    case BrauerForm::OddOrthogonal: return {1, (p - 3) / 2};
    }
    return {1, 0};
}

int mod(int a, int p) { return ((a % p) + p) % p; }

}  // namespace

int delta_from_rank(BrauerForm form, int rank, int p) {
    AlcoveParams::modular(p);
    auto [lo, hi] = rank_range(form, p);
    if (rank < lo || rank > hi)
        throw std::invalid_argument("rank " + str(rank) + " out of range for p=" + str(p));
    switch (form) {
    case BrauerForm::Symplectic: return mod(-2 * rank, p);
    case BrauerForm::EvenOrthogonal: return mod(2 * rank, p);
    case BrauerForm::OddOrthogonal: return 2 * rank + 1;
    }
    return 0;
}

int rank_from_delta(BrauerForm form, int delta, int p) {
    AlcoveParams::modular(p);
    auto [lo, hi] = rank_range(form, p);
    for (int n = lo; n <= hi; ++n)
        if (mod(delta_from_rank(form, n, p), p) == mod(delta, p)) return n;
    throw std::invalid_argument("no rank realizes delta=" + str(delta) + " for p=" + str(p));
}

}  // namespace hj
