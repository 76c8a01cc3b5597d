#include "higher_jones/root_data.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace hj {

std::string_view family_name(Family f) {
    switch (f) {
    case Family::GL: return "A-GL";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    }
    return "?";
}

Family parse_family(std::string_view s) {
    if (s == "A-GL" || s == "GL" || s == "A" || s == "gl") return Family::GL;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

namespace {

std::vector<int> vec(int n, std::initializer_list<std::pair<int, int>> entries) {
    std::vector<int> v(n, 0);
    for (auto [i, x] : entries) v[i] = x;
    return v;
}

long long pairing(const std::vector<long long>& x, const std::vector<int>& c) {
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * c[i];
    return s;
}

}  // namespace

RootSystemSpec make_root_system(Family family, int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be at least 1");
    const int n = rank;
    RootSystemSpec s;
    s.family = family;
    s.rank = n;
    s.rho2.resize(n);
    for (int i = 0; i < n; ++i) {
        switch (family) {
        case Family::GL:
        case Family::C: s.rho2[i] = 2 * (n - i); break;
        case Family::B: s.rho2[i] = 2 * (n - i) - 1; break;
        case Family::D: s.rho2[i] = 2 * (n - 1 - i); break;
        }
    }
    // D_1 is treated as SL_2 on its natural module, so rho is that of A_1.
    if (family == Family::D && n == 1) s.rho2 = {2};

    switch (family) {
    case Family::GL: s.coxeter_number = n; break;
    case Family::B:
    case Family::C: s.coxeter_number = 2 * n; break;
    case Family::D: s.coxeter_number = n >= 3 ? 2 * n - 2 : 2; break;
    }

    for (int i = 0; i < n; ++i) {
        s.steps.push_back(Weight::unit(n, i, 1));
        if (family != Family::GL) s.steps.push_back(Weight::unit(n, i, -1));
    }
    if (family == Family::B) s.steps.push_back(Weight::zero(n));

    for (int i = 0; i + 1 < n; ++i) {
        auto a = vec(n, {{i, 1}, {i + 1, -1}});
        s.simple.push_back({a, a, 0});
    }
    switch (family) {
    case Family::GL: break;
    case Family::C: s.simple.push_back({vec(n, {{n - 1, 1}}), vec(n, {{n - 1, 2}}), 0}); break;
    case Family::B: s.simple.push_back({vec(n, {{n - 1, 2}}), vec(n, {{n - 1, 1}}), 0}); break;
    case Family::D:
        if (n == 1) {
            s.simple.push_back({vec(1, {{0, 1}}), vec(1, {{0, 2}}), 0});
        } else {
            auto a = vec(n, {{n - 2, 1}, {n - 1, 1}});
            s.simple.push_back({a, a, 0});
        }
        break;
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            s.positive_coroots.push_back(vec(n, {{i, 1}, {j, -1}}));
            if (family != Family::GL) s.positive_coroots.push_back(vec(n, {{i, 1}, {j, 1}}));
        }
        if (family == Family::C || (family == Family::D && n == 1))
            s.positive_coroots.push_back(vec(n, {{i, 1}}));
        if (family == Family::B) s.positive_coroots.push_back(vec(n, {{i, 2}}));
    }
    return s;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

AlcoveParams AlcoveParams::modular(int p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("p must be a prime >= 3 (got " + std::to_string(p) + ")");
    return AlcoveParams(Mode::Modular, p);
}

AlcoveParams AlcoveParams::quantum(int ell) {
    if (ell == 2 || ell == 3 || ell == 4 || ell == 6)
        throw std::invalid_argument("ell in {2,3,4,6} excluded (got " + std::to_string(ell) + ")");
    if (ell < 5) throw std::invalid_argument("ell must be >= 5 (got " + std::to_string(ell) + ")");
    return AlcoveParams(Mode::Quantum, ell);
}

int AlcoveParams::p() const {
    if (mode_ != Mode::Modular) throw std::logic_error("p requested in quantum mode");
    return value_;
}

int AlcoveParams::ell() const {
    if (mode_ != Mode::Quantum) throw std::logic_error("ell requested in modular mode");
    return value_;
}

int AlcoveParams::ell_prime() const { return value_ % 2 == 0 ? value_ / 2 : value_; }

std::string AlcoveParams::describe() const {
    return (mode_ == Mode::Modular ? "p=" : "ell=") + std::to_string(value_);
}

bool is_dominant(const RootSystemSpec& spec, const Weight& l) {
    const int n = spec.rank;
    if (l.rank() != n) throw std::invalid_argument("weight length does not match the rank");
    for (int i = 0; i + 2 < n; ++i)
        if (l[i] < l[i + 1]) return false;
    switch (spec.family) {
    case Family::GL: return n < 2 || l[n - 2] >= l[n - 1];
    case Family::B:
    case Family::C: return (n < 2 || l[n - 2] >= l[n - 1]) && l[n - 1] >= 0;
    case Family::D: return n == 1 ? l[0] >= 0 : l[n - 2] >= std::abs(l[n - 1]);
    }
    return false;
}

void require_supported(const RootSystemSpec& spec, const AlcoveParams& params) {
    if (params.quantum_mode() && (spec.family == Family::B || spec.family == Family::D))
        throw std::invalid_argument("quantum mode is only available for families A-GL and C");
}

std::vector<Wall> upper_walls(const RootSystemSpec& spec, const AlcoveParams& params) {
    require_supported(spec, params);
    const int n = spec.rank;
    const int P = params.value();
    std::vector<Wall> w;
    auto e = [n](std::initializer_list<std::pair<int, int>> x) { return vec(n, x); };
    switch (spec.family) {
    case Family::GL:
        if (n >= 2) {
            auto a = e({{0, 1}, {n - 1, -1}});
            w.push_back({a, a, 2 * (params.quantum_mode() ? params.ell_prime() : P)});
        }
        break;
    case Family::C:
        if (params.even_ell())
            w.push_back({e({{0, 1}}), e({{0, 2}}), 2 * params.ell_prime()});
        else if (n == 1)
            w.push_back({e({{0, 1}}), e({{0, 2}}), 2 * P});
        else
            w.push_back({e({{0, 1}, {1, 1}}), e({{0, 1}, {1, 1}}), 2 * P});
        break;
    case Family::B: w.push_back({e({{0, 2}}), e({{0, 1}}), 2 * P}); break;
    case Family::D:
        if (n == 1) {
            w.push_back({e({{0, 1}}), e({{0, 2}}), 2 * P});
        } else {
            auto a = e({{0, 1}, {1, 1}});
            w.push_back({a, a, 2 * P});
            if (n == 2) {
                auto b = e({{0, 1}, {1, -1}});
                w.push_back({b, b, 2 * P});
            }
        }
        break;
    }
    return w;
}

bool alcove_contains(const RootSystemSpec& spec, const AlcoveParams& params, const Weight& l) {
    require_supported(spec, params);
    if (!is_dominant(spec, l)) throw std::invalid_argument("alcove_contains needs a dominant weight");
    const int n = spec.rank;
    switch (spec.family) {
    case Family::GL: {
        const int P = params.quantum_mode() ? params.ell_prime() : params.value();
        return n == 1 || l[0] - l[n - 1] <= P - n;
    }
    case Family::C: {
        if (params.even_ell()) return l[0] <= params.ell_prime() - n - 1;
        const int P = params.value();
        return n == 1 ? l[0] <= P - 2 : l[0] + l[1] <= P - 2 * n;
    }
    case Family::B: return 2 * l[0] <= params.p() - 2 * n;
    case Family::D: {
        const int p = params.p();
        if (n == 1) return l[0] <= p - 2;
        if (n == 2) return l[0] + l[1] <= p - 2 && l[0] - l[1] <= p - 2;
        return l[0] + l[1] <= p - 2 * n + 2;
    }
    }
    return false;
}

namespace {

SignedAlcovePoint reduce(const RootSystemSpec& spec, const std::vector<Wall>& upper, const Weight& mu) {
    const int n = spec.rank;
    if (mu.rank() != n) throw std::invalid_argument("weight length does not match the rank");
    std::vector<long long> x(n);
    long long l1 = 0;
    for (int i = 0; i < n; ++i) {
        x[i] = 2LL * mu[i] + spec.rho2[i];
        l1 += std::llabs(x[i]);
    }
    auto height = [&] {
        long long h = 0;
        for (int i = 0; i < n; ++i) h += x[i] * spec.rho2[i];
        return h;
    };
    auto norm = [&] {
        long long s = 0;
        for (long long v : x) s += v * v;
        return s;
    };
    const long long cap = 10000 + 100LL * (n + 1) * (n + 1) * (l1 + 1);
    int parity = 0;
    for (long long iter = 0;; ++iter) {
        if (iter > cap) throw std::logic_error("reflect_to_alcove did not terminate");
        bool moved = false;
        for (const auto& w : spec.simple) {
            long long v = pairing(x, w.coroot);
            if (v < 0) {
                const long long before = height();
                for (int i = 0; i < n; ++i) x[i] -= v * w.root[i];
                if (height() <= before) throw std::logic_error("simple reflection did not raise height");
                parity ^= 1;
                moved = true;
                break;
            }
        }
        if (moved) continue;
        for (const auto& w : upper) {
            long long v = pairing(x, w.coroot);
            if (v > w.bound) {
                const long long before = norm();
                for (int i = 0; i < n; ++i) x[i] -= (v - w.bound) * w.root[i];
                if (norm() >= before) throw std::logic_error("affine reflection did not shrink the norm");
                parity ^= 1;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    for (const auto& w : spec.simple)
        if (pairing(x, w.coroot) == 0) return SignedAlcovePoint::wall();
    for (const auto& w : upper)
        if (pairing(x, w.coroot) == w.bound) return SignedAlcovePoint::wall();
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        long long d = x[i] - spec.rho2[i];
        if (d % 2 != 0) throw std::logic_error("reflection left the weight lattice");
        out[i] = static_cast<int>(d / 2);
    }
    return SignedAlcovePoint::interior(Weight(std::move(out)), parity ? -1 : 1);
}

}  // namespace

SignedAlcovePoint reflect_to_alcove(const RootSystemSpec& spec, const AlcoveParams& params,
                                    const Weight& mu) {
    return reduce(spec, upper_walls(spec, params), mu);
}

SignedAlcovePoint reflect_to_dominant(const RootSystemSpec& spec, const Weight& mu) {
    return reduce(spec, {}, mu);
}

BigInt weyl_dim(const RootSystemSpec& spec, const Weight& l) {
    if (!is_dominant(spec, l)) throw std::invalid_argument("weyl_dim needs a dominant weight");
    BigInt num = 1, den = 1;
    for (const auto& c : spec.positive_coroots) {
        long long a = 0, b = 0;
        for (int i = 0; i < spec.rank; ++i) {
            a += (2LL * l[i] + spec.rho2[i]) * c[i];
            b += static_cast<long long>(spec.rho2[i]) * c[i];
        }
        num *= a;
        den *= b;
    }
    if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
    return num / den;
}

std::vector<Weight> alcove_weights(const RootSystemSpec& spec, const AlcoveParams& params,
                                   int size_bound) {
    require_supported(spec, params);
    const int n = spec.rank;
    std::vector<Weight> out;
    if (size_bound < 0) return out;
    std::vector<int> c(n);
    std::function<void(int, int, int)> rec = [&](int i, int hi, int left) {
        if (i == n) {
            Weight w(c);
            if (is_dominant(spec, w) && alcove_contains(spec, params, w)) out.push_back(std::move(w));
            return;
        }
        for (int v = std::min(hi, left); v >= -left; --v) {
            c[i] = v;
            rec(i + 1, v, left - std::abs(v));
        }
    };
    rec(0, size_bound, size_bound);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace hj
