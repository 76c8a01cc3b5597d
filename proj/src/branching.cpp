#include "higher_jones/branching.hpp"

#include <stdexcept>

namespace hj {

BigInt MultiplicityTable::at(const Weight& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? BigInt(0) : it->second;
}

namespace {

void prune(std::map<Weight, BigInt>& m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

void require_nonnegative(const MultiplicityTable& t, const char* what) {
    for (const auto& [w, m] : t.entries)
        if (m < 0) throw std::logic_error(std::string(what) + ": negative multiplicity at " + w.label());
}

MultiplicityTable base_level(const RootSystemSpec& spec, const AlcoveParams* params) {
    MultiplicityTable t;
    const Weight z = Weight::zero(spec.rank);
    // an empty alcove gives the zero algebra at every level
    if (!params || alcove_contains(spec, *params, z)) t.entries[z] = 1;
    return t;
}

}  // namespace

std::vector<MultiplicityTable> delta_levels(const RootSystemSpec& spec, int r) {
    if (r < 0) throw std::invalid_argument("level must be non-negative");
    std::vector<MultiplicityTable> levels{base_level(spec, nullptr)};
    for (int k = 1; k <= r; ++k) {
        MultiplicityTable next;
        next.level = k;
        for (const auto& [mu, m] : levels.back().entries)
            for (const auto& s : spec.steps) {
                auto x = reflect_to_dominant(spec, mu + s);
                if (x.interior()) next.entries[x.weight] += x.sign * m;
            }
        prune(next.entries);
        require_nonnegative(next, "delta_mults");
        levels.push_back(std::move(next));
    }
    return levels;
}

MultiplicityTable delta_mults(const RootSystemSpec& spec, int r) {
    return std::move(delta_levels(spec, r).back());
}

SignedWeightMultiset fusion_step(const RootSystemSpec& spec, const AlcoveParams& params,
                                 const Weight& lambda) {
    if (!is_dominant(spec, lambda) || !alcove_contains(spec, params, lambda))
        throw std::invalid_argument("fusion_step: " + lambda.label() + " is not in the alcove");
    SignedWeightMultiset out;
    for (const auto& s : spec.steps) {
        auto x = reflect_to_alcove(spec, params, lambda + s);
        if (x.interior()) out[x.weight] += x.sign;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

FusionTower::FusionTower(RootSystemSpec spec, AlcoveParams params, int max_level)
    : spec_(std::move(spec)), params_(params) {
    if (max_level < 0) throw std::invalid_argument("level must be non-negative");
    levels_.push_back(base_level(spec_, &params_));
    for (int k = 1; k <= max_level; ++k) {
        MultiplicityTable next;
        next.level = k;
        for (const auto& [lam, m] : levels_.back().entries)
            for (const auto& [w, c] : fusion_step(spec_, params_, lam)) next.entries[w] += c * m;
        prune(next.entries);
        require_nonnegative(next, "fusion_mults");
        levels_.push_back(std::move(next));
    }
}

const MultiplicityTable& FusionTower::level(int r) const {
    if (r < 0 || r > max_level())
        throw std::out_of_range("level " + std::to_string(r) + " was not computed");
    return levels_[r];
}

MultiplicityTable fusion_mults(const RootSystemSpec& spec, const AlcoveParams& params, int r) {
    return FusionTower(spec, params, r).level(r);
}

MultiplicityTable fusion_mults_altsum(const RootSystemSpec& spec, const AlcoveParams& params,
                                      int r) {
    require_supported(spec, params);
    MultiplicityTable out;
    out.level = r;
    for (const auto& [mu, m] : delta_mults(spec, r).entries) {
        auto x = reflect_to_alcove(spec, params, mu);
        if (x.interior()) out.entries[x.weight] += x.sign * m;
    }
    prune(out.entries);
    require_nonnegative(out, "fusion_mults_altsum");
    return out;
}

MultiplicityTable minuscule_walk_mults(const RootSystemSpec& spec, const AlcoveParams& params,
                                       int r) {
    if (!spec.minuscule())
        throw std::invalid_argument("minuscule_walk_mults: type B has no sign-free branching rule");
    if (r < 0) throw std::invalid_argument("level must be non-negative");
    MultiplicityTable cur = base_level(spec, &params);
    for (int k = 1; k <= r; ++k) {
        MultiplicityTable next;
        next.level = k;
        for (const auto& [lam, m] : cur.entries)
            for (const auto& s : spec.steps) {
                Weight w = lam + s;
                if (is_dominant(spec, w) && alcove_contains(spec, params, w)) next.entries[w] += m;
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace hj
