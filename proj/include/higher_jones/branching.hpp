#pragma once

#include <map>
#include <vector>

#include "higher_jones/root_data.hpp"

namespace hj {

struct MultiplicityTable {
    int level = 0;
    std::map<Weight, BigInt> entries;

    BigInt at(const Weight& w) const;
    bool empty() const { return entries.empty(); }
    bool operator==(const MultiplicityTable&) const = default;
};

using SignedWeightMultiset = std::map<Weight, long long>;

// Levels 0..r of (V^r : Delta(mu)), no alcove truncation.
std::vector<MultiplicityTable> delta_levels(const RootSystemSpec& spec, int r);
MultiplicityTable delta_mults(const RootSystemSpec& spec, int r);

SignedWeightMultiset fusion_step(const RootSystemSpec& spec, const AlcoveParams& params,
                                 const Weight& lambda);

// Fusion multiplicities, built once up to max_level and read-only afterwards.
class FusionTower {
public:
    FusionTower(RootSystemSpec spec, AlcoveParams params, int max_level);

    const MultiplicityTable& level(int r) const;
    int max_level() const { return static_cast<int>(levels_.size()) - 1; }
    const RootSystemSpec& spec() const { return spec_; }
    const AlcoveParams& params() const { return params_; }

private:
    RootSystemSpec spec_;
    AlcoveParams params_;
    std::vector<MultiplicityTable> levels_;
};

MultiplicityTable fusion_mults(const RootSystemSpec& spec, const AlcoveParams& params, int r);
MultiplicityTable fusion_mults_altsum(const RootSystemSpec& spec, const AlcoveParams& params,
                                      int r);
// Rejects type B.
MultiplicityTable minuscule_walk_mults(const RootSystemSpec& spec, const AlcoveParams& params,
                                       int r);

}  // namespace hj
