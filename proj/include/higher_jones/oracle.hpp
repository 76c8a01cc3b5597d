#pragma once

#include <vector>

#include "higher_jones/root_data.hpp"

// Brute-force checkers. Nothing here calls into the reflection or recursion
// engines; the alcove is rebuilt from scratch out of the positive roots.
namespace hj::oracle {

inline constexpr int kMaxPathLength = 14;
inline constexpr int kMaxCharRank = 3;
inline constexpr int kMaxCharLevel = 6;

// Alcove membership from positive-root pairings alone.
bool in_open_alcove(const RootSystemSpec& spec, const AlcoveParams& params, const Weight& lambda);

// Counts step sequences of length r from 0 that never leave the open alcove
// and end at lambda. Minuscule families only.
BigInt enumerate_paths(const RootSystemSpec& spec, const AlcoveParams& params, int r,
                       const Weight& lambda);

struct WalkGraph {
    std::vector<Weight> states;
    std::vector<std::vector<int>> adjacency;  // adjacency[i][j] = edges i -> j
};

// Rank one walk graph from the truncated Clebsch-Gordan rule.
WalkGraph rank_one_graph(const RootSystemSpec& spec, const AlcoveParams& params);

// (A^r)[origin][target] where the origin is the zero weight.
BigInt transfer_matrix_count(const WalkGraph& graph, int r, const Weight& target);

// Multiplicity of Delta(lambda) in V^r via character arithmetic.
BigInt char_product_decompose(const RootSystemSpec& spec, int r, const Weight& lambda);

}  // namespace hj::oracle
