#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "higher_jones/branching.hpp"
#include "higher_jones/root_data.hpp"

namespace hj {

enum class AlgebraKind { SymmetricGroup, Hecke, BrauerOdd, BrauerEven, BrauerTypeB, BMW };

class AlgebraConfig {
public:
    static AlgebraConfig symmetric_group(int p);
    static AlgebraConfig hecke(int ell);
    // odd delta resolves to type C, even delta to type D
    static AlgebraConfig brauer(int delta, int p);
    static AlgebraConfig brauer_type_b(int m, int p);
    static AlgebraConfig bmw(int n, int ell);

    AlgebraKind kind() const { return kind_; }
    const AlcoveParams& params() const { return params_; }
    bool partition_labels() const;  // symmetric group and Hecke

    // Brauer and BMW kinds resolve to a single root system.
    const RootSystemSpec& spec() const;
    // Symmetric group and Hecke: type A-GL at rank m.
    RootSystemSpec spec_for_rank(int m) const;
    // largest m for the partition kinds (p - 1 or ell' - 1)
    int max_parts() const;

    int rank() const;  // resolved rank; 0 for the partition kinds
    int delta() const; // Brauer parameter, 0 when not a Brauer kind
    std::string name() const;

private:
    AlgebraConfig(AlgebraKind k, AlcoveParams params) : kind_(k), params_(params) {}
    AlgebraKind kind_;
    AlcoveParams params_;
    int delta_ = 0;
    std::optional<RootSystemSpec> spec_;
};

struct DimensionRow {
    int r = 0;
    std::vector<std::pair<Weight, BigInt>> entries;

    std::optional<BigInt> find(const Weight& w) const;
    bool operator==(const DimensionRow&) const = default;
};

std::vector<Weight> weight_set(const AlgebraConfig& config, int r);

DimensionRow symmetric_simple_dims(int p, int r);
DimensionRow hecke_simple_dims(int ell, int r);
DimensionRow brauer_simple_dims(const AlgebraConfig& config, int r);
DimensionRow bmw_simple_dims(int n, int ell, int r);
// dispatch on the kind
DimensionRow simple_dims(const AlgebraConfig& config, int r);
// rows 1..rmax, sharing one level cache
std::vector<DimensionRow> simple_dims_rows(const AlgebraConfig& config, int rmax);

struct Decomposition {
    std::vector<std::pair<Weight, BigInt>> blocks;
    BigInt total;  // sum of squared block sizes
};

Decomposition algebra_decomposition(const RootSystemSpec& spec, const AlcoveParams& params,
                                    int r);
// rank is required for the partition kinds and ignored otherwise
Decomposition algebra_decomposition(const AlgebraConfig& config, int r, int rank = 0);

bool is_e_regular(const Weight& lambda, int e);

enum class BrauerForm { Symplectic, EvenOrthogonal, OddOrthogonal };

int delta_from_rank(BrauerForm form, int rank, int p);
int rank_from_delta(BrauerForm form, int delta, int p);

}  // namespace hj
