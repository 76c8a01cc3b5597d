#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "higher_jones/weight.hpp"

namespace hj {

enum class Family { GL, B, C, D };

std::string_view family_name(Family f);
Family parse_family(std::string_view s);

// A linear form <X, coroot> on doubled coordinates X = 2(lambda + rho),
// paired with the root used to reflect in it.
struct Wall {
    std::vector<int> coroot;
    std::vector<int> root;
    int bound = 0;  // doubled; only meaningful for affine walls
};

struct RootSystemSpec {
    Family family = Family::GL;
    int rank = 0;
    std::vector<int> rho2;
    int coxeter_number = 0;
    std::vector<Weight> steps;          // weights of the vector representation
    std::vector<Wall> simple;           // finite simple reflections
    std::vector<std::vector<int>> positive_coroots;

    int dim_v() const { return static_cast<int>(steps.size()); }
    bool minuscule() const { return family != Family::B; }
};

RootSystemSpec make_root_system(Family family, int rank);

class AlcoveParams {
public:
    enum class Mode { Modular, Quantum };

    // p must be a prime >= 3
    static AlcoveParams modular(int p);
    // ell >= 5 and ell != 6
    static AlcoveParams quantum(int ell);

    Mode mode() const { return mode_; }
    bool quantum_mode() const { return mode_ == Mode::Quantum; }
    int p() const;
    int ell() const;
    int ell_prime() const;
    bool even_ell() const { return quantum_mode() && value_ % 2 == 0; }
    int value() const { return value_; }
    std::string describe() const;

    bool operator==(const AlcoveParams&) const = default;

private:
    AlcoveParams(Mode m, int v) : mode_(m), value_(v) {}
    Mode mode_;
    int value_;
};

bool is_prime(int n);

struct SignedAlcovePoint {
    bool on_wall = true;
    Weight weight;
    int sign = 0;

    static SignedAlcovePoint wall() { return {}; }
    static SignedAlcovePoint interior(Weight w, int s) { return {false, std::move(w), s}; }
    bool interior() const { return !on_wall; }
};

bool is_dominant(const RootSystemSpec& spec, const Weight& lambda);

// throws for quantum B/D, which are out of scope
void require_supported(const RootSystemSpec& spec, const AlcoveParams& params);

// Affine walls bounding the bottom alcove from above.
std::vector<Wall> upper_walls(const RootSystemSpec& spec, const AlcoveParams& params);

// Closed-form alcove inequalities. Throws on non-dominant input.
bool alcove_contains(const RootSystemSpec& spec, const AlcoveParams& params, const Weight& lambda);

// Dot-action representative in the bottom alcove, or Wall.
SignedAlcovePoint reflect_to_alcove(const RootSystemSpec& spec, const AlcoveParams& params,
                                    const Weight& mu);

// Same with the upper walls switched off: plain dominant-chamber reduction.
SignedAlcovePoint reflect_to_dominant(const RootSystemSpec& spec, const Weight& mu);

BigInt weyl_dim(const RootSystemSpec& spec, const Weight& lambda);

// Dominant alcove weights with size() <= size_bound, lexicographically descending.
std::vector<Weight> alcove_weights(const RootSystemSpec& spec, const AlcoveParams& params,
                                   int size_bound);

}  // namespace hj
