#pragma once

#include "higher_jones/fixtures.hpp"

// Named check suites shared by `hjones verify` and the acceptance runner.
namespace hj::suites {

// fusion == altsum == walk == path enumeration on the small table configs,
// fusion == altsum for type B at p=7
Report oracle_equivalence(int rmax = 8);

// sum of delta multiplicities times Weyl dimensions is (dim V)^r
Report conservation(int max_rank = 3, int rmax = 8);

// delta_mults against the character oracle, fusion against the transfer matrix
Report brute_force(int rmax = 6);

// one line per law; fails if any law fails
Report laws();

// type B rows against the odd-delta rows of Table 2 up to relabelling
Report type_b_crosscheck(int rmax = 10);

}  // namespace hj::suites
