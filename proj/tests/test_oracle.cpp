#include <doctest.h>

#include "higher_jones/oracle.hpp"

#include <stdexcept>

using namespace hj;
using hj::oracle::char_product_decompose;
using hj::oracle::enumerate_paths;
using hj::oracle::rank_one_graph;
using hj::oracle::transfer_matrix_count;

TEST_CASE("enumerate_paths on small walks") {
    auto gl2 = make_root_system(Family::GL, 2);
    auto p5 = AlcoveParams::modular(5);
    CHECK(enumerate_paths(gl2, p5, 4, {3, 1}) == 3);
    CHECK(enumerate_paths(gl2, p5, 4, {2, 2}) == 2);
    CHECK(enumerate_paths(gl2, p5, 4, {4, 0}) == 0);  // outside

    auto c1 = make_root_system(Family::C, 1);
    CHECK(enumerate_paths(c1, AlcoveParams::modular(7), 2, {0}) == 1);

    auto c2 = make_root_system(Family::C, 2);
    CHECK(enumerate_paths(c2, AlcoveParams::quantum(10), 4, {1, 1}) == 5);
    CHECK(enumerate_paths(c2, AlcoveParams::quantum(10), 8, {2, 2}) == 62);
}

TEST_CASE("enumerate_paths guards") {
    auto b1 = make_root_system(Family::B, 1);
    CHECK_THROWS_AS(enumerate_paths(b1, AlcoveParams::modular(7), 2, {0}), std::invalid_argument);
    auto c1 = make_root_system(Family::C, 1);
    CHECK_THROWS_AS(enumerate_paths(c1, AlcoveParams::modular(7), 15, {1}),
                    std::invalid_argument);
}

TEST_CASE("transfer matrix on the ell=10 rank one walk") {
    auto c1 = make_root_system(Family::C, 1);
    auto g = rank_one_graph(c1, AlcoveParams::quantum(10));
    REQUIRE(g.states.size() == 4);
    CHECK(transfer_matrix_count(g, 10, {0}) == 34);
    CHECK(transfer_matrix_count(g, 10, {2}) == 55);
    CHECK(transfer_matrix_count(g, 8, {0}) == 13);
    CHECK(transfer_matrix_count(g, 0, {0}) == 1);
    CHECK(transfer_matrix_count(g, 0, {1}) == 0);
    CHECK_THROWS(transfer_matrix_count(oracle::WalkGraph{}, 1, {0}));
}

TEST_CASE("transfer matrix for type B rank one keeps the zero step") {
    auto b1 = make_root_system(Family::B, 1);
    auto g = rank_one_graph(b1, AlcoveParams::modular(7));
    REQUIRE(g.states.size() == 3);
    // top state sees itself and its lower neighbour only
    CHECK(transfer_matrix_count(g, 1, {1}) == 1);
    CHECK(transfer_matrix_count(g, 2, {0}) == 1);
    CHECK(transfer_matrix_count(g, 2, {1}) == 1);
    CHECK(transfer_matrix_count(g, 2, {2}) == 1);
}

TEST_CASE("char_product_decompose") {
    CHECK(char_product_decompose(make_root_system(Family::GL, 2), 4, {2, 2}) == 2);
    CHECK(char_product_decompose(make_root_system(Family::C, 1), 3, {3}) == 1);
    CHECK(char_product_decompose(make_root_system(Family::B, 1), 2, {0}) == 1);
    CHECK(char_product_decompose(make_root_system(Family::B, 1), 2, {1}) == 1);
    // Sp4: V x V = (2,0) + (1,1) + (0,0)
    auto c2 = make_root_system(Family::C, 2);
    CHECK(char_product_decompose(c2, 2, {1, 1}) == 1);
    CHECK(char_product_decompose(c2, 2, {0, 0}) == 1);
    // SO4: V x V contains both (1,1) and (1,-1)
    auto d2 = make_root_system(Family::D, 2);
    CHECK(char_product_decompose(d2, 2, {1, -1}) == 1);
    CHECK(char_product_decompose(d2, 2, {1, 1}) == 1);
    CHECK_THROWS_AS(char_product_decompose(c2, 7, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(char_product_decompose(make_root_system(Family::C, 4), 2, {0, 0, 0, 0}),
                    std::invalid_argument);
}
