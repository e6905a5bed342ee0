#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyhull/cyclic.hpp"
#include "cyhull/oracle.hpp"

using namespace cyhull;

TEST_CASE("rref, rank and nullspace basics") {
    const auto f2 = Field::prime_field(2);
    GfMatrix zero(f2, 3, 4);
    CHECK(rank(zero) == 0);
    CHECK(rank(nullspace(zero)) == 4);

    GfMatrix m = GfMatrix::from_code_rows(f2, 3, {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
    CHECK(rank(m) == 2);
    const GfMatrix ns = nullspace(m);
    CHECK(rank(ns) == 1);
    // each nullspace row is orthogonal to each matrix row
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t k = 0; k < ns.rows(); ++k) {
            FieldElement acc = f2->zero();
            for (size_t c = 0; c < m.cols(); ++c) acc = acc + m.at(r, c) * ns.at(k, c);
            CHECK(acc.is_zero());
        }
}

TEST_CASE("rank plus nullity equals the column count on random matrices") {
    std::mt19937_64 rng(29);
    for (uint32_t p : {2u, 3u, 5u}) {
        const auto f = Field::prime_field(p);
        for (int it = 0; it < 50; ++it) {
            const size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
            GfMatrix m(f, rows, cols);
            for (size_t r = 0; r < rows; ++r)
                for (size_t c = 0; c < cols; ++c) m.set_code(r, c, rng() % p);
            CHECK(rank(m) + rank(nullspace(m)) == cols);
            const GfMatrix ns = nullspace(m);
            for (size_t k = 0; k < ns.rows(); ++k)
                for (size_t r = 0; r < rows; ++r) {
                    FieldElement acc = f->zero();
                    for (size_t c = 0; c < cols; ++c) acc = acc + m.at(r, c) * ns.at(k, c);
                    CHECK(acc.is_zero());
                }
        }
    }
}

TEST_CASE("generator matrices of cyclic codes") {
    const CyclicSystem sys(2, 1, 7);
    const CyclicCode zero = sys.code_from_generator(sys.xn_minus_1());
    CHECK(oracle::generator_matrix(zero.generator(), 7).rows() == 0);

    const CyclicCode full = sys.code_from_generator(Polynomial(sys.fq(), {1}));
    CHECK(rank(oracle::generator_matrix(full.generator(), 7)) == 7);

    const CyclicCode hamming = sys.code_from_generator_leaders({1});
    const GfMatrix g = oracle::generator_matrix(hamming.generator(), 7);
    CHECK(g.rows() == 4);
    CHECK(rank(g) == 4);
    CHECK(rank(nullspace(g)) == 3);
}

TEST_CASE("shift rows of a divisor are independent") {
    std::mt19937_64 rng(31);
    const CyclicSystem sys(3, 1, 8);
    const auto& leaders = sys.cosets().leaders();
    for (int it = 0; it < 20; ++it) {
        std::set<uint64_t> gens;
        for (uint64_t l : leaders)
            if (rng() & 1) gens.insert(l);
        const CyclicCode c = sys.code_from_generator_leaders(gens);
        const GfMatrix g = oracle::generator_matrix(c.generator(), 8);
        CHECK(rank(g) == c.dimension());
        CHECK(oracle::dual_dim(c.generator(), 8) == 8 - c.dimension());
    }
}

TEST_CASE("hull and intersection dimensions") {
    const CyclicSystem s7(2, 1, 7);
    const CyclicCode hamming = s7.code_from_generator_leaders({1});
    CHECK(oracle::hull_dim(hamming.generator(), 7) == 3);

    const CyclicSystem s9(2, 1, 9);
    const auto& leaders9 = s9.cosets().leaders();
    for (uint64_t mask = 0; mask < (1u << leaders9.size()); ++mask) {
        std::set<uint64_t> gens;
        for (size_t i = 0; i < leaders9.size(); ++i)
            if (mask & (1u << i)) gens.insert(leaders9[i]);
        const CyclicCode c = s9.code_from_generator_leaders(gens);
        CHECK(oracle::hull_dim(c.generator(), 9) == 0);
    }

    const GfMatrix g = oracle::generator_matrix(hamming.generator(), 7);
    CHECK(oracle::intersect_dim(g, g) == hamming.dimension());

    const CyclicCode d = s7.code_from_generator_leaders({0, 3});
    const GfMatrix gd = oracle::generator_matrix(d.generator(), 7);
    CHECK(oracle::intersect_dim(g, gd) == oracle::intersect_dim(gd, g));
    CHECK_FALSE(oracle::codes_equal(g, gd));
    CHECK(oracle::codes_equal(g, g));

    CHECK_THROWS_AS(g.stacked(GfMatrix(s7.fq(), 1, 5)), DimensionMismatch);
}
