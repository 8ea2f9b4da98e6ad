#include "sted/hungarian.hpp"

#include "sted/errors.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

using namespace sted;

namespace {

// Exhaustive assignment minimum, independent of the solver under test.
double brute_force_min(const std::vector<std::vector<double>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    double best = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (std::size_t i = 0; i < n; ++i) cost += m[i][perm[i]];
        best = std::min(best, cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

TEST_CASE("1x1") {
    const AssignmentResult r = hungarian_solve({{0.0}});
    REQUIRE(r.row_to_col.size() == 1);
    CHECK(r.row_to_col[0] == 0);
    CHECK(r.total_cost == 0.0);
}

TEST_CASE("2x2 diagonal optimum") {
    const AssignmentResult r = hungarian_solve({{1.0, 2.0}, {2.0, 1.0}});
    CHECK(r.total_cost == 2.0);
    CHECK(r.row_to_col[0] == 0);
    CHECK(r.row_to_col[1] == 1);
}

TEST_CASE("3x3 hand-verified optimum") {
    // all six permutations enumerated by hand: minimum is 1 + 2 + 2 = 5
    const AssignmentResult r =
        hungarian_solve({{4.0, 1.0, 3.0}, {2.0, 0.0, 5.0}, {3.0, 2.0, 2.0}});
    CHECK(r.total_cost == 5.0);
    CHECK(r.row_to_col[0] == 1);
    CHECK(r.row_to_col[1] == 0);
    CHECK(r.row_to_col[2] == 2);
}

TEST_CASE("matches brute force on random matrices") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 1 + rng() % 5;
        std::vector<std::vector<double>> m(n, std::vector<double>(n));
        for (auto& row : m) {
            for (double& v : row) {
                v = static_cast<double>(rng() % 1000) / 100.0;
            }
        }
        const AssignmentResult r = hungarian_solve(m);
        CHECK(r.total_cost == doctest::Approx(brute_force_min(m)).epsilon(1e-12));

        // perfect matching: each column used once
        std::vector<bool> used(n, false);
        for (std::size_t c : r.row_to_col) {
            CHECK_FALSE(used[c]);
            used[c] = true;
        }
    }
}

TEST_CASE("equal-cost ties resolve to lowest left index first") {
    const AssignmentResult r = hungarian_solve(
        {{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}});
    CHECK(r.row_to_col == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(hungarian_solve({{1.0, 2.0}, {3.0}}), NonSquare);
    CHECK_THROWS_AS(hungarian_solve({{std::nan("")}}), NonFinite);
    CHECK_THROWS_AS(hungarian_solve({{std::numeric_limits<double>::infinity()}}), NonFinite);
    CHECK_THROWS_AS(hungarian_solve({{-1.0}}), NonFinite);
}

TEST_CASE("padded matrix holds insert and delete costs") {
    SUBCASE("more right children: phantom rows carry the insert cost") {
        CostMatrix m(1, 3, 0.25, 0.75);
        CHECK(m.size() == 3);
        CHECK_FALSE(m.is_padding_row(0));
        CHECK(m.is_padding_row(1));
        CHECK(m.at(1, 0) == 0.25);
        CHECK(m.at(2, 2) == 0.25);
    }
    SUBCASE("more left children: phantom columns carry the delete cost") {
        CostMatrix m(3, 1, 0.25, 0.75);
        CHECK(m.is_padding_col(2));
        CHECK(m.at(0, 1) == 0.75);
        CHECK(m.at(2, 2) == 0.75);
    }
    SUBCASE("empty lists produce an empty matrix") {
        CostMatrix m(0, 0, 1.0, 1.0);
        CHECK(m.size() == 0);
        const AssignmentResult r = hungarian_solve(m);
        CHECK(r.total_cost == 0.0);
        CHECK(r.row_to_col.empty());
    }
}
