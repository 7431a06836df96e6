#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "ckb/celtic.hpp"
#include "test_util.hpp"

using namespace ckb;
using testutil::poly_pow;

namespace {
const IntPoly x = IntPoly::variable();
}

TEST_CASE("grid construction") {
    CHECK(bracket_statesum(build_celtic(1).shadow) == x * x + x);
    CHECK(bracket_statesum(build_celtic(3).shadow) ==
          parse_poly("x^6+7*x^5+23*x^4+42*x^3+40*x^2+15*x"));
    CHECK(build_celtic(2).shadow.num_crossings() == 4);
    for (int n = 1; n <= 6; ++n)
        CHECK(build_celtic(n).shadow.num_crossings() == 3 * n - 2);
    CHECK_THROWS_AS(build_celtic(0), std::invalid_argument);
}

TEST_CASE("crossing layout") {
    CelticDiagram d = build_celtic(3);
    std::set<std::pair<int, int>> addresses;
    for (const auto& [row, col] : d.addresses) addresses.insert({row, col});
    // middle row at odd columns, outer rows at even interior columns
    CHECK(addresses == std::set<std::pair<int, int>>{{2, 1}, {2, 3}, {2, 5},
                                                     {1, 2}, {1, 4},
                                                     {3, 2}, {3, 4}});
    CHECK_THROWS_AS(d.crossing_index(2, 2), NoSuchCrossing);
}

TEST_CASE("symmetry permutations") {
    for (int n : {1, 2, 3, 4}) {
        CelticDiagram d = build_celtic(n);
        auto perms = grid_symmetry_permutations(d);  // well-defined: set is D2-closed
        int size = d.shadow.num_crossings();
        for (const auto& perm : perms) {
            std::set<int> image(perm.begin(), perm.end());
            CHECK(static_cast<int>(image.size()) == size);
        }
        for (int c = 0; c < size; ++c) {
            CHECK(perms[0][c] == c);
            CHECK(perms[1][perms[1][c]] == c);
            CHECK(perms[2][perms[2][c]] == c);
            CHECK(perms[3][c] == perms[1][perms[2][c]]);  // rotation = both mirrors
        }
    }
}

TEST_CASE("smoothing a named crossing") {
    // horizontal and vertical states partition the bracket at every crossing
    for (int n = 2; n <= 4; ++n) {
        CelticDiagram d = build_celtic(n);
        IntPoly whole = bracket_statesum(d.shadow);
        for (const auto& [row, col] : d.addresses) {
            IntPoly h = bracket_statesum(smooth_at(d, row, col, Smoothing::horizontal).shadow);
            IntPoly v = bracket_statesum(smooth_at(d, row, col, Smoothing::vertical).shadow);
            CHECK(h + v == whole);
        }
    }

    // the width-6 grid with its central crossing smoothed horizontally is a 6-foil
    CHECK(bracket_statesum(smooth_at(build_celtic(3), 2, 3, Smoothing::horizontal).shadow) ==
          poly_pow(x + 1, 6) + x * x - 1);

    CHECK_THROWS_AS(smooth_at(build_celtic(2), 2, 2, Smoothing::horizontal), NoSuchCrossing);
}

TEST_CASE("grid reductions against the smaller grid") {
    for (int n = 2; n <= 3; ++n) {
        CelticDiagram d = build_celtic(n);
        CelticDiagram prev = build_celtic(n - 1);
        IntPoly prev_bracket = bracket_statesum(prev.shadow);

        // smoothing the last middle crossing horizontally strips one column pair
        CHECK(bracket_statesum(smooth_at(d, 2, 2 * n - 1, Smoothing::horizontal).shadow) ==
              (x + 1) * (x + 1) * prev_bracket);

        // two stacked vertical smoothings leave a single curl on the smaller grid
        CHECK(bracket_statesum(smooth_at(smooth_at(d, 2, 2 * n - 1, Smoothing::vertical), 1,
                                         2 * n - 2, Smoothing::vertical)
                                   .shadow) == (x + 1) * prev_bracket);
    }
}

TEST_CASE("barrier distribution") {
    CHECK(barrier_component_distribution(1) ==
          std::map<int, std::uint64_t>{{1, 1}, {2, 1}});
    CHECK(barrier_component_distribution(3) ==
          std::map<int, std::uint64_t>{{1, 15}, {2, 40}, {3, 42}, {4, 23}, {5, 7}, {6, 1}});
    CHECK(barrier_component_distribution(4) ==
          std::map<int, std::uint64_t>{
              {1, 56}, {2, 201}, {3, 306}, {4, 262}, {5, 140}, {6, 48}, {7, 10}, {8, 1}});
    CHECK_THROWS_AS(barrier_component_distribution(9), TooLarge);
}

TEST_CASE("barrier distribution equals the bracket coefficients") {
    for (int n = 1; n <= 6; ++n) {
        IntPoly bracket = bracket_statesum(build_celtic(n).shadow);
        std::map<int, std::uint64_t> dist = barrier_component_distribution(n);
        for (int k = 0; k <= bracket.degree(); ++k) {
            std::uint64_t count = dist.count(k) ? dist.at(k) : 0;
            CHECK(bracket.coeff(k) == BigInt(static_cast<long long>(count)));
        }
    }
}

TEST_CASE("symmetry orbits") {
    CHECK(symmetry_orbits(3, 1) == std::vector<int>{1, 2, 2, 2, 4, 4});
    CHECK(symmetry_orbits(3, 6) == std::vector<int>{1});
    CHECK(symmetry_orbits(1, 1) == std::vector<int>{1});
}

TEST_CASE("orbit sizes partition the configurations") {
    for (int n = 2; n <= 3; ++n) {
        std::map<int, std::uint64_t> dist = barrier_component_distribution(n);
        for (const auto& [k, count] : dist) {
            std::vector<int> sizes = symmetry_orbits(n, k);
            std::uint64_t total = 0;
            for (int size : sizes) {
                CHECK((size == 1 || size == 2 || size == 4));
                total += static_cast<std::uint64_t>(size);
            }
            CHECK(total == count);
        }
    }
}
