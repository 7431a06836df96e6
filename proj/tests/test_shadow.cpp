#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <sstream>

#include "ckb/celtic.hpp"
#include "ckb/shadow.hpp"
#include "test_util.hpp"

using namespace ckb;
using testutil::poly_pow;
using testutil::random_diagram;

namespace {

const IntPoly x = IntPoly::variable();

IntPoly foil_bracket(int n) { return poly_pow(x + 1, n) + x * x - 1; }

std::map<int, int> circle_distribution(const ShadowDiagram& d) {
    std::map<int, int> dist;
    for (std::uint32_t bits = 0; bits < (1u << d.num_crossings()); ++bits) {
        SmoothingChoice s{bits, d.num_crossings()};
        dist[count_circles(d, s)] += 1;
    }
    return dist;
}

}  // namespace

TEST_CASE("count_circles") {
    CHECK(count_circles(make_unknot(), SmoothingChoice{}) == 1);

    std::map<int, int> trefoil = circle_distribution(make_foil(3));
    CHECK(trefoil == std::map<int, int>{{1, 3}, {2, 4}, {3, 1}});

    std::map<int, int> width2 = circle_distribution(build_celtic(1).shadow);
    CHECK(width2 == std::map<int, int>{{1, 1}, {2, 1}});

    CHECK_THROWS_AS(count_circles(make_foil(3), SmoothingChoice{0, 2}), LengthMismatch);
}

TEST_CASE("bracket of basic shadows") {
    CHECK(bracket_statesum(make_unknot()) == x);
    CHECK(bracket_statesum(make_foil(4)) == parse_poly("x^4+4*x^3+7*x^2+4*x"));
    CHECK(bracket_statesum(make_foil(6)) == parse_poly("x^6+6*x^5+15*x^4+20*x^3+16*x^2+6*x"));
    CHECK_THROWS_AS(bracket_statesum(make_foil(31)), TooManyCrossings);
}

TEST_CASE("foil family") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(make_foil(n).num_crossings() == n);
        CHECK(bracket_statesum(make_foil(n)) == foil_bracket(n));
    }
    CHECK_THROWS_AS(make_foil(0), std::invalid_argument);
}

TEST_CASE("connected sums") {
    IntPoly trefoil = bracket_statesum(make_foil(3));
    ShadowDiagram granny = connected_sum(make_foil(3), make_foil(3));
    CHECK(bracket_statesum(granny) == poly_div_x_exact(trefoil * trefoil));

    // splicing in an unknot changes nothing
    CHECK(bracket_statesum(connected_sum(make_unknot(), make_foil(5))) ==
          bracket_statesum(make_foil(5)));
    CHECK(bracket_statesum(connected_sum(make_foil(5), make_unknot())) ==
          bracket_statesum(make_foil(5)));
    CHECK(bracket_statesum(connected_sum(make_unknot(), make_unknot())) == x);

    // width-6 grid decomposes as a 6-foil plus a granny knot
    CHECK(foil_bracket(6) + bracket_statesum(granny) ==
          parse_poly("x^6+7*x^5+23*x^4+42*x^3+40*x^2+15*x"));

    CHECK_THROWS_AS(connected_sum(ShadowDiagram{}, make_foil(2)), EmptyDiagram);
}

TEST_CASE("coefficient sum counts the states") {
    std::mt19937 rng(23);
    for (int i = 0; i < 50; ++i) {
        ShadowDiagram d = random_diagram(rng, 10);
        IntPoly bracket = bracket_statesum(d);
        BigInt total;
        for (int k = 0; k <= bracket.degree(); ++k) total += bracket.coeff(k);
        CHECK(total == BigInt(1LL << d.num_crossings()));
    }
}

TEST_CASE("bracket is invariant under relabeling and presentation changes") {
    std::mt19937 rng(29);
    for (int i = 0; i < 20; ++i) {
        ShadowDiagram d = random_diagram(rng, 8);
        IntPoly reference = bracket_statesum(d);

        // random relabeling bijection
        int labels = 4 * d.num_crossings();
        std::vector<int> image(static_cast<std::size_t>(labels));
        std::iota(image.begin(), image.end(), 100);
        std::shuffle(image.begin(), image.end(), rng);
        ShadowDiagram relabeled = d;
        for (auto& c : relabeled.crossings)
            for (int& e : c) e = image[static_cast<std::size_t>(e)];
        for (auto& [p, q] : relabeled.pairings) {
            p = image[static_cast<std::size_t>(p)];
            q = image[static_cast<std::size_t>(q)];
        }
        CHECK(bracket_statesum(relabeled) == reference);

        // crossing order is irrelevant
        ShadowDiagram permuted = d;
        std::shuffle(permuted.crossings.begin(), permuted.crossings.end(), rng);
        CHECK(bracket_statesum(permuted) == reference);

        // rotating a 4-tuple by two keeps both smoothings
        ShadowDiagram rotated = d;
        for (auto& c : rotated.crossings) c = {c[2], c[3], c[0], c[1]};
        CHECK(bracket_statesum(rotated) == reference);
    }
}

TEST_CASE("connected sum satisfies the product identity") {
    std::mt19937 rng(31);
    for (int i = 0; i < 20; ++i) {
        ShadowDiagram a = random_diagram(rng, 6);
        ShadowDiagram b = random_diagram(rng, 6);
        CHECK(x * bracket_statesum(connected_sum(a, b)) ==
              bracket_statesum(a) * bracket_statesum(b));
    }
}

TEST_CASE("circle counts stay in range") {
    std::mt19937 rng(37);
    for (int i = 0; i < 20; ++i) {
        ShadowDiagram d = random_diagram(rng, 6);
        int labels = 4 * d.num_crossings();
        std::uniform_int_distribution<std::uint32_t> mask(0, (1u << d.num_crossings()) - 1);
        SmoothingChoice s{mask(rng), d.num_crossings()};
        int circles = count_circles(d, s);
        CHECK(circles >= 1 + d.free_loops);
        CHECK(circles <= labels + d.free_loops);
    }
}

TEST_CASE("lowest bracket exponent on connected families") {
    for (int n = 1; n <= 6; ++n) {
        IntPoly bracket = bracket_statesum(make_foil(n));
        CHECK(bracket.coeff(0).is_zero());
        CHECK_FALSE(bracket.coeff(1).is_zero());
    }
}

TEST_CASE("diagram validation") {
    ShadowDiagram bad;
    bad.pairings = {{0, 1}, {1, 2}, {1, 3}};  // label 1 glued three times
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    CHECK_NOTHROW(validate(make_foil(5)));
}

TEST_CASE("pd round trip") {
    std::mt19937 rng(41);
    for (int i = 0; i < 10; ++i) {
        ShadowDiagram d = random_diagram(rng, 6);
        std::stringstream buffer;
        write_pd(buffer, d);
        ShadowDiagram back = read_pd(buffer);
        CHECK(back.crossings == d.crossings);
        CHECK(back.pairings == d.pairings);
        CHECK(back.free_loops == d.free_loops);
    }
}

TEST_CASE("pd parsing errors carry line numbers") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_pd(in);
    };
    CHECK_THROWS_WITH_AS(parse("X 1 2 3\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse("L\nQ 1 2\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse("P 1\n"), ParseError);
    CHECK_THROWS_AS(parse("X 1 2 3 -4\n"), ParseError);
    CHECK_THROWS_AS(parse("P 1 2\n"), ParseError);  // labels glued once only

    ShadowDiagram loop_and_circle = parse("# a loop next to a two-arc circle\n\nL\nP 4 9\nP 9 4\n");
    CHECK(loop_and_circle.free_loops == 1);
    CHECK(bracket_statesum(loop_and_circle) == x * x);
}
