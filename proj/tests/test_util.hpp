#ifndef CKB_TEST_UTIL_HPP
#define CKB_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ckb/polynomial.hpp"
#include "ckb/shadow.hpp"

namespace ckb::testutil {

inline IntPoly poly_pow(const IntPoly& base, int exponent) {
    IntPoly out(1);
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

/// Random polynomial with degree <= max_degree and |coefficients| <= bound.
inline IntPoly random_poly(std::mt19937& rng, int max_degree, long long bound) {
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<long long> coeff(-bound, bound);
    std::vector<BigInt> coeffs;
    int d = degree(rng);
    for (int i = 0; i <= d; ++i) coeffs.emplace_back(coeff(rng));
    return IntPoly(std::move(coeffs));
}

/// Random valid shadow diagram: crossings take each edge-end label once and
/// a random perfect matching glues them a second time. (Such codes need not
/// be planar; every combinatorial bracket identity tested against them holds
/// regardless.)
inline ShadowDiagram random_diagram(std::mt19937& rng, int max_crossings) {
    std::uniform_int_distribution<int> crossing_count(1, max_crossings);
    std::uniform_int_distribution<int> loops(0, 2);
    int c = crossing_count(rng);

    std::vector<int> labels(static_cast<std::size_t>(4 * c));
    std::iota(labels.begin(), labels.end(), 0);
    std::shuffle(labels.begin(), labels.end(), rng);

    ShadowDiagram d;
    d.free_loops = loops(rng);
    for (int i = 0; i < c; ++i)
        d.crossings.push_back({labels[static_cast<std::size_t>(4 * i)],
                               labels[static_cast<std::size_t>(4 * i + 1)],
                               labels[static_cast<std::size_t>(4 * i + 2)],
                               labels[static_cast<std::size_t>(4 * i + 3)]});

    std::shuffle(labels.begin(), labels.end(), rng);
    for (std::size_t i = 0; i + 1 < labels.size(); i += 2)
        d.pairings.emplace_back(labels[i], labels[i + 1]);
    return d;
}

}  // namespace ckb::testutil

#endif
