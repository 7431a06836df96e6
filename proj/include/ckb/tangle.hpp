#ifndef CKB_TANGLE_HPP
#define CKB_TANGLE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ckb/poly_matrix.hpp"

namespace ckb {

struct NoIsomorphism : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-crossing perfect matching on the 8 boundary points of a 4-strand
/// tangle: points 0..3 are the top endpoints left to right, 4..7 the bottom
/// endpoints left to right. Exactly 14 such matchings exist (Catalan C4);
/// they form the basis of the 4-strand diagram monoid.
class Pairing {
public:
    Pairing() = default;

    static Pairing identity();
    static Pairing from_pairs(const std::vector<std::pair<int, int>>& pairs);

    int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
    bool noncrossing() const;

    /// Pairs as (min, max), sorted; the canonical form used for ordering.
    std::vector<std::pair<int, int>> pairs() const;

    friend bool operator==(const Pairing&, const Pairing&) = default;
    friend auto operator<=>(const Pairing& a, const Pairing& b) {
        return a.partner_ <=> b.partner_;
    }

private:
    std::array<std::uint8_t, 8> partner_{};
};

/// A monoid element together with the closed loops split off during
/// composition: the state x^loops * pairing.
struct WeightedPairing {
    int loops = 0;
    Pairing pairing;
};

/// Stacks upper above lower, gluing upper's bottom points to lower's top
/// points; closed cycles become loops.
WeightedPairing compose(const Pairing& upper, const Pairing& lower);

/// All 14 basis matchings in canonical order: identity first, the rest
/// sorted lexicographically.
const std::vector<Pairing>& enumerate_basis();

/// Bracket coefficients of an n-fold tangle stack over the 14-element basis.
struct StateVector {
    PolyVector a;  // 14 entries, canonical basis order
    int n = 0;
};

/// A 4-strand shadow tangle as levels of crossings read top to bottom;
/// entry i in a level crosses strands (i, i+1), 1-based.
struct Tangle {
    std::vector<std::vector<int>> levels;
};

/// The three-crossing column block whose n-fold stack closes up into the
/// width-2n Celtic grid: a crossing on strands (2,3) above crossings on
/// (1,2) and (3,4).
Tangle fundamental_tangle();

/// Every smoothing state of the tangle, in increasing-bitmask order.
std::vector<WeightedPairing> tangle_states(const Tangle& t);

/// Basis expansion of the fundamental tangle (n = 1): eight loop-free
/// states on eight distinct basis elements.
StateVector expand_fundamental();

/// The 14x14 states matrix M with M(j, i) = sum over fundamental states h
/// of x^loops(compose(g_i, h)) restricted to results equal to g_j.
PolyMatrix build_state_matrix();

/// The published 14x14 states matrix, used as a cross-check fixture.
const PolyMatrix& reference_state_matrix();

/// Closure values of the published basis in its own indexing.
const std::array<int, 14>& reference_closure_exponents();

/// A bijection perm[derived index] = reference index, mapping the identity
/// to index 0, under which the derived matrix equals the reference matrix
/// entry for entry. Throws NoIsomorphism if none exists.
std::vector<int> match_reference_matrix(const PolyMatrix& derived);

/// A_n = M^n A_0 with A_0 the unit vector at the identity pairing.
StateVector iterate_states(int n);

/// x^k where k counts the circles after closing top points pairwise
/// (0-1, 2-3) and bottom points pairwise (4-5, 6-7).
IntPoly closure_value(const Pairing& g);

/// Bracket of the closed n-fold stack: dot product of A_n with the
/// closure values.
IntPoly closure_bracket(int n);

/// Bracket of the width-2n Celtic grid recovered from the closed stack by
/// exact division by (x+1)^2.
IntPoly tangle_bracket(int n);

/// Relative error at (lambda, x) between det(lambda I - M) computed
/// numerically and the factored characteristic polynomial of the states
/// matrix.
double char_poly_relative_error(double lambda, double x);

}  // namespace ckb

#endif
