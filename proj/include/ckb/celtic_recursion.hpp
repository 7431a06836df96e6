#ifndef CKB_CELTIC_RECURSION_HPP
#define CKB_CELTIC_RECURSION_HPP

#include <vector>

#include "ckb/poly_matrix.hpp"

namespace ckb {

/// The 2-vector advanced by the Celtic transfer matrix: the bracket of the
/// width-2n grid and of the same grid with its last middle crossing
/// vertically smoothed.
struct CelticStatePair {
    IntPoly ck;
    IntPoly vck;
    int n = 0;
};

/// The 2x2 states matrix [[x^2+3x+3, x+1], [x+2, x+1]].
const PolyMatrix& celtic_transfer_matrix();

/// Exact bracket of the width-2n Celtic grid by transfer-matrix iteration
/// from the n = 1 pair (x^2+x, x).
CelticStatePair celtic_bracket(int n);

/// Same polynomial via the scalar recurrence b_n = (x+2)^2 b_{n-1}
/// - (x+1)^3 b_{n-2} that the generating function
/// x y (x+1) (1-x y) / (1 - (x+2)^2 y + (x+1)^3 y^2) satisfies.
IntPoly celtic_bracket_gf(int n);

/// Relative error between the radical closed form evaluated at x0 and the
/// exact polynomial. Requires x0 > 0 and n <= 12.
double closed_form_spot_check(int n, double x0);

/// First-column coefficients [x^1] of the bracket for n = 1..n_max; matches
/// OEIS A001353 (a_n = 4 a_{n-1} - a_{n-2}).
std::vector<BigInt> oeis_column_check(int n_max);

}  // namespace ckb

#endif
