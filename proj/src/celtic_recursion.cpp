#include "ckb/celtic_recursion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ckb {

namespace {

void check_n(int n, int max_n) {
    if (n < 1) throw std::invalid_argument("celtic recursion: n must be >= 1");
    if (n > max_n)
        throw std::invalid_argument("celtic recursion: n = " + std::to_string(n) +
                                    " exceeds the n <= " + std::to_string(max_n) + " guard");
}

}  // namespace

const PolyMatrix& celtic_transfer_matrix() {
    static const PolyMatrix m = [] {
        IntPoly x = IntPoly::variable();
        PolyMatrix out(2, 2);
        out << x * x + 3 * x + 3, x + 1, x + 2, x + 1;
        return out;
    }();
    return m;
}

CelticStatePair celtic_bracket(int n) {
    check_n(n, 64);
    IntPoly x = IntPoly::variable();
    PolyVector state(2);
    state << x * x + x, x;
    for (int step = 1; step < n; ++step) state = mat_vec(celtic_transfer_matrix(), state);
    return CelticStatePair{state(0), state(1), n};
}

IntPoly celtic_bracket_gf(int n) {
    check_n(n, 64);
    IntPoly x = IntPoly::variable();
    IntPoly prev = x * x + x;                                          // series coefficient at y^1
    IntPoly cur = x * x * x * x + 4 * x * x * x + 7 * x * x + 4 * x;   // at y^2
    if (n == 1) return prev;
    IntPoly s = (x + 2) * (x + 2);
    IntPoly t = (x + 1) * (x + 1) * (x + 1);
    for (int step = 2; step < n; ++step) {
        IntPoly next = s * cur - t * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double closed_form_spot_check(int n, double x0) {
    check_n(n, 12);
    if (!(x0 > 0.0)) throw std::invalid_argument("closed_form_spot_check: x0 must be > 0");

    double p = x0 * x0 + 4 * x0 + 4;
    double q = std::sqrt(x0 * x0 * x0 * x0 + 4 * x0 * x0 * x0 + 12 * x0 * x0 + 20 * x0 + 12);
    double plus = std::pow((p + q) / 2, n - 1);
    double minus = std::pow((p - q) / 2, n - 1);
    double closed = (x0 * x0 + x0) / (2 * q) *
                    ((x0 * x0 + 2 * x0 + 4 + q) * plus - (x0 * x0 + 2 * x0 + 4 - q) * minus);

    double exact = poly_eval_float(celtic_bracket(n).ck, x0);
    return std::abs(closed - exact) / std::abs(exact);
}

std::vector<BigInt> oeis_column_check(int n_max) {
    if (n_max < 0 || n_max > 12)
        throw std::invalid_argument("oeis_column_check: n_max must be in [0, 12]");
    std::vector<BigInt> out;
    CelticStatePair state = n_max >= 1 ? celtic_bracket(1) : CelticStatePair{};
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) {
            PolyVector v(2);
            v << state.ck, state.vck;
            v = mat_vec(celtic_transfer_matrix(), v);
            state = CelticStatePair{v(0), v(1), n};
        }
        out.push_back(state.ck.coeff(1));
    }
    return out;
}

}  // namespace ckb
