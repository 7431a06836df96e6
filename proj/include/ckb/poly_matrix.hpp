#ifndef CKB_POLY_MATRIX_HPP
#define CKB_POLY_MATRIX_HPP

#include <stdexcept>

#include <Eigen/Core>

#include "ckb/polynomial.hpp"

namespace Eigen {

/// Teaches Eigen to treat ckb::Polynomial as a plain (non-vectorizable)
/// scalar ring, so polynomial-valued matrices get the generic kernels.
template <typename S>
struct NumTraits<ckb::Polynomial<S>> {
    using Self = ckb::Polynomial<S>;
    using Real = Self;
    using NonInteger = Self;
    using Literal = Self;
    using Nested = Self;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64
    };
    static Self epsilon() { return Self(); }
    static Self dummy_precision() { return Self(); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace ckb {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using PolyMatrix = Eigen::Matrix<IntPoly, Eigen::Dynamic, Eigen::Dynamic>;
using PolyVector = Eigen::Matrix<IntPoly, Eigen::Dynamic, 1>;

inline PolyMatrix poly_identity(Eigen::Index n) {
    return PolyMatrix::Identity(n, n);
}

/// Exact matrix product; the lazy (coefficient-based) kernel keeps the
/// arithmetic a plain double loop over ring operations.
inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: inner dimensions disagree");
    return a.lazyProduct(b);
}

inline PolyVector mat_vec(const PolyMatrix& a, const PolyVector& v) {
    if (a.cols() != v.rows())
        throw DimensionMismatch("mat_vec: inner dimensions disagree");
    return a.lazyProduct(v);
}

}  // namespace ckb

#endif
