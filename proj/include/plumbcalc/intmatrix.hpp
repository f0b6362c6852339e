#pragma once

#include <vector>

#include "plumbcalc/rational.hpp"

namespace plumbcalc {

/// Dense matrix of exact integers, row major.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Int(0)) {}

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool is_symmetric() const;
    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithResult {
    IntMatrix d, u, v;
    /// The diagonal of d, length min(rows, cols).
    std::vector<Int> diagonal() const;
};
SmithResult smith_normal_form(const IntMatrix& m);

/// Invariant factors of the cokernel Z^cols / (row space of M): the SNF diagonal
/// padded with zeros up to cols (one 0 per free rank). Factors equal to 1 are kept.
std::vector<Int> cokernel_invariants(const IntMatrix& m);

/// cokernel_invariants without the trivial 1s. Zeros (free summands) are kept.
std::vector<Int> nontrivial_cokernel_invariants(const IntMatrix& m);

/// Exact inertia (n+, n-, n0) of a symmetric integer matrix via rational
/// symmetric congruence reduction. No floating point, no tolerance.
struct Inertia {
    int positive = 0, negative = 0, zero = 0;
};
Inertia signature_exact(const IntMatrix& m);

/// Exact determinant, Bareiss fraction-free elimination.
Int det_bareiss(const IntMatrix& m);

}  // namespace plumbcalc
