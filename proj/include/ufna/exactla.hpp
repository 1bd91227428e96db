#ifndef UFNA_EXACTLA_HPP
#define UFNA_EXACTLA_HPP

// Shared exact arithmetic: dense integer matrices with fraction-free
// (Bareiss) rank, span membership, a sparse exact eliminator for large
// structured matrices, and univariate integer polynomials. Everything
// here is exact over Z or Q; no floating point anywhere.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ufna/errors.hpp"

namespace ufna {

using Int = mpz_class;
using Rat = mpq_class;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    std::vector<Int> column(std::size_t c) const;
    std::vector<Int> row_sums() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// Rank over the rationals via fraction-free Gaussian elimination
// (Bareiss); all intermediates stay integral.
int rank_exact(const IntMatrix& m);

// Rank modulo a prime, used only as a cross-check of rank_exact in tests
// (a modular rank can undershoot, never overshoot).
int rank_mod_p(const IntMatrix& m, unsigned long p);

// True iff v is a rational linear combination of m's columns.
bool in_span(const std::vector<Int>& v, const IntMatrix& m);

// Sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Int>>;

// Exact rank of the matrix whose rows are the given sparse vectors.
// Plain Gaussian elimination over Q with sparse storage; used where the
// dense Bareiss routine would be hopeless (large 0/1 matrices with near
// disjoint supports). Cross-checked against rank_exact in the tests.
int rank_sparse(const std::vector<SparseVec>& rows, std::size_t cols);

// Integer-coefficient polynomial in one variable; coeff[i] multiplies t^i.
// Zero is the empty vector; no trailing zero coefficients are stored.
struct IntPoly {
    std::vector<Int> coeff;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> c) : coeff(std::move(c)) { trim(); }

    static IntPoly constant(Int v);

    bool is_zero() const { return coeff.empty(); }
    int degree() const { return static_cast<int>(coeff.size()) - 1; } // -1 for zero
    Int at(std::size_t i) const { return i < coeff.size() ? coeff[i] : Int(0); }

    void trim();
    bool operator==(const IntPoly&) const = default;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_shift(const IntPoly& a, int k); // multiply by t^k

// gcd of all coefficients, nonnegative; content of 0 is 0
Int poly_content(const IntPoly& a);
// a / content(a), with positive leading coefficient
IntPoly poly_primitive(const IntPoly& a);
// exact division; throws DimensionError if b does not divide a over Z
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);
// primitive gcd with positive leading coefficient; gcd(0,0) = 0
IntPoly poly_gcd(IntPoly a, IntPoly b);

// det(I - tM) together with the entry sum of adj(I - tM), both exact
// integer polynomials, computed by the Faddeev-LeVerrier recurrence
// (whose integer divisions are exact). For the quiver transfer matrix
// this gives the rational generating function of path counts:
//   1^T (I - tM)^{-1} 1 = adj_sum / det.
struct Resolvent {
    IntPoly det;
    IntPoly adj_sum;
};

Resolvent polymat_resolvent(const IntMatrix& m);

} // namespace ufna

#endif
