#ifndef UFNA_HILBERT_HPP
#define UFNA_HILBERT_HPP

// Rational Hilbert series through the quiver transfer matrix:
//   H_kQ(t) = 1^T (I - tM)^{-1} 1,
//   H_A(t)  = sum_{n<d} dim(A_n) t^n + t^d H_kQ(t),
// both exact fractions of integer polynomials, reduced to lowest terms
// and normalized so the denominator has constant term 1.

#include <cstdint>
#include <vector>

#include "ufna/exactla.hpp"
#include "ufna/language.hpp"
#include "ufna/quiver.hpp"

namespace ufna {

struct RationalSeries {
    IntPoly num;
    IntPoly den; // den(0) = 1; gcd(num, den) = 1

    bool operator==(const RationalSeries&) const = default;
};

// (num1/den1) reduced: divide by the primitive gcd and fix signs.
RationalSeries reduce_series(IntPoly num, IntPoly den);

RationalSeries hilbert_quiver(const Quiver& q);

RationalSeries hilbert_algebra(const Presentation& p, const Quiver& q,
                               std::uint64_t cap = kDefaultCap);

// Power-series coefficients c_0..c_N by the denominator's linear
// recurrence; exact. Requires den(0) = 1.
std::vector<Int> expand(const RationalSeries& s, int N);

// Coefficient-sequence sanity for a claimed growth class over a window:
// finite dimensional needs a zero tail, exponential a stride-2 ratio
// bounded away from 1, polynomial of degree k a constant k-th finite
// difference on the tail. Heuristic on short windows; the acceptance
// fixtures use windows where it is decisive.
bool growth_consistent(const GrowthClass& g, const std::vector<Int>& coeffs, int tail_from);

std::vector<Int> finite_difference(std::vector<Int> coeffs, int order);

} // namespace ufna

#endif
