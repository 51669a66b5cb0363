// Constructors for Kapranov zeta functions as rational forms: projective
// spaces, curves with a rational point (Abel-Jacobi tail), curves without one
// (degree-n cycle recursion), zero-dimensional schemes at the counting level,
// and the normalization transfer between a curve and its smooth model.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mzeta/series.hpp"

namespace mzeta {

// Desk-scale caps; exceeding any of them raises CapExceeded.
inline constexpr std::uint32_t kMaxGenus = 10;
inline constexpr std::uint32_t kMaxCycleDegree = 10;
inline constexpr std::size_t kMaxSeriesPrecision = 512;

// Curve with a rational point: the classes [Sym^m C] for m <= 2g-2 and
// [Pic^0(C)]; beyond 2g-2 the Abel-Jacobi projective-bundle formula takes over.
struct PointedCurveData {
    std::uint32_t genus = 0;
    std::vector<RingElement> low_classes;  // S_0 .. S_{2g-2}; empty when g == 0
    RingElement pic0 = RingElement(1);
};

// Curve with a rational effective 0-cycle of degree n but possibly no rational
// point: the classes S_m = [Sym^m C] for m <= 2g+2n-2 determine everything.
struct PointlessCurveData {
    std::uint32_t genus = 0;
    std::uint32_t cycle_degree = 1;        // n
    std::vector<RingElement> sym_classes;  // S_0 .. S_{2g+2n-2}
};

// Default precision 2*(expected numerator degree) + 4 so a non-vanishing tail
// is always detectable, with a floor covering the denominator degree.
std::size_t default_precision_pointed(std::uint32_t genus);
std::size_t default_precision_pointless(std::uint32_t genus, std::uint32_t cycle_degree);
std::size_t default_precision_projective(std::uint32_t n);
std::size_t default_precision_zero_dim(const std::vector<std::uint32_t>& degrees);

// Z_{P^n} = 1 / ((1-t)(1-Lt)...(1-L^n t)).
RationalForm zeta_projective_space(std::uint32_t n);

// Clears (1-t)(1-Lt) from the pointed-curve series; numerator degree <= 2g.
RationalForm zeta_pointed_curve(const PointedCurveData& curve, std::size_t precision);

// Derives the window classes P_m = S_{m+n} - L^n S_m for m in [2g-1, 2g+n-2],
// extends by S_{m+n} = P_{m0} + L^n S_m (m0 the window representative of
// m mod n), and clears (1-t^n)(1-L^n t^n); numerator degree <= 2g+2n-2.
RationalForm zeta_pointless_curve(const PointlessCurveData& curve, std::size_t precision);

// Zeta of a zero-dimensional scheme with one closed point per listed degree.
// Valid at the counting level only: the expansion coefficients specialize to
// the number of effective 0-cycles of each degree, but they are not classes
// in Z[L], so no symbolic reading is offered.
RationalForm zeta_zero_dim_counting(const std::vector<std::uint32_t>& degrees);

// z_tilde * z_x / z_y at the common precision: transfers the zeta function
// along [C] = [C~] + [X] - [Y] with X, Y zero-dimensional.
TruncatedSeries normalization_transfer(const TruncatedSeries& z_tilde,
                                       const TruncatedSeries& z_x,
                                       const TruncatedSeries& z_y);

}  // namespace mzeta
