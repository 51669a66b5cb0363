#include "mzeta/zeta.hpp"

#include <algorithm>
#include <string>

#include "mzeta/errors.hpp"

namespace mzeta {

namespace {

void check_precision_cap(std::size_t precision) {
    if (precision == 0 || precision > kMaxSeriesPrecision)
        throw CapExceeded("precision " + std::to_string(precision) + " outside [1, " +
                          std::to_string(kMaxSeriesPrecision) + "]");
}

void check_genus_cap(std::uint32_t genus) {
    if (genus > kMaxGenus)
        throw CapExceeded("genus " + std::to_string(genus) + " exceeds cap " +
                          std::to_string(kMaxGenus));
}

}  // namespace

std::size_t default_precision_pointed(std::uint32_t genus) {
    return 2 * (2 * static_cast<std::size_t>(genus)) + 4;
}

std::size_t default_precision_pointless(std::uint32_t genus, std::uint32_t cycle_degree) {
    return 2 * (2 * static_cast<std::size_t>(genus) + 2 * cycle_degree - 2) + 4;
}

std::size_t default_precision_projective(std::uint32_t n) {
    return 2 * (static_cast<std::size_t>(n) + 1) + 4;
}

std::size_t default_precision_zero_dim(const std::vector<std::uint32_t>& degrees) {
    std::size_t total = 0;
    for (auto d : degrees) total += d;
    return 2 * total + 4;
}

RationalForm zeta_projective_space(std::uint32_t n) {
    std::vector<DenominatorFactor> denominator;
    denominator.reserve(n + 1);
    for (std::uint32_t i = 0; i <= n; ++i) denominator.push_back({i, 1});
    return RationalForm(TPolynomial::constant(RingElement(1)), std::move(denominator));
}

RationalForm zeta_pointed_curve(const PointedCurveData& curve, std::size_t precision) {
    check_genus_cap(curve.genus);
    check_precision_cap(precision);
    const std::uint32_t g = curve.genus;
    const std::size_t low_count = g == 0 ? 0 : 2 * static_cast<std::size_t>(g) - 1;
    if (curve.low_classes.size() != low_count)
        throw InsufficientInitialData("pointed curve of genus " + std::to_string(g) +
                                      " needs exactly " + std::to_string(low_count) +
                                      " low classes, got " +
                                      std::to_string(curve.low_classes.size()));
    if (low_count > 0 && !curve.low_classes[0].is_one())
        throw InsufficientInitialData("S_0 must be the class of a point (1), got " +
                                      curve.low_classes[0].str());
    const std::size_t numerator_degree = 2 * static_cast<std::size_t>(g);
    if (precision <= numerator_degree + 2)
        throw CapExceeded("precision " + std::to_string(precision) +
                          " too low for genus " + std::to_string(g) +
                          "; need at least " + std::to_string(numerator_degree + 3));

    // Z = sum_{m<=2g-2} S_m t^m + [Pic0] * sum_{m>=2g-1} [P^{m-g}] t^m.
    TruncatedSeries series(precision);
    for (std::size_t m = 0; m < precision; ++m) {
        if (m < low_count) {
            series.set_coeff(m, curve.low_classes[m]);
        } else {
            series.set_coeff(m, curve.pic0 * projective_space_class(
                                                 static_cast<std::uint32_t>(m - g)));
        }
    }
    const std::vector<DenominatorFactor> denominator{{0, 1}, {1, 1}};
    TPolynomial numerator = clear_denominator(series, denominator, numerator_degree);
    return RationalForm(std::move(numerator), denominator);
}

RationalForm zeta_pointless_curve(const PointlessCurveData& curve, std::size_t precision) {
    check_genus_cap(curve.genus);
    check_precision_cap(precision);
    const std::uint32_t g = curve.genus;
    const std::uint32_t n = curve.cycle_degree;
    if (n == 0 || n > kMaxCycleDegree)
        throw CapExceeded("cycle degree " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxCycleDegree) + "]");
    const std::size_t top = 2 * static_cast<std::size_t>(g) + 2 * n - 2;  // highest given S_m
    if (curve.sym_classes.size() != top + 1)
        throw InsufficientInitialData("pointless curve with g=" + std::to_string(g) +
                                      ", n=" + std::to_string(n) + " needs S_0..S_" +
                                      std::to_string(top) + " (" + std::to_string(top + 1) +
                                      " values), got " +
                                      std::to_string(curve.sym_classes.size()));
    if (!curve.sym_classes[0].is_one())
        throw InsufficientInitialData("S_0 must be the class of a point (1), got " +
                                      curve.sym_classes[0].str());
    if (precision <= top + 2 * static_cast<std::size_t>(n))
        throw CapExceeded("precision " + std::to_string(precision) + " too low; need at least " +
                          std::to_string(top + 2 * n + 1));

    // S_m = 0 for m < 0 makes the window [2g-1, 2g+n-2] well defined at g = 0.
    const auto sym_at = [&](std::int64_t m) -> RingElement {
        if (m < 0) return RingElement();
        return curve.sym_classes.at(static_cast<std::size_t>(m));
    };
    const RingElement shift = RingElement::lefschetz(n);

    // P_m = S_{m+n} - L^n S_m for the n window indices m = 2g-1 .. 2g+n-2,
    // stored by residue (m mod n).
    const std::int64_t window_low = 2 * static_cast<std::int64_t>(g) - 1;
    std::vector<RingElement> window_class(n);
    for (std::int64_t m = window_low; m < window_low + n; ++m) {
        const std::size_t residue =
            static_cast<std::size_t>(((m % n) + n) % static_cast<std::int64_t>(n));
        window_class[residue] = sym_at(m + n) - shift * sym_at(m);
    }

    // Extend S by S_{m} = P_{m0} + L^n S_{m-n} for m > 2g+2n-2, m0 = (m-n) mod n.
    TruncatedSeries series(precision);
    for (std::size_t m = 0; m < precision; ++m) {
        if (m <= top) {
            series.set_coeff(m, curve.sym_classes[m]);
        } else {
            const std::size_t residue = (m - n) % n;
            series.set_coeff(m, window_class[residue] + shift * series.coeff(m - n));
        }
    }
    const std::vector<DenominatorFactor> denominator{{0, n}, {n, n}};
    TPolynomial numerator = clear_denominator(series, denominator, top);
    return RationalForm(std::move(numerator), denominator);
}

RationalForm zeta_zero_dim_counting(const std::vector<std::uint32_t>& degrees) {
    std::vector<DenominatorFactor> denominator;
    denominator.reserve(degrees.size());
    for (auto d : degrees) {
        if (d == 0) throw std::invalid_argument("closed point degree must be >= 1");
        denominator.push_back({0, d});
    }
    return RationalForm(TPolynomial::constant(RingElement(1)), std::move(denominator));
}

TruncatedSeries normalization_transfer(const TruncatedSeries& z_tilde,
                                       const TruncatedSeries& z_x,
                                       const TruncatedSeries& z_y) {
    const std::size_t precision =
        std::min({z_tilde.precision(), z_x.precision(), z_y.precision()});
    return z_tilde.truncated(precision) * z_x.truncated(precision) *
           z_y.truncated(precision).inverse();
}

}  // namespace mzeta
