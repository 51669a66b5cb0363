// Truncated formal power series in t over RingElement, polynomials in t, and
// rational forms whose denominators are products of factors (1 - L^a t^b).
// Series are truncated, not lazy: every value carries an explicit exclusive
// precision N and binary operations truncate to the minimum precision of the
// operands. All coefficients are exact.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mzeta/ring.hpp"

namespace mzeta {

// Polynomial in t with RingElement coefficients; coeffs[i] is the t^i
// coefficient and the top coefficient is nonzero (zero polynomial is empty).
class TPolynomial {
public:
    TPolynomial() = default;
    explicit TPolynomial(std::vector<RingElement> coefficients);
    static TPolynomial constant(RingElement value);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree in t; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const RingElement& coeff(std::size_t i) const;
    const std::vector<RingElement>& coefficients() const noexcept { return coeffs_; }

    bool operator==(const TPolynomial& other) const = default;

private:
    static const RingElement zero_;
    std::vector<RingElement> coeffs_;
};

// One denominator factor (1 - L^lefschetz_power * t^t_power), t_power >= 1.
struct DenominatorFactor {
    std::uint32_t lefschetz_power = 0;
    std::uint32_t t_power = 1;

    auto operator<=>(const DenominatorFactor&) const = default;
};

class TruncatedSeries {
public:
    // Zero series of the given precision (N >= 1).
    explicit TruncatedSeries(std::size_t precision);
    // Low-order coefficients c_0, c_1, ...; padded with zeros up to precision.
    TruncatedSeries(std::size_t precision, std::vector<RingElement> coefficients);
    static TruncatedSeries one(std::size_t precision);

    std::size_t precision() const noexcept { return coeffs_.size(); }
    const RingElement& coeff(std::size_t i) const { return coeffs_.at(i); }
    const std::vector<RingElement>& coefficients() const noexcept { return coeffs_; }
    void set_coeff(std::size_t i, RingElement value) { coeffs_.at(i) = std::move(value); }

    TruncatedSeries truncated(std::size_t precision) const;

    // Coefficientwise sum / Cauchy product at min(precision).
    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);

    // Multiplicative inverse to the same precision. The constant term must be
    // 1 or -1; otherwise NonUnitConstantTerm.
    TruncatedSeries inverse() const;

    bool operator==(const TruncatedSeries& other) const = default;

private:
    std::vector<RingElement> coeffs_;
};

// Numerator polynomial over a product of (1 - L^a t^b) factors. The numerator
// constant term must be 1 so that the form is invertible in the series ring;
// the factor list is kept sorted as a canonical multiset.
class RationalForm {
public:
    RationalForm(TPolynomial numerator, std::vector<DenominatorFactor> denominator);

    const TPolynomial& numerator() const noexcept { return numerator_; }
    const std::vector<DenominatorFactor>& denominator() const noexcept { return denominator_; }
    // Sum of t-degrees b over all denominator factors.
    std::size_t denominator_t_degree() const noexcept;

    bool operator==(const RationalForm& other) const = default;

private:
    TPolynomial numerator_;
    std::vector<DenominatorFactor> denominator_;
};

// f * (1 - L^a t^b) and f / (1 - L^a t^b), both exact to f's precision.
TruncatedSeries multiply_by_factor(const TruncatedSeries& f, DenominatorFactor factor);
TruncatedSeries divide_by_factor(const TruncatedSeries& f, DenominatorFactor factor);

// Exact expansion of a rational form to the given precision (N >= 1).
TruncatedSeries expand(const RationalForm& form, std::size_t precision);

// Multiplies f by every factor and returns the resulting polynomial provided
// every coefficient above max_degree vanishes up to f's precision; otherwise
// throws NotPolynomialWithinPrecision with the first offending index. Requires
// precision > max_degree + total t-degree of the factors, so that a genuine
// polynomial identity leaves a nonempty window of checkable zero coefficients.
TPolynomial clear_denominator(const TruncatedSeries& f,
                              std::span<const DenominatorFactor> factors,
                              std::size_t max_degree);
// Same with the largest admissible degree bound, precision - 1 - sum(b).
TPolynomial clear_denominator(const TruncatedSeries& f,
                              std::span<const DenominatorFactor> factors);

}  // namespace mzeta
