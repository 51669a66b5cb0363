#include "mzeta/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mzeta/errors.hpp"

namespace mzeta {

const RingElement TPolynomial::zero_{};

TPolynomial::TPolynomial(std::vector<RingElement> coefficients)
    : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TPolynomial TPolynomial::constant(RingElement value) {
    std::vector<RingElement> c;
    c.push_back(std::move(value));
    return TPolynomial(std::move(c));
}

const RingElement& TPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : zero_;
}

TruncatedSeries::TruncatedSeries(std::size_t precision) {
    if (precision == 0) throw std::invalid_argument("series precision must be >= 1");
    coeffs_.resize(precision);
}

TruncatedSeries::TruncatedSeries(std::size_t precision, std::vector<RingElement> coefficients)
    : TruncatedSeries(precision) {
    if (coefficients.size() > precision)
        throw std::invalid_argument("more coefficients than precision");
    std::move(coefficients.begin(), coefficients.end(), coeffs_.begin());
}

TruncatedSeries TruncatedSeries::one(std::size_t precision) {
    TruncatedSeries s(precision);
    s.coeffs_[0] = RingElement(1);
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
    TruncatedSeries out(std::min(precision, coeffs_.size()));
    std::copy_n(coeffs_.begin(), out.precision(), out.coeffs_.begin());
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries out(std::min(f.precision(), g.precision()));
    for (std::size_t i = 0; i < out.precision(); ++i)
        out.coeffs_[i] = f.coeffs_[i] + g.coeffs_[i];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries out(std::min(f.precision(), g.precision()));
    for (std::size_t i = 0; i < out.precision(); ++i)
        for (std::size_t j = 0; j + i < out.precision(); ++j)
            out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const RingElement& c0 = coeffs_[0];
    if (!c0.is_constant() || (c0.constant_term() != 1 && c0.constant_term() != -1))
        throw NonUnitConstantTerm("series inverse requires constant term 1 or -1, got " +
                                  c0.str());
    const bool negated = c0.constant_term() == -1;
    // g_0 = 1/c_0; g_m = -1/c_0 * sum_{j=1..m} c_j g_{m-j}.
    TruncatedSeries g(precision());
    g.coeffs_[0] = RingElement(negated ? -1 : 1);
    for (std::size_t m = 1; m < precision(); ++m) {
        RingElement acc;
        for (std::size_t j = 1; j <= m; ++j) acc += coeffs_[j] * g.coeffs_[m - j];
        g.coeffs_[m] = negated ? std::move(acc) : -acc;
    }
    return g;
}

RationalForm::RationalForm(TPolynomial numerator, std::vector<DenominatorFactor> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (!numerator_.coeff(0).is_one())
        throw NonUnitConstantTerm("rational form numerator must have constant term 1, got " +
                                  numerator_.coeff(0).str());
    for (const auto& factor : denominator_)
        if (factor.t_power == 0)
            throw std::invalid_argument("denominator factor needs t power >= 1");
    std::sort(denominator_.begin(), denominator_.end());
}

std::size_t RationalForm::denominator_t_degree() const noexcept {
    std::size_t total = 0;
    for (const auto& factor : denominator_) total += factor.t_power;
    return total;
}

TruncatedSeries multiply_by_factor(const TruncatedSeries& f, DenominatorFactor factor) {
    const RingElement shift = factor.lefschetz_power == 0
                                  ? RingElement(1)
                                  : RingElement::lefschetz(factor.lefschetz_power);
    TruncatedSeries out(f.precision());
    for (std::size_t m = 0; m < f.precision(); ++m) {
        RingElement c = f.coeff(m);
        if (m >= factor.t_power) c -= shift * f.coeff(m - factor.t_power);
        out.set_coeff(m, std::move(c));
    }
    return out;
}

TruncatedSeries divide_by_factor(const TruncatedSeries& f, DenominatorFactor factor) {
    const RingElement shift = factor.lefschetz_power == 0
                                  ? RingElement(1)
                                  : RingElement::lefschetz(factor.lefschetz_power);
    TruncatedSeries out(f.precision());
    for (std::size_t m = 0; m < f.precision(); ++m) {
        RingElement c = f.coeff(m);
        if (m >= factor.t_power) c += shift * out.coeff(m - factor.t_power);
        out.set_coeff(m, std::move(c));
    }
    return out;
}

TruncatedSeries expand(const RationalForm& form, std::size_t precision) {
    TruncatedSeries out(precision);
    const auto& numerator = form.numerator().coefficients();
    for (std::size_t i = 0; i < numerator.size() && i < precision; ++i)
        out.set_coeff(i, numerator[i]);
    for (const auto& factor : form.denominator()) out = divide_by_factor(out, factor);
    return out;
}

TPolynomial clear_denominator(const TruncatedSeries& f,
                              std::span<const DenominatorFactor> factors,
                              std::size_t max_degree) {
    std::size_t factor_degree = 0;
    for (const auto& factor : factors) factor_degree += factor.t_power;
    if (f.precision() <= max_degree + factor_degree)
        throw std::invalid_argument(
            "clear_denominator: precision " + std::to_string(f.precision()) +
            " leaves no zero-tail window beyond degree " + std::to_string(max_degree) +
            " plus factor degree " + std::to_string(factor_degree));

    TruncatedSeries product = f;
    for (const auto& factor : factors) product = multiply_by_factor(product, factor);

    for (std::size_t m = max_degree + 1; m < product.precision(); ++m)
        if (!product.coeff(m).is_zero())
            throw NotPolynomialWithinPrecision(
                m, "cleared series has nonzero coefficient " + product.coeff(m).str() +
                       " at index " + std::to_string(m) + " beyond claimed degree " +
                       std::to_string(max_degree));

    std::vector<RingElement> coefficients(product.coefficients().begin(),
                                          product.coefficients().begin() +
                                              static_cast<std::ptrdiff_t>(
                                                  std::min(max_degree + 1, product.precision())));
    return TPolynomial(std::move(coefficients));
}

TPolynomial clear_denominator(const TruncatedSeries& f,
                              std::span<const DenominatorFactor> factors) {
    std::size_t factor_degree = 0;
    for (const auto& factor : factors) factor_degree += factor.t_power;
    if (f.precision() <= factor_degree)
        throw std::invalid_argument("clear_denominator: precision too low for factor degree " +
                                    std::to_string(factor_degree));
    return clear_denominator(f, factors, f.precision() - 1 - factor_degree);
}

}  // namespace mzeta
