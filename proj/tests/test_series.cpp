#include "mzeta/series.hpp"

#include <random>
#include <vector>

#include "mzeta/errors.hpp"
#include "support/check.hpp"
#include "support/random_ring.hpp"

using namespace mzeta;

namespace {

const RingElement L = RingElement::lefschetz();

TruncatedSeries make_series(std::size_t precision, std::vector<const char*> texts) {
    std::vector<RingElement> coeffs;
    for (const auto* t : texts) coeffs.push_back(RingElement::parse(t));
    return TruncatedSeries(precision, std::move(coeffs));
}

}  // namespace

int main() {
    TEST("series_arithmetic_examples");
    {
        const auto one_plus_t = make_series(3, {"1", "1"});
        const auto one_minus_t = make_series(3, {"1", "-1"});
        CHECK_EQ(one_plus_t * one_minus_t, make_series(3, {"1", "0", "-1"}));

        // geometric(1) * geometric(L) has the projective-space prefix sums
        const auto geo_1 = divide_by_factor(TruncatedSeries::one(3), {0, 1});
        const auto geo_L = divide_by_factor(TruncatedSeries::one(3), {1, 1});
        CHECK_EQ(geo_1 * geo_L, make_series(3, {"1", "1 + L", "1 + L + L^2"}));

        CHECK_EQ(one_plus_t + TruncatedSeries(3), one_plus_t);
    }

    TEST("series_min_precision");
    {
        const auto f = TruncatedSeries::one(8);
        const auto g = TruncatedSeries::one(5);
        CHECK_EQ((f + g).precision(), std::size_t{5});
        CHECK_EQ((f * g).precision(), std::size_t{5});
    }

    TEST("series_inverse_examples");
    {
        const auto geometric = make_series(5, {"1", "-1"}).inverse();
        CHECK_EQ(geometric, make_series(5, {"1", "1", "1", "1", "1"}));

        // 1 - Lt inverts to sum L^m t^m; verify f*g = 1 by the Cauchy product
        const auto f = make_series(10, {"1", "-1*L"});
        const auto g = f.inverse();
        for (std::size_t m = 0; m < 10; ++m)
            CHECK_EQ(g.coeff(m), m == 0 ? RingElement(1) : RingElement::lefschetz(m));
        CHECK_EQ(f * g, TruncatedSeries::one(10));

        CHECK_THROWS(NonUnitConstantTerm, make_series(4, {"2", "1"}).inverse());

        // constant term -1 is a unit too
        const auto h = make_series(6, {"-1", "1 + L", "-3*X"});
        CHECK_EQ(h * h.inverse(), TruncatedSeries::one(6));
    }

    TEST("series_inverse_property");
    {
        std::mt19937_64 rng(4242);
        const std::vector<std::string> pool{"L", "X"};
        for (int trial = 0; trial < 25; ++trial) {
            TruncatedSeries f(8);
            f.set_coeff(0, RingElement(trial % 2 == 0 ? 1 : -1));
            for (std::size_t m = 1; m < 8; ++m)
                f.set_coeff(m, testkit::random_element(rng, pool, 3, 3, 5));
            CHECK_EQ(f * f.inverse(), TruncatedSeries::one(8));
        }
    }

    TEST("expand_examples");
    {
        const RationalForm geometric(TPolynomial::constant(RingElement(1)), {{0, 1}});
        CHECK_EQ(expand(geometric, 4), make_series(4, {"1", "1", "1", "1"}));

        const RationalForm p1(TPolynomial::constant(RingElement(1)), {{0, 1}, {1, 1}});
        CHECK_EQ(expand(p1, 4),
                 make_series(4, {"1", "1 + L", "1 + L + L^2", "1 + L + L^2 + L^3"}));

        // conic-shaped example: numerator 1 + X t + L t^2 over (1-t^2)(1-L^2 t^2);
        // the t^3 coefficient follows the recursion S_{m+2} = P_m + L^2 S_m
        const RationalForm conic(
            TPolynomial({RingElement(1), RingElement::symbol("X"), L}),
            {{0, 2}, {2, 2}});
        const auto series = expand(conic, 4);
        CHECK_EQ(series.coeff(3), RingElement::parse("X + L^2*X"));
        CHECK_EQ(series.coeff(2), RingElement::parse("1 + L + L^2"));
    }

    TEST("clear_denominator_examples");
    {
        const RationalForm p1(TPolynomial::constant(RingElement(1)), {{0, 1}, {1, 1}});
        const std::vector<DenominatorFactor> factors{{0, 1}, {1, 1}};
        const auto numerator = clear_denominator(expand(p1, 12), factors, 0);
        CHECK_EQ(numerator, TPolynomial::constant(RingElement(1)));
        CHECK_EQ(numerator.degree(), 0);

        const auto ones = divide_by_factor(TruncatedSeries::one(10), {0, 1});
        const std::vector<DenominatorFactor> t_factor{{0, 1}};
        CHECK_EQ(clear_denominator(ones, t_factor, 0), TPolynomial::constant(RingElement(1)));

        const std::vector<DenominatorFactor> lt_factor{{1, 1}};
        CHECK_THROWS(NotPolynomialWithinPrecision, clear_denominator(ones, lt_factor, 0));
        try {
            clear_denominator(ones, lt_factor, 0);
        } catch (const NotPolynomialWithinPrecision& err) {
            CHECK_EQ(err.first_offending_index, std::size_t{1});
        }
    }

    TEST("clear_denominator_precondition");
    {
        const auto ones = divide_by_factor(TruncatedSeries::one(4), {0, 1});
        const std::vector<DenominatorFactor> factors{{0, 1}, {1, 1}};
        // precision 4 cannot support degree 2 + factor degree 2
        CHECK_THROWS(std::invalid_argument, clear_denominator(ones, factors, 2));
    }

    TEST("clear_then_rebuild_recovers_numerator");
    {
        std::mt19937_64 rng(81);
        const std::vector<std::string> pool{"L", "X"};
        const std::vector<DenominatorFactor> all_factors{{0, 1}, {1, 1}, {2, 1}, {0, 2}, {2, 2}};
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<RingElement> coeffs{RingElement(1)};
            std::uniform_int_distribution<int> extra(0, 3);
            const int degree = extra(rng);
            for (int i = 0; i < degree; ++i)
                coeffs.push_back(testkit::random_element(rng, pool, 3, 2, 4));
            TPolynomial numerator(std::move(coeffs));

            std::vector<DenominatorFactor> denominator;
            for (const auto& f : all_factors)
                if (extra(rng) != 0) denominator.push_back(f);

            const RationalForm form(numerator, denominator);
            const std::size_t slack = 5;
            const std::size_t precision =
                static_cast<std::size_t>(numerator.degree()) + form.denominator_t_degree() +
                slack;
            const auto cleared =
                clear_denominator(expand(form, precision), form.denominator(),
                                  static_cast<std::size_t>(numerator.degree()));
            CHECK_EQ(cleared, numerator);
        }
    }

    TEST("rational_form_validation");
    {
        CHECK_THROWS(NonUnitConstantTerm,
                     RationalForm(TPolynomial::constant(RingElement(2)), {{0, 1}}));
        CHECK_THROWS(NonUnitConstantTerm,
                     RationalForm(TPolynomial::constant(RingElement::symbol("X")), {}));
        CHECK_THROWS(std::invalid_argument,
                     RationalForm(TPolynomial::constant(RingElement(1)), {{1, 0}}));
        // denominator multiset is canonically sorted
        const RationalForm form(TPolynomial::constant(RingElement(1)), {{1, 1}, {0, 1}});
        const std::vector<DenominatorFactor> expected{{0, 1}, {1, 1}};
        CHECK(form.denominator() == expected);
    }

    return testkit::summary();
}
