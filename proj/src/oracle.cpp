#include "mzeta/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mzeta/errors.hpp"

namespace mzeta {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Element = FiniteField::Element;

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent, std::uint64_t limit) {
    std::uint64_t value = 1;
    for (std::uint32_t i = 0; i < exponent; ++i) {
        if (base != 0 && value > limit / base) return std::numeric_limits<std::uint64_t>::max();
        value *= base;
    }
    return value;
}

// Extension field F_{q^m} together with the model's coefficients in it.
struct ExtensionScope {
    FiniteField field;
    std::vector<Element> coefficients;

    ExtensionScope(const CurveModel& model, std::uint32_t m)
        : field(model.base_field().characteristic(),
                model.base_field().extension_degree() * m),
          coefficients(
              model.resolve_coefficients(SubfieldEmbedding(model.base_field(), field))) {}
};

void check_budget(const CurveModel& model, std::uint32_t m, std::uint64_t budget) {
    const std::uint64_t q = model.base_field().size();
    const std::uint64_t qm = checked_pow(q, m, budget);
    const std::uint64_t work =
        model.kind() == CurveModel::Kind::plane ? checked_pow(qm, 2, budget) : qm;
    if (work > budget)
        throw BudgetExceeded("enumeration over F_" + std::to_string(q) + "^" +
                             std::to_string(m) + " exceeds the budget of " +
                             std::to_string(budget) + " evaluations");
}

// --- optimized kernels (OpenMP over disjoint x-ranges) ---------------------

std::uint64_t count_plane_fast(const ExtensionScope& scope,
                               const std::vector<PlaneTerm>& terms, int jobs) {
    const FiniteField& F = scope.field;
    const std::int64_t q = F.size();
    std::uint32_t degree_y = 0;
    for (const auto& t : terms) degree_y = std::max(degree_y, t.exponents[1]);

    std::uint64_t affine = 0;
    // Chart z = 1: for each x reduce F(x, y, 1) to a univariate polynomial in
    // y, then run Horner over all y. Each x-line is independent.
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : affine) schedule(static) \
    num_threads(jobs > 0 ? jobs : omp_get_max_threads())
#endif
    for (std::int64_t xi = 0; xi < q; ++xi) {
        const auto x = static_cast<Element>(xi);
        std::vector<Element> poly_y(degree_y + 1, 0);
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const Element value = F.mul(scope.coefficients[t], F.pow(x, terms[t].exponents[0]));
            poly_y[terms[t].exponents[1]] = F.add(poly_y[terms[t].exponents[1]], value);
        }
        std::uint64_t line = 0;
        for (std::int64_t yi = 0; yi < q; ++yi)
            if (F.eval_poly(poly_y, static_cast<Element>(yi)) == 0) ++line;
        affine += line;
    }

    // Line at infinity z = 0: points (x : 1 : 0), then (1 : 0 : 0).
    std::uint64_t infinity = 0;
    for (std::int64_t xi = 0; xi < q; ++xi) {
        Element acc = 0;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            if (terms[t].exponents[2] != 0) continue;
            acc = F.add(acc, F.mul(scope.coefficients[t],
                                   F.pow(static_cast<Element>(xi), terms[t].exponents[0])));
        }
        if (acc == 0) ++infinity;
    }
    {
        Element acc = 0;
        for (std::size_t t = 0; t < terms.size(); ++t)
            if (terms[t].exponents[1] == 0 && terms[t].exponents[2] == 0)
                acc = F.add(acc, scope.coefficients[t]);
        if (acc == 0) ++infinity;
    }
    return affine + infinity;
}

std::uint64_t count_hyperelliptic_fast(const ExtensionScope& scope, int jobs) {
    const FiniteField& F = scope.field;
    const std::int64_t q = F.size();
    std::uint64_t affine = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : affine) schedule(static) \
    num_threads(jobs > 0 ? jobs : omp_get_max_threads())
#endif
    for (std::int64_t xi = 0; xi < q; ++xi) {
        const Element value = F.eval_poly(scope.coefficients, static_cast<Element>(xi));
        if (value == 0)
            affine += 1;
        else if (F.is_square(value))
            affine += 2;
    }
    return affine + 1;  // one point at infinity (deg f odd)
}

// --- naive serial reference -------------------------------------------------

Element eval_plane_naive(const FiniteField& F, const std::vector<PlaneTerm>& terms,
                         const std::vector<Element>& coefficients, Element x, Element y,
                         Element z) {
    Element acc = 0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        Element term = coefficients[t];
        for (std::uint32_t i = 0; i < terms[t].exponents[0]; ++i) term = F.mul(term, x);
        for (std::uint32_t i = 0; i < terms[t].exponents[1]; ++i) term = F.mul(term, y);
        for (std::uint32_t i = 0; i < terms[t].exponents[2]; ++i) term = F.mul(term, z);
        acc = F.add(acc, term);
    }
    return acc;
}

std::uint64_t count_plane_reference(const ExtensionScope& scope,
                                    const std::vector<PlaneTerm>& terms) {
    const FiniteField& F = scope.field;
    const std::uint32_t q = F.size();
    std::uint64_t count = 0;
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y)
            if (eval_plane_naive(F, terms, scope.coefficients, x, y, 1) == 0) ++count;
    for (Element x = 0; x < q; ++x)
        if (eval_plane_naive(F, terms, scope.coefficients, x, 1, 0) == 0) ++count;
    if (eval_plane_naive(F, terms, scope.coefficients, 1, 0, 0) == 0) ++count;
    return count;
}

std::uint64_t count_hyperelliptic_reference(const ExtensionScope& scope) {
    const FiniteField& F = scope.field;
    const std::uint32_t q = F.size();
    std::uint64_t count = 1;  // infinity
    for (Element x = 0; x < q; ++x) {
        Element value = 0;
        for (std::size_t i = scope.coefficients.size(); i-- > 0;) {
            Element monomial = scope.coefficients[i];
            for (std::size_t k = 0; k < i; ++k) monomial = F.mul(monomial, x);
            value = F.add(value, monomial);
        }
        // Count square roots by exhaustive search rather than residue tests.
        for (Element y = 0; y < q; ++y)
            if (F.mul(y, y) == value) ++count;
    }
    return count;
}

}  // namespace

std::uint64_t count_points(const CurveModel& model, std::uint32_t m,
                           const CountOptions& options) {
    if (m == 0) throw std::invalid_argument("extension index m must be >= 1");
    check_budget(model, m, options.budget);
    const ExtensionScope scope(model, m);
    return model.kind() == CurveModel::Kind::plane
               ? count_plane_fast(scope, model.plane_terms(), options.jobs)
               : count_hyperelliptic_fast(scope, options.jobs);
}

std::uint64_t count_points_reference(const CurveModel& model, std::uint32_t m,
                                     std::uint64_t budget) {
    if (m == 0) throw std::invalid_argument("extension index m must be >= 1");
    check_budget(model, m, budget);
    const ExtensionScope scope(model, m);
    return model.kind() == CurveModel::Kind::plane
               ? count_plane_reference(scope, model.plane_terms())
               : count_hyperelliptic_reference(scope);
}

std::vector<Integer> closed_point_counts(std::span<const Integer> point_counts) {
    const std::size_t bound = point_counts.size();
    // Moebius function on 1..bound.
    std::vector<int> mu(bound + 1, 1);
    std::vector<bool> composite(bound + 1, false);
    for (std::size_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        for (std::size_t j = i; j <= bound; j += i) {
            if (j > i) composite[j] = true;
            mu[j] *= (j / i) % i == 0 ? 0 : -1;
        }
    }

    std::vector<Integer> out(bound);
    for (std::size_t d = 1; d <= bound; ++d) {
        Integer sum = 0;
        for (std::size_t e = 1; e <= d; ++e)
            if (d % e == 0 && mu[d / e] != 0) sum += mu[d / e] * point_counts[e - 1];
        if (sum % static_cast<long>(d) != 0)
            throw InconsistentCounts("point counts do not come from a scheme: N-sum " +
                                     sum.str() + " is not divisible by " + std::to_string(d));
        Integer a = sum / static_cast<long>(d);
        if (a < 0)
            throw InconsistentCounts("negative closed-point count " + a.str() + " at degree " +
                                     std::to_string(d));
        out[d - 1] = std::move(a);
    }
    return out;
}

namespace {

Integer multichoose(const Integer& bins, std::size_t picks) {
    // C(bins - 1 + picks, picks)
    Integer numerator = 1, denominator = 1;
    for (std::size_t i = 1; i <= picks; ++i) {
        numerator *= bins - 1 + static_cast<long>(i);
        denominator *= static_cast<long>(i);
    }
    return numerator / denominator;
}

}  // namespace

std::vector<Integer> effective_divisor_series(std::span<const Integer> closed_points,
                                              std::size_t max_degree) {
    if (max_degree > closed_points.size())
        throw std::invalid_argument("divisor degree " + std::to_string(max_degree) +
                                    " exceeds the " + std::to_string(closed_points.size()) +
                                    " supplied closed-point counts");
    std::vector<Integer> b(max_degree + 1);
    b[0] = 1;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        const Integer& a_d = closed_points[d - 1];
        if (a_d == 0) continue;
        // Convolve with (1 - t^d)^{-a_d} = sum_k C(a_d-1+k, k) t^{dk}.
        std::vector<Integer> next(max_degree + 1);
        for (std::size_t j = 0; j <= max_degree; ++j) {
            if (b[j] == 0) continue;
            for (std::size_t k = 0; j + d * k <= max_degree; ++k)
                next[j + d * k] += b[j] * multichoose(a_d, k);
        }
        b = std::move(next);
    }
    return b;
}

Integer effective_divisor_count(std::span<const Integer> closed_points, std::size_t degree) {
    return effective_divisor_series(closed_points, degree)[degree];
}

ZetaProfile weil_zeta_from_counts(std::span<const Integer> point_counts, std::uint32_t q,
                                  std::uint32_t genus) {
    if (point_counts.size() < 2 * static_cast<std::size_t>(genus))
        throw std::invalid_argument("need at least 2g = " + std::to_string(2 * genus) +
                                    " point counts, got " +
                                    std::to_string(point_counts.size()));

    // Weil bound on N_1, checked exactly via squaring: (N_1 - q - 1)^2 <= 4 g^2 q.
    if (!point_counts.empty()) {
        const Integer deviation = point_counts[0] - q - 1;
        if (deviation * deviation > Integer(4) * genus * genus * q)
            throw WeilBoundViolated("N_1 = " + point_counts[0].str() + " violates |N_1 - " +
                                    std::to_string(q + 1) + "| <= 2g*sqrt(q) for g = " +
                                    std::to_string(genus) + ", q = " + std::to_string(q));
    }

    // zeta = exp(sum N_m t^m / m): j*E_j = sum_{m=1..j} N_m E_{j-m}.
    const std::size_t top = 2 * static_cast<std::size_t>(genus);
    std::vector<Rational> zeta(top + 1);
    zeta[0] = 1;
    for (std::size_t j = 1; j <= top; ++j) {
        Rational sum = 0;
        for (std::size_t m = 1; m <= j; ++m) sum += Rational(point_counts[m - 1]) * zeta[j - m];
        zeta[j] = sum / static_cast<long>(j);
    }

    // P = zeta * (1-t)(1-qt) = zeta * (1 - (q+1)t + qt^2).
    ZetaProfile profile{q, genus, std::vector<Integer>(top + 1)};
    for (std::size_t j = 0; j <= top; ++j) {
        Rational value = zeta[j];
        if (j >= 1) value -= Rational(q + 1) * zeta[j - 1];
        if (j >= 2) value += Rational(q) * zeta[j - 2];
        if (denominator(value) != 1)
            throw NotIntegral("L-polynomial coefficient " + std::to_string(j) +
                              " is not an integer: " + value.str());
        profile.lpoly[j] = numerator(value);
    }

    for (std::size_t i = 0; i <= genus; ++i) {
        Integer expected = profile.lpoly[i];
        for (std::size_t k = 0; k < genus - i; ++k) expected *= q;
        if (profile.lpoly[top - i] != expected)
            throw FunctionalEquationViolated(
                "p_" + std::to_string(top - i) + " = " + profile.lpoly[top - i].str() +
                " != q^" + std::to_string(genus - i) + " * p_" + std::to_string(i) + " = " +
                expected.str() + " (wrong genus declaration or singular model?)");
    }
    return profile;
}

Integer pic0_order(const ZetaProfile& profile) {
    Integer h = 0;
    for (const auto& c : profile.lpoly) h += c;
    return h;
}

std::vector<Integer> weil_divisor_series(const ZetaProfile& profile, std::size_t precision) {
    std::vector<Integer> out(precision);
    for (std::size_t i = 0; i < precision && i < profile.lpoly.size(); ++i)
        out[i] = profile.lpoly[i];
    // divide by (1-t): prefix sums; then by (1-qt).
    for (std::size_t i = 1; i < precision; ++i) out[i] += out[i - 1];
    for (std::size_t i = 1; i < precision; ++i) out[i] += profile.q * out[i - 1];
    return out;
}

SpecializationReport verify_specialization(const RationalForm& form,
                                           const IntegerAssignment& assignment,
                                           std::uint32_t q, const ZetaProfile& profile,
                                           std::size_t precision) {
    const TruncatedSeries symbolic = expand(form, precision);
    const std::vector<Integer> weil = weil_divisor_series(profile, precision);

    SpecializationReport report;
    report.checked = precision;
    for (std::size_t i = 0; i < precision; ++i) {
        const Integer lhs = symbolic.coeff(i).count_specialize(q, assignment);
        if (lhs != weil[i]) {
            report.agree = false;
            report.first_mismatch = i;
            report.symbolic_value = lhs;
            report.weil_value = weil[i];
            return report;
        }
    }
    report.agree = true;
    return report;
}

}  // namespace mzeta
