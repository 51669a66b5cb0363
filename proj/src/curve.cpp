#include "mzeta/curve.hpp"

#include <cstdlib>
#include <string>

#include "mzeta/errors.hpp"

namespace mzeta {

namespace {

FiniteField make_base(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p))
        throw InvalidCurveModel("field characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw InvalidCurveModel("extension degree must be >= 1");
    return FiniteField(p, e);
}

FiniteField::Element resolve_in_base(const FiniteField& base, std::int64_t value) {
    if (base.extension_degree() == 1) return base.from_int(value);
    const std::uint64_t magnitude = static_cast<std::uint64_t>(value < 0 ? -value : value);
    if (magnitude >= base.size())
        throw InvalidCurveModel("coefficient " + std::to_string(value) +
                                " is not an element index of F_" + std::to_string(base.size()));
    const auto element = static_cast<FiniteField::Element>(magnitude);
    return value < 0 ? base.neg(element) : element;
}

}  // namespace

CurveModel CurveModel::plane(std::uint32_t p, std::uint32_t e, std::vector<PlaneTerm> terms) {
    CurveModel model(Kind::plane, make_base(p, e));
    // Drop terms that vanish in the field, then check homogeneity on the rest.
    std::vector<PlaneTerm> kept;
    for (const auto& term : terms)
        if (resolve_in_base(model.base_, term.coefficient) != 0) kept.push_back(term);
    if (kept.empty()) throw InvalidCurveModel("plane model is identically zero");
    std::uint32_t degree = kept.front().exponents[0] + kept.front().exponents[1] +
                           kept.front().exponents[2];
    for (const auto& term : kept) {
        const std::uint32_t d = term.exponents[0] + term.exponents[1] + term.exponents[2];
        if (d != degree)
            throw InvalidCurveModel("plane model is not homogeneous: degrees " +
                                    std::to_string(degree) + " and " + std::to_string(d));
    }
    if (degree == 0) throw InvalidCurveModel("plane model must have positive degree");
    model.degree_ = degree;
    model.genus_ = (degree - 1) * (degree - 2) / 2;
    model.plane_terms_ = std::move(kept);
    return model;
}

CurveModel CurveModel::hyperelliptic(std::uint32_t p, std::uint32_t e,
                                     std::vector<std::int64_t> f_coefficients) {
    if (p == 2)
        throw InvalidCurveModel("hyperelliptic models require odd characteristic; "
                                "y^2 = f(x) is the wrong normal form over F_2^e");
    CurveModel model(Kind::hyperelliptic, make_base(p, e));
    const FiniteField& field = model.base_;

    std::vector<FiniteField::Element> f;
    f.reserve(f_coefficients.size());
    for (auto c : f_coefficients) f.push_back(resolve_in_base(field, c));
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
        f_coefficients.pop_back();
    }
    if (f.size() < 2 || f.size() % 2 != 0)
        throw InvalidCurveModel("f must have odd degree 2g+1 >= 1, got degree " +
                                std::to_string(static_cast<int>(f.size()) - 1));

    // Squarefree check: gcd(f, f') must be constant.
    std::vector<FiniteField::Element> derivative(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        derivative[i - 1] = field.mul(f[i], field.from_int(static_cast<std::int64_t>(i)));
    auto trim = [](std::vector<FiniteField::Element>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    std::vector<FiniteField::Element> a = f, b = derivative;
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size()) {
            const auto factor = field.mul(a.back(), field.inv(b.back()));
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = field.sub(a[shift + i], field.mul(factor, b[i]));
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (a.size() > 1)
        throw InvalidCurveModel("f is not squarefree (gcd(f, f') has degree " +
                                std::to_string(a.size() - 1) + ")");

    model.degree_ = static_cast<std::uint32_t>(f.size() - 1);
    model.genus_ = (model.degree_ - 1) / 2;
    model.f_coefficients_ = std::move(f_coefficients);
    return model;
}

std::vector<FiniteField::Element> CurveModel::resolve_coefficients(
    const SubfieldEmbedding& embedding) const {
    std::vector<FiniteField::Element> out;
    if (kind_ == Kind::plane) {
        out.reserve(plane_terms_.size());
        for (const auto& term : plane_terms_)
            out.push_back(embedding.map(resolve_in_base(base_, term.coefficient)));
    } else {
        out.reserve(f_coefficients_.size());
        for (auto c : f_coefficients_)
            out.push_back(embedding.map(resolve_in_base(base_, c)));
    }
    return out;
}

}  // namespace mzeta
