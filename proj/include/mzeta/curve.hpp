// Curve models over small finite fields as exact coefficient data: smooth
// plane projective curves F(x,y,z) = 0 and odd-degree hyperelliptic curves
// y^2 = f(x). Smoothness of plane models is the caller's responsibility;
// most violations surface downstream as FunctionalEquationViolated.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mzeta/finite_field.hpp"

namespace mzeta {

struct PlaneTerm {
    std::int64_t coefficient = 0;
    std::array<std::uint32_t, 3> exponents{};  // powers of x, y, z
};

class CurveModel {
public:
    enum class Kind { plane, hyperelliptic };

    // Homogeneous F(x,y,z) over F_{p^e}. Coefficients: arbitrary integers mod p
    // when e == 1; for e >= 2 a value v with |v| < q names the field element
    // of index |v| (negated when v < 0).
    static CurveModel plane(std::uint32_t p, std::uint32_t e, std::vector<PlaneTerm> terms);

    // y^2 = f(x) with f squarefree of odd degree 2g+1; requires p != 2.
    // Coefficients of f low to high, same convention as above.
    static CurveModel hyperelliptic(std::uint32_t p, std::uint32_t e,
                                    std::vector<std::int64_t> f_coefficients);

    Kind kind() const noexcept { return kind_; }
    const FiniteField& base_field() const noexcept { return base_; }
    std::uint32_t degree() const noexcept { return degree_; }  // deg F or deg f
    std::uint32_t genus() const noexcept { return genus_; }
    const std::vector<PlaneTerm>& plane_terms() const noexcept { return plane_terms_; }
    const std::vector<std::int64_t>& f_coefficients() const noexcept { return f_coefficients_; }

    // Coefficients resolved to elements of an extension field, reached
    // through the embedding of the base field.
    std::vector<FiniteField::Element> resolve_coefficients(
        const SubfieldEmbedding& embedding) const;

private:
    CurveModel(Kind kind, FiniteField base) : kind_(kind), base_(std::move(base)) {}

    Kind kind_;
    FiniteField base_;
    std::uint32_t degree_ = 0;
    std::uint32_t genus_ = 0;
    std::vector<PlaneTerm> plane_terms_;
    std::vector<std::int64_t> f_coefficients_;
};

}  // namespace mzeta
