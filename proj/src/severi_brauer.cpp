#include "mzeta/severi_brauer.hpp"

#include <cstdint>
#include <map>
#include <string>

#include "mzeta/errors.hpp"

namespace mzeta {

namespace {

void check_index(std::uint32_t index, std::uint32_t rank) {
    if (index == 0 || rank == 0 || rank < index || rank % index != 0)
        throw IndexMismatch("index r=" + std::to_string(index) +
                            " must divide the rank d=" + std::to_string(rank) +
                            " with d >= r >= 1");
}

// Splits an element by the exponent of L: L^k * (L-free part).
std::map<std::uint32_t, RingElement> group_by_lefschetz(const RingElement& e) {
    std::map<std::uint32_t, RingElement> groups;
    for (const auto& [monomial, coefficient] : e.terms()) {
        const std::uint32_t k = monomial.exponent_of(kLefschetzSymbol);
        Monomial rest;
        for (const auto& [name, exp] : monomial.factors())
            if (name != kLefschetzSymbol) rest = rest * Monomial::symbol(name, exp);
        groups[k] += RingElement::term(std::move(rest), coefficient);
    }
    return groups;
}

}  // namespace

RingElement sb_ladder(std::uint32_t index, std::uint32_t rank) {
    check_index(index, rank);
    return lefschetz_geometric_sum(index, rank / index);
}

RingElement sb_isotypic_class(const SBClassData& data) {
    return data.reduced * sb_ladder(data.index, data.rank);
}

RingElement sb_reduced_class(const RingElement& full, std::uint32_t index, std::uint32_t rank) {
    const RingElement ladder = sb_ladder(index, rank);
    const std::uint32_t ladder_degree = rank - index;  // leading term is 1 * L^{d-r}

    RingElement remainder = full;
    RingElement quotient;
    while (!remainder.is_zero()) {
        auto groups = group_by_lefschetz(remainder);
        const auto& [lead_degree, lead_coefficient] = *groups.rbegin();
        if (lead_degree < ladder_degree)
            throw NotDivisible("remainder " + remainder.str() + " has L-degree " +
                               std::to_string(lead_degree) + " below the ladder degree " +
                               std::to_string(ladder_degree));
        RingElement step = lead_coefficient;
        if (lead_degree > ladder_degree)
            step *= RingElement::lefschetz(lead_degree - ladder_degree);
        quotient += step;
        remainder -= step * ladder;
    }
    return quotient;
}

FiltrationClass sb_filtration_class(const RingElement& c1, std::uint32_t r1,
                                    const RingElement& c3, std::uint32_t r3) {
    const auto twist = [](const RingElement& c, std::uint32_t r) {
        return r == 0 ? c : RingElement::lefschetz(r) * c;
    };
    RingElement forward = c1 + twist(c3, r1);
    const RingElement reversed = c3 + twist(c1, r3);
    const bool symmetric = forward == reversed;
    return {std::move(forward), symmetric};
}

}  // namespace mzeta
