// Motivic class calculus for Severi-Brauer schemes: the two-sided filtration
// identity, the isotypic ladder P * (1 + L^r + ... + L^{d-r}), and exact
// recovery of the reduced class by polynomial division in the L-grading.
// The Brauer class and twisted sheaves themselves are not modeled; the module
// consumes the numeric shadow (reduced class P, index r, rank d) as given.
#pragma once

#include <cstdint>

#include "mzeta/ring.hpp"

namespace mzeta {

struct SBClassData {
    RingElement reduced;     // the class P common to all fibers of the same Brauer class
    std::uint32_t index = 1; // r: gcd of twisted-bundle ranks
    std::uint32_t rank = 1;  // d: rank of the twisted bundle (fiber dimension d-1)
};

// 1 + L^r + L^{2r} + ... + L^{d-r}; IndexMismatch unless r | d, d >= r >= 1.
RingElement sb_ladder(std::uint32_t index, std::uint32_t rank);

// [P(E)] = P * ladder(r, d).
RingElement sb_isotypic_class(const SBClassData& data);

// Inverse direction: the unique P with full = P * ladder(r, d), recovered by
// leading-term elimination in the L-grading (all other symbols are treated as
// coefficients). Throws NotDivisible when no exact quotient exists.
RingElement sb_reduced_class(const RingElement& full, std::uint32_t index, std::uint32_t rank);

struct FiltrationClass {
    RingElement cls;  // c1 + L^{r1} * c3
    // Whether c1 + L^{r1} c3 == c3 + L^{r3} c1. Holds for classes of genuine
    // bundle filtrations but not for arbitrary symbolic inputs, so it is
    // reported rather than asserted.
    bool symmetric = false;
};

FiltrationClass sb_filtration_class(const RingElement& c1, std::uint32_t r1,
                                    const RingElement& c3, std::uint32_t r3);

}  // namespace mzeta
