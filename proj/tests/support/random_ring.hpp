// Deterministic random ring elements for property tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "mzeta/ring.hpp"

namespace testkit {

inline mzeta::RingElement random_element(std::mt19937_64& rng,
                                         const std::vector<std::string>& symbols,
                                         int max_terms = 5, int max_exponent = 3,
                                         int max_coefficient = 9) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exponent(0, max_exponent);
    std::uniform_int_distribution<int> coefficient(-max_coefficient, max_coefficient);

    mzeta::RingElement out;
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        mzeta::RingElement term(coefficient(rng));
        for (const auto& name : symbols) {
            const int e = exponent(rng);
            if (e > 0) term *= mzeta::RingElement::symbol(name, static_cast<std::uint32_t>(e));
        }
        out += term;
    }
    return out;
}

}  // namespace testkit
