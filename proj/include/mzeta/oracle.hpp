// Brute-force ground truth over small finite fields: exhaustive point counts
// on curve models, closed-point counts by Moebius inversion, effective-divisor
// counts by two independent routes, Weil L-polynomial extraction, and
// verification of the counting specialization of symbolic zeta functions.
//
// count_points is the one data-parallel kernel in the project: enumeration is
// partitioned across disjoint coordinate ranges and summed (OpenMP). The
// naive serial route count_points_reference is kept as the correctness
// reference for the parallel kernel and for benchmarking against it.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mzeta/curve.hpp"
#include "mzeta/ring.hpp"
#include "mzeta/series.hpp"

namespace mzeta {

// Default enumeration budget: plane models enumerate ~q^{2m} pairs.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct CountOptions {
    std::uint64_t budget = kDefaultEnumerationBudget;
    int jobs = 0;  // OpenMP thread count; 0 = runtime default
};

// Number of F_{q^m}-points of the model, by exhaustive enumeration of
// projective representatives (plane) or of x-lines (hyperelliptic).
// Throws BudgetExceeded when the enumeration or the extension field would
// outgrow the budget/cap.
std::uint64_t count_points(const CurveModel& model, std::uint32_t m,
                           const CountOptions& options = {});

// Single-threaded term-by-term evaluation over the same representatives; no
// per-line caching, quadratic-residue tests by exhaustive square search.
std::uint64_t count_points_reference(const CurveModel& model, std::uint32_t m,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

// Moebius inversion of N_m = sum_{d | m} d * a_d. Input N_1..N_B, output
// a_1..a_B. Throws InconsistentCounts when a_d is fractional or negative.
std::vector<Integer> closed_point_counts(std::span<const Integer> point_counts);

// b_0..b_max: coefficients of prod_d (1 - t^d)^{-a_d}, i.e. the number of
// effective divisors of each degree. Input a_1..a_B; requires max <= B.
std::vector<Integer> effective_divisor_series(std::span<const Integer> closed_points,
                                              std::size_t max_degree);
Integer effective_divisor_count(std::span<const Integer> closed_points, std::size_t degree);

// (q, g, L-polynomial) extracted from point counts.
struct ZetaProfile {
    std::uint32_t q = 2;
    std::uint32_t genus = 0;
    std::vector<Integer> lpoly;  // p_0..p_{2g}
};

// exp(sum N_m t^m / m) * (1-t)(1-qt) from the first 2g counts; validates the
// Weil bound on N_1, integrality, and the functional equation
// p_{2g-i} = q^{g-i} p_i.
ZetaProfile weil_zeta_from_counts(std::span<const Integer> point_counts, std::uint32_t q,
                                  std::uint32_t genus);

// Class number h = P(1), the order of Pic^0 over F_q.
Integer pic0_order(const ZetaProfile& profile);

struct SpecializationReport {
    bool agree = false;
    std::size_t checked = 0;  // number of coefficients compared
    std::optional<std::size_t> first_mismatch;
    Integer symbolic_value;  // at the mismatch index (counting specialization)
    Integer weil_value;      // at the mismatch index (L-polynomial expansion)
};

// Expands the form to the given precision, applies the counting
// specialization coefficientwise, and compares with the expansion of
// P(t)/((1-t)(1-qt)).
SpecializationReport verify_specialization(const RationalForm& form,
                                           const IntegerAssignment& assignment,
                                           std::uint32_t q, const ZetaProfile& profile,
                                           std::size_t precision);

// Integer-coefficient expansion of P(t)/((1-t)(1-qt)) to the given precision:
// the effective-divisor counts b_0, b_1, ... predicted by the profile.
std::vector<Integer> weil_divisor_series(const ZetaProfile& profile, std::size_t precision);

}  // namespace mzeta
