// Exact arithmetic in the commutative ring Z[L, s1, s2, ...]: integer-coefficient
// polynomials in the Lefschetz symbol L and finitely many named class symbols.
// Elements are kept in a canonical form (no zero coefficients, terms ordered by
// total degree then lexicographically), so equality of values is equality of
// representations. Equality is symbolic: the ring is free on its symbols, and
// no geometric relations beyond those built into the constructors are imposed.
//
// All values are immutable after construction and safe to share across threads;
// every operation is a pure function.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mzeta {

using Integer = boost::multiprecision::cpp_int;

// Reserved name of the class of the affine line.
inline constexpr std::string_view kLefschetzSymbol = "L";

// Product of symbol powers, e.g. L^2 * Pic0. Factors are sorted by symbol
// name and exponents are >= 1; the empty monomial is the constant 1.
class Monomial {
public:
    using Factor = std::pair<std::string, std::uint32_t>;

    Monomial() = default;
    static Monomial symbol(std::string name, std::uint32_t exponent = 1);

    bool is_constant() const noexcept { return factors_.empty(); }
    std::uint64_t total_degree() const noexcept;
    std::uint32_t exponent_of(std::string_view name) const noexcept;
    const std::vector<Factor>& factors() const noexcept { return factors_; }

    Monomial operator*(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

private:
    std::vector<Factor> factors_;
};

// Canonical term order: total degree first, then the exponent-expanded word
// (so within one degree L^2 < L*X < X^2 when "L" < "X").
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using SubstitutionMap = std::map<std::string, class RingElement>;
using IntegerAssignment = std::map<std::string, Integer>;

class RingElement {
public:
    using TermMap = std::map<Monomial, Integer, MonomialOrder>;

    RingElement() = default;  // zero
    RingElement(int value) : RingElement(Integer(value)) {}
    RingElement(Integer value);

    static RingElement symbol(std::string name, std::uint32_t exponent = 1);
    static RingElement lefschetz(std::uint32_t exponent = 1);
    static RingElement term(Monomial m, Integer coefficient);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // Coefficient of the empty monomial (0 if absent).
    Integer constant_term() const;
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    // Sorted names of the symbols occurring in this element.
    std::vector<std::string> symbols() const;

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const RingElement& other);
    RingElement operator-() const;
    RingElement pow(std::uint32_t exponent) const;

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);

    bool operator==(const RingElement& other) const = default;

    // Evaluation homomorphism: each listed symbol is replaced by its image,
    // unlisted symbols are left fixed. Substituting "L" by a constant other
    // than 1 or -1 is rejected; the counting specialization is the only way
    // to collapse the Lefschetz grading.
    RingElement substitute(const SubstitutionMap& assignment) const;

    // Counting specialization #: L maps to the field size q, every other
    // symbol must have an integer value in the assignment. Throws
    // MissingSymbol otherwise.
    Integer count_specialize(const Integer& q, const IntegerAssignment& assignment) const;

    // Canonical text form, e.g. "1 + 2*L - L^2*Pic0". Parsing accepts signs,
    // arbitrary whitespace, repeated and unsorted factors; formatting always
    // emits the canonical form, so parse(str(x)) == x.
    std::string str() const;
    static RingElement parse(std::string_view text);

private:
    void insert_term(const Monomial& m, const Integer& c);
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& e);

// [P^n] = 1 + L + ... + L^n.
RingElement projective_space_class(std::uint32_t n);

// 1 + L^step + L^(2*step) + ... + L^(step*(count-1)); count = 0 gives 0.
RingElement lefschetz_geometric_sum(std::uint32_t step, std::uint32_t count);

}  // namespace mzeta
