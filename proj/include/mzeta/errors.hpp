// Structured errors. Every domain failure carries a stable machine-readable
// name so callers (and the CLI report) can dispatch on it without string
// matching against free-form messages.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzeta {

class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct MissingSymbol : Error {
    explicit MissingSymbol(const std::string& symbol)
        : Error("MissingSymbol", "no value assigned to symbol '" + symbol + "'"),
          symbol(symbol) {}
    std::string symbol;
};

struct NonUnitConstantTerm : Error {
    explicit NonUnitConstantTerm(const std::string& message)
        : Error("NonUnitConstantTerm", message) {}
};

struct NotPolynomialWithinPrecision : Error {
    NotPolynomialWithinPrecision(std::size_t index, const std::string& message)
        : Error("NotPolynomialWithinPrecision", message), first_offending_index(index) {}
    std::size_t first_offending_index;
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& message) : Error("NotDivisible", message) {}
};

struct IndexMismatch : Error {
    explicit IndexMismatch(const std::string& message) : Error("IndexMismatch", message) {}
};

struct InsufficientInitialData : Error {
    explicit InsufficientInitialData(const std::string& message)
        : Error("InsufficientInitialData", message) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& message) : Error("BudgetExceeded", message) {}
};

struct InconsistentCounts : Error {
    explicit InconsistentCounts(const std::string& message)
        : Error("InconsistentCounts", message) {}
};

struct NotIntegral : Error {
    explicit NotIntegral(const std::string& message) : Error("NotIntegral", message) {}
};

struct FunctionalEquationViolated : Error {
    explicit FunctionalEquationViolated(const std::string& message)
        : Error("FunctionalEquationViolated", message) {}
};

struct WeilBoundViolated : Error {
    explicit WeilBoundViolated(const std::string& message)
        : Error("WeilBoundViolated", message) {}
};

// Desk-scale guard rails (genus/degree/precision caps in the constructors).
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& message) : Error("CapExceeded", message) {}
};

struct InvalidCurveModel : Error {
    explicit InvalidCurveModel(const std::string& message)
        : Error("InvalidCurveModel", message) {}
};

struct InvalidSubstitution : Error {
    explicit InvalidSubstitution(const std::string& message)
        : Error("InvalidSubstitution", message) {}
};

// Malformed textual input (ring-element grammar, JSON payload shape).
// The CLI maps this to a usage error, not a domain error.
struct ParseError : Error {
    explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

}  // namespace mzeta
