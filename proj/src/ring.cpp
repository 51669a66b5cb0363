#include "mzeta/ring.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "mzeta/errors.hpp"

namespace mzeta {

Monomial Monomial::symbol(std::string name, std::uint32_t exponent) {
    Monomial m;
    if (name.empty()) throw ParseError("symbol name must be nonempty");
    if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
    return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& [name, e] : factors_) d += e;
    return d;
}

std::uint32_t Monomial::exponent_of(std::string_view name) const noexcept {
    for (const auto& [sym, e] : factors_)
        if (sym == name) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Same total degree: compare the exponent-expanded words. With factors
    // sorted by name, a longer run of the common earlier symbol sorts first.
    auto ia = a.factors().begin(), ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia, ++ib;
    }
    return false;  // equal degree and all factors matched: equal monomials
}

RingElement::RingElement(Integer value) {
    if (value != 0) terms_.emplace(Monomial{}, std::move(value));
}

RingElement RingElement::symbol(std::string name, std::uint32_t exponent) {
    return term(Monomial::symbol(std::move(name), exponent), 1);
}

RingElement RingElement::lefschetz(std::uint32_t exponent) {
    return symbol(std::string(kLefschetzSymbol), exponent);
}

RingElement RingElement::term(Monomial m, Integer coefficient) {
    RingElement e;
    if (coefficient != 0) e.terms_.emplace(std::move(m), std::move(coefficient));
    return e;
}

bool RingElement::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
           terms_.begin()->second == 1;
}

bool RingElement::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Integer RingElement::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<std::string> RingElement::symbols() const {
    std::vector<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m.factors()) out.push_back(name);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void RingElement::insert_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElement& RingElement::operator+=(const RingElement& other) {
    for (const auto& [m, c] : other.terms_) insert_term(m, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    for (const auto& [m, c] : other.terms_) insert_term(m, -c);
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    RingElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.insert_term(ma * mb, ca * cb);
    return out;
}

RingElement& RingElement::operator*=(const RingElement& other) {
    *this = *this * other;
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

RingElement RingElement::pow(std::uint32_t exponent) const {
    RingElement result(1);
    RingElement base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

RingElement RingElement::substitute(const SubstitutionMap& assignment) const {
    if (auto it = assignment.find(std::string(kLefschetzSymbol)); it != assignment.end()) {
        const RingElement& image = it->second;
        if (image.is_constant()) {
            const Integer c = image.constant_term();
            if (c != 1 && c != -1)
                throw InvalidSubstitution(
                    "the Lefschetz symbol may only be collapsed to an integer via the "
                    "counting specialization");
        }
    }
    RingElement out;
    for (const auto& [m, c] : terms_) {
        RingElement product{Integer(c)};
        for (const auto& [name, e] : m.factors()) {
            auto it = assignment.find(name);
            if (it == assignment.end()) {
                product *= RingElement::symbol(name, e);
            } else {
                product *= it->second.pow(e);
            }
        }
        out += product;
    }
    return out;
}

Integer RingElement::count_specialize(const Integer& q,
                                      const IntegerAssignment& assignment) const {
    Integer total = 0;
    for (const auto& [m, c] : terms_) {
        Integer product = c;
        for (const auto& [name, e] : m.factors()) {
            Integer base;
            if (name == kLefschetzSymbol) {
                base = q;
            } else {
                auto it = assignment.find(name);
                if (it == assignment.end()) throw MissingSymbol(name);
                base = it->second;
            }
            for (std::uint32_t i = 0; i < e; ++i) product *= base;
        }
        total += product;
    }
    return total;
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Integer abs_c = negative ? Integer(-c) : c;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = abs_c == 1;
        if (!unit || m.is_constant()) out << abs_c.str();
        bool need_star = !unit;
        for (const auto& [name, e] : m.factors()) {
            if (need_star) out << '*';
            out << name;
            if (e != 1) out << '^' << e;
            need_star = true;
        }
    }
    return out.str();
}

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("ring element: " + what + " at position " + std::to_string(pos) +
                         " in \"" + std::string(text) + "\"");
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Integer(std::string(text.substr(start, pos - start)));
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        auto head = [](char c) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
        };
        auto tail = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        if (pos >= text.size() || !head(text[pos])) fail("expected symbol name");
        ++pos;
        while (pos < text.size() && tail(text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

}  // namespace

RingElement RingElement::parse(std::string_view text) {
    Scanner s{text};
    RingElement out;
    bool first_term = true;
    while (!s.done()) {
        int sign = 1;
        if (s.consume('+')) {
            sign = 1;
        } else if (s.consume('-')) {
            sign = -1;
        } else if (!first_term) {
            s.fail("expected '+' or '-' between terms");
        }
        first_term = false;

        Integer coefficient = 1;
        Monomial monomial;
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
            coefficient = s.integer();
            saw_factor = true;
            if (!s.consume('*')) {
                out.insert_term(monomial, sign * coefficient);
                continue;
            }
            saw_factor = false;
        }
        do {
            std::string name = s.identifier();
            std::uint32_t exponent = 1;
            if (s.consume('^')) {
                Integer e = s.integer();
                if (e < 0 || e > 100000) s.fail("exponent out of range");
                exponent = static_cast<std::uint32_t>(e);
            }
            monomial = monomial * Monomial::symbol(std::move(name), exponent);
            saw_factor = true;
        } while (s.consume('*'));
        if (!saw_factor) s.fail("expected term");
        out.insert_term(monomial, sign * coefficient);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RingElement& e) { return os << e.str(); }

RingElement projective_space_class(std::uint32_t n) {
    return lefschetz_geometric_sum(1, n + 1);
}

RingElement lefschetz_geometric_sum(std::uint32_t step, std::uint32_t count) {
    RingElement out;
    for (std::uint32_t i = 0; i < count; ++i) {
        if (i == 0 || step == 0) {
            out += RingElement(1);
        } else {
            out += RingElement::lefschetz(step * i);
        }
    }
    return out;
}

}  // namespace mzeta
