#include "mzeta/finite_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mzeta/errors.hpp"

namespace mzeta {

namespace {

// Dense coefficient vectors over Z/p (low to high), used only while the
// field tables are being built.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& m, std::uint32_t p) {
    trim(f);
    while (f.size() >= m.size()) {
        const std::uint32_t lead = f.back();  // m is monic
        const std::size_t shift = f.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t v = f[shift + i] + static_cast<std::uint64_t>(p) * lead;
            f[shift + i] = static_cast<std::uint32_t>((v - static_cast<std::uint64_t>(lead) * m[i]) % p);
        }
        trim(f);
    }
    return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(out), m, p);
}

bool poly_divides(const Poly& divisor, Poly f, std::uint32_t p) {
    // divisor monic
    while (f.size() >= divisor.size()) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - divisor.size();
        for (std::size_t i = 0; i < divisor.size(); ++i) {
            std::uint64_t v = f[shift + i] + static_cast<std::uint64_t>(p) * lead;
            f[shift + i] = static_cast<std::uint32_t>(
                (v - static_cast<std::uint64_t>(lead) * divisor[i]) % p);
        }
        trim(f);
    }
    return f.empty();
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t degree = f.size() - 1;
    // Trial division by every monic polynomial of degree 1..degree/2.
    for (std::size_t d = 1; 2 * d <= degree; ++d) {
        std::uint64_t combinations = 1;
        for (std::size_t i = 0; i < d; ++i) combinations *= p;
        for (std::uint64_t v = 0; v < combinations; ++v) {
            Poly divisor(d + 1, 0);
            std::uint64_t rest = v;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            divisor[d] = 1;
            if (poly_divides(divisor, f, p)) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " +
                                                  std::to_string(p));
    if (e == 0) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxCardinality)
            throw BudgetExceeded("field size " + std::to_string(p) + "^" + std::to_string(e) +
                                 " exceeds the cap " + std::to_string(kMaxCardinality));
    }
    q_ = static_cast<std::uint32_t>(q);

    if (e_ >= 2) {
        // Smallest monic irreducible of degree e, scanning the low-to-high
        // coefficient tuple as a base-p integer.
        for (std::uint32_t v = 0;; ++v) {
            if (v >= q_) throw std::logic_error("no irreducible modulus found");
            Poly candidate(e_ + 1, 0);
            std::uint32_t rest = v;
            for (std::uint32_t i = 0; i < e_; ++i) {
                candidate[i] = rest % p_;
                rest /= p_;
            }
            candidate[e_] = 1;
            if (is_irreducible(candidate, p_)) {
                modulus_ = candidate;
                break;
            }
        }
    }

    // Discrete-log tables over a generator of the unit group.
    const auto factors = prime_factors(q_ - 1);
    const auto order_pow = [&](Element a, std::uint32_t k) {
        Element result = 1;
        Element base = a;
        while (k > 0) {
            if (k & 1u) result = raw_mul(result, base);
            base = raw_mul(base, base);
            k >>= 1u;
        }
        return result;
    };
    for (Element candidate = 1; candidate < q_; ++candidate) {
        bool generates = true;
        for (auto f : factors)
            if (order_pow(candidate, (q_ - 1) / f) == 1) {
                generates = false;
                break;
            }
        if (generates) {
            generator_ = candidate;
            break;
        }
    }

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Element value = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = value;
        log_[value] = i;
        value = raw_mul(value, generator_);
    }

    if (e_ >= 2 && p_ != 2) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Element a = 0; a < q_; ++a)
            for (Element b = 0; b < q_; ++b) {
                std::uint32_t sum = 0, scale = 1, xa = a, xb = b;
                for (std::uint32_t i = 0; i < e_; ++i) {
                    sum += ((xa % p_) + (xb % p_)) % p_ * scale;
                    scale *= p_;
                    xa /= p_;
                    xb /= p_;
                }
                add_table_[static_cast<std::size_t>(a) * q_ + b] = sum;
            }
    }
}

FiniteField::Element FiniteField::raw_mul(Element a, Element b) const {
    if (e_ == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
    Poly fa(e_), fb(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        fa[i] = a % p_;
        a /= p_;
        fb[i] = b % p_;
        b /= p_;
    }
    trim(fa);
    trim(fb);
    Poly product = poly_mul_mod(fa, fb, modulus_, p_);
    Element out = 0;
    for (std::size_t i = product.size(); i-- > 0;) out = out * p_ + product[i];
    return out;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
    if (e_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    return add_table_[static_cast<std::size_t>(a) * q_ + b];
}

FiniteField::Element FiniteField::neg(Element a) const {
    if (a == 0) return 0;
    if (p_ == 2) return a;
    if (e_ == 1) return p_ - a;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        const std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        a /= p_;
    }
    return out;
}

FiniteField::Element FiniteField::inv(Element a) const {
    if (a == 0) throw std::domain_error("division by zero in finite field");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    const std::uint64_t r = (static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
    return exp_[r];
}

FiniteField::Element FiniteField::from_int(std::int64_t value) const {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
}

std::uint32_t FiniteField::digit(Element a, std::uint32_t i) const {
    for (std::uint32_t k = 0; k < i; ++k) a /= p_;
    return a % p_;
}

bool FiniteField::is_square(Element a) const {
    if (a == 0) return true;
    if (p_ == 2) return true;  // Frobenius is bijective in characteristic 2
    return log_[a] % 2 == 0;
}

FiniteField::Element FiniteField::eval_poly(const std::vector<Element>& coeffs,
                                            Element x) const {
    Element acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, x), coeffs[i]);
    return acc;
}

SubfieldEmbedding::SubfieldEmbedding(const FiniteField& base, const FiniteField& extension) {
    if (base.characteristic() != extension.characteristic() ||
        extension.extension_degree() % base.extension_degree() != 0)
        throw std::invalid_argument("no subfield embedding between these fields");

    image_.resize(base.size());
    if (base.extension_degree() == 1) {
        for (FiniteField::Element a = 0; a < base.size(); ++a)
            image_[a] = extension.from_int(a);
        return;
    }

    // Smallest-index root of the base modulus in the extension.
    std::vector<FiniteField::Element> modulus_coeffs;
    modulus_coeffs.reserve(base.modulus().size());
    for (auto c : base.modulus()) modulus_coeffs.push_back(extension.from_int(c));
    FiniteField::Element root = 0;
    bool found = false;
    for (FiniteField::Element z = 0; z < extension.size(); ++z)
        if (extension.eval_poly(modulus_coeffs, z) == 0) {
            root = z;
            found = true;
            break;
        }
    if (!found) throw std::logic_error("base modulus has no root in the extension");

    for (FiniteField::Element a = 0; a < base.size(); ++a) {
        FiniteField::Element acc = 0;
        for (std::uint32_t i = base.extension_degree(); i-- > 0;)
            acc = extension.add(extension.mul(acc, root),
                                extension.from_int(base.digit(a, i)));
        image_[a] = acc;
    }
}

}  // namespace mzeta
