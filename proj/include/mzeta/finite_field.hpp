// Exact arithmetic in small finite fields F_{p^e}, q <= 2048. Elements are
// integer indices in [0, q) whose base-p digits are the coefficients of the
// residue polynomial (low to high). For e >= 2 the modulus is the monic
// irreducible polynomial of degree e whose coefficient tuple, read as a
// base-p integer, is smallest; this pins the representation without tables.
// Multiplication runs on discrete-log tables over a fixed generator.
#pragma once

#include <cstdint>
#include <vector>

namespace mzeta {

class FiniteField {
public:
    using Element = std::uint32_t;

    static constexpr std::uint32_t kMaxCardinality = 2048;

    FiniteField(std::uint32_t p, std::uint32_t e);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t extension_degree() const noexcept { return e_; }
    std::uint32_t size() const noexcept { return q_; }
    // Monic irreducible modulus coefficients c_0..c_e (c_e = 1); empty for e == 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    Element generator() const noexcept { return generator_; }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element neg(Element a) const;
    Element mul(Element a, Element b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t k) const;

    // Embeds an integer via the prime subfield (value mod p).
    Element from_int(std::int64_t value) const;
    // i-th base-p digit of the element index, i.e. the x^i coefficient.
    std::uint32_t digit(Element a, std::uint32_t i) const;

    bool is_square(Element a) const;

    // Horner evaluation of a polynomial with Element coefficients (low to high).
    Element eval_poly(const std::vector<Element>& coeffs, Element x) const;

private:
    Element raw_mul(Element a, Element b) const;  // table-free, used during setup

    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Element generator_ = 0;
    std::vector<Element> exp_;          // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;    // inverse of exp_ on [1, q)
    std::vector<Element> add_table_;    // q*q, only for e >= 2 with p != 2
};

// Canonical embedding F_{p^e} -> F_{p^(e*m)}: the base generator x maps to the
// smallest-index root of the base modulus in the extension.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(const FiniteField& base, const FiniteField& extension);
    FiniteField::Element map(FiniteField::Element a) const { return image_[a]; }

private:
    std::vector<FiniteField::Element> image_;
};

bool is_prime(std::uint32_t n);

}  // namespace mzeta
