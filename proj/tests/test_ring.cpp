#include "mzeta/ring.hpp"

#include <cstdint>
#include <random>
#include <vector>

#include "mzeta/errors.hpp"
#include "support/check.hpp"
#include "support/random_ring.hpp"

using namespace mzeta;

namespace {

// Independent oracle: number of points of P^n(F_q) by enumerating projective
// representatives (tuples whose first nonzero coordinate is 1).
std::uint64_t count_projective_space_points(unsigned n, unsigned q) {
    std::vector<unsigned> tuple(n + 1, 0);
    std::uint64_t total = 0;
    while (true) {
        unsigned first_nonzero = 0;
        for (unsigned i = 0; i <= n; ++i)
            if (tuple[i] != 0) {
                first_nonzero = tuple[i];
                break;
            }
        if (first_nonzero == 1) ++total;
        // next tuple
        unsigned i = 0;
        while (i <= n && ++tuple[i] == q) tuple[i++] = 0;
        if (i > n) break;
    }
    return total;
}

const RingElement L = RingElement::lefschetz();

}  // namespace

int main() {
    TEST("ring_arithmetic_examples");
    {
        CHECK_EQ((RingElement(1) + L) + L, RingElement::parse("1 + 2*L"));
        CHECK_EQ((RingElement(1) + L) * (RingElement(1) + L),
                 RingElement::parse("1 + 2*L + L^2"));
        // term-map merge oracle: build the expected element term by term
        RingElement expected;
        expected += RingElement(1);
        expected += L;
        CHECK_EQ(RingElement::parse("1 + L + L^2") - RingElement::lefschetz(2), expected);
    }

    TEST("ring_arithmetic_laws");
    {
        std::mt19937_64 rng(20240811);
        const std::vector<std::string> pool{"L", "X", "Y"};
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = testkit::random_element(rng, pool);
            const auto b = testkit::random_element(rng, pool);
            const auto c = testkit::random_element(rng, pool);
            CHECK_EQ(a + b, b + a);
            CHECK_EQ(a * b, b * a);
            CHECK_EQ((a + b) + c, a + (b + c));
            CHECK_EQ((a * b) * c, a * (b * c));
            CHECK_EQ(a * (b + c), a * b + a * c);
            CHECK_EQ(a - a, RingElement());
            CHECK_EQ(a * RingElement(1), a);
            CHECK((a * RingElement()).is_zero());
        }
    }

    TEST("projective_space_class");
    {
        CHECK_EQ(projective_space_class(0), RingElement(1));
        CHECK_EQ(projective_space_class(2), RingElement::parse("1 + L + L^2"));
        // n=3 at q=2 against the enumeration oracle
        CHECK_EQ(projective_space_class(3).count_specialize(2, {}),
                 Integer(count_projective_space_points(3, 2)));
        CHECK_EQ(count_projective_space_points(3, 2), 15u);
    }

    TEST("projective_space_telescope");
    {
        // [P^n] * (L - 1) = L^{n+1} - 1
        for (std::uint32_t n = 0; n <= 20; ++n)
            CHECK_EQ(projective_space_class(n) * (L - RingElement(1)),
                     RingElement::lefschetz(n + 1) - RingElement(1));
    }

    TEST("substitute_examples");
    {
        const auto pic0 = RingElement::symbol("Pic0");
        CHECK_EQ((RingElement(1) + pic0 * L).substitute({{"Pic0", RingElement(4)}}),
                 RingElement::parse("1 + 4*L"));
        const auto e = RingElement::symbol("X") * RingElement::parse("1 + L^2");
        CHECK_EQ(e.substitute({{"X", RingElement::parse("1 + L")}}),
                 RingElement::parse("1 + L + L^2 + L^3"));
        CHECK_EQ(RingElement::lefschetz(2).substitute({}), RingElement::lefschetz(2));
    }

    TEST("substitute_is_homomorphism");
    {
        std::mt19937_64 rng(7);
        const std::vector<std::string> pool{"L", "X", "Y"};
        for (int trial = 0; trial < 30; ++trial) {
            const auto x = testkit::random_element(rng, pool);
            const auto y = testkit::random_element(rng, pool);
            const SubstitutionMap map{{"X", testkit::random_element(rng, pool)},
                                      {"Y", RingElement::parse("1 + L")}};
            CHECK_EQ((x * y).substitute(map), x.substitute(map) * y.substitute(map));
            CHECK_EQ((x + y).substitute(map), x.substitute(map) + y.substitute(map));
            CHECK_EQ(x.substitute({}), x);
        }
    }

    TEST("substitute_guards_lefschetz");
    {
        CHECK_THROWS(InvalidSubstitution,
                     L.substitute({{"L", RingElement(3)}}));
        // units and non-constant images are fine
        CHECK_EQ(L.substitute({{"L", RingElement(1)}}), RingElement(1));
        CHECK_EQ(L.substitute({{"L", RingElement::lefschetz(2)}}), RingElement::lefschetz(2));
    }

    TEST("count_specialize_examples");
    {
        CHECK_EQ(RingElement::parse("1 + L + L^2").count_specialize(2, {}), Integer(7));
        CHECK_EQ(count_projective_space_points(2, 2), 7u);
        CHECK_EQ(L.count_specialize(5, {}), Integer(5));
        CHECK_EQ(RingElement::symbol("Pic0").count_specialize(3, {{"Pic0", Integer(4)}}),
                 Integer(4));
        CHECK_THROWS(MissingSymbol, RingElement::symbol("Pic0").count_specialize(3, {}));
    }

    TEST("count_specialize_is_homomorphism");
    {
        std::mt19937_64 rng(99);
        const std::vector<std::string> pool{"L", "X", "Pic0"};
        const IntegerAssignment assignment{{"X", Integer(-2)}, {"Pic0", Integer(7)}};
        for (int trial = 0; trial < 50; ++trial) {
            const auto x = testkit::random_element(rng, pool);
            const auto y = testkit::random_element(rng, pool);
            for (unsigned q : {2u, 3u, 5u}) {
                CHECK_EQ((x * y).count_specialize(q, assignment),
                         x.count_specialize(q, assignment) * y.count_specialize(q, assignment));
                CHECK_EQ((x + y).count_specialize(q, assignment),
                         x.count_specialize(q, assignment) + y.count_specialize(q, assignment));
            }
        }
    }

    TEST("canonical_text_form");
    {
        CHECK_EQ(RingElement().str(), "0");
        CHECK_EQ(RingElement::parse("0").str(), "0");
        CHECK_EQ(RingElement::parse("L + 1 + L").str(), "1 + 2*L");
        CHECK_EQ(RingElement::parse("Pic0 - 1 - L").str(), "-1 - L + Pic0");
        CHECK_EQ(RingElement::parse("X*L^2*X").str(), "L^2*X^2");
        CHECK_EQ(RingElement::parse("-3*Sym2*L + L*Sym2").str(), "-2*L*Sym2");
        CHECK_EQ(RingElement::parse("  1+L ^ 2 "), RingElement::parse("1 + L^2"));
        CHECK_THROWS(ParseError, RingElement::parse("1 + + L"));
        CHECK_THROWS(ParseError, RingElement::parse("2L"));
        CHECK_THROWS(ParseError, RingElement::parse("X*"));
    }

    TEST("serialize_parse_round_trip");
    {
        std::mt19937_64 rng(1234);
        const std::vector<std::string> pool{"L", "X", "Pic0", "Sym2"};
        for (int trial = 0; trial < 100; ++trial) {
            const auto e = testkit::random_element(rng, pool, 8, 5, 99);
            CHECK_EQ(RingElement::parse(e.str()), e);
        }
    }

    TEST("term_order_is_graded");
    {
        // serialization sorts by total degree, then lexicographically
        const auto e = RingElement::parse("X^2 + L*X + L^2 + X + 1");
        CHECK_EQ(e.str(), "1 + X + L^2 + L*X + X^2");
    }

    return testkit::summary();
}
