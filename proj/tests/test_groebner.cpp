#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace momenta;
using namespace momenta::test;

TEST_CASE("buchberger on (x^2, xy) under grevlex is already reduced") {
    auto r = ring({"x", "y"});
    Ideal I(r, {P(r, "x^2"), P(r, "x*y")});
    GroebnerBasis gb = buchberger(I);
    // hand division: S(x^2, xy) = y*x^2 - x*xy = 0, so the basis is complete
    REQUIRE(gb.basis().size() == 2);
    CHECK(gb.basis()[0] == P(r, "x*y"));
    CHECK(gb.basis()[1] == P(r, "x^2"));
}

TEST_CASE("twisted cubic: lex elimination contains z^2 - y^3") {
    auto r = ring({"x", "y", "z"});
    Ideal I(r, {P(r, "y - x^2"), P(r, "z - x^3")});
    GroebnerBasis gb = buchberger(I, MonomialOrder::lex());
    // classic hand elimination: y^3 = x^6 = z^2
    const Polynomial target = P(r, "y^3 - z^2");
    bool found = false;
    for (const auto& b : gb.basis())
        if (b == target || b == -target || b == target * Rational(-1)) found = true;
    CHECK(found);
    CHECK(normal_form(target, gb).is_zero());
}

TEST_CASE("unit ideal collapses to {1}") {
    auto r = ring({"x", "y"});
    GroebnerBasis gb = buchberger(Ideal(r, {P(r, "x"), P(r, "x + 1")}));
    CHECK(gb.contains_one());
    REQUIRE(gb.basis().size() == 1);
    CHECK(gb.basis()[0] == Polynomial::constant(r, Rational(1)));
}

TEST_CASE("normal_form basics") {
    auto r = ring({"x", "y"});
    GroebnerBasis gb = buchberger(Ideal(r, {P(r, "x")}));
    CHECK(normal_form(P(r, "x"), gb).is_zero());
    CHECK(normal_form(P(r, "y + 1"), gb) == P(r, "y + 1"));
    // exactness of the remainder, not just membership
    CHECK(normal_form(P(r, "3/7*x + 2/5*y"), gb) == P(r, "2/5*y"));
}

TEST_CASE("containment soundness: generators reduce to zero") {
    Rng rng(7);
    auto r = ring({"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_poly(rng, r, 4, 3));
        Ideal I(r, gens);
        if (I.generators().empty()) continue;
        GroebnerBasis gb = buchberger(I);
        for (const auto& g : I.generators()) CHECK(normal_form(g, gb).is_zero());
    }
}

TEST_CASE("idempotence: buchberger of a reduced basis returns it unchanged") {
    Rng rng(11);
    auto r = ring({"x", "y", "z"});
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_poly(rng, r, 4, 3));
        GroebnerBasis gb = buchberger(Ideal(r, gens));
        GroebnerBasis gb2 = buchberger(Ideal(r, gb.basis()));
        REQUIRE(gb.basis().size() == gb2.basis().size());
        for (size_t i = 0; i < gb.basis().size(); ++i) CHECK(gb.basis()[i] == gb2.basis()[i]);
    }
}

TEST_CASE("confluence: normal form independent of the reduction path") {
    Rng rng(13);
    auto r = ring({"x", "y", "z"});
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_poly(rng, r, 3, 3));
        Ideal I(r, gens);
        if (I.generators().empty()) continue;
        GroebnerBasis gb = buchberger(I);
        if (gb.contains_one()) continue;
        for (int k = 0; k < 4; ++k) {
            Polynomial p = random_poly(rng, r, 5, 4);
            CHECK(randomized_normal_form(rng, p, gb) == normal_form(p, gb));
        }
    }
}

TEST_CASE("membership agrees under grevlex and lex") {
    Rng rng(17);
    auto r = ring({"x", "y"});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 2; ++i) gens.push_back(random_poly(rng, r, 3, 2));
        Ideal I(r, gens);
        if (I.generators().empty()) continue;
        GroebnerBasis g1 = buchberger(I, MonomialOrder::grevlex());
        GroebnerBasis g2 = buchberger(I, MonomialOrder::lex());
        for (int k = 0; k < 5; ++k) {
            Polynomial p = random_poly(rng, r, 4, 3);
            CHECK(normal_form(p, g1).is_zero() == normal_form(p, g2).is_zero());
        }
    }
}

TEST_CASE("resource limits are reported distinctly") {
    auto r = ring({"x", "y", "z", "u", "v"});
    // cyclic-ish system that needs a few pairs
    std::vector<Polynomial> gens = {P(r, "x*y + z^2"), P(r, "y*z + u^2"), P(r, "z*u + v^2"),
                                    P(r, "u*v + x^2"), P(r, "v*x + y^2")};
    ResourceLimits tight;
    tight.max_pairs = 1;
    CHECK_THROWS_AS(buchberger(Ideal(r, gens), MonomialOrder::grevlex(), tight),
                    ResourceLimitError);
}

TEST_CASE("block order eliminates the front block") {
    auto r = ring({"t", "x", "y"});
    Ideal I(r, {P(r, "x - t^2"), P(r, "y - t^3")});
    GroebnerBasis gb = buchberger(I, MonomialOrder::block({0}));
    bool cusp = false;
    for (const auto& b : gb.basis()) {
        bool uses_t = false;
        for (const auto& t : b.terms())
            if (t.mono.exp(0)) uses_t = true;
        if (!uses_t && (b == P(r, "y^2 - x^3") || b == P(r, "x^3 - y^2"))) cusp = true;
    }
    CHECK(cusp);
}
