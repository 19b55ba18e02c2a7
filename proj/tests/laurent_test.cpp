#include <doctest.h>

#include <cstdint>

#include "qk/laurent.hpp"

using namespace qk;

namespace {

struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

Laurent random_laurent(Rng& rng, int vars, bool laurent = true) {
    Laurent out(vars);
    const int terms = rng.range(0, 5);
    for (int t = 0; t < terms; ++t) {
        Monomial m(vars);
        for (int r = 1; r <= vars; ++r) m.set_exponent(r, rng.range(laurent ? -3 : 0, 3));
        out += Laurent::monomial(m, BigInt(rng.range(-9, 9)));
    }
    return out;
}

Laurent one(int vars) { return Laurent::constant(vars, BigInt(1)); }

} // namespace

TEST_CASE("character monomials") {
    const int n = 5;
    CHECK(char_monomial(n, 2, 1) == Laurent::variable(4, 1));
    CHECK(char_monomial(n, 3, 3) == one(4));
    CHECK(char_monomial(n, 5, 3) == Laurent::variable(4, 3) * Laurent::variable(4, 4));

    Monomial inv(4);
    inv.set_exponent(1, -1);
    inv.set_exponent(2, -1);
    CHECK(char_monomial(n, 1, 3) == Laurent::monomial(inv, BigInt(1)));
}

TEST_CASE("character monomials compose") {
    const int n = 6;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                CHECK(char_monomial(n, a, b) * char_monomial(n, b, c) == char_monomial(n, a, c));
}

TEST_CASE("variable reversal matches the torus involution on characters") {
    const int n = 5;
    CHECK(Laurent::variable(4, 1).variables_reversed() == Laurent::variable(4, 4));
    CHECK(one(4).variables_reversed() == one(4));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            CHECK(char_monomial(n, a, b).variables_reversed() ==
                  char_monomial(n, n + 1 - b, n + 1 - a));
}

TEST_CASE("evaluation at all-ones") {
    CHECK(Laurent::variable(3, 1).eval_all_ones() == BigInt(1));
    CHECK((one(3) - Laurent::variable(3, 1) * Laurent::variable(3, 2)).eval_all_ones() ==
          BigInt(0));

    Monomial m(3);
    m.set_exponent(1, -1);
    const Laurent c = Laurent::monomial(m, BigInt(2)) + Laurent::constant(3, BigInt(3));
    CHECK(c.eval_all_ones() == BigInt(5));
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng{99};
    for (int k = 0; k < 200; ++k) {
        const Laurent a = random_laurent(rng, 3);
        const Laurent b = random_laurent(rng, 3);
        CHECK((a * b).eval_all_ones() == a.eval_all_ones() * b.eval_all_ones());
        CHECK((a + b).eval_all_ones() == a.eval_all_ones() + b.eval_all_ones());
    }
}

TEST_CASE("ring axioms on random Laurent polynomials") {
    Rng rng{12345};
    for (int k = 0; k < 150; ++k) {
        const Laurent a = random_laurent(rng, 4);
        const Laurent b = random_laurent(rng, 4);
        const Laurent c = random_laurent(rng, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Laurent(4));
        CHECK(a * one(4) == a);
    }
}

TEST_CASE("positivity-basis substitution") {
    const Laurent z1 = Laurent::variable(2, 1);
    const Laurent z2 = Laurent::variable(2, 2);

    // 1 - z1 -> -y1
    auto p = to_positivity_basis(one(2) - z1);
    REQUIRE(p.has_value());
    CHECK(*p == -Laurent::variable(2, 1));

    // z1*z2 -> y1*y2 + y1 + y2 + 1
    p = to_positivity_basis(z1 * z2);
    REQUIRE(p.has_value());
    CHECK(*p == Laurent::variable(2, 1) * Laurent::variable(2, 2) + Laurent::variable(2, 1) +
                    Laurent::variable(2, 2) + one(2));

    p = to_positivity_basis(one(2));
    REQUIRE(p.has_value());
    CHECK(*p == one(2));

    // Laurent inputs are not representable.
    Monomial m(2);
    m.set_exponent(1, -1);
    CHECK(!to_positivity_basis(Laurent::monomial(m, BigInt(1))).has_value());
}

TEST_CASE("positivity-basis substitution inverts") {
    Rng rng{777};
    for (int k = 0; k < 200; ++k) {
        const Laurent c = random_laurent(rng, 3, false);
        auto p = to_positivity_basis(c);
        REQUIRE(p.has_value());
        auto back = from_positivity_basis(*p);
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
}

TEST_CASE("variable reversal is an involutive ring map") {
    Rng rng{31415};
    for (int k = 0; k < 200; ++k) {
        const Laurent a = random_laurent(rng, 4);
        const Laurent b = random_laurent(rng, 4);
        CHECK(a.variables_reversed().variables_reversed() == a);
        CHECK((a * b).variables_reversed() == a.variables_reversed() * b.variables_reversed());
    }
}

TEST_CASE("coefficient rendering") {
    const Laurent z1 = Laurent::variable(2, 1);
    CHECK((one(2) - z1).str() == "1 - z1");
    CHECK(Laurent(2).str() == "0");
    CHECK((Laurent::constant(2, BigInt(2)) * z1 * z1).str() == "2*z1^2");
    Monomial m(2);
    m.set_exponent(1, -1);
    CHECK(Laurent::monomial(m, BigInt(1)).str() == "z1^-1");
}
