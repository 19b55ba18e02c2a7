#include <doctest.h>

#include <stdexcept>

#include "qk/element_io.hpp"
#include "qk/projective.hpp"

using namespace qk;

namespace {

ProjElement pbasis(int n, int k) { return ProjElement::basis(n, k); }

} // namespace

TEST_CASE("projection of basis classes") {
    CHECK(project(QkElement::basis(TildeIndex(6, -3, 5))) == pbasis(5, 5));
    CHECK(project(QkElement::unit(5)) == pbasis(5, 0));

    ProjElement expected(5);
    expected.add(1, Laurent::constant(4, BigInt(1)) - Laurent::variable(4, 1));
    CHECK(project(parse_element("(1 - z1)*O[2,3]", 5)) == expected);
}

TEST_CASE("projection is linear and collapses the second entry") {
    // [2,3] and [2,4] project to the same index.
    const QkElement e = parse_element("O[2,3] + O[2,4]", 5);
    ProjElement expected(5);
    expected.add(1, Laurent::constant(4, BigInt(2)));
    CHECK(project(e) == expected);
}

TEST_CASE("projective divisor products") {
    // O^1 * O^1 = (1 - z1)O^1 + z1 O^2
    ProjElement expected(5);
    expected.add(1, Laurent::constant(4, BigInt(1)) - Laurent::variable(4, 1));
    expected.add(2, Laurent::variable(4, 1));
    CHECK(proj_mult(pbasis(5, 1), pbasis(5, 1), true) == expected);

    CHECK(proj_mult(pbasis(5, 3), pbasis(5, 0), true) == pbasis(5, 3));
    CHECK(proj_mult(pbasis(5, 3), pbasis(5, 4), false) == pbasis(5, 7));

    CHECK_THROWS_AS(proj_mult(pbasis(5, 3), pbasis(5, 4), true), std::invalid_argument);
}

TEST_CASE("projective divisor products wrap into the quantum period") {
    // O^(n-1) * O^1 = (1 - [C_{e_n - e_1}])O^(n-1) + [C_{e_n - e_1}] q O^0.
    const int n = 5;
    ProjElement expected(n);
    expected.add(n - 1, Laurent::constant(n - 1, BigInt(1)) - char_monomial(n, n, 1));
    expected.add(n, char_monomial(n, n, 1));
    CHECK(proj_mult(pbasis(n, n - 1), pbasis(n, 1), true) == expected);
}

TEST_CASE("projection is a ring homomorphism after specialization") {
    for (int n = 3; n <= 4; ++n)
        for (const WpIndex& u : enumerate_wp(n))
            for (const WpIndex& v : enumerate_wp(n)) {
                const ProjElement lhs = project(lr_mult(u.tilde(), v.tilde()));
                const ProjElement rhs = proj_mult(project(QkElement::basis(u.tilde())),
                                                  project(QkElement::basis(v.tilde())), false);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("projection intertwines the divisor products") {
    for (int n = 3; n <= 4; ++n)
        for (const WpIndex& u : enumerate_wp(n)) {
            const QkElement e = QkElement::basis(u.tilde());
            CHECK(project(chevalley_mult(e, 1)) ==
                  proj_mult(project(e), pbasis(n, 1), true));
        }
}

TEST_CASE("projective products are associative on single indices") {
    const int n = 4;
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b)
            for (int c = 0; c < 2 * n; ++c)
                CHECK(proj_mult(proj_mult(pbasis(n, a), pbasis(n, b), false), pbasis(n, c),
                                false) ==
                      proj_mult(pbasis(n, a), proj_mult(pbasis(n, b), pbasis(n, c), false),
                                false));
}

TEST_CASE("projective rendering") {
    CHECK(pbasis(5, 7).str() == "q*P[2]");
    CHECK(pbasis(5, 0).str() == "P[0]");
    ProjElement e(5);
    e.add(1, Laurent::constant(4, BigInt(1)) - Laurent::variable(4, 1));
    e.add(11, Laurent::constant(4, BigInt(-1)));
    CHECK(e.str() == "(1 - z1)*P[1] - q^2*P[1]");
}
