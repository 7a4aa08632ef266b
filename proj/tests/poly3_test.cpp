#include <random>
#include <stdexcept>

#include "doctest.h"

#include "brg/poly3.hpp"
#include "support.hpp"

using namespace brg;

namespace {

Poly3 random_poly(std::mt19937& rng, Basis basis) {
    std::uniform_int_distribution<int> nterms(0, 6), expo(0, 4), coeff(-5, 5);
    Poly3 p(basis);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(expo(rng), expo(rng), expo(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("poly3 ring operations") {
    Poly3 y1(Basis::X);  // Y + 1
    y1.add_term(0, 0, 0, 1);
    y1.add_term(0, 1, 0, 1);

    SUBCASE("(Y+1)*(Y+1) = Y^2 + 2Y + 1") {
        CHECK(y1 * y1 == testing::yz_poly({{2, 0, 1}, {1, 0, 2}, {0, 0, 1}}));
    }
    SUBCASE("adding zero is the identity") {
        CHECK(y1 + Poly3::zero(Basis::X) == y1);
    }
    SUBCASE("(1+Y)(1+YZ) = 1 + Y + YZ + Y^2 Z") {
        Poly3 yz1(Basis::X);
        yz1.add_term(0, 0, 0, 1);
        yz1.add_term(0, 1, 1, 1);
        CHECK(y1 * yz1 == testing::yz_poly({{2, 1, 1}, {1, 1, 1}, {1, 0, 1}, {0, 0, 1}}));
    }
    SUBCASE("cancellation drops terms") {
        Poly3 p(Basis::X);
        p.add_term(1, 2, 3, 7);
        p.add_term(1, 2, 3, -7);
        CHECK(p.is_zero());
    }
    SUBCASE("mixed bases are rejected") {
        Poly3 a(Basis::X), b(Basis::XMinusOne);
        a.add_term(0, 0, 0, 1);
        b.add_term(0, 0, 0, 1);
        CHECK_THROWS_AS(a + b, std::invalid_argument);
        CHECK_THROWS_AS(a * b, std::invalid_argument);
    }
}

TEST_CASE("basis conversion") {
    SUBCASE("X = x + 1") {
        Poly3 x_poly = Poly3::monomial(1, 1, 0, 0, Basis::X);
        Poly3 shifted = x_poly.to_basis(Basis::XMinusOne);
        Poly3 expect(Basis::XMinusOne);
        expect.add_term(0, 0, 0, 1);
        expect.add_term(1, 0, 0, 1);
        CHECK(shifted == expect);
    }
    SUBCASE("round trip is the identity") {
        std::mt19937 rng(7);
        for (int i = 0; i < 50; ++i) {
            Poly3 p = random_poly(rng, i % 2 == 0 ? Basis::X : Basis::XMinusOne);
            CHECK(p.to_basis(Basis::X).to_basis(Basis::XMinusOne).to_basis(p.basis()) ==
                  p.to_basis(p.basis()));
            CHECK(p.to_basis(p.basis() == Basis::X ? Basis::XMinusOne : Basis::X)
                      .to_basis(p.basis()) == p);
        }
    }
    SUBCASE("conversion commutes with multiplication") {
        std::mt19937 rng(11);
        for (int i = 0; i < 20; ++i) {
            Poly3 a = random_poly(rng, Basis::XMinusOne);
            Poly3 b = random_poly(rng, Basis::XMinusOne);
            CHECK((a * b).to_basis(Basis::X) == a.to_basis(Basis::X) * b.to_basis(Basis::X));
        }
    }
}

TEST_CASE("text rendering follows the descending-Y convention") {
    CHECK(testing::yz_poly({{3, 2, 1}, {2, 2, 2}, {2, 0, 1}, {1, 0, 3}, {0, 0, 1}}).to_text() ==
          "Y^3*Z^2 + 2*Y^2*Z^2 + Y^2 + 3*Y + 1");
    CHECK(Poly3::zero().to_text() == "0");
    CHECK(Poly3::monomial(-2, 1, 1, 0, Basis::X).to_text() == "-2*X*Y");
    Poly3 mixed(Basis::X);
    mixed.add_term(2, 0, 0, 1);
    mixed.add_term(0, 1, 0, -3);
    CHECK(mixed.to_text() == "-3*Y + X^2");
}

TEST_CASE("json round trip") {
    std::mt19937 rng(23);
    for (int i = 0; i < 30; ++i) {
        Poly3 p = random_poly(rng, Basis::X);
        const std::string text = poly3_to_json(p);
        CHECK(poly3_from_json(text) == p);
        CHECK(poly3_to_json(poly3_from_json(text)) == text);
    }
    CHECK(poly3_to_json(testing::yz_poly({{1, 1, 1}})) ==
          R"({"basis":"X","terms":[{"X":0,"Y":1,"Z":1,"coeff":1}]})");
}
