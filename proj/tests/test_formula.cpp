#include "doctest.h"
#include "so5cg/formula.hpp"

using namespace so5cg;

TEST_CASE("expression precedence") {
    const Point at = make_point(1, 2, 3, 4);  // jb1, jb2, j1, j2
    CHECK(Expr::parse("-j1^2").eval(at) == -9);
    CHECK(Expr::parse("-j1^2 + j2").eval(at) == -5);
    CHECK(Expr::parse("2*j1^2 + 5*j1 + 3").eval(at) == 36);
    CHECK(Expr::parse("(jb1 - jb2)^3").eval(at) == -1);
    CHECK(Expr::parse("j1 - j2 - jb1").eval(at) == -2);
    CHECK(Expr::parse("--j1").eval(at) == 3);
    CHECK_THROWS(Expr::parse("j3"));
    CHECK_THROWS(Expr::parse("(j1"));
}

TEST_CASE("products keep their factors") {
    Product p = Product::parse("j1*(j2 - 1)*(jb1 + jb2)^2");
    REQUIRE(p.factors().size() == 3);
    const Point at = make_point(1, 2, 3, 4);
    CHECK(p.eval(at) == 81);
    CHECK(p.first_nonpositive(make_point(1, 2, 3, 1), true) == 1);
    CHECK(p.first_nonpositive(make_point(1, 2, 3, 1), false) == -1);
    CHECK(Product::parse("1").eval(at) == 1);
    // Re-parsing a rendered factor gives the same polynomial.
    const Product q = Product::parse("-j1^2*(-j2 + 1)*(2*jb1 - (jb2 - 1))");
    for (const auto& f : q.factors())
        CHECK(Expr::parse(f.text()).eval(at) == f.eval(at));
}
