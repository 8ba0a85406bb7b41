#include "doctest.h"
#include "so5cg/error.hpp"
#include "so5cg/exactnum.hpp"

using namespace so5cg;

TEST_CASE("sqrt_rational pulls squares out of the radicand") {
    CHECK(sqrt_rational(make_rational(1, 1080)) == SqrtSum::term(make_rational(1, 180), 30));
    CHECK(sqrt_rational(make_rational(9, 4)) == SqrtSum(make_rational(3, 2)));
    CHECK(sqrt_rational(0).is_zero());
    CHECK_THROWS_AS(sqrt_rational(-1), NegativeRadicand);
}

TEST_CASE("products merge radicands") {
    SqrtSum a = SqrtSum::term(make_rational(1, 2), 6), b = SqrtSum::term(make_rational(1, 3), 10);
    CHECK(mul(a, b) == SqrtSum::term(make_rational(1, 3), 15));
    CHECK(mul(SqrtSum::term(1, 2), SqrtSum::term(1, 2)) == SqrtSum(2));
    CHECK((a - a).is_zero());
    CHECK(add(SqrtSum::term(1, 2), SqrtSum::term(1, 3)).terms().size() == 2);
}

TEST_CASE("float conversion") {
    SqrtSum v = SqrtSum::term(make_rational(1, 180), 30);
    CHECK(to_double(v) == doctest::Approx(0.03042903097).epsilon(1e-10));
    mpf_class f = to_float(v, 200);
    mpf_class expect(0, 232);
    expect = 30;
    expect = sqrt(expect) / 180;
    CHECK(abs(f - expect) < mpf_class("1e-55", 232));
    CHECK_THROWS(to_float(v, 20));
}

TEST_CASE("string forms round-trip") {
    SqrtSum v = SqrtSum::term(make_rational(-1, 2), 2) + SqrtSum(make_rational(3, 7));
    CHECK(SqrtSum::parse_export_string(v.to_export_string()) == v);
    CHECK(SqrtSum().to_export_string() == "0");
    CHECK(SqrtSum(1).to_string() == "1");
    CHECK(SqrtSum::term(make_rational(-1, 2), 2).to_string() == "-1/2*sqrt(2)");
    nlohmann::json j = v;
    CHECK(j.get<SqrtSum>() == v);
}

TEST_CASE("inverse and square of a single term") {
    SqrtSum v = SqrtSum::term(make_rational(2, 3), 5);
    CHECK(v.square_of_term() == make_rational(20, 9));
    CHECK(mul(v, v.inverse()) == SqrtSum(1));
    CHECK_THROWS(add(v, SqrtSum(1)).inverse());
}

TEST_CASE("prime powers") {
    PrimePowers p;
    p.mul_factorial(10).div_factorial(8).div(Integer(90));
    CHECK(p.value() == 1);
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), MalformedKey);
    CHECK_THROWS_AS(parse_rational("x"), MalformedKey);
}
