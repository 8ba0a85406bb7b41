#include <numeric>

#include "doctest.h"
#include "so5cg/error.hpp"
#include "so5cg/labels.hpp"

using namespace so5cg;

namespace {
IrrepLabel L(int a2, int b2) { return IrrepLabel::make(HalfInt::from_twice(a2), HalfInt::from_twice(b2)); }
}  // namespace

TEST_CASE("dimensions") {
    CHECK(dim(L(0, 0)) == 1);
    CHECK(dim(L(1, 0)) == 4);
    CHECK(dim(L(1, 1)) == 5);
    CHECK(dim(L(2, 0)) == 10);
    CHECK(dim(L(2, 2)) == 14);
    CHECK(dim(L(3, 1)) == 35);
    CHECK(dim(L(2, 0)) == 10);
    CHECK(dim(L(4, 2)) == 81);
    CHECK(casimir(L(2, 2)) == 10);
    CHECK(casimir(L(1, 1)) == 4);
}

TEST_CASE("branching sizes match dimensions") {
    for (const auto& rep : irreps_up_to(6)) {
        long total = 0;
        for (const auto& s : branching(rep)) total += s.dim();
        CHECK(total == dim(rep));
    }
    auto b = branching(L(2, 2));
    REQUIRE(b.size() == 3);
    CHECK(b[0] == So4Label{0, 0});
    CHECK(b[1] == So4Label{HalfInt::half(), HalfInt::half()});
    CHECK(b[2] == So4Label{1, 1});
    CHECK(branching(L(1, 0)).size() == 2);
}

TEST_CASE("decomposition with the 14") {
    auto d = decompose_with_14(L(2, 2));
    CHECK(d.size() == 6);
    long total = 0;
    for (const auto& e : d) total += e.multiplicity * dim(e.target);
    CHECK(total == 196);
    for (const auto& rep : irreps_up_to(6)) {
        long sum = 0;
        for (const auto& e : decompose_with_14(rep)) sum += e.multiplicity * dim(e.target);
        CHECK(sum == 14 * dim(rep));
    }
    // (1,0) x 14 is multiplicity free; (3/2,1/2) is the smallest source with two (0,0) copies.
    for (const auto& e : decompose_with_14(L(2, 0))) CHECK(e.multiplicity == 1);
    CHECK(channel_present(L(3, 1), Channel::make(0, 0, 2)));
    CHECK_FALSE(channel_present(L(2, 2), Channel::make(HalfInt::half(), HalfInt::half())));
}

TEST_CASE("label parsing and validation") {
    CHECK(parse_irrep("3/2,1/2") == L(3, 1));
    CHECK_THROWS_AS(parse_irrep("0,-1"), MalformedKey);
    CHECK_THROWS_AS(parse_irrep("1,2"), MalformedKey);
    CHECK_THROWS_AS(parse_irrep("1/3,0"), MalformedKey);
    CHECK_THROWS_AS(Channel::make(HalfInt(2), HalfInt(0)), MalformedKey);
    CHECK_THROWS_AS(Channel::make(HalfInt(1), HalfInt(0), 2), MalformedKey);
    CHECK(all_channels().size() == 14);
    CHECK(Channel::make(0, 0, 2).to_string() == "(+0,+0)#2");
}
