#include "doctest.h"
#include "so5cg/error.hpp"
#include "so5cg/reduced_cg.hpp"

using namespace so5cg;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
IrrepLabel L(int a2, int b2) { return IrrepLabel::make(h(a2), h(b2)); }
So4Label S(int a2, int b2) { return So4Label::make(h(a2), h(b2)); }
EntryShift E(int d1, int d2, int p) { return EntryShift::make(h(d1), h(d2), S(p, p)); }
Channel C(int s1, int s2, int copy = 1) { return Channel::make(h(s1), h(s2), copy); }
}  // namespace

TEST_CASE("entry rows") {
    CHECK(all_entry_shifts().size() == 14);
    CHECK_THROWS_AS(E(2, 1, 2), MalformedKey);
    CHECK_THROWS_AS(E(1, 1, 2), MalformedKey);
    CHECK_THROWS_AS(E(2, 0, 0), MalformedKey);
}

TEST_CASE("normalizations") {
    CHECK(normalization(L(0, 0), C(2, 2)) == SqrtSum::term(make_rational(1, 180), 30));
    CHECK_THROWS_AS(normalization(L(2, 0), C(2, 0)), ChannelAbsent);
    CHECK(normalization(L(2, 2), C(0, 0)) == sqrt_rational(make_rational(20, 675)));
    CHECK_THROWS_AS(normalization(L(0, 0), C(0, 0)), ChannelAbsent);
}

TEST_CASE("trivial source embeds the 14") {
    CHECK(reduced({L(0, 0), C(2, 2), S(0, 0), E(2, 2, 2)}) == SqrtSum(1));
    CHECK(reduced({L(0, 0), C(2, 2), S(0, 0), E(0, 0, 0)}) == SqrtSum(1));
    CHECK(reduced({L(0, 0), C(2, 2), S(0, 0), E(1, 1, 1)}) == SqrtSum(1));
}

TEST_CASE("key validation and guards") {
    // (1,0) x 14 has no (2,0) component.
    CHECK_THROWS_AS(reduced({L(2, 0), C(2, 0), S(1, 1), E(1, 1, 1)}), ChannelAbsent);
    CHECK_THROWS_AS(reduced({L(2, 0), C(2, 2), S(0, 0), E(0, 0, 0)}), MalformedKey);
    CHECK_THROWS_AS(reduced({L(2, 2), C(2, 2), S(2, 0), E(0, -2, 2)}), MalformedKey);
    // (1,1) -> (2,2) at s = (0,0) with t = (1,0) is not in branching((2,2)).
    CHECK(reduced({L(2, 2), C(2, 2), S(0, 0), E(2, 0, 2)}).is_zero());
    // Triangle failure: s = (0,0), P = (1,1), t = (0,0).
    CHECK(reduced({L(2, 2), C(2, 2), S(0, 0), E(0, 0, 2)}).is_zero());
}

TEST_CASE("auxiliary vector") {
    CHECK(reduced_aux({L(2, 2), C(0, 0), S(2, 2), E(0, 0, 0)}).is_zero());
    CHECK(reduced_aux({L(4, 2), C(0, 0), S(2, 2), E(2, 2, 2)}).is_zero());
    CHECK_THROWS_AS(reduced_aux({L(2, 2), C(0, 0), S(1, 0), E(1, -1, 1)}), MalformedKey);
}

TEST_CASE("mixing data") {
    MixingData m = mixing(L(2, 2));
    CHECK(m.x.is_zero());
    CHECK(m.h2 == 0);
    m = mixing(L(4, 2));
    CHECK(m.x == SqrtSum::term(-4, 14));
    CHECK(m.x2 == 224);
    CHECK(m.h2 == 840);
    CHECK(m.norm2 == 616);
    m = mixing(L(3, 1));
    CHECK(m.x == SqrtSum::term(make_rational(-76, 395), 2370));
    CHECK(m.h2 == make_rational(1464, 5));
    CHECK_THROWS_AS(mixing(L(0, 0)), ChannelAbsent);
}

TEST_CASE("second (0,0) copy") {
    CHECK_THROWS_AS(reduced_copy2({L(2, 2), C(0, 0, 2), S(2, 2), E(0, 0, 0)}), ChannelAbsent);
    CHECK(reduced_copy2({L(3, 1), C(0, 0, 2), S(0, 2), E(0, 0, 0)}) == SqrtSum::term(make_rational(1, 158), 790));
    CHECK(reduced_copy2({L(3, 1), C(0, 0, 2), S(2, 2), E(0, 0, 0)}) ==
          SqrtSum::term(make_rational(-11, 711), 790));
}

TEST_CASE("lowering channels") {
    SqrtSum v = symmetry_extend(L(0, 0), L(2, 2), S(0, 0), S(2, 2), S(2, 2));
    CHECK(v == sqrt_rational(make_rational(9, 14)));
    CHECK(coefficient({L(2, 2), C(-2, -2), S(2, 2), E(-2, -2, 2)}) == v);
    CHECK(coefficient({L(2, 2), C(-2, -2), S(1, 1), E(-1, -1, 1)}) == sqrt_rational(make_rational(4, 14)));
    CHECK(coefficient({L(2, 2), C(-2, -2), S(0, 0), E(0, 0, 0)}) == sqrt_rational(make_rational(1, 14)));
    CHECK_THROWS_AS(symmetry_extend(L(2, 2), L(0, 0), S(2, 2), S(0, 0), S(2, 2)), MalformedKey);
}

TEST_CASE("normalization agrees with the decomposition") {
    for (const auto& rep : irreps_up_to(6))
        for (const auto& ch : all_channels()) CHECK(normalization_predicts_absent(rep, ch) == !channel_present(rep, ch));
}
