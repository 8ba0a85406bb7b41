#include "doctest.h"
#include "so5cg/error.hpp"
#include "so5cg/su2_cg.hpp"

using namespace so5cg;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
}  // namespace

TEST_CASE("su2 frozen values") {
    CHECK(su2_cg({h(4), h(2), 0, 0, h(4), h(2)}) == SqrtSum(1));
    CHECK(su2_cg({h(1), h(1), h(1), h(-1), 0, 0}) == sqrt_rational(make_rational(1, 2)));
    CHECK(su2_cg({h(1), h(-1), h(1), h(1), 0, 0}) == -sqrt_rational(make_rational(1, 2)));
    CHECK(su2_cg({1, 1, 1, -1, 0, 0}) == sqrt_rational(make_rational(1, 3)));
    CHECK(su2_cg({1, 1, 1, 0, 0, 0}).is_zero());
    CHECK(su2_cg({1, 1, 1, 0, 3, 1}).is_zero());
    CHECK_THROWS_AS(su2_cg({1, 2, 1, 0, 2, 2}), MalformedKey);
    CHECK_THROWS_AS(su2_cg({1, h(1), 1, 0, 2, h(1)}), MalformedKey);
}

TEST_CASE("su2 exchange symmetry") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int J = std::abs(a - b); J <= a + b; J += 2)
                for (int m1 = -a; m1 <= a; m1 += 2)
                    for (int m2 = -b; m2 <= b; m2 += 2) {
                        if (std::abs(m1 + m2) > J) continue;
                        SqrtSum x = su2_cg({h(a), h(m1), h(b), h(m2), h(J), h(m1 + m2)});
                        SqrtSum y = su2_cg({h(b), h(m2), h(a), h(m1), h(J), h(m1 + m2)});
                        CHECK(x == (parity_sign(h(a + b - J)) > 0 ? y : -y));
                    }
}
