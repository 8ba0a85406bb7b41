#include <chrono>

#include "doctest.h"
#include "so5cg/error.hpp"
#include "so5cg/full_cg.hpp"

using namespace so5cg;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
IrrepLabel L(int a2, int b2) { return IrrepLabel::make(h(a2), h(b2)); }
State St(int j1, int j2, int m1, int m2) { return State{So4Label{h(j1), h(j2)}, h(m1), h(m2)}; }
}  // namespace

TEST_CASE("trivial source is the identity embedding") {
    CouplingMatrix m = coupling_matrix(L(0, 0));
    REQUIRE(m.rows.size() == 14);
    REQUIRE(m.cols.size() == 14);
    for (std::size_t c = 0; c < 14; ++c) {
        REQUIRE(m.entries[c].size() == 1);
        CHECK(m.entries[c][0].first == c);
        CHECK(m.entries[c][0].second == SqrtSum(1));
    }
}

TEST_CASE("full coefficients") {
    FullKey k{L(2, 2), 1, St(2, 2, 0, 2), L(0, 0), St(0, 0, 0, 0), St(2, 2, 0, 2)};
    CHECK(full(k) == SqrtSum(1));
    k.part_state = St(2, 2, 2, 2);
    CHECK(full(k).is_zero());
    k.part_state = St(2, 2, 4, 2);
    CHECK_THROWS_AS(full(k), MalformedKey);
    FullKey absent{L(3, 3), 1, St(3, 3, 1, 1), L(2, 2), St(2, 2, 0, 0), St(1, 1, 1, 1)};
    CHECK_THROWS_AS(full(absent), ChannelAbsent);
}

TEST_CASE("full matches the coupling matrix") {
    CouplingMatrix m = coupling_matrix(L(2, 0));
    for (std::size_t c = 0; c < m.cols.size(); c += 7)
        for (const auto& [row, v] : m.entries[c]) {
            const auto& col = m.cols[c];
            CHECK(full({col.target, col.copy, col.state, m.source, m.rows[row].source, m.rows[row].part}) == v);
        }
}

TEST_CASE("small coupling matrices are orthogonal") {
    for (auto rep : {L(1, 0), L(1, 1), L(2, 0), L(2, 2)}) {
        CouplingMatrix m = coupling_matrix(rep, 2);
        CHECK(m.rows.size() == 14 * static_cast<std::size_t>(dim(rep)));
        UnitarityResult c = check_columns(m);
        CHECK_MESSAGE(c.ok(), c.first_failure);
        UnitarityResult r = check_rows(m);
        CHECK_MESSAGE(r.ok(), r.first_failure);
    }
}

TEST_CASE("export") {
    CouplingMatrix m = coupling_matrix(L(1, 0));
    auto j = matrix_to_json(m);
    CHECK(j["schema"] == "so5cg/1");
    CHECK(j["rows"].size() == 56);
    CHECK(j["entries"].size() == m.nonzeros());
    std::string csv = matrix_to_csv(m);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(m.nonzeros()) + 1);
}
