#include "doctest.h"
#include "so5cg/error.hpp"
#include "so5cg/oracle.hpp"

using namespace so5cg;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
IrrepLabel L(int a2, int b2) { return IrrepLabel::make(h(a2), h(b2)); }

const std::vector<IrrepLabel>& small_sources() {
    static const std::vector<IrrepLabel> v{L(0, 0), L(1, 0), L(1, 1), L(2, 0), L(2, 1),
                                           L(2, 2), L(3, 0), L(3, 1), L(3, 3), L(4, 0)};
    return v;
}

double max_abs(const DenseMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("Clifford algebra") {
    const auto g = gamma5();
    const DenseMatrix id = DenseMatrix::Identity(4, 4);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            const DenseMatrix anti = g[a] * g[b] + g[b] * g[a];
            CHECK(max_abs(anti - (a == b ? 2.0 : 0.0) * id) == 0.0);
        }
}

TEST_CASE("fundamental generators close") {
    CHECK(commutation_residual(spinor_generators()) < 1e-12);
    CHECK(commutation_residual(vector_generators()) < 1e-12);
    CHECK(generator_index(1, 2) == 0);
    CHECK(generator_index(2, 3) == 4);
    CHECK(generator_index(4, 5) == 9);
    CHECK_THROWS(generator_index(3, 3));
}

TEST_CASE("SO(4) subalgebra commutes and closes") {
    const Complex i(0, 1);
    for (const auto& g : {spinor_generators(), vector_generators()}) {
        const So4Generators j = so4_generators(g);
        for (const auto* jj : {&j.j1, &j.j2}) {
            const auto& [x, y, z] = *jj;
            CHECK(max_abs(x * y - y * x - i * z) < 1e-12);
            CHECK(max_abs(y * z - z * y - i * x) < 1e-12);
        }
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) CHECK(max_abs(j.j1[a] * j.j2[b] - j.j2[b] * j.j1[a]) < 1e-12);
    }
}

TEST_CASE("built irreps") {
    const RepMatrices& base = build_irrep(L(2, 2));
    for (const auto& rep : small_sources()) {
        const RepMatrices& r = build_irrep(rep);
        CAPTURE(rep.to_string());
        CHECK(static_cast<long>(r.basis.size()) == dim(rep));
        CHECK(r.basis == states(rep));
        CHECK(commutation_residual(r.generators) < 1e-10);
        CHECK(r.casimir_residual < 1e-10);
        const double ratio = to_double(SqrtSum(casimir(rep))) / to_double(SqrtSum(casimir(L(2, 2))));
        CHECK(r.casimir / base.casimir == doctest::Approx(ratio).epsilon(1e-12));
        // J-labels act diagonally on the state tags
        const So4Generators j = so4_generators(r.generators);
        for (std::size_t k = 0; k < r.basis.size(); ++k) {
            const auto col = static_cast<long>(k);
            CHECK(std::abs(j.j1[2](col, col) - r.basis[k].m1.to_double()) < 1e-10);
            CHECK(std::abs(j.j2[2](col, col) - r.basis[k].m2.to_double()) < 1e-10);
        }
    }
    CHECK_THROWS_AS(build_irrep(L(4, 2)), DimensionCap);
    CHECK_NOTHROW(build_irrep(L(4, 2), 81));
}

TEST_CASE("numeric decomposition matches Racah-Speiser") {
    for (const auto& rep : small_sources()) {
        CAPTURE(rep.to_string());
        const NumericDecomposition nd = numeric_decompose(rep);
        std::vector<DecompEntry> got;
        long total = 0;
        for (const auto& b : nd.blocks) {
            got.push_back(DecompEntry{b.target, b.multiplicity});
            total += b.vectors.cols();
        }
        CHECK(got == decompose_with_14(rep));
        CHECK(total == 14 * dim(rep));
        CHECK(nd.orthonormality_residual < 1e-10);
    }
}

TEST_CASE("oracle agrees with the exact engine") {
    for (const auto& rep : {L(0, 0), L(1, 0), L(1, 1), L(2, 0), L(2, 2)}) {
        CAPTURE(rep.to_string());
        const ComparisonReport r = compare(rep);
        CHECK(r.decomposition_match);
        CHECK(r.pass);
        CHECK(r.phases_consistent);
        for (const auto& b : r.blocks) CHECK(b.max_abs_dev.value_or(0) <= 1e-9);
    }
}

TEST_CASE("multiplicity-2 projector is rotation invariant") {
    OracleOptions plain;
    const ComparisonReport a = compare(L(3, 1), plain);
    OracleOptions rotated;
    rotated.rotate_seed = 12345;
    const ComparisonReport b = compare(L(3, 1), rotated);
    REQUIRE(a.blocks.size() == b.blocks.size());
    int doubled = 0;
    for (std::size_t k = 0; k < a.blocks.size(); ++k) {
        if (a.blocks[k].copy_count != 2) continue;
        ++doubled;
        CHECK(*a.blocks[k].projector_dev <= 1e-8);
        CHECK(*b.blocks[k].projector_dev <= 1e-8);
    }
    CHECK(doubled == 1);
    CHECK(a.pass);
    CHECK(b.pass);
    const auto j = to_json(b);
    CHECK(j["schema"] == "so5cg/1");
    CHECK(j["blocks"].size() == a.blocks.size());
}
