// One line per acceptance criterion; exit status 0 iff every criterion holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "so5cg/error.hpp"
#include "so5cg/labels.hpp"
#include "so5cg/oracle.hpp"
#include "so5cg/verify.hpp"

using namespace so5cg;

namespace {

IrrepLabel L(int a2, int b2) { return IrrepLabel::make(HalfInt::from_twice(a2), HalfInt::from_twice(b2)); }

struct Outcome {
    bool pass = true;
    std::size_t checks = 0;
    std::string failure;

    void absorb(const SuiteResult& r) {
        checks += r.checks;
        if (!r.pass && pass) failure = r.name + ": " + r.first_failure;
        pass = pass && r.pass;
    }
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) failure = what;
        pass = pass && ok;
    }
};

Outcome oracle_equivalence() {
    Outcome o;
    for (int a1 = 0; a1 <= 8; ++a1)
        for (int a2 = 0; a2 <= a1; ++a2) {
            const IrrepLabel s = L(a1, a2);
            if (dim(s) > 35) continue;
            const NumericDecomposition nd = numeric_decompose(s);
            std::vector<DecompEntry> got;
            for (const auto& b : nd.blocks) got.push_back(DecompEntry{b.target, b.multiplicity});
            o.expect(got == decompose_with_14(s), "numeric decomposition of " + s.to_string());
            o.expect(nd.orthonormality_residual < 1e-10, "numeric basis of " + s.to_string() + " not orthonormal");
        }
    for (const auto& s : {L(1, 0), L(1, 1), L(2, 0)}) {
        const ComparisonReport r = compare(s);
        o.expect(r.decomposition_match, "oracle blocks of " + s.to_string());
        for (const auto& b : r.blocks)
            o.expect(b.max_abs_dev && *b.max_abs_dev <= 1e-9,
                     "moduli of " + s.to_string() + " -> " + b.target.to_string() + " deviate");
    }
    // (2,1) has dimension 81; raise the cap for this run only.
    OracleOptions wide;
    wide.dim_cap = 81;
    for (const auto& [s, opt] : {std::pair{L(3, 1), OracleOptions{}}, std::pair{L(4, 2), wide}}) {
        const ComparisonReport r = compare(s, opt);
        int doubled = 0;
        for (const auto& b : r.blocks)
            if (b.copy_count == 2) {
                ++doubled;
                o.expect(b.projector_dev && *b.projector_dev <= 1e-8, "copy-2 projector of " + s.to_string());
            }
        o.expect(doubled == 1, s.to_string() + " should carry one multiplicity-2 block");
        o.expect(r.pass, "oracle comparison of " + s.to_string());
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "exact reduced unitarity, 2jb1 <= 5",
         [] {
             Outcome o;
             o.absorb(verify_reduced_unitarity(5));
             return o;
         }},
        {2, "exact full-matrix unitarity and dimension audit",
         [] {
             Outcome o;
             o.absorb(verify_full_unitarity({L(0, 0), L(1, 0), L(1, 1), L(2, 0), L(2, 2), L(3, 1), L(4, 2)}, false));
             return o;
         }},
        {3, "mixing identities, 2jb1 <= 5",
         [] {
             Outcome o;
             o.absorb(verify_mixing(5));
             return o;
         }},
        {4, "symmetry involution, 2jb1 <= 4, lowering example",
         [] {
             Outcome o;
             o.absorb(verify_symmetry(4));
             return o;
         }},
        {5, "trivial source is the identity embedding",
         [] {
             Outcome o;
             o.absorb(verify_trivial_source());
             return o;
         }},
        {6, "numeric oracle equivalence", oracle_equivalence},
        {7, "SU(2) orthogonality and completeness, j <= 3",
         [] {
             Outcome o;
             o.absorb(verify_su2(6));
             return o;
         }},
        {8, "presence logic, 2jb1 <= 6",
         [] {
             Outcome o;
             o.absorb(verify_presence(6));
             return o;
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d %s: %s (%zu checks, %.2f s)", c.id, o.pass ? "PASS" : "FAIL", c.title, o.checks, secs);
        if (!o.pass) std::printf(" first failure: %s", o.failure.c_str());
        std::printf("\n");
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
