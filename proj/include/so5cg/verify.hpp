#pragma once

// Exact invariant suites. Each returns a pass flag, the number of individual
// checks, and the first counterexample found.

#include <string>
#include <vector>

#include "json.hpp"
#include "so5cg/labels.hpp"

namespace so5cg {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::size_t checks = 0;
    std::string first_failure;
    nlohmann::json details = nlohmann::json::object();
    double seconds = 0;

    void fail(const std::string& what) {
        if (pass) first_failure = what;
        pass = false;
    }
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) fail(what);
    }
};

nlohmann::json to_json(const SuiteResult& r);

/// Gram matrix of coupled reduced vectors is the identity for every source
/// with 2 jb1 <= max_twice_j and every target SO(4) label; also checks that
/// the vectors span (square per target label).
SuiteResult verify_reduced_unitarity(int max_twice_j);

/// <aux, copy1> = X and <aux, aux> = H^2 for each target SO(4) label.
SuiteResult verify_mixing(int max_twice_j);

/// Applying the exchange relation twice is the identity on raising entries;
/// single application agrees with the lowering-channel coefficients; the
/// (0,0) <- (1,1) lowering example.
SuiteResult verify_symmetry(int max_twice_j);

/// Presence: Racah-Speiser, character peeling and the normalization criterion
/// agree; normalizations of present channels are positive; guarded zeros are
/// zeros of the printed formulas wherever those evaluate.
SuiteResult verify_presence(int max_twice_j);

/// Exact column (and optionally row) orthonormality of coupling matrices plus
/// the dimension audit.
SuiteResult verify_full_unitarity(const std::vector<IrrepLabel>& sources, bool rows);

/// The trivial source couples to the identity embedding of the 14.
SuiteResult verify_trivial_source();

/// SU(2) orthogonality, completeness, exchange symmetry for j <= max_twice_j/2
/// and the tabulated values.
SuiteResult verify_su2(int max_twice_j);

/// Decomposition by peeling highest weights off the product character;
/// independent of Racah-Speiser.
std::vector<DecompEntry> decompose_by_characters(const IrrepLabel& source);

}  // namespace so5cg
