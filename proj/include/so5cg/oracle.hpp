#pragma once

// Floating-point construction of Spin(5) irreps from gamma matrices, numeric
// decomposition of Lambda (x) (1,1), and comparison with the exact engine.
// Nothing here reads the coefficient tables except compare().

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "json.hpp"
#include "so5cg/full_cg.hpp"
#include "so5cg/labels.hpp"

namespace so5cg {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Ten Hermitian generators L_ab, 1 <= a < b <= 5, in the order
/// (12, 13, 14, 15, 23, 24, 25, 34, 35, 45), satisfying
///   [L_ab, L_cd] = i (d_bc L_ad - d_ac L_bd - d_bd L_ac + d_ad L_bc).
using Generators = std::array<DenseMatrix, 10>;

struct OracleOptions {
    long dim_cap = 64;
    double eigen_tol = 1e-10;
    double tol = 1e-9;
    double projector_tol = 1e-8;
    /// Rotate the numeric basis of every multiplicity-2 block by a random
    /// unitary drawn from this seed.
    std::optional<unsigned> rotate_seed;
};

/// Gamma_1..3 = sx (x) s_k, Gamma_4 = sy (x) 1, Gamma_5 = sz (x) 1.
std::array<DenseMatrix, 5> gamma5();
Generators spinor_generators();  // (i/4)[Gamma_a, Gamma_b]
Generators vector_generators();  // (L_ab)_{ab} = i, (L_ab)_{ba} = -i

/// Index into Generators for 1 <= a < b <= 5.
int generator_index(int a, int b);
/// L_ab for any a != b (antisymmetric extension).
DenseMatrix generator(const Generators& g, int a, int b);
/// max |[L_ab, L_cd] - rhs| over all pairs.
double commutation_residual(const Generators& g);

/// SO(4) = SU(2) x SU(2) inside so(5): J1 = -(L + K)/2, J2 = -(L - K)/2 with
/// L = (L23, L31, L12) and K = (L14, L24, L34).
struct So4Generators {
    std::array<DenseMatrix, 3> j1;
    std::array<DenseMatrix, 3> j2;
};
So4Generators so4_generators(const Generators& g);

struct RepMatrices {
    IrrepLabel label;
    Generators generators;     // in the canonical basis below
    std::vector<State> basis;  // lexicographic (j1, j2, m1, m2), Condon-Shortley within each SO(4) multiplet
    double casimir = 0;        // sum of L_ab^2, measured
    double casimir_residual = 0;
};

/// Built as the top component of a smaller irrep times the vector (or, for
/// jb2 = 0, the spinor). Memoized. Throws DimensionCap, DegenerateBasis,
/// EigenFailure.
const RepMatrices& build_irrep(const IrrepLabel& label, long dim_cap = 64);

struct NumericBlock {
    IrrepLabel target;
    int multiplicity = 0;
    std::vector<CoupledState> states;  // (copy, t, mt) in coupling-matrix order
    DenseMatrix vectors;               // product-basis coordinates, one column per state
};

struct NumericDecomposition {
    IrrepLabel source;
    std::vector<NumericBlock> blocks;  // sorted by target
    double orthonormality_residual = 0;
};

/// Highest-weight vectors of every dominant weight, modules generated from
/// them, and Condon-Shortley coupled states per SO(4) label. Rows follow the
/// coupling-matrix row order.
NumericDecomposition numeric_decompose(const IrrepLabel& source, const OracleOptions& options = {});

struct BlockReport {
    IrrepLabel target;
    int copy_count = 0;
    std::optional<double> max_abs_dev;    // modulus deviation, multiplicity 1
    std::optional<double> aligned_dev;    // signed deviation after the basis gauge fit, multiplicity 1
    std::optional<double> projector_dev;  // Frobenius, multiplicity 2
};

struct ComparisonReport {
    IrrepLabel source;
    bool decomposition_match = false;
    std::vector<BlockReport> blocks;
    double tol = 0;
    double projector_tol = 0;
    double orthonormality_residual = 0;
    bool phases_consistent = false;
    bool pass = false;
    std::string note;
};

/// Moduli of multiplicity-1 coefficients and multiplicity-2 projectors. Free
/// phases of the numeric source, (1,1) and target SO(4) multiplets are fitted
/// from the multiplicity-1 data before any signed comparison.
ComparisonReport compare(const IrrepLabel& source, const OracleOptions& options = {});

nlohmann::json to_json(const ComparisonReport& r);

}  // namespace so5cg
