#pragma once

// Closed-form reduced coefficients for Lambda (x) (1,1) -> Lambda + shift.
// Each row is one SO(4) component (t || s; part) with t = s + dj; the value is
//   sign(scale) * |scale| * N * prefactor * sqrt(scale_sqrt * radicand / denominator)
// evaluated at (j1, j2) = s and (jb1, jb2) = Lambda. The auxiliary family has
// no N factor.

#include <array>

namespace so5cg::detail {

struct TableRow {
    int twice_dj1;
    int twice_dj2;
    int twice_part;  // part = (twice_part/2, twice_part/2)
    const char* scale;
    const char* scale_sqrt;
    const char* prefactor;
    const char* radicand;
    const char* denominator;
};

/// N = scale * sqrt(scale_sqrt / product of factors).
struct NormRow {
    const char* scale;
    const char* scale_sqrt;
    const char* factors;
};

enum class Family : int { Raise11, Raise10, Raise01, Raise1m1, RaiseHH, RaiseHmH, Diagonal, Aux };

const std::array<TableRow, 14>& table_rows(Family f);
/// Undefined for Family::Aux.
const NormRow& norm_row(Family f);

// Mixing data for the two (0,0) copies: X = <aux, copy1> and H^2 = <aux, aux>.
// X = x_scale * N_diag * x_poly, H^2 = h2_scale * h2_poly.
extern const char* const kMixingXScale;
extern const char* const kMixingXPoly;
extern const char* const kMixingH2Scale;
extern const char* const kMixingH2Poly;

}  // namespace so5cg::detail
