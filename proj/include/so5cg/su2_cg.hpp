#pragma once

#include "so5cg/exactnum.hpp"
#include "so5cg/labels.hpp"

namespace so5cg {

/// <j1 m1 j2 m2 | J M>
struct Su2CgKey {
    HalfInt j1, m1, j2, m2, J, M;
};

/// Throws MalformedKey when a magnetic number is out of range or has the wrong
/// integrality, or a j is negative.
void validate(const Su2CgKey& key);

/// Exact SU(2) Clebsch-Gordan coefficient, Condon-Shortley phases, via the
/// Racah single-sum formula. Zero when M != m1 + m2 or the triangle fails.
SqrtSum su2_cg(const Su2CgKey& key);

/// Magnetic numbers -j, -j+1, ..., j.
std::vector<HalfInt> magnetic_range(HalfInt j);

}  // namespace so5cg
