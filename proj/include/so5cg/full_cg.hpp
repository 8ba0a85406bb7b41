#pragma once

// Full SO(5) > SO(4) > SO(3) x SO(3) coefficients for Lambda (x) (1,1):
//   reduced coefficient x <s1 m1 P1 M1 | t1 mt1> x <s2 m2 P2 M2 | t2 mt2>
// and the exact coupling matrix of one source irrep.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "so5cg/exactnum.hpp"
#include "so5cg/labels.hpp"

namespace so5cg {

/// Basis state |(j1, j2) m1 m2> of an irrep.
struct State {
    So4Label so4;
    HalfInt m1;
    HalfInt m2;

    std::string to_string() const;
    friend auto operator<=>(const State&, const State&) = default;
};

/// States of an irrep, lexicographic in (j1, j2, m1, m2).
std::vector<State> states(const IrrepLabel& rep);

struct FullKey {
    IrrepLabel target;
    int copy = 1;
    State target_state;
    IrrepLabel source;
    State source_state;
    State part_state;  // a state of (1,1)
};

/// Throws MalformedKey for out-of-range magnetic numbers or SO(4) labels
/// outside their irreps, ChannelAbsent for absent channels. Zero when a
/// magnetic number is not conserved or a selection rule fails.
SqrtSum full(const FullKey& key);

struct ProductState {
    State source;
    State part;
    friend auto operator<=>(const ProductState&, const ProductState&) = default;
};

struct CoupledState {
    IrrepLabel target;
    int copy = 1;
    State state;
    friend auto operator<=>(const CoupledState&, const CoupledState&) = default;
};

struct CouplingMatrix {
    using Column = std::vector<std::pair<std::size_t, SqrtSum>>;  // (row, value), rows ascending

    IrrepLabel source;
    std::vector<ProductState> rows;
    std::vector<CoupledState> cols;
    std::vector<Column> entries;  // one per column

    std::optional<std::size_t> row_index(const ProductState& r) const;
    std::size_t nonzeros() const;
};

/// Rows lexicographic on (source state, 14-state); columns lexicographic on
/// (target, copy, t, mt). Assembly fans out over threads (0 = hardware).
CouplingMatrix coupling_matrix(const IrrepLabel& source, unsigned threads = 0);

struct UnitarityResult {
    bool square = false;
    bool orthonormal = false;
    std::size_t products = 0;  // inner products evaluated
    std::string first_failure;
    bool ok() const { return square && orthonormal; }
};

/// Exact <col_a, col_b> = delta_ab. Only pairs sharing a weight can overlap.
UnitarityResult check_columns(const CouplingMatrix& m);
/// Exact row orthonormality (completeness).
UnitarityResult check_rows(const CouplingMatrix& m);

nlohmann::json to_json(const State& s);
nlohmann::json matrix_to_json(const CouplingMatrix& m);
std::string matrix_to_csv(const CouplingMatrix& m);

}  // namespace so5cg
