#include "so5cg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "so5cg/error.hpp"

namespace so5cg {

namespace {

using Vector = Eigen::VectorXcd;
using Weight = std::pair<int, int>;  // (2 m1, 2 m2)

const Complex kI(0, 1);

// Positive roots as (2 dm1, 2 dm2).
constexpr std::array<Weight, 4> kPositiveRoots{{{2, 0}, {0, 2}, {1, 1}, {1, -1}}};

struct SparseSo4 {
    SparseMatrix j1z, j2z, j1p, j2p, j1m, j2m;
};

SparseSo4 sparse_so4(const std::array<SparseMatrix, 10>& g) {
    auto L = [&](int a, int b) -> SparseMatrix {
        return a < b ? g[generator_index(a, b)] : SparseMatrix(-g[generator_index(b, a)]);
    };
    const std::array<SparseMatrix, 3> l{L(2, 3), L(3, 1), L(1, 2)};
    const std::array<SparseMatrix, 3> k{L(1, 4), L(2, 4), L(3, 4)};
    std::array<SparseMatrix, 3> j1, j2;
    for (int i = 0; i < 3; ++i) {
        j1[i] = -0.5 * (l[i] + k[i]);
        j2[i] = -0.5 * (l[i] - k[i]);
    }
    return SparseSo4{j1[2], j2[2], j1[0] + kI * j1[1], j2[0] + kI * j2[1], j1[0] - kI * j1[1], j2[0] - kI * j2[1]};
}

SparseMatrix to_sparse(const DenseMatrix& m) {
    SparseMatrix s = m.sparseView(Complex(1e-14, 0), 1.0);
    s.makeCompressed();
    return s;
}

// A (x) 1 + 1 (x) B.
SparseMatrix kron_sum(const DenseMatrix& a, const DenseMatrix& b) {
    const long da = a.rows(), db = b.rows();
    std::vector<Eigen::Triplet<Complex>> trip;
    for (long i = 0; i < da; ++i)
        for (long j = 0; j < da; ++j)
            if (std::abs(a(i, j)) > 1e-14)
                for (long k = 0; k < db; ++k) trip.emplace_back(i * db + k, j * db + k, a(i, j));
    for (long i = 0; i < da; ++i)
        for (long k = 0; k < db; ++k)
            for (long l = 0; l < db; ++l)
                if (std::abs(b(k, l)) > 1e-14) trip.emplace_back(i * db + k, i * db + l, b(k, l));
    SparseMatrix s(da * db, da * db);
    s.setFromTriplets(trip.begin(), trip.end());
    return s;
}

// Orthonormal basis of the null space of a (columns of the result).
DenseMatrix null_space(const DenseMatrix& a, double tol, const std::string& what) {
    const long n = a.cols();
    if (a.rows() == 0) return DenseMatrix::Identity(n, n);
    Eigen::JacobiSVD<DenseMatrix> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    long rank = 0;
    for (long i = 0; i < sv.size(); ++i) {
        if (sv(i) > 1e-6)
            ++rank;
        else if (sv(i) > tol)
            throw EigenFailure(what + ": singular value " + std::to_string(sv(i)) + " is neither zero nor separated");
    }
    return svd.matrixV().rightCols(n - rank);
}

void fix_phase(Vector& v) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i)
        if (std::abs(v(i)) > std::abs(v(best)) + 1e-9) best = i;
    v *= std::conj(v(best)) / std::abs(v(best));
}

struct WeightIndex {
    std::vector<Weight> of;                    // weight of each coordinate
    std::map<Weight, std::vector<long>> coords;  // coordinates of each weight

    explicit WeightIndex(std::vector<Weight> w) : of(std::move(w)) {
        for (long i = 0; i < static_cast<long>(of.size()); ++i) coords[of[i]].push_back(i);
    }
};

using Module = std::map<Weight, std::vector<Vector>>;

void orthogonalize(Vector& v, const std::vector<Vector>& basis) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) v -= b.dot(v) * b;
}

// Closure of the seeds (each of a single weight) under the generators.
Module generate_module(const std::array<SparseMatrix, 10>& gens, const WeightIndex& wi, const std::vector<Vector>& seeds,
                       long expected, const std::string& what) {
    Module basis;
    std::deque<Vector> queue;
    long total = 0;
    auto add = [&](Vector v, const Weight& w) {
        auto& b = basis[w];
        orthogonalize(v, b);
        const double n = v.norm();
        if (n < 1e-8) return;
        v /= n;
        b.push_back(v);
        queue.push_back(v);
        if (++total > expected)
            throw DegenerateBasis(what + ": generated module exceeds dimension " + std::to_string(expected));
    };
    for (const auto& s : seeds) {
        Eigen::Index i;
        s.cwiseAbs().maxCoeff(&i);
        add(s, wi.of[i]);
    }
    while (!queue.empty()) {
        const Vector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            const Vector y = g * v;
            std::map<Weight, Vector> parts;
            for (Eigen::Index i = 0; i < y.size(); ++i) {
                if (std::abs(y(i)) < 1e-13) continue;
                auto [it, fresh] = parts.try_emplace(wi.of[i]);
                if (fresh) it->second = Vector::Zero(y.size());
                it->second(i) = y(i);
            }
            for (auto& [w, part] : parts) add(std::move(part), w);
        }
    }
    if (total != expected)
        throw DegenerateBasis(what + ": generated module has dimension " + std::to_string(total) + ", expected " +
                              std::to_string(expected));
    return basis;
}

DenseMatrix columns(const std::vector<Vector>& vs, long n) {
    DenseMatrix m(n, static_cast<long>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<long>(i)) = vs[i];
    return m;
}

// Condon-Shortley states of the SO(4) multiplet t grown from its top vector.
std::map<State, Vector> lower_multiplet(const SparseSo4& j, const So4Label& t, const Vector& top, const std::string& what) {
    std::map<State, Vector> out;
    Vector row = top;
    for (HalfInt m1 = t.j1; m1 >= -t.j1; m1 -= HalfInt(1)) {
        if (m1 != t.j1) {
            const double c = std::sqrt(((t.j1 + m1).to_double() + 1) * (t.j1 - m1).to_double());
            row = (j.j1m * row) / c;
        }
        Vector v = row;
        for (HalfInt m2 = t.j2; m2 >= -t.j2; m2 -= HalfInt(1)) {
            if (m2 != t.j2) {
                const double c = std::sqrt(((t.j2 + m2).to_double() + 1) * (t.j2 - m2).to_double());
                v = (j.j2m * v) / c;
            }
            if (std::abs(v.norm() - 1) > 1e-9)
                throw EigenFailure(what + ": lowered state " + t.to_string() + " has norm " + std::to_string(v.norm()));
            out.emplace(State{t, m1, m2}, v);
        }
    }
    return out;
}

// Top vectors of SO(4) multiplet t inside span(b): weight (t1, t2), killed by
// J1+ and J2+ (and by J1z - t1, J2z - t2 when b is not weight-graded).
DenseMatrix so4_tops(const SparseSo4& j, const So4Label& t, const DenseMatrix& b, bool graded, double tol,
                     const std::string& what) {
    const long n = b.rows();
    const int blocks = graded ? 2 : 4;
    DenseMatrix a(blocks * n, b.cols());
    a.topRows(n) = j.j1p * b;
    a.middleRows(n, n) = j.j2p * b;
    if (!graded) {
        a.middleRows(2 * n, n) = j.j1z * b - t.j1.to_double() * b;
        a.bottomRows(n) = j.j2z * b - t.j2.to_double() * b;
    }
    return b * null_space(a, tol, what);
}

Generators restrict(const std::array<SparseMatrix, 10>& gens, const DenseMatrix& u) {
    Generators out;
    for (int i = 0; i < 10; ++i) out[i] = u.adjoint() * (gens[i] * u);
    return out;
}

void measure_casimir(RepMatrices& r) {
    const long d = r.generators[0].rows();
    DenseMatrix c = DenseMatrix::Zero(d, d);
    for (const auto& g : r.generators) c += g * g;
    r.casimir = c.trace().real() / static_cast<double>(d);
    r.casimir_residual = (c - r.casimir * DenseMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

// Canonical basis of an irrep given as the full space of `raw`.
RepMatrices canonicalize_dense(const Generators& raw, const IrrepLabel& label, double tol) {
    std::array<SparseMatrix, 10> gens;
    for (int i = 0; i < 10; ++i) gens[i] = to_sparse(raw[i]);
    const SparseSo4 j = sparse_so4(gens);
    const long d = raw[0].rows();
    std::map<State, Vector> all;
    for (const auto& t : branching(label)) {
        const std::string what = "irrep " + label.to_string() + " multiplet " + t.to_string();
        DenseMatrix tops = so4_tops(j, t, DenseMatrix::Identity(d, d), false, tol, what);
        if (tops.cols() != 1) throw DegenerateBasis(what + ": " + std::to_string(tops.cols()) + " top vectors");
        Vector top = tops.col(0);
        fix_phase(top);
        all.merge(lower_multiplet(j, t, top, what));
    }
    RepMatrices r;
    r.label = label;
    std::vector<Vector> us;
    for (auto& [s, v] : all) {
        r.basis.push_back(s);
        us.push_back(v);
    }
    r.generators = restrict(gens, columns(us, d));
    measure_casimir(r);
    return r;
}

std::vector<Weight> product_weights(const RepMatrices& a, const RepMatrices& b) {
    std::vector<Weight> w;
    for (const auto& x : a.basis)
        for (const auto& y : b.basis) w.emplace_back((x.m1 + y.m1).twice(), (x.m2 + y.m2).twice());
    return w;
}

std::array<SparseMatrix, 10> product_generators(const RepMatrices& a, const RepMatrices& b) {
    std::array<SparseMatrix, 10> g;
    for (int i = 0; i < 10; ++i) g[i] = kron_sum(a.generators[i], b.generators[i]);
    return g;
}

long top_index(const RepMatrices& r) {
    const State top{So4Label{r.label.jbar1, r.label.jbar2}, r.label.jbar1, r.label.jbar2};
    auto it = std::find(r.basis.begin(), r.basis.end(), top);
    if (it == r.basis.end()) throw DegenerateBasis("highest state missing in " + r.label.to_string());
    return it - r.basis.begin();
}

std::unique_ptr<RepMatrices> construct(const IrrepLabel& label, long cap, double tol) {
    const HalfInt zero(0), half = HalfInt::half();
    if (label == IrrepLabel{zero, zero}) {
        auto r = std::make_unique<RepMatrices>();
        r->label = label;
        for (auto& g : r->generators) g = DenseMatrix::Zero(1, 1);
        r->basis.push_back(State{So4Label{0, 0}, 0, 0});
        return r;
    }
    if (label == IrrepLabel{half, zero}) return std::make_unique<RepMatrices>(canonicalize_dense(spinor_generators(), label, tol));
    if (label == IrrepLabel{half, half}) return std::make_unique<RepMatrices>(canonicalize_dense(vector_generators(), label, tol));

    const bool via_vector = label.jbar2 > zero;
    const RepMatrices& base = build_irrep(via_vector ? IrrepLabel{label.jbar1 - half, label.jbar2 - half}
                                                     : IrrepLabel{label.jbar1 - half, zero},
                                          cap);
    const RepMatrices& fund = build_irrep(via_vector ? IrrepLabel{half, half} : IrrepLabel{half, zero}, cap);
    const auto gens = product_generators(base, fund);
    const WeightIndex wi(product_weights(base, fund));
    const long n = static_cast<long>(wi.of.size());
    Vector seed = Vector::Zero(n);
    seed(top_index(base) * static_cast<long>(fund.basis.size()) + top_index(fund)) = 1;
    const std::string what = "irrep " + label.to_string();
    const Module module = generate_module(gens, wi, {seed}, dim(label), what);
    const SparseSo4 j = sparse_so4(gens);

    std::map<State, Vector> all;
    for (const auto& t : branching(label)) {
        const auto it = module.find(Weight{t.j1.twice(), t.j2.twice()});
        if (it == module.end()) throw DegenerateBasis(what + ": empty weight space " + t.to_string());
        const std::string w = what + " multiplet " + t.to_string();
        DenseMatrix tops = so4_tops(j, t, columns(it->second, n), true, tol, w);
        if (tops.cols() != 1) throw DegenerateBasis(w + ": " + std::to_string(tops.cols()) + " top vectors");
        Vector top = tops.col(0);
        fix_phase(top);
        all.merge(lower_multiplet(j, t, top, w));
    }
    auto r = std::make_unique<RepMatrices>();
    r->label = label;
    std::vector<Vector> us;
    for (auto& [s, v] : all) {
        r->basis.push_back(s);
        us.push_back(v);
    }
    r->generators = restrict(gens, columns(us, n));
    measure_casimir(*r);
    return r;
}

DenseMatrix random_unitary(long n, std::mt19937& rng) {
    std::normal_distribution<double> normal;
    DenseMatrix m(n, n);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) m(i, k) = Complex(normal(rng), normal(rng));
    Eigen::HouseholderQR<DenseMatrix> qr(m);
    return qr.householderQ() * DenseMatrix::Identity(n, n);
}

}  // namespace

std::array<DenseMatrix, 5> gamma5() {
    DenseMatrix sx(2, 2), sy(2, 2), sz(2, 2), id = DenseMatrix::Identity(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, -kI, kI, 0;
    sz << 1, 0, 0, -1;
    auto kron = [](const DenseMatrix& a, const DenseMatrix& b) {
        DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
        for (long i = 0; i < a.rows(); ++i)
            for (long j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        return out;
    };
    return {kron(sx, sx), kron(sx, sy), kron(sx, sz), kron(sy, id), kron(sz, id)};
}

int generator_index(int a, int b) {
    static constexpr int offset[] = {0, 4, 7, 9};
    if (a < 1 || b > 5 || a >= b) throw std::invalid_argument("generator index needs 1 <= a < b <= 5");
    return offset[a - 1] + (b - a - 1);
}

DenseMatrix generator(const Generators& g, int a, int b) {
    return a < b ? g[generator_index(a, b)] : DenseMatrix(-g[generator_index(b, a)]);
}

Generators spinor_generators() {
    const auto gm = gamma5();
    Generators g;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            g[generator_index(a, b)] = (kI / 4.0) * (gm[a - 1] * gm[b - 1] - gm[b - 1] * gm[a - 1]);
    return g;
}

Generators vector_generators() {
    Generators g;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            DenseMatrix m = DenseMatrix::Zero(5, 5);
            m(a - 1, b - 1) = kI;
            m(b - 1, a - 1) = -kI;
            g[generator_index(a, b)] = m;
        }
    return g;
}

double commutation_residual(const Generators& g) {
    const long d = g[0].rows();
    const DenseMatrix zero = DenseMatrix::Zero(d, d);
    auto l = [&](int x, int y) { return x == y ? zero : generator(g, x, y); };
    auto delta = [](int x, int y) { return x == y ? 1.0 : 0.0; };
    double worst = 0;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            for (int c = 1; c <= 5; ++c)
                for (int e = c + 1; e <= 5; ++e) {
                    const DenseMatrix lhs = l(a, b) * l(c, e) - l(c, e) * l(a, b);
                    const DenseMatrix rhs = delta(b, c) * l(a, e) - delta(a, c) * l(b, e) - delta(b, e) * l(a, c) +
                                            delta(a, e) * l(b, c);
                    worst = std::max(worst, (lhs - kI * rhs).cwiseAbs().maxCoeff());
                }
    return worst;
}

So4Generators so4_generators(const Generators& g) {
    const std::array<DenseMatrix, 3> l{generator(g, 2, 3), generator(g, 3, 1), generator(g, 1, 2)};
    const std::array<DenseMatrix, 3> k{generator(g, 1, 4), generator(g, 2, 4), generator(g, 3, 4)};
    So4Generators out;
    for (int i = 0; i < 3; ++i) {
        out.j1[i] = -0.5 * (l[i] + k[i]);
        out.j2[i] = -0.5 * (l[i] - k[i]);
    }
    return out;
}

const RepMatrices& build_irrep(const IrrepLabel& label, long dim_cap) {
    if (dim(label) > dim_cap)
        throw DimensionCap("irrep " + label.to_string() + " has dimension " + std::to_string(dim(label)) +
                           " above the cap " + std::to_string(dim_cap));
    static std::recursive_mutex mutex;
    static std::map<IrrepLabel, std::unique_ptr<RepMatrices>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(label);
    if (it != cache.end()) return *it->second;
    auto built = construct(label, dim_cap, 1e-10);
    return *cache.emplace(label, std::move(built)).first->second;
}

NumericDecomposition numeric_decompose(const IrrepLabel& source, const OracleOptions& options) {
    const RepMatrices& src = build_irrep(source, options.dim_cap);
    const RepMatrices& fourteen = build_irrep(IrrepLabel{1, 1}, options.dim_cap);
    if (src.basis != states(source) || fourteen.basis != states(IrrepLabel{1, 1}))
        throw std::logic_error("numeric basis order differs from the exact state order");
    const auto gens = product_generators(src, fourteen);
    const WeightIndex wi(product_weights(src, fourteen));
    const long n = static_cast<long>(wi.of.size());
    const SparseSo4 j = sparse_so4(gens);
    std::mt19937 rng(options.rotate_seed.value_or(0));

    NumericDecomposition out;
    out.source = source;
    long total = 0;
    for (const auto& [w, coords] : wi.coords) {
        if (w.second < 0 || w.first < w.second) continue;  // not dominant
        // Highest-weight vectors: every positive-root component of every generator vanishes.
        std::vector<std::vector<long>> targets;
        long rows = 0;
        for (const auto& r : kPositiveRoots) {
            auto it = wi.coords.find(Weight{w.first + r.first, w.second + r.second});
            if (it != wi.coords.end()) {
                targets.push_back(it->second);
                rows += static_cast<long>(it->second.size()) * 10;
            }
        }
        DenseMatrix a = DenseMatrix::Zero(rows, static_cast<long>(coords.size()));
        long row0 = 0;
        for (const auto& tc : targets)
            for (const auto& g : gens) {
                for (std::size_t c = 0; c < coords.size(); ++c)
                    for (std::size_t r = 0; r < tc.size(); ++r) a(row0 + r, c) = g.coeff(tc[r], coords[c]);
                row0 += static_cast<long>(tc.size());
            }
        const IrrepLabel target{HalfInt::from_twice(w.first), HalfInt::from_twice(w.second)};
        const std::string what = source.to_string() + " x (1,1) block " + target.to_string();
        const DenseMatrix hw = null_space(a, options.eigen_tol, what);
        if (hw.cols() == 0) continue;
        const int mult = static_cast<int>(hw.cols());
        std::vector<Vector> seeds;
        for (long c = 0; c < hw.cols(); ++c) {
            Vector v = Vector::Zero(n);
            for (std::size_t i = 0; i < coords.size(); ++i) v(coords[i]) = hw(static_cast<long>(i), c);
            seeds.push_back(v);
        }
        const Module module = generate_module(gens, wi, seeds, mult * dim(target), what);
        total += mult * dim(target);

        // per copy: states of every multiplet
        std::vector<std::map<State, Vector>> per_copy(mult);
        for (const auto& t : branching(target)) {
            const auto it = module.find(Weight{t.j1.twice(), t.j2.twice()});
            if (it == module.end()) throw DegenerateBasis(what + ": empty weight space " + t.to_string());
            const std::string wt = what + " multiplet " + t.to_string();
            DenseMatrix tops = so4_tops(j, t, columns(it->second, n), true, options.eigen_tol, wt);
            if (tops.cols() != mult)
                throw DegenerateBasis(wt + ": " + std::to_string(tops.cols()) + " top vectors, expected " +
                                      std::to_string(mult));
            if (mult > 1 && options.rotate_seed) tops = tops * random_unitary(mult, rng);
            for (int c = 0; c < mult; ++c) {
                Vector top = tops.col(c);
                if (mult == 1) fix_phase(top);
                per_copy[c].merge(lower_multiplet(j, t, top, wt));
            }
        }
        NumericBlock block;
        block.target = target;
        block.multiplicity = mult;
        std::vector<Vector> vs;
        for (int c = 0; c < mult; ++c)
            for (auto& [s, v] : per_copy[c]) {
                block.states.push_back(CoupledState{target, c + 1, s});
                vs.push_back(v);
            }
        block.vectors = columns(vs, n);
        out.blocks.push_back(std::move(block));
    }
    if (total != n)
        throw DegenerateBasis(source.to_string() + " x (1,1): blocks cover " + std::to_string(total) + " of " +
                              std::to_string(n) + " dimensions");
    std::sort(out.blocks.begin(), out.blocks.end(), [](const auto& x, const auto& y) { return x.target < y.target; });
    DenseMatrix all(n, n);
    long c = 0;
    for (const auto& b : out.blocks) {
        all.middleCols(c, b.vectors.cols()) = b.vectors;
        c += b.vectors.cols();
    }
    out.orthonormality_residual = (all.adjoint() * all - DenseMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    return out;
}

ComparisonReport compare(const IrrepLabel& source, const OracleOptions& options) {
    ComparisonReport rep;
    rep.source = source;
    rep.tol = options.tol;
    rep.projector_tol = options.projector_tol;
    const NumericDecomposition nd = numeric_decompose(source, options);
    rep.orthonormality_residual = nd.orthonormality_residual;
    std::vector<DecompEntry> numeric;
    for (const auto& b : nd.blocks) numeric.push_back(DecompEntry{b.target, b.multiplicity});
    rep.decomposition_match = numeric == decompose_with_14(source);
    if (!rep.decomposition_match) {
        rep.note = "numeric decomposition differs from Racah-Speiser";
        return rep;
    }

    const CouplingMatrix exact = coupling_matrix(source);
    const long n = static_cast<long>(exact.rows.size());
    if (n != nd.blocks.front().vectors.rows()) throw std::logic_error("numeric and exact row counts differ");
    Eigen::MatrixXd an = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t c = 0; c < exact.entries.size(); ++c)
        for (const auto& [r, v] : exact.entries[c]) an(static_cast<long>(r), static_cast<long>(c)) = to_double(v);
    auto col_of = [&](const CoupledState& s) {
        auto it = std::lower_bound(exact.cols.begin(), exact.cols.end(), s);
        if (it == exact.cols.end() || *it != s) throw std::logic_error("numeric state missing from the coupling matrix");
        return static_cast<long>(it - exact.cols.begin());
    };

    // Gauge nodes: (source multiplet, (1,1) multiplet) per row; (target, t) per multiplicity-1 column.
    std::map<std::pair<So4Label, So4Label>, int> row_node_ids;
    std::vector<int> row_node(static_cast<std::size_t>(n));
    for (long r = 0; r < n; ++r) {
        const auto key = std::make_pair(exact.rows[r].source.so4, exact.rows[r].part.so4);
        row_node[r] = row_node_ids.try_emplace(key, static_cast<int>(row_node_ids.size())).first->second;
    }
    std::map<std::pair<IrrepLabel, So4Label>, int> col_node_ids;
    struct Edge {
        int row, col;
        Complex ratio;
    };
    std::vector<Edge> edges;
    for (const auto& b : nd.blocks) {
        if (b.multiplicity != 1) continue;
        for (std::size_t k = 0; k < b.states.size(); ++k) {
            const long c = col_of(b.states[k]);
            const int cn = col_node_ids.try_emplace({b.target, b.states[k].state.so4}, static_cast<int>(col_node_ids.size()))
                               .first->second;
            for (long r = 0; r < n; ++r)
                if (std::abs(an(r, c)) > 1e-6) {
                    const Complex ratio = b.vectors(r, static_cast<long>(k)) / an(r, c);
                    edges.push_back(Edge{row_node[r], cn, ratio / std::abs(ratio)});
                }
        }
    }
    // Breadth-first phase assignment: numeric = q(col) p(row) analytic.
    std::vector<std::optional<Complex>> p(row_node_ids.size()), q(col_node_ids.size());
    std::vector<std::vector<std::size_t>> by_row(p.size()), by_col(q.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        by_row[edges[e].row].push_back(e);
        by_col[edges[e].col].push_back(e);
    }
    for (std::size_t start = 0; start < q.size(); ++start) {
        if (q[start]) continue;
        q[start] = Complex(1, 0);
        std::deque<std::pair<bool, int>> todo{{false, static_cast<int>(start)}};
        while (!todo.empty()) {
            auto [is_row, id] = todo.front();
            todo.pop_front();
            for (std::size_t e : is_row ? by_row[id] : by_col[id]) {
                const Edge& ed = edges[e];
                if (is_row && !q[ed.col]) {
                    q[ed.col] = ed.ratio / *p[id];
                    todo.emplace_back(false, ed.col);
                } else if (!is_row && !p[ed.row]) {
                    p[ed.row] = ed.ratio / *q[id];
                    todo.emplace_back(true, ed.row);
                }
            }
        }
    }
    std::size_t unaligned = 0;
    Vector phase(n);
    for (long r = 0; r < n; ++r) {
        if (!p[row_node[r]]) ++unaligned;
        phase(r) = p[row_node[r]].value_or(Complex(1, 0));
    }

    rep.pass = true;
    rep.phases_consistent = true;
    for (const auto& b : nd.blocks) {
        BlockReport br;
        br.target = b.target;
        br.copy_count = b.multiplicity;
        if (b.multiplicity == 1) {
            double mod = 0, signed_dev = 0;
            for (std::size_t k = 0; k < b.states.size(); ++k) {
                const long c = col_of(b.states[k]);
                const Complex qc = q[col_node_ids.at({b.target, b.states[k].state.so4})].value_or(Complex(1, 0));
                for (long r = 0; r < n; ++r) {
                    const Complex num = b.vectors(r, static_cast<long>(k));
                    mod = std::max(mod, std::abs(std::abs(num) - std::abs(an(r, c))));
                    signed_dev = std::max(signed_dev, std::abs(num - qc * phase(r) * an(r, c)));
                }
            }
            br.max_abs_dev = mod;
            br.aligned_dev = signed_dev;
            if (mod > options.tol) rep.pass = false;
            if (signed_dev > options.tol) rep.phases_consistent = false;
        } else {
            // Per (t, mt): projector onto the span of all copies.
            std::map<State, std::vector<long>> numeric_cols;
            for (std::size_t k = 0; k < b.states.size(); ++k) numeric_cols[b.states[k].state].push_back(static_cast<long>(k));
            double worst = 0;
            for (const auto& [st, ks] : numeric_cols) {
                DenseMatrix pn = DenseMatrix::Zero(n, n);
                Eigen::MatrixXd pa = Eigen::MatrixXd::Zero(n, n);
                for (long k : ks) {
                    const Vector v = phase.conjugate().cwiseProduct(b.vectors.col(k));
                    pn += v * v.adjoint();
                }
                for (int copy = 1; copy <= b.multiplicity; ++copy) {
                    const long c = col_of(CoupledState{b.target, copy, st});
                    pa += an.col(c) * an.col(c).transpose();
                }
                worst = std::max(worst, (pn - pa.cast<Complex>()).norm());
            }
            br.projector_dev = worst;
            if (worst > options.projector_tol) rep.pass = false;
        }
        rep.blocks.push_back(br);
    }
    if (unaligned > 0) rep.note = std::to_string(unaligned) + " rows carry no fitted phase";
    return rep;
}

nlohmann::json to_json(const ComparisonReport& r) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : r.blocks) {
        nlohmann::json j{{"target", to_json_label(b.target)}, {"copy_count", b.copy_count}};
        j["max_abs_dev"] = b.max_abs_dev ? nlohmann::json(*b.max_abs_dev) : nlohmann::json(nullptr);
        j["aligned_dev"] = b.aligned_dev ? nlohmann::json(*b.aligned_dev) : nlohmann::json(nullptr);
        j["projector_dev"] = b.projector_dev ? nlohmann::json(*b.projector_dev) : nlohmann::json(nullptr);
        blocks.push_back(j);
    }
    nlohmann::json j{{"schema", "so5cg/1"},
                     {"source", to_json_label(r.source)},
                     {"decomposition_match", r.decomposition_match},
                     {"blocks", blocks},
                     {"orthonormality_residual", r.orthonormality_residual},
                     {"phases_consistent", r.phases_consistent},
                     {"pass", r.pass},
                     {"tol", r.tol},
                     {"projector_tol", r.projector_tol}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace so5cg
