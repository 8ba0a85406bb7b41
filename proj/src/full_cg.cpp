#include "so5cg/full_cg.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "so5cg/error.hpp"
#include "so5cg/reduced_cg.hpp"
#include "so5cg/su2_cg.hpp"

namespace so5cg {

namespace {

const IrrepLabel kFourteen{1, 1};

bool in_range(HalfInt j, HalfInt m) { return abs(m) <= j && (j - m).is_integer(); }

void validate_state(const IrrepLabel& rep, const State& st, const char* role) {
    if (!in_branching(rep, st.so4))
        throw MalformedKey(std::string(role) + " SO(4) label " + st.so4.to_string() + " is not in " + rep.to_string());
    if (!in_range(st.so4.j1, st.m1) || !in_range(st.so4.j2, st.m2))
        throw MalformedKey(std::string(role) + " state " + st.to_string() + " has a magnetic number out of range");
}

std::pair<int, int> weight(const State& s) { return {s.m1.twice(), s.m2.twice()}; }

std::pair<int, int> weight(const ProductState& p) {
    return {p.source.m1.twice() + p.part.m1.twice(), p.source.m2.twice() + p.part.m2.twice()};
}

SqrtSum dot(const CouplingMatrix::Column& a, const CouplingMatrix::Column& b) {
    SqrtSum acc;
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else {
            acc.add_product(i->second, j->second);
            ++i;
            ++j;
        }
    }
    return acc;
}

// Gram check over groups of vectors that can only overlap within a group.
UnitarityResult check_gram(const std::vector<CouplingMatrix::Column>& vecs,
                           const std::map<std::pair<int, int>, std::vector<std::size_t>>& groups, const char* what) {
    UnitarityResult r;
    r.orthonormal = true;
    for (const auto& [w, idx] : groups) {
        for (std::size_t x = 0; x < idx.size(); ++x)
            for (std::size_t y = x; y < idx.size(); ++y) {
                SqrtSum g = dot(vecs[idx[x]], vecs[idx[y]]);
                ++r.products;
                const bool good = (x == y) ? g == SqrtSum(1) : g.is_zero();
                if (!good && r.orthonormal) {
                    r.orthonormal = false;
                    r.first_failure = std::string(what) + " " + std::to_string(idx[x]) + " . " + what + " " +
                                      std::to_string(idx[y]) + " = " + g.to_string();
                }
            }
    }
    return r;
}

}  // namespace

std::string State::to_string() const {
    return so4.to_string() + "[" + m1.to_string() + "," + m2.to_string() + "]";
}

std::vector<State> states(const IrrepLabel& rep) {
    std::vector<State> out;
    for (const auto& s : branching(rep))
        for (HalfInt m1 : magnetic_range(s.j1))
            for (HalfInt m2 : magnetic_range(s.j2)) out.push_back(State{s, m1, m2});
    return out;
}

SqrtSum full(const FullKey& key) {
    validate_state(key.source, key.source_state, "source");
    validate_state(kFourteen, key.part_state, "(1,1)");
    const Channel ch = Channel::make(key.target.jbar1 - key.source.jbar1, key.target.jbar2 - key.source.jbar2, key.copy);
    if (!in_range(key.target_state.so4.j1, key.target_state.m1) || !in_range(key.target_state.so4.j2, key.target_state.m2))
        throw MalformedKey("target state " + key.target_state.to_string() + " has a magnetic number out of range");
    const State& s = key.source_state;
    const State& p = key.part_state;
    const State& t = key.target_state;
    if (!channel_present(key.source, ch))
        throw ChannelAbsent("channel " + ch.to_string() + " is absent from " + key.source.to_string() + " x (1,1)");
    if (t.m1 != s.m1 + p.m1 || t.m2 != s.m2 + p.m2) return SqrtSum();
    if (!in_branching(key.target, t.so4)) return SqrtSum();
    const HalfInt d1 = t.so4.j1 - s.so4.j1, d2 = t.so4.j2 - s.so4.j2;
    if (!EntryShift::is_valid(d1, d2, p.so4)) return SqrtSum();
    SqrtSum r = coefficient(ReducedKey{key.source, ch, s.so4, EntryShift{d1, d2, p.so4}});
    if (r.is_zero()) return r;
    r *= su2_cg({s.so4.j1, s.m1, p.so4.j1, p.m1, t.so4.j1, t.m1});
    if (r.is_zero()) return r;
    r *= su2_cg({s.so4.j2, s.m2, p.so4.j2, p.m2, t.so4.j2, t.m2});
    return r;
}

std::optional<std::size_t> CouplingMatrix::row_index(const ProductState& r) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), r);
    if (it == rows.end() || *it != r) return std::nullopt;
    return static_cast<std::size_t>(it - rows.begin());
}

std::size_t CouplingMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : entries) n += c.size();
    return n;
}

CouplingMatrix coupling_matrix(const IrrepLabel& source, unsigned threads) {
    CouplingMatrix m;
    m.source = source;
    const auto src_states = states(source);
    const auto part_states = states(kFourteen);
    for (const auto& a : src_states)
        for (const auto& b : part_states) m.rows.push_back(ProductState{a, b});

    struct Multiplet {
        IrrepLabel target;
        int copy;
        So4Label t;
        std::size_t first_col;
    };
    std::vector<Multiplet> work;
    for (const auto& e : decompose_with_14(source))
        for (int copy = 1; copy <= e.multiplicity; ++copy)
            for (const auto& t : branching(e.target)) {
                work.push_back(Multiplet{e.target, copy, t, m.cols.size()});
                for (HalfInt m1 : magnetic_range(t.j1))
                    for (HalfInt m2 : magnetic_range(t.j2)) m.cols.push_back(CoupledState{e.target, copy, State{t, m1, m2}});
            }
    m.entries.resize(m.cols.size());

    const auto source_so4 = branching(source);
    auto build = [&](const Multiplet& w) {
        const Channel ch{w.target.jbar1 - source.jbar1, w.target.jbar2 - source.jbar2, w.copy};
        struct Piece {
            So4Label s;
            So4Label part;
            SqrtSum r;
        };
        std::vector<Piece> pieces;
        for (const auto& s : source_so4) {
            const HalfInt d1 = w.t.j1 - s.j1, d2 = w.t.j2 - s.j2;
            for (int p = 0; p <= 2; ++p) {
                const So4Label part{HalfInt::from_twice(p), HalfInt::from_twice(p)};
                if (!EntryShift::is_valid(d1, d2, part)) continue;
                SqrtSum r = coefficient(ReducedKey{source, ch, s, EntryShift{d1, d2, part}});
                if (!r.is_zero()) pieces.push_back(Piece{s, part, std::move(r)});
            }
        }
        std::size_t col = w.first_col;
        for (HalfInt mt1 : magnetic_range(w.t.j1))
            for (HalfInt mt2 : magnetic_range(w.t.j2)) {
                CouplingMatrix::Column& out = m.entries[col++];
                for (const auto& pc : pieces)
                    for (HalfInt m1 : magnetic_range(pc.s.j1)) {
                        const HalfInt M1 = mt1 - m1;
                        if (!in_range(pc.part.j1, M1)) continue;
                        SqrtSum c1 = su2_cg({pc.s.j1, m1, pc.part.j1, M1, w.t.j1, mt1});
                        if (c1.is_zero()) continue;
                        c1 *= pc.r;
                        for (HalfInt m2 : magnetic_range(pc.s.j2)) {
                            const HalfInt M2 = mt2 - m2;
                            if (!in_range(pc.part.j2, M2)) continue;
                            SqrtSum v = su2_cg({pc.s.j2, m2, pc.part.j2, M2, w.t.j2, mt2});
                            if (v.is_zero()) continue;
                            v *= c1;
                            const ProductState row{State{pc.s, m1, m2}, State{pc.part, M1, M2}};
                            out.emplace_back(*m.row_index(row), std::move(v));
                        }
                    }
                std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, work.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < work.size();) {
            try {
                build(work[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return m;
}

UnitarityResult check_columns(const CouplingMatrix& m) {
    std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < m.cols.size(); ++c) groups[weight(m.cols[c].state)].push_back(c);
    UnitarityResult r = check_gram(m.entries, groups, "column");
    long total = 0;
    for (const auto& e : decompose_with_14(m.source)) total += e.multiplicity * dim(e.target);
    r.square = m.cols.size() == m.rows.size() && total == 14 * dim(m.source) &&
               static_cast<long>(m.rows.size()) == total;
    if (!r.square && r.first_failure.empty()) r.first_failure = "dimension audit failed";
    return r;
}

UnitarityResult check_rows(const CouplingMatrix& m) {
    std::vector<CouplingMatrix::Column> rows(m.rows.size());
    for (std::size_t c = 0; c < m.entries.size(); ++c)
        for (const auto& [row, v] : m.entries[c]) rows[row].emplace_back(c, v);
    std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
    for (std::size_t r = 0; r < m.rows.size(); ++r) groups[weight(m.rows[r])].push_back(r);
    UnitarityResult r = check_gram(rows, groups, "row");
    r.square = m.cols.size() == m.rows.size();
    if (!r.square && r.first_failure.empty()) r.first_failure = "matrix is not square";
    return r;
}

nlohmann::json to_json(const State& s) {
    return {{"twice_j1", s.so4.j1.twice()}, {"twice_j2", s.so4.j2.twice()},
            {"twice_m1", s.m1.twice()},     {"twice_m2", s.m2.twice()}};
}

nlohmann::json matrix_to_json(const CouplingMatrix& m) {
    nlohmann::json rows = nlohmann::json::array(), cols = nlohmann::json::array(), entries = nlohmann::json::array();
    for (const auto& r : m.rows) rows.push_back({{"source", to_json(r.source)}, {"part", to_json(r.part)}});
    for (const auto& c : m.cols)
        cols.push_back({{"target", to_json_label(c.target)}, {"copy", c.copy}, {"state", to_json(c.state)}});
    for (std::size_t c = 0; c < m.entries.size(); ++c)
        for (const auto& [row, v] : m.entries[c]) entries.push_back({{"row", row}, {"col", c}, {"value", v}});
    return {{"schema", "so5cg/1"}, {"source", to_json_label(m.source)}, {"rows", rows}, {"cols", cols},
            {"entries", entries}};
}

std::string matrix_to_csv(const CouplingMatrix& m) {
    std::ostringstream out;
    out << "row,col,src_twice_j1,src_twice_j2,src_twice_m1,src_twice_m2,"
           "part_twice_j1,part_twice_j2,part_twice_m1,part_twice_m2,"
           "tgt_twice_jbar1,tgt_twice_jbar2,copy,tgt_twice_j1,tgt_twice_j2,tgt_twice_m1,tgt_twice_m2,value\n";
    auto put = [&](const State& s) {
        out << s.so4.j1.twice() << ',' << s.so4.j2.twice() << ',' << s.m1.twice() << ',' << s.m2.twice() << ',';
    };
    for (std::size_t c = 0; c < m.entries.size(); ++c)
        for (const auto& [row, v] : m.entries[c]) {
            out << row << ',' << c << ',';
            put(m.rows[row].source);
            put(m.rows[row].part);
            const auto& col = m.cols[c];
            out << col.target.jbar1.twice() << ',' << col.target.jbar2.twice() << ',' << col.copy << ',';
            put(col.state);
            out << v.to_export_string() << '\n';
        }
    return out.str();
}

}  // namespace so5cg
