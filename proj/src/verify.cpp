#include "so5cg/verify.hpp"

#include <chrono>
#include <map>

#include "so5cg/error.hpp"
#include "so5cg/full_cg.hpp"
#include "so5cg/reduced_cg.hpp"
#include "so5cg/su2_cg.hpp"

namespace so5cg {

namespace {

class Timer {
public:
    explicit Timer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    SuiteResult& r_;
    std::chrono::steady_clock::time_point start_;
};

const std::array<So4Label, 3> kParts{So4Label{0, 0}, So4Label{HalfInt::half(), HalfInt::half()}, So4Label{1, 1}};

struct Row {
    So4Label s;
    So4Label part;
};

// (s, P) pairs of the source that can couple to t.
std::vector<Row> rows_for(const IrrepLabel& source, const So4Label& t) {
    std::vector<Row> out;
    for (const auto& s : branching(source))
        for (const auto& p : kParts)
            if (triangle(s.j1, p.j1, t.j1) && triangle(s.j2, p.j2, t.j2)) out.push_back(Row{s, p});
    return out;
}

EntryShift entry_for(const Row& r, const So4Label& t) { return EntryShift{t.j1 - r.s.j1, t.j2 - r.s.j2, r.part}; }

SqrtSum dot(const std::vector<SqrtSum>& a, const std::vector<SqrtSum>& b) {
    SqrtSum acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc.add_product(a[i], b[i]);
    return acc;
}

std::vector<Channel> present_channels(const IrrepLabel& source) {
    std::vector<Channel> out;
    for (const auto& e : decompose_with_14(source))
        for (int copy = 1; copy <= e.multiplicity; ++copy)
            out.push_back(Channel{e.target.jbar1 - source.jbar1, e.target.jbar2 - source.jbar2, copy});
    return out;
}

std::string where(const IrrepLabel& source, const So4Label& t) {
    return "source " + source.to_string() + " t " + t.to_string();
}

template <typename F>
void guarded(SuiteResult& r, const std::string& context, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        r.expect(false, context + ": " + e.what());
    }
}

}  // namespace

nlohmann::json to_json(const SuiteResult& r) {
    nlohmann::json j{{"suite", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"seconds", r.seconds}};
    if (!r.pass) j["first_failure"] = r.first_failure;
    if (!r.details.empty()) j["details"] = r.details;
    return j;
}

SuiteResult verify_reduced_unitarity(int max_twice_j) {
    SuiteResult r;
    r.name = "reduced_unitarity";
    Timer timer(r);
    std::size_t vectors = 0;
    for (const auto& source : irreps_up_to(max_twice_j)) {
        guarded(r, source.to_string(), [&] {
            const auto channels = present_channels(source);
            std::map<So4Label, std::vector<Channel>> by_t;
            for (const auto& ch : channels)
                for (const auto& t : branching(ch.target_of(source))) by_t[t].push_back(ch);
            for (const auto& [t, chs] : by_t) {
                const auto rows = rows_for(source, t);
                r.expect(rows.size() == chs.size(), where(source, t) + ": " + std::to_string(rows.size()) +
                                                        " rows vs " + std::to_string(chs.size()) + " coupled vectors");
                std::vector<std::vector<SqrtSum>> vecs;
                for (const auto& ch : chs) {
                    std::vector<SqrtSum> v;
                    for (const auto& row : rows) v.push_back(coefficient(ReducedKey{source, ch, row.s, entry_for(row, t)}));
                    vecs.push_back(std::move(v));
                }
                vectors += vecs.size();
                for (std::size_t a = 0; a < vecs.size(); ++a)
                    for (std::size_t b = a; b < vecs.size(); ++b) {
                        SqrtSum g = dot(vecs[a], vecs[b]);
                        r.expect(a == b ? g == SqrtSum(1) : g.is_zero(),
                                 where(source, t) + ": <" + chs[a].to_string() + ", " + chs[b].to_string() +
                                     "> = " + g.to_string());
                    }
            }
        });
    }
    r.details = {{"max_twice_j", max_twice_j}, {"vectors", vectors}};
    return r;
}

SuiteResult verify_mixing(int max_twice_j) {
    SuiteResult r;
    r.name = "mixing";
    Timer timer(r);
    const Channel first{0, 0, 1};
    std::size_t sources = 0;
    for (const auto& source : irreps_up_to(max_twice_j)) {
        if (!channel_present(source, first)) continue;
        ++sources;
        guarded(r, source.to_string(), [&] {
            const MixingData m = mixing(source);
            r.expect(m.norm2 >= 0, source.to_string() + ": H^2 - X^2 < 0");
            for (const auto& t : branching(source)) {
                std::vector<SqrtSum> aux, c1;
                for (const auto& row : rows_for(source, t)) {
                    const ReducedKey key{source, first, row.s, entry_for(row, t)};
                    aux.push_back(reduced_aux(key));
                    c1.push_back(reduced(key));
                }
                SqrtSum x = dot(aux, c1), h2 = dot(aux, aux);
                r.expect(x == m.x, where(source, t) + ": <aux, copy1> = " + x.to_string() + " but X = " + m.x.to_string());
                r.expect(h2 == SqrtSum(m.h2),
                         where(source, t) + ": <aux, aux> = " + h2.to_string() + " but H^2 = " + to_string(m.h2));
            }
        });
    }
    r.details = {{"max_twice_j", max_twice_j}, {"sources", sources}};
    return r;
}

SuiteResult verify_symmetry(int max_twice_j) {
    SuiteResult r;
    r.name = "symmetry";
    Timer timer(r);
    std::size_t nonzero = 0;
    for (const auto& source : irreps_up_to(max_twice_j)) {
        for (const auto& ch : all_channels()) {
            if (!ch.is_raising() || !channel_present(source, ch)) continue;
            const IrrepLabel target = ch.target_of(source);
            guarded(r, source.to_string() + " " + ch.to_string(), [&] {
                r.expect(channel_present(target, ch.mirrored()),
                         "mirror of " + ch.to_string() + " absent at " + target.to_string());
                for (const auto& s : branching(source))
                    for (const auto& e : all_entry_shifts()) {
                        const ReducedKey key{source, ch, s, e};
                        const auto t = key.target_so4();
                        if (!t) continue;
                        const SqrtSum v = coefficient(key);
                        const SqrtSum once = exchange(v, source, target, s, *t, e.part);
                        const SqrtSum twice = exchange(once, target, source, *t, s, e.part);
                        const std::string k = key.to_string();
                        r.expect(twice == v, k + ": involution gives " + twice.to_string() + " not " + v.to_string());
                        if (!v.is_zero()) ++nonzero;
                        if (in_branching(target, *t)) {
                            const SqrtSum lowered = coefficient(ReducedKey{target, ch.mirrored(), *t, e.negated()});
                            r.expect(lowered == once, k + ": lowering coefficient " + lowered.to_string() +
                                                          " disagrees with the exchange value " + once.to_string());
                        }
                    }
            });
        }
    }
    guarded(r, "lowering example", [&] {
        const IrrepLabel zero{0, 0}, fourteen{1, 1};
        SqrtSum sum;
        for (const auto& p : kParts) {
            SqrtSum v = symmetry_extend(zero, fourteen, So4Label{0, 0}, p, p);
            if (p == So4Label{1, 1})
                r.expect(v.square_of_term() == make_rational(9, 14), "(0,0) <- (1,1) at s = P = (1,1): " + v.to_string());
            sum.add_product(v, v);
        }
        r.expect(sum == SqrtSum(1), "(0,0) <- (1,1) squares sum to " + sum.to_string());
    });
    r.details = {{"max_twice_j", max_twice_j}, {"nonzero_entries", nonzero}};
    return r;
}

std::vector<DecompEntry> decompose_by_characters(const IrrepLabel& source) {
    // Weights in doubled orthonormal coordinates: (m1 + m2, m1 - m2).
    auto character = [](const IrrepLabel& rep) {
        std::map<std::pair<int, int>, long> w;
        for (const auto& s : branching(rep))
            for (HalfInt m1 : magnetic_range(s.j1))
                for (HalfInt m2 : magnetic_range(s.j2)) ++w[{(m1 + m2).twice(), (m1 - m2).twice()}];
        return w;
    };
    const auto a = character(source), b = character(IrrepLabel{1, 1});
    std::map<std::pair<int, int>, long> product;
    for (const auto& [wa, na] : a)
        for (const auto& [wb, nb] : b) product[{wa.first + wb.first, wa.second + wb.second}] += na * nb;
    std::map<IrrepLabel, int> mult;
    for (;;) {
        auto top = product.rbegin();
        while (top != product.rend() && top->second == 0) ++top;
        if (top == product.rend()) break;
        // Lexicographic order refines dominance, so the top weight is highest.
        const auto [l1, l2] = top->first;
        if ((l1 + l2) % 2 != 0) throw std::logic_error("character peeling hit a non-weight");
        const IrrepLabel rep = IrrepLabel::make(HalfInt::from_twice((l1 + l2) / 2), HalfInt::from_twice((l1 - l2) / 2));
        const long n = top->second;
        if (n < 0) throw std::logic_error("character peeling went negative");
        mult[rep] += static_cast<int>(n);
        for (const auto& [w, c] : character(rep)) {
            product[w] -= n * c;
            if (product[w] < 0) throw std::logic_error("character peeling went negative");
        }
    }
    std::vector<DecompEntry> out;
    for (const auto& [rep, m] : mult) out.push_back(DecompEntry{rep, m});
    return out;
}

SuiteResult verify_presence(int max_twice_j) {
    SuiteResult r;
    r.name = "presence";
    Timer timer(r);
    std::size_t guarded_zeros = 0;
    for (const auto& source : irreps_up_to(max_twice_j)) {
        guarded(r, source.to_string(), [&] {
            r.expect(decompose_with_14(source) == decompose_by_characters(source),
                     source.to_string() + ": Racah-Speiser and character peeling disagree");
            for (const auto& ch : all_channels()) {
                const bool present = channel_present(source, ch);
                const std::string k = source.to_string() + " " + ch.to_string();
                r.expect(present == !normalization_predicts_absent(source, ch),
                         k + ": normalization criterion disagrees with the decomposition");
                if (!present || ch.is_lowering() || ch.copy == 2) continue;
                r.expect(normalization(source, ch).term_sign() > 0, k + ": normalization not positive");
                const IrrepLabel target = ch.target_of(source);
                for (const auto& s : branching(source))
                    for (const auto& e : all_entry_shifts()) {
                        const ReducedKey key{source, ch, s, e};
                        const auto t = key.target_so4();
                        if (!t || !triangle(s.j1, e.part.j1, t->j1) || !triangle(s.j2, e.part.j2, t->j2)) continue;
                        if (in_branching(target, *t)) continue;
                        for (bool aux : {false, true}) {
                            if (aux && !ch.is_diagonal()) continue;
                            const auto raw = evaluate_unguarded(key, aux);
                            if (!raw) continue;
                            ++guarded_zeros;
                            r.expect(raw->is_zero(), key.to_string() + (aux ? " (aux)" : "") +
                                                         ": printed formula gives " + raw->to_string() +
                                                         " where the guard returns 0");
                        }
                    }
            }
        });
    }
    guarded(r, "(1,1) decomposition", [&] {
        const IrrepLabel fourteen{1, 1};
        const auto d = decompose_with_14(fourteen);
        long total = 0;
        for (const auto& e : d) total += e.multiplicity * dim(e.target);
        r.expect(d.size() == 6, "(1,1) x (1,1) has " + std::to_string(d.size()) + " irreps");
        r.expect(total == 196, "(1,1) x (1,1) has total dimension " + std::to_string(total));
        const HalfInt h3 = HalfInt::from_twice(3), h1 = HalfInt::half();
        for (const auto& e : d)
            r.expect(e.target != IrrepLabel{h3, h3} && e.target != IrrepLabel{h3, h1},
                     "(1,1) x (1,1) contains " + e.target.to_string());
    });
    r.details = {{"max_twice_j", max_twice_j}, {"guarded_zeros_checked", guarded_zeros}};
    return r;
}

SuiteResult verify_full_unitarity(const std::vector<IrrepLabel>& sources, bool rows) {
    SuiteResult r;
    r.name = "full_unitarity";
    Timer timer(r);
    nlohmann::json per = nlohmann::json::array();
    for (const auto& source : sources) {
        guarded(r, source.to_string(), [&] {
            const auto start = std::chrono::steady_clock::now();
            const CouplingMatrix m = coupling_matrix(source);
            const UnitarityResult c = check_columns(m);
            r.expect(c.square, source.to_string() + ": dimension audit failed");
            r.expect(c.orthonormal, source.to_string() + ": " + c.first_failure);
            nlohmann::json d{{"source", source.to_string()}, {"size", m.cols.size()}, {"nonzeros", m.nonzeros()},
                             {"column_products", c.products}};
            if (rows) {
                const UnitarityResult rr = check_rows(m);
                r.expect(rr.ok(), source.to_string() + ": " + rr.first_failure);
                d["row_products"] = rr.products;
            }
            d["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            per.push_back(d);
        });
    }
    r.details = {{"sources", per}};
    return r;
}

SuiteResult verify_trivial_source() {
    SuiteResult r;
    r.name = "trivial_source";
    Timer timer(r);
    guarded(r, "(0,0)", [&] {
        const CouplingMatrix m = coupling_matrix(IrrepLabel{0, 0});
        r.expect(m.rows.size() == 14 && m.cols.size() == 14, "coupling matrix of (0,0) is not 14 x 14");
        std::vector<int> hits(m.rows.size(), 0);
        for (std::size_t c = 0; c < m.cols.size(); ++c) {
            const auto& col = m.entries[c];
            r.expect(col.size() == 1, "column " + std::to_string(c) + " has " + std::to_string(col.size()) + " entries");
            if (col.size() != 1) continue;
            const auto& [row, v] = col.front();
            ++hits[row];
            r.expect(v == SqrtSum(1) || v == SqrtSum(-1), "entry " + v.to_string() + " is not +-1");
            r.expect(m.cols[c].target == IrrepLabel{1, 1} && m.rows[row].part == m.cols[c].state,
                     "column " + std::to_string(c) + " is not the embedding of its 14-state");
        }
        for (int h : hits) r.expect(h == 1, "a row of the (0,0) matrix is hit " + std::to_string(h) + " times");
        r.expect(check_columns(m).ok(), "(0,0) matrix is not orthogonal");
    });
    return r;
}

SuiteResult verify_su2(int max_twice_j) {
    SuiteResult r;
    r.name = "su2";
    Timer timer(r);
    auto h = [](int twice) { return HalfInt::from_twice(twice); };
    for (int a = 0; a <= max_twice_j; ++a)
        for (int b = 0; b <= max_twice_j; ++b) {
            const HalfInt j1 = h(a), j2 = h(b);
            const std::string k = "j1=" + j1.to_string() + " j2=" + j2.to_string();
            // Orthogonality within each M.
            for (int M = -(a + b); M <= a + b; M += 2) {
                std::vector<int> Js;
                for (int J = std::abs(a - b); J <= a + b; J += 2)
                    if (std::abs(M) <= J) Js.push_back(J);
                for (std::size_t x = 0; x < Js.size(); ++x)
                    for (std::size_t y = x; y < Js.size(); ++y) {
                        SqrtSum acc;
                        for (int m1 = -a; m1 <= a; m1 += 2) {
                            const int m2 = M - m1;
                            if (std::abs(m2) > b) continue;
                            acc.add_product(su2_cg({j1, h(m1), j2, h(m2), h(Js[x]), h(M)}),
                                            su2_cg({j1, h(m1), j2, h(m2), h(Js[y]), h(M)}));
                        }
                        r.expect(x == y ? acc == SqrtSum(1) : acc.is_zero(), k + ": orthogonality fails at M=" + h(M).to_string());
                    }
                // Completeness within each M.
                for (int m1 = -a; m1 <= a; m1 += 2)
                    for (int n1 = m1; n1 <= a; n1 += 2) {
                        const int m2 = M - m1, n2 = M - n1;
                        if (std::abs(m2) > b || std::abs(n2) > b) continue;
                        SqrtSum acc;
                        for (int J : Js)
                            acc.add_product(su2_cg({j1, h(m1), j2, h(m2), h(J), h(M)}),
                                            su2_cg({j1, h(n1), j2, h(n2), h(J), h(M)}));
                        r.expect(m1 == n1 ? acc == SqrtSum(1) : acc.is_zero(), k + ": completeness fails at M=" + h(M).to_string());
                    }
                // Exchange symmetry.
                for (int J = std::abs(a - b); J <= a + b; J += 2)
                    for (int m1 = -a; m1 <= a; m1 += 2) {
                        const int m2 = M - m1;
                        if (std::abs(m2) > b || std::abs(M) > J) continue;
                        SqrtSum x = su2_cg({j1, h(m1), j2, h(m2), h(J), h(M)});
                        SqrtSum y = su2_cg({j2, h(m2), j1, h(m1), h(J), h(M)});
                        r.expect(x == (parity_sign(h(a + b - J)) > 0 ? y : -y), k + ": exchange symmetry fails");
                    }
            }
        }
    const SqrtSum half = sqrt_rational(make_rational(1, 2));
    r.expect(su2_cg({h(1), h(1), h(1), h(-1), 0, 0}) == half, "<1/2 1/2 1/2 -1/2|0 0> != 1/sqrt(2)");
    r.expect(su2_cg({h(1), h(-1), h(1), h(1), 0, 0}) == -half, "<1/2 -1/2 1/2 1/2|0 0> != -1/sqrt(2)");
    r.expect(su2_cg({1, 1, 1, -1, 0, 0}) == sqrt_rational(make_rational(1, 3)), "<1 1 1 -1|0 0> != 1/sqrt(3)");
    for (int a = 0; a <= max_twice_j; ++a)
        for (int m = -a; m <= a; m += 2)
            r.expect(su2_cg({h(a), h(m), 0, 0, h(a), h(m)}) == SqrtSum(1), "<j m 0 0|j m> != 1");
    r.details = {{"max_twice_j", max_twice_j}};
    return r;
}

}  // namespace so5cg
