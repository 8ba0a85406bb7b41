#include "so5cg/reduced_cg.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "so5cg/error.hpp"
#include "so5cg/formula.hpp"
#include "tables.hpp"

namespace so5cg {

using detail::Family;

bool EntryShift::is_valid(HalfInt dj1, HalfInt dj2, const So4Label& part) {
    if (part.j1 != part.j2) return false;
    const int p = part.j1.twice();
    if (p > 2) return false;
    auto ok = [p](HalfInt d) { return std::abs(d.twice()) <= p && (d.twice() - p) % 2 == 0; };
    return ok(dj1) && ok(dj2);
}

EntryShift EntryShift::make(HalfInt dj1, HalfInt dj2, So4Label part) {
    if (!is_valid(dj1, dj2, part))
        throw MalformedKey("(" + dj1.to_string() + "," + dj2.to_string() + ") with part " + part.to_string() +
                           " is not a row of the (1,1) tables");
    return EntryShift{dj1, dj2, part};
}

std::string EntryShift::to_string() const {
    auto signed_str = [](HalfInt h) { return (h >= HalfInt(0) ? "+" : "") + h.to_string(); };
    return "(" + signed_str(dj1) + "," + signed_str(dj2) + ";" + part.to_string() + ")";
}

const std::vector<EntryShift>& all_entry_shifts() {
    static const std::vector<EntryShift> rows = [] {
        std::vector<EntryShift> out;
        for (int p = 0; p <= 2; ++p)
            for (int a = -p; a <= p; a += 2)
                for (int b = -p; b <= p; b += 2)
                    out.push_back(EntryShift{HalfInt::from_twice(a), HalfInt::from_twice(b),
                                             So4Label{HalfInt::from_twice(p), HalfInt::from_twice(p)}});
        std::sort(out.begin(), out.end());
        return out;
    }();
    return rows;
}

std::optional<So4Label> ReducedKey::target_so4() const {
    const HalfInt t1 = source_so4.j1 + entry.dj1, t2 = source_so4.j2 + entry.dj2;
    if (!So4Label::is_valid(t1, t2)) return std::nullopt;
    return So4Label{t1, t2};
}

std::string ReducedKey::to_string() const {
    return "source " + source.to_string() + " channel " + channel.to_string() + " s " + source_so4.to_string() +
           " entry " + entry.to_string();
}

namespace {

struct ParsedRow {
    EntryShift entry;
    Rational scale;
    Rational scale_sqrt;
    Product prefactor;
    Product radicand;
    Product denominator;
};

struct ParsedTable {
    std::map<EntryShift, ParsedRow> rows;
};

struct ParsedNorm {
    Rational scale;
    Rational scale_sqrt;
    Product factors;
};

struct ParsedData {
    std::array<ParsedTable, 8> tables;
    std::array<ParsedNorm, 7> norms;
    Rational x_scale;
    Product x_poly;
    Rational h2_scale;
    Product h2_poly;
};

const ParsedData& data() {
    static const ParsedData parsed = [] {
        ParsedData d;
        for (int f = 0; f < 8; ++f) {
            for (const auto& r : detail::table_rows(static_cast<Family>(f))) {
                const HalfInt p = HalfInt::from_twice(r.twice_part);
                EntryShift e = EntryShift::make(HalfInt::from_twice(r.twice_dj1), HalfInt::from_twice(r.twice_dj2),
                                                So4Label{p, p});
                d.tables[f].rows.emplace(e, ParsedRow{e, parse_rational(r.scale), parse_rational(r.scale_sqrt),
                                                      Product::parse(r.prefactor), Product::parse(r.radicand),
                                                      Product::parse(r.denominator)});
            }
            if (d.tables[f].rows.size() != 14) throw std::logic_error("duplicate row in coefficient table");
            if (f < 7) {
                const auto& n = detail::norm_row(static_cast<Family>(f));
                d.norms[f] = ParsedNorm{parse_rational(n.scale), parse_rational(n.scale_sqrt), Product::parse(n.factors)};
            }
        }
        d.x_scale = parse_rational(detail::kMixingXScale);
        d.x_poly = Product::parse(detail::kMixingXPoly);
        d.h2_scale = parse_rational(detail::kMixingH2Scale);
        d.h2_poly = Product::parse(detail::kMixingH2Poly);
        return d;
    }();
    return parsed;
}

// Printed family of a raising or first-copy channel.
Family family_of(const Channel& ch) {
    if (ch.is_diagonal()) {
        if (ch.copy != 1) throw MalformedKey("the second (0,0) copy has no printed table");
        return Family::Diagonal;
    }
    static constexpr std::array<std::array<int, 2>, 6> kShifts{{{2, 2}, {2, 0}, {0, 2}, {2, -2}, {1, 1}, {1, -1}}};
    for (std::size_t i = 0; i < kShifts.size(); ++i)
        if (kShifts[i][0] == ch.shift1.twice() && kShifts[i][1] == ch.shift2.twice()) return static_cast<Family>(i);
    throw MalformedKey("channel " + ch.to_string() + " has no printed table");
}

Point point_of(const IrrepLabel& rep, const So4Label& s) {
    return make_point(rep.jbar1.to_rational(), rep.jbar2.to_rational(), s.j1.to_rational(), s.j2.to_rational());
}

std::string describe(const Point& at) {
    return "at j1=" + to_string(at[0]) + " j2=" + to_string(at[1]) + " jb1=" + to_string(at[2]) +
           " jb2=" + to_string(at[3]);
}

// Structural checks shared by every entry point. Returns the target SO(4)
// label, or nullopt when the selection rules force a zero.
std::optional<So4Label> check_key(const IrrepLabel& source, const Channel& channel, const So4Label& s,
                                  const EntryShift& entry) {
    if (!in_branching(source, s))
        throw MalformedKey(s.to_string() + " is not in the branching of " + source.to_string());
    if (!EntryShift::is_valid(entry.dj1, entry.dj2, entry.part))
        throw MalformedKey("entry " + entry.to_string() + " is not a table row");
    const HalfInt t1 = s.j1 + entry.dj1, t2 = s.j2 + entry.dj2;
    if (!So4Label::is_valid(t1, t2))
        throw MalformedKey("target SO(4) label (" + t1.to_string() + "," + t2.to_string() + ") is negative");
    if (!channel_present(source, channel))
        throw ChannelAbsent("channel " + channel.to_string() + " is absent from " + source.to_string() + " x (1,1)");
    const So4Label t{t1, t2};
    if (!triangle(s.j1, entry.part.j1, t.j1) || !triangle(s.j2, entry.part.j2, t.j2)) return std::nullopt;
    if (!in_branching(channel.target_of(source), t)) return std::nullopt;
    return t;
}

SqrtSum evaluate_row(const ParsedRow& row, const Point& at, const SqrtSum& norm) {
    PrimePowers under;
    under.mul(row.scale_sqrt);
    const auto& rad = row.radicand.factors();
    const auto& den = row.denominator.factors();
    for (const auto& f : den) {
        Rational v = f.eval(at);
        if (v == 0) throw FormulaDomainError("denominator factor " + f.text() + " vanishes " + describe(at));
        under.div(v);
    }
    for (const auto& f : rad) under.mul(f.eval(at));
    if (under.sign() < 0) {
        std::string which;
        for (const auto& f : rad)
            if (f.eval(at) < 0) which += (which.empty() ? "" : ", ") + f.text();
        for (const auto& f : den)
            if (f.eval(at) < 0) which += (which.empty() ? "" : ", ") + f.text();
        throw FormulaDomainError("negative radicand " + describe(at) + "; negative factors: " + which);
    }
    const Rational pre = row.scale * row.prefactor.eval(at);
    if (pre == 0 || under.is_zero()) return SqrtSum();
    return SqrtSum(pre) * sqrt_of(under) * norm;
}

SqrtSum norm_of(Family f, const IrrepLabel& source, const std::string& name) {
    const ParsedNorm& n = data().norms.at(static_cast<std::size_t>(f));
    const Point at = point_of(source, So4Label{});
    const int bad = n.factors.first_nonpositive(at, true);
    if (bad >= 0)
        throw ChannelAbsent("normalization of " + name + " at " + source.to_string() + ": factor " +
                            n.factors.factors()[bad].text() + " is not positive");
    PrimePowers under;
    under.mul(n.scale_sqrt);
    for (const auto& f : n.factors.factors()) under.div(f.eval(at));
    return SqrtSum(n.scale) * sqrt_of(under);
}

const ParsedRow& row_of(Family f, const EntryShift& e) {
    return data().tables.at(static_cast<std::size_t>(f)).rows.at(e);
}

bool factors_positive(Family f, const IrrepLabel& source) {
    return data().norms.at(static_cast<std::size_t>(f)).factors.first_nonpositive(point_of(source, So4Label{}), true) < 0;
}

}  // namespace

SqrtSum normalization(const IrrepLabel& source, const Channel& channel) {
    return norm_of(family_of(channel), source, channel.to_string());
}

SqrtSum reduced(const ReducedKey& key) {
    const Family f = family_of(key.channel);
    const auto t = check_key(key.source, key.channel, key.source_so4, key.entry);
    if (!t) return SqrtSum();
    const SqrtSum n = norm_of(f, key.source, key.channel.to_string());
    return evaluate_row(row_of(f, key.entry), point_of(key.source, key.source_so4), n);
}

SqrtSum reduced_aux(const ReducedKey& key) {
    if (!key.channel.is_diagonal()) throw MalformedKey("the auxiliary vector belongs to the (0,0) channel");
    const Channel first{HalfInt(0), HalfInt(0), 1};
    const auto t = check_key(key.source, first, key.source_so4, key.entry);
    if (!t) return SqrtSum();
    return evaluate_row(row_of(Family::Aux, key.entry), point_of(key.source, key.source_so4), SqrtSum(1));
}

MixingData mixing(const IrrepLabel& source) {
    const ParsedData& d = data();
    const SqrtSum ng = norm_of(Family::Diagonal, source, "(+0,+0)#1");
    const Point at = point_of(source, So4Label{});
    MixingData m;
    m.x = SqrtSum(d.x_scale * d.x_poly.eval(at)) * ng;
    m.x2 = m.x.square_of_term();
    m.h2 = d.h2_scale * d.h2_poly.eval(at);
    m.norm2 = m.h2 - m.x2;
    if (m.norm2 < 0)
        throw FormulaDomainError("H^2 - X^2 = " + to_string(m.norm2) + " is negative at " + source.to_string());
    return m;
}

SqrtSum reduced_copy2(const ReducedKey& key) {
    if (!key.channel.is_diagonal() || key.channel.copy != 2)
        throw MalformedKey("reduced_copy2 needs the (0,0) channel with copy 2");
    const auto t = check_key(key.source, key.channel, key.source_so4, key.entry);
    const MixingData m = mixing(key.source);
    if (m.norm2 == 0)
        throw FormulaDomainError("second (0,0) copy present at " + key.source.to_string() + " but H^2 = X^2");
    if (!t) return SqrtSum();
    ReducedKey first = key;
    first.channel.copy = 1;
    SqrtSum v = reduced_aux(first);
    v -= m.x * reduced(first);
    return v * sqrt_rational(1 / m.norm2);
}

SqrtSum exchange(const SqrtSum& mirrored_value, const IrrepLabel& target, const IrrepLabel& source,
                 const So4Label& t, const So4Label& s, const So4Label& part) {
    const HalfInt e = (target.jbar1 - source.jbar1) + (source.jbar2 - target.jbar2) + (t.j1 - s.j1) +
                      (t.j2 - s.j2) + part.j1 + part.j2;
    if (!e.is_integer()) throw MalformedKey("non-integral phase exponent " + e.to_string());
    const Rational ratio = make_rational(dim(target) * s.dim(), dim(source) * t.dim());
    SqrtSum out = sqrt_rational(ratio) * mirrored_value;
    return parity_sign(e) > 0 ? out : -out;
}

SqrtSum symmetry_extend(const IrrepLabel& target, const IrrepLabel& source, const So4Label& target_so4,
                        const So4Label& source_so4, const So4Label& part) {
    const HalfInt d1 = target.jbar1 - source.jbar1, d2 = target.jbar2 - source.jbar2;
    const bool diag = d1 == HalfInt(0) && d2 == HalfInt(0);
    const Channel ch = Channel::make(d1, d2, 1);
    if (diag || !ch.is_lowering())
        throw MalformedKey(target.to_string() + " <- " + source.to_string() + " is not a lowering channel");
    const EntryShift entry =
        EntryShift::make(target_so4.j1 - source_so4.j1, target_so4.j2 - source_so4.j2, part);
    const auto t = check_key(source, ch, source_so4, entry);
    if (!t) return SqrtSum();
    const ReducedKey mirrored{target, ch.mirrored(), target_so4, entry.negated()};
    return exchange(reduced(mirrored), target, source, target_so4, source_so4, part);
}

SqrtSum coefficient(const ReducedKey& key) {
    if (key.channel.is_diagonal() && key.channel.copy == 2) return reduced_copy2(key);
    if (key.channel.is_lowering()) {
        const auto t = check_key(key.source, key.channel, key.source_so4, key.entry);
        if (!t) return SqrtSum();
        return symmetry_extend(key.target(), key.source, *t, key.source_so4, key.entry.part);
    }
    return reduced(key);
}

SqrtSum coefficient_or_zero(const ReducedKey& key) {
    if (!key.target_so4()) return SqrtSum();
    return coefficient(key);
}

std::optional<SqrtSum> evaluate_unguarded(const ReducedKey& key, bool aux) {
    const Family f = aux ? Family::Aux : family_of(key.channel);
    const SqrtSum n = aux ? SqrtSum(1) : norm_of(family_of(key.channel), key.source, key.channel.to_string());
    try {
        return evaluate_row(row_of(f, key.entry), point_of(key.source, key.source_so4), n);
    } catch (const FormulaDomainError&) {
        return std::nullopt;
    }
}

bool normalization_predicts_absent(const IrrepLabel& source, const Channel& channel) {
    const HalfInt a = source.jbar1 + channel.shift1, b = source.jbar2 + channel.shift2;
    if (!IrrepLabel::is_valid(a, b)) return true;
    if (channel.is_lowering()) return normalization_predicts_absent(IrrepLabel{a, b}, channel.mirrored());
    if (!factors_positive(Family::Diagonal, source) && channel.is_diagonal()) return true;
    if (channel.is_diagonal() && channel.copy == 2) return mixing(source).norm2 == 0;
    return !factors_positive(family_of(channel), source);
}

}  // namespace so5cg
