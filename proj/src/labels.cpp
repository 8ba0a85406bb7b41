#include "so5cg/labels.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "so5cg/error.hpp"

namespace so5cg {

int HalfInt::to_int() const {
    if (!is_integer()) throw std::domain_error("half-integer " + to_string() + " used as an integer");
    return twice_ / 2;
}

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt parse_half_int(std::string_view text) {
    Rational q = parse_rational(text);
    Rational doubled = q * 2;
    if (doubled.get_den() != 1) throw MalformedKey("not a half-integer: " + std::string(text));
    if (!doubled.get_num().fits_sint_p()) throw MalformedKey("label out of range: " + std::string(text));
    return HalfInt::from_twice(static_cast<int>(doubled.get_num().get_si()));
}

int parity_sign(HalfInt h) { return (h.to_int() % 2 == 0) ? 1 : -1; }

bool triangle(HalfInt a, HalfInt b, HalfInt c) {
    return (a + b + c).is_integer() && abs(a - b) <= c && c <= a + b;
}

IrrepLabel IrrepLabel::make(HalfInt jbar1, HalfInt jbar2) {
    if (!is_valid(jbar1, jbar2))
        throw MalformedKey("irrep label (" + jbar1.to_string() + "," + jbar2.to_string() +
                           ") violates jbar1 >= jbar2 >= 0");
    return IrrepLabel{jbar1, jbar2};
}

std::string IrrepLabel::to_string() const { return "(" + jbar1.to_string() + "," + jbar2.to_string() + ")"; }

So4Label So4Label::make(HalfInt j1, HalfInt j2) {
    if (!is_valid(j1, j2))
        throw MalformedKey("SO(4) label (" + j1.to_string() + "," + j2.to_string() + ") has a negative entry");
    return So4Label{j1, j2};
}

std::string So4Label::to_string() const { return "(" + j1.to_string() + "," + j2.to_string() + ")"; }

namespace {

// Nonzero weights of (1,1) in (jb1, jb2) shift coordinates, doubled.
constexpr std::array<std::array<int, 2>, 12> kNonzeroShifts{{
    {2, 2}, {2, 0}, {0, 2}, {2, -2}, {1, 1}, {1, -1},          // printed tables
    {-2, -2}, {-2, 0}, {0, -2}, {-2, 2}, {-1, -1}, {-1, 1},    // mirror images
}};

bool is_nonzero_shift(int t1, int t2) {
    return std::any_of(kNonzeroShifts.begin(), kNonzeroShifts.end(),
                       [&](const auto& s) { return s[0] == t1 && s[1] == t2; });
}

}  // namespace

Channel Channel::make(HalfInt shift1, HalfInt shift2, int copy) {
    const int t1 = shift1.twice(), t2 = shift2.twice();
    const bool diagonal = t1 == 0 && t2 == 0;
    if (!diagonal && !is_nonzero_shift(t1, t2))
        throw MalformedKey("(" + shift1.to_string() + "," + shift2.to_string() + ") is not a channel shift");
    if (copy != 1 && !(diagonal && copy == 2))
        throw MalformedKey("copy " + std::to_string(copy) + " is only meaningful for the (0,0) shift as 1 or 2");
    return Channel{shift1, shift2, copy};
}

bool Channel::is_raising() const {
    for (std::size_t i = 0; i < 6; ++i)
        if (kNonzeroShifts[i][0] == shift1.twice() && kNonzeroShifts[i][1] == shift2.twice()) return true;
    return false;
}

bool Channel::is_lowering() const {
    for (std::size_t i = 6; i < 12; ++i)
        if (kNonzeroShifts[i][0] == shift1.twice() && kNonzeroShifts[i][1] == shift2.twice()) return true;
    return false;
}

IrrepLabel Channel::target_of(const IrrepLabel& source) const {
    return IrrepLabel::make(source.jbar1 + shift1, source.jbar2 + shift2);
}

std::string Channel::to_string() const {
    auto signed_str = [](HalfInt h) { return (h >= HalfInt(0) ? "+" : "") + h.to_string(); };
    std::string s = "(" + signed_str(shift1) + "," + signed_str(shift2) + ")";
    if (is_diagonal()) s += "#" + std::to_string(copy);
    return s;
}

const std::vector<Channel>& all_channels() {
    static const std::vector<Channel> channels = [] {
        std::vector<Channel> out;
        for (const auto& s : kNonzeroShifts)
            out.push_back(Channel{HalfInt::from_twice(s[0]), HalfInt::from_twice(s[1]), 1});
        out.push_back(Channel{HalfInt(0), HalfInt(0), 1});
        out.push_back(Channel{HalfInt(0), HalfInt(0), 2});
        std::sort(out.begin(), out.end());
        return out;
    }();
    return channels;
}

long dim(const IrrepLabel& rep) {
    const long a = rep.jbar1.twice(), b = rep.jbar2.twice();
    return (a - b + 1) * (a + b + 3) * (a + 2) * (b + 1) / 6;
}

Rational casimir(const IrrepLabel& rep) {
    Rational a = rep.jbar1.to_rational(), b = rep.jbar2.to_rational();
    return 2 * (a * (a + 2) + b * (b + 1));
}

std::vector<So4Label> branching(const IrrepLabel& rep) {
    // sigma1 in [lambda2, lambda1], sigma2 in [-lambda2, lambda2], unit steps;
    // (j1, j2) = ((sigma1 + sigma2)/2, (sigma1 - sigma2)/2). Doubled throughout.
    const int l1 = rep.jbar1.twice() + rep.jbar2.twice();  // 2*lambda1
    const int l2 = rep.jbar1.twice() - rep.jbar2.twice();  // 2*lambda2
    std::vector<So4Label> out;
    for (int s1 = l2; s1 <= l1; s1 += 2)
        for (int s2 = -l2; s2 <= l2; s2 += 2)
            out.push_back(So4Label{HalfInt::from_twice((s1 + s2) / 2), HalfInt::from_twice((s1 - s2) / 2)});
    std::sort(out.begin(), out.end());
    return out;
}

bool in_branching(const IrrepLabel& rep, const So4Label& s) {
    const int l1 = rep.jbar1.twice() + rep.jbar2.twice();
    const int l2 = rep.jbar1.twice() - rep.jbar2.twice();
    const int s1 = s.j1.twice() + s.j2.twice();
    const int s2 = s.j1.twice() - s.j2.twice();
    return s1 >= l2 && s1 <= l1 && (s1 - l2) % 2 == 0 && s2 >= -l2 && s2 <= l2 && (s2 + l2) % 2 == 0;
}

std::vector<DecompEntry> decompose_with_14(const IrrepLabel& source) {
    // Doubled orthonormal coordinates; rho = (3/2, 1/2).
    const int l1 = source.jbar1.twice() + source.jbar2.twice();
    const int l2 = source.jbar1.twice() - source.jbar2.twice();
    std::map<IrrepLabel, int> mult;
    auto accumulate = [&](int a, int b) {
        const int mu1 = a + b, mu2 = a - b;
        int x1 = l1 + mu1 + 3, x2 = l2 + mu2 + 1;
        int sign = 1;
        // Reflect into the dominant chamber x1 >= x2 >= 0 of the B2 Weyl group.
        if (x1 < 0) { x1 = -x1; sign = -sign; }
        if (x2 < 0) { x2 = -x2; sign = -sign; }
        if (x1 < x2) { std::swap(x1, x2); sign = -sign; }
        if (x1 == x2 || x2 == 0) return;  // fixed by a reflection
        const int n1 = x1 - 3, n2 = x2 - 1;
        IrrepLabel t{HalfInt::from_twice((n1 + n2) / 2), HalfInt::from_twice((n1 - n2) / 2)};
        mult[t] += sign;
    };
    for (const auto& s : kNonzeroShifts) accumulate(s[0], s[1]);
    accumulate(0, 0);
    accumulate(0, 0);
    std::vector<DecompEntry> out;
    for (const auto& [label, m] : mult) {
        if (m < 0) throw std::logic_error("Racah-Speiser produced a negative multiplicity");
        if (m > 0) out.push_back(DecompEntry{label, m});
    }
    return out;
}

bool channel_present(const IrrepLabel& source, const Channel& ch) {
    const HalfInt a = source.jbar1 + ch.shift1, b = source.jbar2 + ch.shift2;
    if (!IrrepLabel::is_valid(a, b)) return false;
    const IrrepLabel target{a, b};
    for (const auto& e : decompose_with_14(source))
        if (e.target == target) return e.multiplicity >= ch.copy;
    return false;
}

std::vector<IrrepLabel> irreps_up_to(int max_twice_jbar1) {
    std::vector<IrrepLabel> out;
    for (int a = 0; a <= max_twice_jbar1; ++a)
        for (int b = 0; b <= a; ++b) out.push_back(IrrepLabel{HalfInt::from_twice(a), HalfInt::from_twice(b)});
    return out;
}

std::pair<HalfInt, HalfInt> parse_pair(std::string_view text) {
    auto comma = text.find(',');
    if (comma == text.npos || text.find(',', comma + 1) != text.npos)
        throw MalformedKey("expected a label pair \"a,b\", got \"" + std::string(text) + "\"");
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    return {parse_half_int(trim(text.substr(0, comma))), parse_half_int(trim(text.substr(comma + 1)))};
}

IrrepLabel parse_irrep(std::string_view text) {
    auto [a, b] = parse_pair(text);
    return IrrepLabel::make(a, b);
}

So4Label parse_so4(std::string_view text) {
    auto [a, b] = parse_pair(text);
    return So4Label::make(a, b);
}

nlohmann::json to_json_label(const IrrepLabel& rep) {
    return {{"twice_j1", rep.jbar1.twice()}, {"twice_j2", rep.jbar2.twice()}};
}

nlohmann::json to_json_label(const So4Label& s) {
    return {{"twice_j1", s.j1.twice()}, {"twice_j2", s.j2.twice()}};
}

}  // namespace so5cg
