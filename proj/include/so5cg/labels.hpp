#pragma once

// Half-integer label algebra for Spin(5) irreps in the SO(3) x SO(3) basis.
//
// An irrep (jb1, jb2) with jb1 >= jb2 >= 0 has B2 highest weight
// (jb1 + jb2, jb1 - jb2) in the orthonormal basis. Tensor irreps have
// jb1 + jb2 integral, spinor irreps half-integral.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "so5cg/exactnum.hpp"

namespace so5cg {

/// n/2 stored as the integer n.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int integer) : twice_(2 * integer) {}  // NOLINT(google-explicit-constructor)
    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt half() { return from_twice(1); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    Rational to_rational() const { return make_rational(twice_, 2); }
    double to_double() const { return twice_ / 2.0; }
    /// Only valid for integral values.
    int to_int() const;

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt o) {
        twice_ += o.twice_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) {
        twice_ -= o.twice_;
        return *this;
    }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string to_string() const;

private:
    int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

/// Parses "3", "-1", "+1/2", "3/2"; only denominators 1 and 2 are accepted.
HalfInt parse_half_int(std::string_view text);

/// (-1)^h for integral h.
int parity_sign(HalfInt h);

/// SU(2) triangle rule including integrality of a + b + c.
bool triangle(HalfInt a, HalfInt b, HalfInt c);

enum class LabelClass { Tensor, Spinor };

/// Spin(5) irrep (jb1, jb2).
struct IrrepLabel {
    HalfInt jbar1;
    HalfInt jbar2;

    /// Throws MalformedKey unless jb1 >= jb2 >= 0.
    static IrrepLabel make(HalfInt jbar1, HalfInt jbar2);
    static bool is_valid(HalfInt jbar1, HalfInt jbar2) { return jbar2 >= HalfInt(0) && jbar1 >= jbar2; }

    LabelClass label_class() const {
        return (jbar1 + jbar2).is_integer() ? LabelClass::Tensor : LabelClass::Spinor;
    }
    std::string to_string() const;

    friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

/// SO(3) x SO(3) label (j1, j2).
struct So4Label {
    HalfInt j1;
    HalfInt j2;

    static So4Label make(HalfInt j1, HalfInt j2);
    static bool is_valid(HalfInt j1, HalfInt j2) { return j1 >= HalfInt(0) && j2 >= HalfInt(0); }
    int dim() const { return (j1.twice() + 1) * (j2.twice() + 1); }
    std::string to_string() const;

    friend auto operator<=>(const So4Label&, const So4Label&) = default;
};

/// One of the 14 coupling channels of Lambda (x) (1,1): the label shift of the
/// target plus, for the (0,0) shift, which of the two copies.
struct Channel {
    HalfInt shift1;
    HalfInt shift2;
    int copy = 1;

    static Channel make(HalfInt shift1, HalfInt shift2, int copy = 1);
    bool is_raising() const;   // one of the six shifts with printed tables
    bool is_lowering() const;  // one of the six mirror shifts
    bool is_diagonal() const { return shift1 == HalfInt(0) && shift2 == HalfInt(0); }
    bool preserves_class() const { return shift1.is_integer(); }
    Channel mirrored() const { return Channel{-shift1, -shift2, copy}; }
    IrrepLabel target_of(const IrrepLabel& source) const;
    std::string to_string() const;

    friend auto operator<=>(const Channel&, const Channel&) = default;
};

/// All 14 channels in lexicographic order of (shift1, shift2, copy).
const std::vector<Channel>& all_channels();

struct DecompEntry {
    IrrepLabel target;
    int multiplicity = 0;

    friend bool operator==(const DecompEntry&, const DecompEntry&) = default;
};

/// (2jb1 - 2jb2 + 1)(2jb1 + 2jb2 + 3)(2jb1 + 2)(2jb2 + 1) / 6.
long dim(const IrrepLabel& rep);

/// Quadratic Casimir lambda.(lambda + 2 rho) = 2[jb1(jb1 + 2) + jb2(jb2 + 1)].
Rational casimir(const IrrepLabel& rep);

/// Multiplicity-free SO(3) x SO(3) content, sorted lexicographically.
std::vector<So4Label> branching(const IrrepLabel& rep);
bool in_branching(const IrrepLabel& rep, const So4Label& s);

/// rep (x) (1,1) by Racah-Speiser; zero multiplicities omitted; sorted by target.
std::vector<DecompEntry> decompose_with_14(const IrrepLabel& source);

/// Target label is valid and occurs with multiplicity >= ch.copy.
bool channel_present(const IrrepLabel& source, const Channel& ch);

/// Every irrep with 2*jb1 <= max_twice_jbar1, in lexicographic order.
std::vector<IrrepLabel> irreps_up_to(int max_twice_jbar1);

// Text syntax "a,b" with a, b integers or n/2 fractions.
IrrepLabel parse_irrep(std::string_view text);
So4Label parse_so4(std::string_view text);
std::pair<HalfInt, HalfInt> parse_pair(std::string_view text);

nlohmann::json to_json_label(const IrrepLabel& rep);
nlohmann::json to_json_label(const So4Label& s);

}  // namespace so5cg
