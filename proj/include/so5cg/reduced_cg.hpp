#pragma once

// SO(5) > SO(4) reduced (isoscalar) coefficients
//   (Lambda' t || Lambda s ; (1,1) P)
// for Lambda (x) (1,1) -> Lambda' = Lambda + shift. Here s is the SO(4) label
// inside the source, P the SO(4) label inside (1,1) and t = s + dj the label
// inside the target.

#include <optional>
#include <vector>

#include "so5cg/exactnum.hpp"
#include "so5cg/labels.hpp"

namespace so5cg {

/// A row of the coefficient tables: the SO(4) part P of (1,1), one of
/// (0,0), (1/2,1/2), (1,1), and a shift t - s with |dj| <= P componentwise.
struct EntryShift {
    HalfInt dj1;
    HalfInt dj2;
    So4Label part;

    /// Throws MalformedKey unless (dj, part) is one of the 14 rows.
    static EntryShift make(HalfInt dj1, HalfInt dj2, So4Label part);
    static bool is_valid(HalfInt dj1, HalfInt dj2, const So4Label& part);
    EntryShift negated() const { return EntryShift{-dj1, -dj2, part}; }
    std::string to_string() const;

    friend auto operator<=>(const EntryShift&, const EntryShift&) = default;
};

/// The 14 rows in lexicographic order of (dj1, dj2, part).
const std::vector<EntryShift>& all_entry_shifts();

struct ReducedKey {
    IrrepLabel source;
    Channel channel;
    So4Label source_so4;  // s
    EntryShift entry;

    IrrepLabel target() const { return channel.target_of(source); }
    /// s + dj when both entries are non-negative.
    std::optional<So4Label> target_so4() const;
    std::string to_string() const;
};

/// Inner products between the auxiliary (0,0) vector and the first copy:
/// x = <aux, copy1>, h2 = <aux, aux>, norm2 = h2 - x^2.
struct MixingData {
    SqrtSum x;
    Rational x2;
    Rational h2;
    Rational norm2;
};

/// Normalization N of a printed channel (raising shifts and the first (0,0)
/// copy). Throws ChannelAbsent when a factor under the root is <= 0.
SqrtSum normalization(const IrrepLabel& source, const Channel& channel);

/// Printed tables: raising channels and the first (0,0) copy.
SqrtSum reduced(const ReducedKey& key);

/// Auxiliary (0,0) vector; requires the first copy to be present.
SqrtSum reduced_aux(const ReducedKey& key);

/// Throws ChannelAbsent when the first (0,0) copy is absent.
MixingData mixing(const IrrepLabel& source);

/// Second (0,0) copy, (aux - x copy1)/sqrt(h2 - x^2). ChannelAbsent when
/// h2 = x^2.
SqrtSum reduced_copy2(const ReducedKey& key);

/// Lowering channel source -> target from the raising table target -> source.
SqrtSum symmetry_extend(const IrrepLabel& target, const IrrepLabel& source, const So4Label& target_so4,
                        const So4Label& source_so4, const So4Label& part);

/// Applies the exchange relation
///   (Lt t || L s; P) = (-1)^e sqrt(dim Lt (2s1+1)(2s2+1) / (dim L (2t1+1)(2t2+1))) (L s || Lt t; P)
/// with e = (Lt1 - L1) + (L2 - Lt2) + (t1 - s1) + (t2 - s2) + P1 + P2, to the
/// value of the right-hand coefficient.
SqrtSum exchange(const SqrtSum& mirrored_value, const IrrepLabel& target, const IrrepLabel& source,
                 const So4Label& target_so4, const So4Label& source_so4, const So4Label& part);

/// Any of the 14 channels.
SqrtSum coefficient(const ReducedKey& key);

/// Same as coefficient(), but 0 instead of MalformedKey when s + dj has a
/// negative entry. Used to fill rectangular tables.
SqrtSum coefficient_or_zero(const ReducedKey& key);

/// Diagnostic: the printed closed form (raising, first copy, aux) evaluated
/// without the selection-rule guards. nullopt when a radicand is negative or a
/// denominator vanishes. Key must otherwise be well formed.
std::optional<SqrtSum> evaluate_unguarded(const ReducedKey& key, bool aux = false);

/// True when the normalization predicts the channel is absent: a factor under
/// N vanishes (raising, first copy), h2 = x^2 (second copy), or the mirrored
/// raising channel vanishes at the target (lowering). Invalid targets count
/// as absent.
bool normalization_predicts_absent(const IrrepLabel& source, const Channel& channel);

}  // namespace so5cg
