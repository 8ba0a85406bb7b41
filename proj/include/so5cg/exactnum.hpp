#pragma once

// Exact arithmetic: GMP-backed rationals and the ring of finite rational
// combinations of square roots of square-free integers.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace so5cg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den (den != 0).
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n", "-n" or "n/d".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Signed prime-power bookkeeping for products and quotients of small integers
/// and factorials, used to take square roots without factoring big numbers.
class PrimePowers {
public:
    PrimePowers& mul(const Integer& n);
    PrimePowers& div(const Integer& n);
    PrimePowers& mul(const Rational& q);
    PrimePowers& div(const Rational& q);
    PrimePowers& mul_factorial(unsigned long n);
    PrimePowers& div_factorial(unsigned long n);

    bool is_zero() const { return zero_; }
    int sign() const { return zero_ ? 0 : sign_; }
    const std::map<unsigned long, long>& exponents() const { return exps_; }
    Rational value() const;

private:
    void add_integer(const Integer& n, long direction);

    bool zero_ = false;
    int sign_ = 1;
    std::map<unsigned long, long> exps_;
};

/// Exact element of Q(sqrt 2, sqrt 3, sqrt 5, ...): a finite map from square-free
/// radicand to nonzero rational coefficient. Canonical, so equality is
/// structural and the empty map is zero.
class SqrtSum {
public:
    using Terms = std::map<Integer, Rational>;

    SqrtSum() = default;
    SqrtSum(const Rational& q);  // NOLINT(google-explicit-constructor)
    SqrtSum(long n) : SqrtSum(Rational(n)) {}  // NOLINT(google-explicit-constructor)

    /// coeff * sqrt(radicand) for any positive radicand; square factors are
    /// pulled out of the root.
    static SqrtSum term(const Rational& coeff, const Integer& radicand);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_single_term() const { return terms_.size() == 1; }
    std::optional<Rational> as_rational() const;

    /// Square of a single-term value; throws std::domain_error otherwise.
    Rational square_of_term() const;
    /// Exact sign of a single-term value (0 for zero); throws otherwise.
    int term_sign() const;
    /// 1/x for a single-term x: q*sqrt(r) -> (1/(q*r))*sqrt(r).
    SqrtSum inverse() const;

    SqrtSum operator-() const;
    SqrtSum& operator+=(const SqrtSum& other);
    SqrtSum& operator-=(const SqrtSum& other);
    SqrtSum& operator*=(const SqrtSum& other);
    /// Accumulates a*b into *this without a temporary.
    SqrtSum& add_product(const SqrtSum& a, const SqrtSum& b);

    friend SqrtSum operator+(SqrtSum a, const SqrtSum& b) { return a += b; }
    friend SqrtSum operator-(SqrtSum a, const SqrtSum& b) { return a -= b; }
    friend SqrtSum operator*(const SqrtSum& a, const SqrtSum& b);
    friend bool operator==(const SqrtSum& a, const SqrtSum& b) { return a.terms_ == b.terms_; }

    /// Human form: "1", "-1/2*sqrt(2)", "1/3*sqrt(5) - 2*sqrt(7)".
    std::string to_string() const;
    /// Strict export form: "num/den*sqrt(rad)" terms joined by '+', "0" for zero.
    std::string to_export_string() const;
    static SqrtSum parse_export_string(std::string_view text);

    /// Largest radicand present (1 for rationals, 0 for zero).
    Integer max_radicand() const;

private:
    void add_term(const Rational& coeff, const Integer& radicand);

    Terms terms_;
};

SqrtSum add(const SqrtSum& a, const SqrtSum& b);
SqrtSum mul(const SqrtSum& a, const SqrtSum& b);
SqrtSum neg(const SqrtSum& a);

/// Exact positive square root of q >= 0. Throws NegativeRadicand for q < 0.
SqrtSum sqrt_rational(const Rational& q);
/// Square root of a factored quantity; throws NegativeRadicand when negative.
SqrtSum sqrt_of(const PrimePowers& p);

/// Approximation with relative error below 2^(1-precision_bits) per term.
mpf_class to_float(const SqrtSum& a, unsigned precision_bits);
double to_double(const SqrtSum& a);

/// Largest square-free divisor decomposition: n = s^2 * r, returns {s, r}.
std::pair<Integer, Integer> split_square(const Integer& n);

// JSON: {"terms":[{"num":"<int>","den":"<int>","rad":"<int>"}, ...]}
void to_json(nlohmann::json& j, const SqrtSum& a);
void from_json(const nlohmann::json& j, SqrtSum& a);

}  // namespace so5cg
