#pragma once

// Polynomial expressions in the four label variables of a reduced coefficient:
// j1, j2 (source SO(4) label) and jb1, jb2 (source irrep label).

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "so5cg/exactnum.hpp"

namespace so5cg {

enum class Var : int { j1 = 0, j2 = 1, jb1 = 2, jb2 = 3 };

using Point = std::array<Rational, 4>;

Point make_point(const Rational& jb1, const Rational& jb2, const Rational& j1, const Rational& j2);

/// Parsed expression over + - * ^ (non-negative integer powers), rational
/// literals and the variables j1, j2, jb1, jb2.
class Expr {
public:
    static Expr parse(std::string_view text);
    Rational eval(const Point& at) const;
    const std::string& text() const { return text_; }

    struct Node;

private:
    friend class Product;

    std::shared_ptr<const Node> root_;
    std::string text_;
};

/// A product of factors, kept factor by factor so a failing factor can be
/// named. "1" or "" is the empty product.
class Product {
public:
    static Product parse(std::string_view text);
    const std::vector<Expr>& factors() const { return factors_; }
    Rational eval(const Point& at) const;
    /// Index of the first factor that is negative (or <= 0 when strict) at the
    /// point, or -1.
    int first_nonpositive(const Point& at, bool strict) const;

private:
    std::vector<Expr> factors_;
};

}  // namespace so5cg
