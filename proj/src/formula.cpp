#include "so5cg/formula.hpp"

#include <cctype>
#include <stdexcept>

namespace so5cg {

struct Expr::Node {
    enum class Kind { Const, Variable, Add, Sub, Mul, Neg, Pow } kind;
    Rational value;
    Var var = Var::j1;
    unsigned exponent = 0;
    std::vector<Node> kids;

    Rational eval(const Point& at) const {
        switch (kind) {
            case Kind::Const:
                return value;
            case Kind::Variable:
                return at[static_cast<int>(var)];
            case Kind::Add:
                return kids[0].eval(at) + kids[1].eval(at);
            case Kind::Sub:
                return kids[0].eval(at) - kids[1].eval(at);
            case Kind::Mul:
                return kids[0].eval(at) * kids[1].eval(at);
            case Kind::Neg:
                return -kids[0].eval(at);
            case Kind::Pow: {
                Rational base = kids[0].eval(at), out = 1;
                for (unsigned i = 0; i < exponent; ++i) out *= base;
                return out;
            }
        }
        throw std::logic_error("unreachable");
    }
};

namespace {

using Node = Expr::Node;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Node parse_all() {
        Node n = expr();
        skip();
        if (pos_ != text_.size()) fail("trailing input");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("formula parse error (" + what + ") at offset " + std::to_string(pos_) +
                                    " in \"" + std::string(text_) + "\"");
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    static Node binary(Node::Kind kind, Node lhs, Node rhs) {
        Node n{kind, {}, Var::j1, 0, {}};
        n.kids.push_back(std::move(lhs));
        n.kids.push_back(std::move(rhs));
        return n;
    }

    Node expr() {
        Node lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = binary(Node::Kind::Add, std::move(lhs), term());
            else if (accept('-'))
                lhs = binary(Node::Kind::Sub, std::move(lhs), term());
            else
                return lhs;
        }
    }
    Node term() {
        Node lhs = unary();
        while (accept('*')) lhs = binary(Node::Kind::Mul, std::move(lhs), unary());
        return lhs;
    }
    // '^' binds tighter than unary minus: -j1^2 = -(j1^2).
    Node power() {
        Node base = primary();
        if (!accept('^')) return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent");
        Node n{Node::Kind::Pow, {}, Var::j1, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))), {}};
        n.kids.push_back(std::move(base));
        return n;
    }
    Node unary() {
        if (accept('-')) {
            Node n{Node::Kind::Neg, {}, Var::j1, 0, {}};
            n.kids.push_back(unary());
            return n;
        }
        return power();
    }
    Node primary() {
        skip();
        if (accept('(')) {
            Node n = expr();
            if (!accept(')')) fail("missing ')'");
            return n;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Node{Node::Kind::Const, Rational(Integer(std::string(text_.substr(start, pos_ - start)))), Var::j1, 0, {}};
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        Node n{Node::Kind::Variable, {}, Var::j1, 0, {}};
        if (name == "j1")
            n.var = Var::j1;
        else if (name == "j2")
            n.var = Var::j2;
        else if (name == "jb1")
            n.var = Var::jb1;
        else if (name == "jb2")
            n.var = Var::jb2;
        else
            fail("unknown symbol '" + std::string(name) + "'");
        return n;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string render(const Node& n);

std::string render_wrapped(const Node& n) {
    bool sum = n.kind == Node::Kind::Add || n.kind == Node::Kind::Sub;
    return sum ? "(" + render(n) + ")" : render(n);
}

std::string render(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Const:
            return n.value.get_str();
        case Node::Kind::Variable: {
            static const char* names[] = {"j1", "j2", "jb1", "jb2"};
            return names[static_cast<int>(n.var)];
        }
        case Node::Kind::Add:
            return render(n.kids[0]) + " + " + render(n.kids[1]);
        case Node::Kind::Sub:
            return render(n.kids[0]) + " - " + render_wrapped(n.kids[1]);
        case Node::Kind::Mul:
            return render_wrapped(n.kids[0]) + "*" + render_wrapped(n.kids[1]);
        case Node::Kind::Neg:
            return "-" + render_wrapped(n.kids[0]);
        case Node::Kind::Pow:
            return "(" + render(n.kids[0]) + ")^" + std::to_string(n.exponent);
    }
    return {};
}

void flatten_product(const Node& n, std::vector<Node>& out) {
    if (n.kind == Node::Kind::Mul) {
        flatten_product(n.kids[0], out);
        flatten_product(n.kids[1], out);
    } else {
        out.push_back(n);
    }
}

}  // namespace

Point make_point(const Rational& jb1, const Rational& jb2, const Rational& j1, const Rational& j2) {
    return Point{j1, j2, jb1, jb2};
}

Expr Expr::parse(std::string_view text) {
    Expr e;
    e.root_ = std::make_shared<const Node>(Parser(text).parse_all());
    e.text_ = std::string(text);
    return e;
}

Rational Expr::eval(const Point& at) const { return root_->eval(at); }

Product Product::parse(std::string_view text) {
    Product p;
    bool blank = true;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) return p;
    std::vector<Node> nodes;
    flatten_product(Parser(text).parse_all(), nodes);
    for (auto& n : nodes) {
        Expr e;
        e.text_ = render(n);
        e.root_ = std::make_shared<const Node>(std::move(n));
        p.factors_.push_back(std::move(e));
    }
    return p;
}

Rational Product::eval(const Point& at) const {
    Rational out = 1;
    for (const auto& f : factors_) out *= f.eval(at);
    return out;
}

int Product::first_nonpositive(const Point& at, bool strict) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Rational v = factors_[i].eval(at);
        if (v < 0 || (strict && v == 0)) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace so5cg
