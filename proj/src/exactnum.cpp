#include "so5cg/exactnum.hpp"

#include <stdexcept>
#include <vector>

#include "so5cg/error.hpp"

namespace so5cg {

namespace {

// Trial division; every radicand the engine builds is a product of small
// factors, so the loop stays short in practice.
void factor_into(Integer n, std::map<unsigned long, long>& exps, long direction) {
    if (n < 0) n = -n;
    auto divide_out = [&](unsigned long p) {
        long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e != 0) {
            exps[p] += direction * e;
            if (exps[p] == 0) exps.erase(p);
        }
    };
    divide_out(2);
    divide_out(3);
    for (unsigned long p = 5; Integer(p) * p <= n; p += 6) {
        divide_out(p);
        divide_out(p + 2);
    }
    if (n > 1) {
        if (!n.fits_ulong_p()) throw std::overflow_error("prime factor exceeds machine word");
        unsigned long p = n.get_ui();
        exps[p] += direction;
        if (exps[p] == 0) exps.erase(p);
    }
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<unsigned long> primes;
    for (unsigned long i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (unsigned long k = i * i; k <= n; k += i) composite[k] = true;
    }
    return primes;
}

Integer ipow(unsigned long p, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw MalformedKey("empty number");
    if (s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto parse_int = [](const std::string& t) {
        if (t.empty()) throw MalformedKey("malformed number");
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw MalformedKey("malformed number: " + t);
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw MalformedKey("malformed number: " + t);
        return Integer(t);
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    Integer num = parse_int(s.substr(0, slash));
    Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw MalformedKey("zero denominator: " + s);
    return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- PrimePowers

void PrimePowers::add_integer(const Integer& n, long direction) {
    if (n == 0) {
        if (direction < 0) throw std::domain_error("division by zero");
        zero_ = true;
        return;
    }
    if (n < 0) sign_ = -sign_;
    factor_into(n, exps_, direction);
}

PrimePowers& PrimePowers::mul(const Integer& n) {
    add_integer(n, +1);
    return *this;
}

PrimePowers& PrimePowers::div(const Integer& n) {
    add_integer(n, -1);
    return *this;
}

PrimePowers& PrimePowers::mul(const Rational& q) {
    add_integer(q.get_num(), +1);
    add_integer(q.get_den(), -1);
    return *this;
}

PrimePowers& PrimePowers::div(const Rational& q) {
    add_integer(q.get_num(), -1);
    add_integer(q.get_den(), +1);
    return *this;
}

PrimePowers& PrimePowers::mul_factorial(unsigned long n) {
    for (unsigned long p : primes_up_to(n)) {
        long e = 0;
        for (unsigned long pk = p; pk <= n; pk *= p) {
            e += static_cast<long>(n / pk);
            if (pk > n / p) break;
        }
        exps_[p] += e;
        if (exps_[p] == 0) exps_.erase(p);
    }
    return *this;
}

PrimePowers& PrimePowers::div_factorial(unsigned long n) {
    for (unsigned long p : primes_up_to(n)) {
        long e = 0;
        for (unsigned long pk = p; pk <= n; pk *= p) {
            e += static_cast<long>(n / pk);
            if (pk > n / p) break;
        }
        exps_[p] -= e;
        if (exps_[p] == 0) exps_.erase(p);
    }
    return *this;
}

Rational PrimePowers::value() const {
    if (zero_) return Rational(0);
    Integer num = sign_, den = 1;
    for (auto [p, e] : exps_) {
        if (e > 0)
            num *= ipow(p, static_cast<unsigned long>(e));
        else
            den *= ipow(p, static_cast<unsigned long>(-e));
    }
    return make_rational(num, den);
}

// -------------------------------------------------------------------- SqrtSum

std::pair<Integer, Integer> split_square(const Integer& n) {
    if (n <= 0) throw std::domain_error("split_square needs a positive integer");
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        return {s, Integer(1)};
    }
    std::map<unsigned long, long> exps;
    factor_into(n, exps, +1);
    Integer s = 1, r = 1;
    for (auto [p, e] : exps) {
        s *= ipow(p, static_cast<unsigned long>(e / 2));
        if (e % 2 != 0) r *= p;
    }
    return {s, r};
}

SqrtSum::SqrtSum(const Rational& q) {
    if (q != 0) terms_.emplace(Integer(1), q);
}

SqrtSum SqrtSum::term(const Rational& coeff, const Integer& radicand) {
    if (radicand < 0) throw NegativeRadicand("negative radicand " + radicand.get_str());
    SqrtSum out;
    if (coeff == 0 || radicand == 0) return out;
    auto [s, r] = split_square(radicand);
    out.terms_.emplace(r, coeff * s);
    return out;
}

std::optional<Rational> SqrtSum::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
    return std::nullopt;
}

Rational SqrtSum::square_of_term() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1) throw std::domain_error("square_of_term on a multi-term value");
    const auto& [r, q] = *terms_.begin();
    return q * q * r;
}

int SqrtSum::term_sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() != 1) throw std::domain_error("term_sign on a multi-term value");
    return sgn(terms_.begin()->second);
}

SqrtSum SqrtSum::inverse() const {
    if (terms_.empty()) throw std::domain_error("inverse of zero");
    if (terms_.size() != 1) throw std::domain_error("inverse of a multi-term value");
    const auto& [r, q] = *terms_.begin();
    SqrtSum out;
    out.terms_.emplace(r, Rational(1) / (q * r));
    return out;
}

void SqrtSum::add_term(const Rational& coeff, const Integer& radicand) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SqrtSum SqrtSum::operator-() const {
    SqrtSum out = *this;
    for (auto& [r, q] : out.terms_) q = -q;
    return out;
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& other) {
    for (const auto& [r, q] : other.terms_) add_term(q, r);
    return *this;
}

SqrtSum& SqrtSum::operator-=(const SqrtSum& other) {
    for (const auto& [r, q] : other.terms_) add_term(-q, r);
    return *this;
}

SqrtSum& SqrtSum::add_product(const SqrtSum& a, const SqrtSum& b) {
    // sqrt(m)*sqrt(n) = g*sqrt((m/g)*(n/g)) with g = gcd(m, n); the cofactors
    // are coprime and square-free, so their product is square-free.
    Integer g, m, n;
    for (const auto& [ra, qa] : a.terms_) {
        for (const auto& [rb, qb] : b.terms_) {
            if (ra == 1) {
                add_term(qa * qb, rb);
                continue;
            }
            if (rb == 1) {
                add_term(qa * qb, ra);
                continue;
            }
            mpz_gcd(g.get_mpz_t(), ra.get_mpz_t(), rb.get_mpz_t());
            mpz_divexact(m.get_mpz_t(), ra.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(n.get_mpz_t(), rb.get_mpz_t(), g.get_mpz_t());
            add_term(qa * qb * g, m * n);
        }
    }
    return *this;
}

SqrtSum& SqrtSum::operator*=(const SqrtSum& other) {
    SqrtSum out;
    out.add_product(*this, other);
    *this = std::move(out);
    return *this;
}

SqrtSum operator*(const SqrtSum& a, const SqrtSum& b) {
    SqrtSum out;
    out.add_product(a, b);
    return out;
}

std::string SqrtSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [r, q] : terms_) {
        Rational mag = abs(q);
        bool negative = q < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (r == 1) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += "sqrt(" + r.get_str() + ")";
        } else {
            out += mag.get_str() + "*sqrt(" + r.get_str() + ")";
        }
    }
    return out;
}

std::string SqrtSum::to_export_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [r, q] : terms_) {
        if (!out.empty()) out += '+';
        out += q.get_num().get_str() + "/" + q.get_den().get_str() + "*sqrt(" + r.get_str() + ")";
    }
    return out;
}

SqrtSum SqrtSum::parse_export_string(std::string_view text) {
    SqrtSum out;
    if (text == "0") return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t plus = text.find('+', pos);
        std::string_view piece = text.substr(pos, plus == std::string_view::npos ? text.npos : plus - pos);
        auto star = piece.find("*sqrt(");
        if (star == piece.npos || piece.back() != ')') throw MalformedKey("bad exact value: " + std::string(text));
        Rational q = parse_rational(piece.substr(0, star));
        Integer r(std::string(piece.substr(star + 6, piece.size() - star - 7)));
        out += term(q, r);
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    return out;
}

Integer SqrtSum::max_radicand() const {
    return terms_.empty() ? Integer(0) : terms_.rbegin()->first;
}

SqrtSum add(const SqrtSum& a, const SqrtSum& b) { return a + b; }
SqrtSum mul(const SqrtSum& a, const SqrtSum& b) { return a * b; }
SqrtSum neg(const SqrtSum& a) { return -a; }

SqrtSum sqrt_rational(const Rational& q) {
    if (q < 0) throw NegativeRadicand("square root of negative rational " + q.get_str());
    if (q == 0) return SqrtSum();
    // sqrt(n/d) = sqrt(n*d)/d
    const Integer& d = q.get_den();
    auto [s, r] = split_square(q.get_num() * d);
    return SqrtSum::term(make_rational(s, d), r);
}

SqrtSum sqrt_of(const PrimePowers& p) {
    if (p.is_zero()) return SqrtSum();
    if (p.sign() < 0) throw NegativeRadicand("square root of negative value " + p.value().get_str());
    Integer num = 1, den = 1, rad = 1;
    for (auto [prime, e] : p.exponents()) {
        long half = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
        long rest = e - 2 * half;
        if (half > 0) num *= ipow(prime, static_cast<unsigned long>(half));
        if (half < 0) den *= ipow(prime, static_cast<unsigned long>(-half));
        if (rest != 0) rad *= prime;
    }
    return SqrtSum::term(make_rational(num, den), rad);
}

mpf_class to_float(const SqrtSum& a, unsigned precision_bits) {
    if (precision_bits < 53) throw std::invalid_argument("precision_bits must be >= 53");
    const unsigned working = precision_bits + 32;
    mpf_class total(0, working);
    for (const auto& [r, q] : a.terms()) {
        mpf_class root(r, working);
        root = sqrt(root);
        mpf_class coeff(q, working);
        total += coeff * root;
    }
    return total;
}

double to_double(const SqrtSum& a) { return to_float(a, 64).get_d(); }

void to_json(nlohmann::json& j, const SqrtSum& a) {
    auto terms = nlohmann::json::array();
    for (const auto& [r, q] : a.terms()) {
        terms.push_back({{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"rad", r.get_str()}});
    }
    j = nlohmann::json{{"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, SqrtSum& a) {
    a = SqrtSum();
    for (const auto& t : j.at("terms")) {
        Rational q = make_rational(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
        a += SqrtSum::term(q, Integer(t.at("rad").get<std::string>()));
    }
}

}  // namespace so5cg
