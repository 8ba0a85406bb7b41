#include "so5cg/su2_cg.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "so5cg/error.hpp"

namespace so5cg {

namespace {

// n! memo. Grows under an exclusive lock; reads share.
class FactorialTable {
public:
    Integer operator()(int n) {
        {
            std::shared_lock lock(mutex_);
            if (n < static_cast<int>(table_.size())) return table_[n];
        }
        std::unique_lock lock(mutex_);
        while (static_cast<int>(table_.size()) <= n) table_.push_back(table_.back() * Integer(table_.size()));
        return table_[n];
    }

private:
    std::shared_mutex mutex_;
    std::vector<Integer> table_{Integer(1)};
};

FactorialTable& factorials() {
    static FactorialTable table;
    return table;
}

bool magnetic_ok(HalfInt j, HalfInt m) { return j >= HalfInt(0) && abs(m) <= j && (j - m).is_integer(); }

}  // namespace

void validate(const Su2CgKey& key) {
    if (!magnetic_ok(key.j1, key.m1) || !magnetic_ok(key.j2, key.m2) || !magnetic_ok(key.J, key.M)) {
        throw MalformedKey("SU(2) key <" + key.j1.to_string() + " " + key.m1.to_string() + " " +
                           key.j2.to_string() + " " + key.m2.to_string() + " | " + key.J.to_string() + " " +
                           key.M.to_string() + "> violates |m| <= j with matching integrality");
    }
}

std::vector<HalfInt> magnetic_range(HalfInt j) {
    std::vector<HalfInt> out;
    for (HalfInt m = -j; m <= j; m += HalfInt(1)) out.push_back(m);
    return out;
}

SqrtSum su2_cg(const Su2CgKey& key) {
    validate(key);
    const auto& [j1, m1, j2, m2, J, M] = key;
    if (M != m1 + m2 || !triangle(j1, j2, J)) return SqrtSum();

    // All combinations below are integers once the triangle rule holds.
    const int a = (j1 + j2 - J).to_int();
    const int b = (j1 - j2 + J).to_int();
    const int c = (-j1 + j2 + J).to_int();
    const int d = (j1 + j2 + J).to_int() + 1;
    const int j1m = (j1 - m1).to_int(), j1p = (j1 + m1).to_int();
    const int j2m = (j2 - m2).to_int(), j2p = (j2 + m2).to_int();
    const int Jm = (J - M).to_int(), Jp = (J + M).to_int();

    PrimePowers rad;
    rad.mul(Integer(J.twice() + 1));
    rad.mul_factorial(a).mul_factorial(b).mul_factorial(c).div_factorial(d);
    rad.mul_factorial(j1m).mul_factorial(j1p).mul_factorial(j2m).mul_factorial(j2p);
    rad.mul_factorial(Jm).mul_factorial(Jp);

    auto& fact = factorials();
    const int k_min = std::max({0, (j2 - J - m1).to_int(), (j1 + m2 - J).to_int()});
    const int k_max = std::min({a, j1m, j2p});
    Rational sum = 0;
    for (int k = k_min; k <= k_max; ++k) {
        Integer den = fact(k) * fact(a - k) * fact(j1m - k) * fact(j2p - k) * fact((J - j2 + m1).to_int() + k) *
                      fact((J - j1 - m2).to_int() + k);
        Rational term(Integer(1), den);
        sum += (k % 2 == 0) ? term : Rational(-term);
    }
    sum.canonicalize();
    return SqrtSum(sum) * sqrt_of(rad);
}

}  // namespace so5cg
