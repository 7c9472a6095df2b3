#include "tds/pell.hpp"

#include <atomic>
#include <cstdlib>

namespace tds::modular {

namespace {

std::atomic<std::size_t> digit_cap{0};  // 0 = not yet initialized

std::size_t init_cap_from_env() {
    std::size_t cap = 100000;
    if (const char* env = std::getenv("TDS_MAX_PELL_DIGITS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) cap = v;
    }
    return cap;
}

}  // namespace

std::size_t pell_digit_cap() {
    std::size_t cap = digit_cap.load();
    if (cap == 0) {
        cap = init_cap_from_env();
        digit_cap.store(cap);
    }
    return cap;
}

void set_pell_digit_cap(std::size_t cap) { digit_cap.store(cap ? cap : 1); }

CFExpansion cf_sqrt(const Integer& k) {
    if (k <= 1 || arith::is_perfect_square(k))
        throw PerfectSquare("sqrt(" + arith::to_string(k) + ") is not irrational");
    Integer a0 = arith::isqrt(k);
    CFExpansion cf;
    cf.a0 = a0;
    // Standard PQa recurrence; the period of sqrt(k) closes when a = 2*a0.
    Integer m = 0, dd = 1, a = a0;
    while (true) {
        m = dd * a - m;
        dd = (k - m * m) / dd;
        a = arith::fdiv(a0 + m, dd);
        cf.period.push_back(a);
        if (a == 2 * a0) break;
    }
    return cf;
}

PellSolution pell_fundamental(const Integer& k) {
    CFExpansion cf = cf_sqrt(k);
    const std::size_t cap = pell_digit_cap();
    // Convergents p/q of sqrt(k): the one just before the period closes gives
    // p^2 - k q^2 = (-1)^L with L the period length.
    Integer p_prev = 1, p = cf.a0;
    Integer q_prev = 0, q = 1;
    std::vector<Integer> quotients = cf.period;
    for (std::size_t i = 0; i + 1 < quotients.size(); ++i) {
        Integer pn = quotients[i] * p + p_prev;
        Integer qn = quotients[i] * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
        if (arith::digits10(p) > cap)
            throw ResourceCap("pell solution exceeds " + std::to_string(cap) + " digits");
    }
    if (quotients.size() % 2 == 1) {
        // p^2 - k q^2 = -1; square it.
        Integer X = p * p + k * q * q;
        Integer Y = 2 * p * q;
        if (arith::digits10(X) > cap)
            throw ResourceCap("pell solution exceeds " + std::to_string(cap) + " digits");
        return {X, Y, k};
    }
    return {p, q, k};
}

UnimodularMatrix fixing_matrix(const QuadraticIrrational& rho, const Integer& N) {
    if (N < 1) throw InternalError("fixing_matrix needs N >= 1");
    Integer k = rho.delta() * N * N;
    PellSolution sol = pell_fundamental(k);
    Integer X = sol.X, Y = sol.Y;
    if (arith::mod_positive(X - 1, N) != 0) {
        // Squaring gives X' = 1 + 2kY^2 = 1 (mod N^2).
        Integer X2 = X * X + k * Y * Y;
        Y = 2 * X * Y;
        X = X2;
    }
    Integer t = 2 * X, u = 2 * N * Y;
    UnimodularMatrix gamma((t - rho.B() * u) / 2, -rho.C() * u, rho.A() * u,
                           (t + rho.B() * u) / 2);
    if (!is_member(gamma, GroupId::principal(N)))
        throw InternalError("fixing matrix not congruent to I mod N");
    SurdValue fixed = gamma.apply(rho.value());
    if (fixed != rho.value()) throw InternalError("fixing matrix does not fix rho");
    return gamma;
}

}  // namespace tds::modular
