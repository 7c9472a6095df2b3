#include "tds/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace tds::arith {

namespace {

std::mutex cache_mutex;
std::vector<Rational> cache;  // cache[n] = B_n

// Extend the table through index n using
// sum_{k=0}^{n} binom(n+1, k) B_k = 0  for n >= 1.
void extend_locked(unsigned long n) {
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= n) {
        unsigned long m = cache.size();
        Rational acc(0);
        for (unsigned long k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * cache[k];
        cache.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
}

}  // namespace

Rational bernoulli_number(unsigned long n) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    extend_locked(n);
    return cache[n];
}

SurdValue bernoulli_poly(unsigned long n, const SurdValue& x) {
    SurdValue acc;
    SurdValue xp{Rational(1)};  // x^{n-k}, built from the k = n end down
    for (unsigned long k = n + 1; k-- > 0;) {
        acc = acc + SurdValue(Rational(binomial(n, k)) * bernoulli_number(k)) * xp;
        if (k > 0) xp = xp * x;
    }
    return acc;
}

Rational bernoulli_poly(unsigned long n, const Rational& x) {
    Rational acc(0);
    Rational xp(1);
    for (unsigned long k = n + 1; k-- > 0;) {
        acc += Rational(binomial(n, k)) * bernoulli_number(k) * xp;
        if (k > 0) xp *= x;
    }
    return acc;
}

Rational zeta_even_pi_coeff(unsigned long s) {
    if (s < 2 || s % 2 != 0) throw InternalError("zeta closed form requires even s >= 2");
    unsigned long m = s / 2;
    Rational value = bernoulli_number(s) * Rational(pow_int(Integer(2), s)) /
                     (Rational(2) * Rational(factorial(s)));
    return (m % 2 == 0) ? -value : value;
}

}  // namespace tds::arith
