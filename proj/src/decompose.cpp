#include "tds/decompose.hpp"

#include <algorithm>

namespace tds::modular {

namespace {

long to_exponent(const Integer& q) {
    if (!q.fits_slong_p())
        throw ResourceCap("generator exponent too large for a word letter");
    return q.get_si();
}

void push_letter(std::vector<Letter>& letters, Gen g, long e) {
    if (e != 0) letters.push_back({g, e});
}

// floor(x/y + 1/2) for integers, exact for any sign of y.
Integer nearest_quotient(const Integer& x, const Integer& y) {
    return arith::fdiv(2 * x + y, 2 * y);
}

}  // namespace

GeneratorWord decompose_full(const UnimodularMatrix& gamma) {
    UnimodularMatrix w = gamma;
    std::vector<Letter> letters;
    // Each round multiplies by S * T^{-q} on the left, which replaces the
    // column (a, c) by (-c, a - q c) and at least halves |c|.
    while (w.c != 0) {
        Integer q = nearest_quotient(w.a, w.c);
        Integer a1 = w.a - q * w.c;
        Integer b1 = w.b - q * w.d;
        w = UnimodularMatrix(-w.c, -w.d, a1, b1);
        push_letter(letters, Gen::T, to_exponent(q));
        letters.push_back({Gen::S, -1});
    }
    GeneratorWord word;
    word.sign = w.a == 1 ? 1 : -1;
    Integer tail = w.a == 1 ? w.b : -w.b;
    push_letter(letters, Gen::T, to_exponent(tail));
    word.letters = std::move(letters);
    return word;
}

GeneratorWord decompose_gamma2(const UnimodularMatrix& gamma) {
    if (!is_member(gamma, GroupId::gamma_two()))
        throw NotInGroup("matrix " + gamma.str() + " is not in Gamma_2");
    UnimodularMatrix w = gamma;
    std::vector<Letter> letters;
    // Ping-pong reduction: a stays odd and c even, so |a| != |c| and each
    // step strictly reduces max(|a|, |c|).
    while (w.c != 0) {
        if (abs(w.a) > abs(w.c)) {
            Integer q = nearest_quotient(w.a, 2 * w.c);
            w = UnimodularMatrix(w.a - 2 * q * w.c, w.b - 2 * q * w.d, w.c, w.d);
            push_letter(letters, Gen::T2, to_exponent(q));
        } else {
            Integer q = nearest_quotient(w.c, 2 * w.a);
            w = UnimodularMatrix(w.a, w.b, w.c - 2 * q * w.a, w.d - 2 * q * w.b);
            push_letter(letters, Gen::R2, to_exponent(q));
        }
    }
    if (w.a != 1 || w.d != 1 || arith::mod_positive(w.b, 2) != 0)
        throw InternalError("gamma_2 reduction did not finish at a T^2 power");
    GeneratorWord word;
    push_letter(letters, Gen::T2, to_exponent(w.b / 2));
    word.letters = std::move(letters);
    return word;
}

}  // namespace tds::modular
