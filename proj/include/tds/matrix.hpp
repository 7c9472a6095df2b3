#pragma once

#include <string>
#include <vector>

#include "tds/integer.hpp"
#include "tds/surd.hpp"

namespace tds::modular {

using arith::Integer;
using arith::QuadraticIrrational;
using arith::Rational;
using arith::SurdValue;

/// Integer 2x2 matrix [[a,b],[c,d]] with determinant 1.
struct UnimodularMatrix {
    Integer a, b, c, d;

    UnimodularMatrix(Integer a, Integer b, Integer c, Integer d);

    static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
    // T = [[1,1],[0,1]], S = [[0,-1],[1,0]], R = [[1,0],[1,1]];
    // T^2 and R^2 generate the secant series' invariance group.
    static UnimodularMatrix T() { return {1, 1, 0, 1}; }
    static UnimodularMatrix S() { return {0, -1, 1, 0}; }
    static UnimodularMatrix R() { return {1, 0, 1, 1}; }
    static UnimodularMatrix T2() { return {1, 2, 0, 1}; }
    static UnimodularMatrix R2() { return {1, 0, 2, 1}; }

    UnimodularMatrix operator*(const UnimodularMatrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    UnimodularMatrix inverse() const { return {d, -b, -c, a}; }
    UnimodularMatrix operator-() const { return {-a, -b, -c, -d}; }

    bool operator==(const UnimodularMatrix& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const UnimodularMatrix& o) const { return !(*this == o); }

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    /// Moebius action (a*t + b)/(c*t + d) on an exact surd.
    SurdValue apply(const SurdValue& t) const;

    /// Comma serialization "a,b,c,d".
    std::string str() const;
    static UnimodularMatrix parse(const std::string& text);
};

enum class GroupTag { FullModular, GammaPrincipal, GammaTwo };

/// The groups appearing here: SL2(Z), a principal congruence subgroup
/// Gamma(N), and Gamma_2 (Gamma(2) with diagonal entries = 1 mod 4).
struct GroupId {
    GroupTag tag;
    Integer N;  // only for GammaPrincipal

    static GroupId full() { return {GroupTag::FullModular, 1}; }
    static GroupId principal(Integer level) { return {GroupTag::GammaPrincipal, std::move(level)}; }
    static GroupId gamma_two() { return {GroupTag::GammaTwo, 2}; }
};

bool is_member(const UnimodularMatrix& m, const GroupId& g);

enum class Gen { T, S, T2, R2 };

UnimodularMatrix gen_matrix(Gen g);
std::string gen_name(Gen g);

struct Letter {
    Gen g;
    long e;  // nonzero exponent
};

/// A factorization of a matrix into subgroup generators: the product of the
/// letters times sign*I reproduces the source matrix exactly. sign = -1 can
/// occur only for words over the full modular group.
struct GeneratorWord {
    std::vector<Letter> letters;
    int sign = 1;

    UnimodularMatrix product() const;
    std::string str() const;
};

}  // namespace tds::modular
