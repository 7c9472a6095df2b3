#include "tds/matrix.hpp"

#include <sstream>

namespace tds::modular {

UnimodularMatrix::UnimodularMatrix(Integer a_, Integer b_, Integer c_, Integer d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1)
        throw NotInGroup("matrix " + str() + " has determinant != 1");
}

SurdValue UnimodularMatrix::apply(const SurdValue& t) const {
    SurdValue num = SurdValue(Rational(a)) * t + SurdValue(Rational(b));
    SurdValue den = SurdValue(Rational(c)) * t + SurdValue(Rational(d));
    return num / den;
}

std::string UnimodularMatrix::str() const {
    return arith::to_string(a) + "," + arith::to_string(b) + "," + arith::to_string(c) + "," +
           arith::to_string(d);
}

UnimodularMatrix UnimodularMatrix::parse(const std::string& text) {
    std::vector<Integer> v;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        try {
            v.emplace_back(cur);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad matrix entry '" + cur + "'", v.size());
        }
    }
    if (v.size() != 4) throw ParseError("matrix needs 4 comma-separated entries", 0);
    return {v[0], v[1], v[2], v[3]};
}

bool is_member(const UnimodularMatrix& m, const GroupId& g) {
    switch (g.tag) {
        case GroupTag::FullModular:
            return true;
        case GroupTag::GammaPrincipal: {
            const Integer& N = g.N;
            return arith::mod_positive(m.a - 1, N) == 0 && arith::mod_positive(m.b, N) == 0 &&
                   arith::mod_positive(m.c, N) == 0 && arith::mod_positive(m.d - 1, N) == 0;
        }
        case GroupTag::GammaTwo:
            return is_member(m, GroupId::principal(2)) && arith::mod_positive(m.a - 1, 4) == 0 &&
                   arith::mod_positive(m.d - 1, 4) == 0;
    }
    return false;
}

UnimodularMatrix gen_matrix(Gen g) {
    switch (g) {
        case Gen::T: return UnimodularMatrix::T();
        case Gen::S: return UnimodularMatrix::S();
        case Gen::T2: return UnimodularMatrix::T2();
        case Gen::R2: return UnimodularMatrix::R2();
    }
    throw InternalError("unknown generator");
}

std::string gen_name(Gen g) {
    switch (g) {
        case Gen::T: return "T";
        case Gen::S: return "S";
        case Gen::T2: return "T2";
        case Gen::R2: return "R2";
    }
    throw InternalError("unknown generator");
}

namespace {

UnimodularMatrix mat_pow(UnimodularMatrix base, unsigned long e) {
    UnimodularMatrix acc = UnimodularMatrix::identity();
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace

UnimodularMatrix GeneratorWord::product() const {
    UnimodularMatrix m = UnimodularMatrix::identity();
    for (const auto& [g, e] : letters) {
        UnimodularMatrix base = e < 0 ? gen_matrix(g).inverse() : gen_matrix(g);
        m = m * mat_pow(base, static_cast<unsigned long>(e < 0 ? -e : e));
    }
    if (sign < 0) m = -m;
    return m;
}

std::string GeneratorWord::str() const {
    // Letters over {T2, R2} are rendered with their total T/R power, so
    // (T2, 3) prints "T^6".
    std::string s;
    if (sign < 0) s = "-I";
    for (const auto& [g, e] : letters) {
        if (!s.empty()) s += " ";
        long mult = (g == Gen::T2 || g == Gen::R2) ? 2 : 1;
        std::string base = (g == Gen::T || g == Gen::T2) ? "T" : (g == Gen::S ? "S" : "R");
        s += base + "^" + std::to_string(e * mult);
    }
    return s.empty() ? "I" : s;
}

}  // namespace tds::modular
