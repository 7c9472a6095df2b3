#include "tds/linear_combination.hpp"

#include <algorithm>
#include <map>

namespace tds::evaluator {

using arith::factorial;
using arith::make_rational;
using arith::pow_rat;

void check_query(long a, long b, long s) {
    long bound = std::max({a, b, 1L}) + 1;
    if (s < bound)
        throw ConvergenceBound("convergence: s >= max(a, b, 1) + 1 = " +
                               std::to_string(bound) + ", got s = " + std::to_string(s));
    if (((s - b) % 2 + 2) % 2 != 0)
        throw ParityError("parity: s and b must have the same parity (s = " + std::to_string(s) +
                          ", b = " + std::to_string(b) + ")");
}

namespace {

bool is_base_family(long a, long b) {
    return (a > 0 && (b == 0 || b == -1)) || (b > 0 && (a == 0 || a == -1));
}

// Coefficients of the operator product prod_i (D^2 + i^2) over the listed i,
// indexed by power of D^2.
std::vector<Rational> operator_poly(const std::vector<long>& squares) {
    std::vector<Rational> c{Rational(1)};
    for (long i : squares) {
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j] += c[j] * Rational(i * i);
            next[j + 1] += c[j];
        }
        c = std::move(next);
    }
    return c;
}

struct DerivTerm {
    Rational coeff;
    TermKind kind;
    long order;
};

// sec^a as derivatives of sec (odd a) or of tan (even a, with the extra D).
std::vector<DerivTerm> sec_ops(long a) {
    if (a < 1) throw InternalError("sec_ops needs a >= 1");
    std::vector<long> squares;
    if (a % 2 == 1) {
        for (long i = 1; i <= a - 2; i += 2) squares.push_back(i);
        auto poly = operator_poly(squares);
        Rational norm = Rational(1) / Rational(factorial(static_cast<unsigned long>(a - 1)));
        std::vector<DerivTerm> out;
        for (std::size_t j = 0; j < poly.size(); ++j)
            out.push_back({poly[j] * norm, TermKind::DSecant, 2 * static_cast<long>(j)});
        return out;
    }
    for (long i = 2; i <= a - 2; i += 2) squares.push_back(i);
    auto poly = operator_poly(squares);
    Rational norm = Rational(1) / Rational(factorial(static_cast<unsigned long>(a - 1)));
    std::vector<DerivTerm> out;
    for (std::size_t j = 0; j < poly.size(); ++j)
        out.push_back({poly[j] * norm, TermKind::DTangent, 2 * static_cast<long>(j) + 1});
    return out;
}

// csc^b as derivatives of csc (odd b) or of cot (even b, via csc^2 = -D cot).
std::vector<DerivTerm> csc_ops(long b) {
    if (b < 1) throw InternalError("csc_ops needs b >= 1");
    std::vector<long> squares;
    if (b % 2 == 1) {
        for (long i = 1; i <= b - 2; i += 2) squares.push_back(i);
        auto poly = operator_poly(squares);
        Rational norm = Rational(1) / Rational(factorial(static_cast<unsigned long>(b - 1)));
        std::vector<DerivTerm> out;
        for (std::size_t j = 0; j < poly.size(); ++j)
            out.push_back({poly[j] * norm, TermKind::DCosecant, 2 * static_cast<long>(j)});
        return out;
    }
    for (long i = 2; i <= b - 2; i += 2) squares.push_back(i);
    auto poly = operator_poly(squares);
    Rational norm = Rational(-1) / Rational(factorial(static_cast<unsigned long>(b - 1)));
    std::vector<DerivTerm> out;
    for (std::size_t j = 0; j < poly.size(); ++j)
        out.push_back({poly[j] * norm, TermKind::DCotangent, 2 * static_cast<long>(j) + 1});
    return out;
}

std::vector<DerivTerm> family_ops(long a, long b) {
    if (b == 0) return sec_ops(a);
    if (a == 0) return csc_ops(b);
    if (b == -1) {
        // trig^{a,-1} = sec^{a-1} tan = D sec^{a-1} / (a-1) for a >= 2.
        if (a == 1) return {{Rational(1), TermKind::DTangent, 0}};
        auto inner = sec_ops(a - 1);
        for (auto& t : inner) {
            t.coeff /= Rational(a - 1);
            t.order += 1;
        }
        return inner;
    }
    if (a == -1) {
        // trig^{-1,b} = cos csc^b = -D csc^{b-1} / (b-1) for b >= 2.
        if (b == 1) return {{Rational(1), TermKind::DCotangent, 0}};
        auto inner = csc_ops(b - 1);
        for (auto& t : inner) {
            t.coeff *= Rational(-1) / Rational(b - 1);
            t.order += 1;
        }
        return inner;
    }
    throw InternalError("not a base family");
}

}  // namespace

LinearCombination reduce_to_base(long a, long b, long s) {
    check_query(a, b, s);
    LinearCombination lc{a, b, s, {}};
    std::map<std::pair<long, long>, Rational> work, done;
    work[{a, b}] = Rational(1);
    int steps = 0;
    while (!work.empty()) {
        if (++steps > 20000) throw InternalError("reduction did not terminate");
        auto it = work.begin();
        auto [x, y] = it->first;
        Rational c = it->second;
        work.erase(it);
        if (c == 0) continue;
        if ((x <= 0 && y <= 0) || is_base_family(x, y)) {
            done[{x, y}] += c;
        } else if (x > 0 && y > 0) {
            work[{x - 2, y}] += c;
            work[{x, y - 2}] += c;
        } else if (x < -1) {
            work[{x + 2, y}] += c;
            work[{x + 2, y - 2}] -= c;
        } else if (y < -1) {
            work[{x, y + 2}] += c;
            work[{x - 2, y + 2}] -= c;
        } else {
            throw InternalError("unexpected reduction state");
        }
    }
    for (const auto& [xy, c] : done) {
        if (c == 0) continue;
        Term t;
        t.coeff = c;
        t.kind = is_base_family(xy.first, xy.second) ? TermKind::Family : TermKind::NonPositive;
        t.a = xy.first;
        t.b = xy.second;
        t.weight = s;
        lc.terms.push_back(t);
    }
    return lc;
}

LinearCombination operator_decompose(long a, long b, long s) {
    if (!is_base_family(a, b)) throw InternalError("operator_decompose needs a base family");
    LinearCombination lc{a, b, s, {}};
    for (const auto& dt : family_ops(a, b)) {
        Term t;
        t.coeff = dt.coeff;
        t.kind = dt.kind;
        t.order = dt.order;
        t.weight = s + dt.order;
        lc.terms.push_back(t);
    }
    return lc;
}

LinearCombination lower_plan(long a, long b, long s) {
    LinearCombination base = reduce_to_base(a, b, s);
    LinearCombination out{a, b, s, {}};
    for (const auto& bt : base.terms) {
        if (bt.kind == TermKind::NonPositive) {
            out.terms.push_back(bt);
            continue;
        }
        LinearCombination ops = operator_decompose(bt.a, bt.b, s);
        for (const auto& dt : ops.terms) {
            Term t = dt;
            t.coeff = bt.coeff * dt.coeff;
            switch (dt.kind) {
                case TermKind::DSecant:
                case TermKind::DCotangent:
                    out.terms.push_back(t);
                    break;
                case TermKind::DCosecant: {
                    // csc z = cot(z/2) - cot z; the j-th tau-derivative of
                    // psi(tau/2) picks up 2^{-j}.
                    Term half = t;
                    half.kind = TermKind::DCotangent;
                    half.scale = make_rational(1, 2);
                    half.coeff *= pow_rat(make_rational(1, 2), t.order);
                    out.terms.push_back(half);
                    Term full = t;
                    full.kind = TermKind::DCotangent;
                    full.coeff = -full.coeff;
                    out.terms.push_back(full);
                    break;
                }
                case TermKind::DTangent: {
                    // tan z = cot z - 2 cot 2z; psi(2 tau) contributes 2^j.
                    Term one = t;
                    one.kind = TermKind::DCotangent;
                    out.terms.push_back(one);
                    Term dbl = t;
                    dbl.kind = TermKind::DCotangent;
                    dbl.scale = Rational(2);
                    dbl.coeff *= -pow_rat(Rational(2), t.order + 1);
                    out.terms.push_back(dbl);
                    break;
                }
                default:
                    throw InternalError("unexpected term kind from operator_decompose");
            }
        }
    }
    return out;
}

}  // namespace tds::evaluator
