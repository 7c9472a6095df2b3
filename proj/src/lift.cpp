#include "tds/lift.hpp"

#include <mutex>
#include <tuple>
#include <vector>

#include "tds/decompose.hpp"
#include "tds/pell.hpp"

namespace tds::cocycle {

using arith::Integer;
using arith::Rational;

AffineCocycle derivative_lift(const AffineCocycle& P, const UnimodularMatrix& gamma) {
    RationalFunction factor(Polynomial{Rational(gamma.c * P.weight)},
                            Polynomial{Rational(gamma.d), Rational(gamma.c)});
    AffineCocycle Q;
    Q.weight = P.weight + 2;
    Q.level = P.level + 1;
    Q.free = factor * P.free + P.free.derivative();
    for (const auto& [m, f] : P.deriv) {
        RationalFunction lifted = factor * f + f.derivative();
        if (!lifted.is_zero()) Q.deriv[m] = Q.deriv[m] + lifted;
        if (!f.is_zero()) Q.deriv[m + 1] = Q.deriv[m + 1] + f;
    }
    if (!factor.is_zero()) Q.deriv[P.level] = Q.deriv[P.level] + factor;
    return Q;
}

namespace {

struct MemoKey {
    SeriesKind kind;
    long j, s;
    Integer p, q, r, d;

    bool operator<(const MemoKey& o) const {
        return std::tie(kind, j, s, p, q, r, d) < std::tie(o.kind, o.j, o.s, o.p, o.q, o.r, o.d);
    }
};

std::mutex memo_mutex;
std::map<MemoKey, SurdValue> memo;

SurdValue solve_at_fixed_point(SeriesKind kind, long j, long s, const QuadraticIrrational& rho) {
    Integer level_N = kind == SeriesKind::Secant ? 4 : 1;
    UnimodularMatrix gamma = modular::fixing_matrix(rho, level_N);
    GeneratorWord word;
    if (kind == SeriesKind::Secant) {
        if (!modular::is_member(gamma, GroupId::gamma_two()))
            throw InternalError("secant fixing matrix escaped Gamma_2");
        word = modular::decompose_gamma2(gamma);
    } else {
        word = modular::decompose_full(gamma);
    }

    std::vector<AffineCocycle> levels;
    levels.reserve(static_cast<std::size_t>(j) + 1);
    AffineCocycle P;
    P.weight = 1 - s;
    P.free = compose_cocycle(word, kind, s).body;
    levels.push_back(P);
    for (long m = 1; m <= j; ++m) levels.push_back(derivative_lift(levels.back(), gamma));

    // At tau = rho the slash identity collapses to
    //   (D^m psi)(rho) [(c rho + d)^{s-2m-1} - 1] = P_m(rho),
    // solved upward with previously found levels substituted.
    SurdValue rv = rho.value();
    SurdValue cd = SurdValue(Rational(gamma.c)) * rv + SurdValue(Rational(gamma.d));
    std::vector<SurdValue> values;
    values.reserve(levels.size());
    for (long m = 0; m <= j; ++m) {
        const AffineCocycle& Pm = levels[static_cast<std::size_t>(m)];
        SurdValue rhs = Pm.free.eval(rv);
        for (const auto& [i, f] : Pm.deriv) {
            if (i >= m) throw InternalError("affine cocycle references an unsolved level");
            rhs = rhs + f.eval(rv) * values[static_cast<std::size_t>(i)];
        }
        SurdValue denom = cd.pow(s - 2 * m - 1) - SurdValue(Rational(1));
        if (denom.is_zero())
            throw DegenerateDenominator("(c rho + d)^(s-2m-1) = 1 at level " + std::to_string(m));
        values.push_back(rhs / denom);
    }
    return values.back();
}

}  // namespace

SurdValue eval_derivative_at_fixed_point(SeriesKind kind, long j, long s,
                                         const QuadraticIrrational& rho) {
    if (j < 0) throw InternalError("negative derivative order");
    check_parity(kind, s);
    if (s < 2 * j + 2)
        throw ConvergenceBound("convergence: derivative evaluation needs s >= 2j + 2 (s = " +
                               std::to_string(s) + ", j = " + std::to_string(j) + ")");
    MemoKey key{kind, j, s, rho.p(), rho.q(), rho.r(), rho.d()};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    SurdValue value = solve_at_fixed_point(kind, j, s, rho);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, value);
    return value;
}

}  // namespace tds::cocycle
