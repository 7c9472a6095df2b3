#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tds/decompose.hpp"
#include "tds/lift.hpp"
#include "tds/pell.hpp"
#include "tds/summation.hpp"

using namespace tds;
using arith::make_rational;
using arith::normalize_surd;
using arith::Polynomial;
using arith::Rational;
using arith::RationalFunction;
using arith::SurdValue;
using cocycle::AffineCocycle;
using cocycle::compose_cocycle;
using cocycle::cot_period_generator;
using cocycle::rf_slash;
using cocycle::sec_period_generator;
using cocycle::SeriesKind;
using modular::Gen;
using modular::GeneratorWord;
using modular::UnimodularMatrix;
using numerics::Complex;
using numerics::Real;

TEST_CASE("secant generator periods") {
    CHECK(sec_period_generator(Gen::T2, 4).body.is_zero());
    CHECK(sec_period_generator(Gen::T2, 4).weight == -3);

    RationalFunction expected(Polynomial{Rational(0), Rational(2), Rational(4), Rational(3)},
                              Polynomial{Rational(6), Rational(12)});
    CHECK(sec_period_generator(Gen::R2, 2).body == expected);

    CHECK_THROWS_AS(sec_period_generator(Gen::R2, 3), ParityError);
}

TEST_CASE("cotangent generator periods") {
    CHECK(cot_period_generator(Gen::T, 5).body.is_zero());

    // -1/(90 tau) + tau/18 - tau^3/90
    RationalFunction expected(
        Polynomial{make_rational(-1, 90), Rational(0), make_rational(1, 18), Rational(0),
                   make_rational(-1, 90)},
        Polynomial{Rational(0), Rational(1)});
    CHECK(cot_period_generator(Gen::S, 3).body == expected);

    CHECK_THROWS_AS(cot_period_generator(Gen::S, 4), ParityError);
}

TEST_CASE("compose_cocycle basic rules") {
    GeneratorWord empty;
    CHECK(compose_cocycle(empty, SeriesKind::Secant, 4).body.is_zero());

    // p(R^2 R^2) = p(R^2)|R^2 + p(R^2)
    RationalFunction p = sec_period_generator(Gen::R2, 2).body;
    RationalFunction expected = rf_slash(p, -1, UnimodularMatrix::R2()) + p;
    GeneratorWord rr{{{Gen::R2, 2}}, 1};
    CHECK(compose_cocycle(rr, SeriesKind::Secant, 2).body == expected);

    // Same matrix through different letter groupings gives the same function.
    GeneratorWord ts{{{Gen::T, 1}, {Gen::S, 1}}, 1};
    GeneratorWord ts_split{{{Gen::T, 1}}, 1};
    RationalFunction via_relation =
        rf_slash(compose_cocycle(ts_split, SeriesKind::Cotangent, 3).body, -2,
                 UnimodularMatrix::S()) +
        cot_period_generator(Gen::S, 3).body;
    CHECK(compose_cocycle(ts, SeriesKind::Cotangent, 3).body == via_relation);

    // Inverse letter: p(g g^{-1}) = 0.
    GeneratorWord cancel{{{Gen::R2, 1}, {Gen::R2, -1}}, 1};
    CHECK(compose_cocycle(cancel, SeriesKind::Secant, 4).body.is_zero());
}

namespace {

GeneratorWord random_word(std::mt19937& rng, SeriesKind kind, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len), coin(0, 1), exp_dist(-3, 3);
    GeneratorWord w;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        long e = 0;
        while (e == 0) e = exp_dist(rng);
        Gen g = kind == SeriesKind::Secant ? (coin(rng) ? Gen::T2 : Gen::R2)
                                           : (coin(rng) ? Gen::T : Gen::S);
        w.letters.push_back({g, e});
    }
    return w;
}

}  // namespace

TEST_CASE("slash action composes") {
    // (f|g1)|g2 == f|(g1 g2), the identity the cocycle fold relies on.
    std::mt19937 rng(61);
    std::uniform_int_distribution<long> cf(-5, 5);
    auto rnd_poly = [&](int deg) {
        std::vector<Rational> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(cf(rng));
        return Polynomial(std::move(c));
    };
    for (int i = 0; i < 30; ++i) {
        Polynomial den = rnd_poly(2);
        if (den.is_zero()) continue;
        RationalFunction f(rnd_poly(3), den);
        GeneratorWord w1, w2;
        std::uniform_int_distribution<int> coin(0, 1), e(-3, 3);
        for (int j = 0; j < 3; ++j) {
            long e1 = 0, e2 = 0;
            while (e1 == 0) e1 = e(rng);
            while (e2 == 0) e2 = e(rng);
            w1.letters.push_back({coin(rng) ? Gen::T : Gen::S, e1});
            w2.letters.push_back({coin(rng) ? Gen::T : Gen::S, e2});
        }
        for (long k : {-2L, -4L}) {
            RationalFunction lhs = rf_slash(rf_slash(f, k, w1.product()), k, w2.product());
            RationalFunction rhs = rf_slash(f, k, w1.product() * w2.product());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cocycle relation on random word pairs") {
    std::mt19937 rng(31);
    for (SeriesKind kind : {SeriesKind::Secant, SeriesKind::Cotangent}) {
        for (long s : kind == SeriesKind::Secant ? std::vector<long>{2, 4, 6}
                                                 : std::vector<long>{3, 5, 7}) {
            for (int i = 0; i < 17; ++i) {
                GeneratorWord w1 = random_word(rng, kind, 4);
                GeneratorWord w2 = random_word(rng, kind, 4);
                GeneratorWord cat = w1;
                cat.letters.insert(cat.letters.end(), w2.letters.begin(), w2.letters.end());
                RationalFunction lhs = compose_cocycle(cat, kind, s).body;
                RationalFunction rhs =
                    rf_slash(compose_cocycle(w1, kind, s).body, 1 - s, w2.product()) +
                    compose_cocycle(w2, kind, s).body;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("numerical cocycle residuals at upper half-plane points") {
    Real bound = Real::parse("1e-20", 256);
    std::vector<Complex> points;
    points.push_back(Complex{Real::of(0L, 256), Real::of(1L, 256)});
    points.push_back(Complex{Real::of(1L, 256), Real::of(2L, 256)});
    points.push_back(Complex{Real::of(make_rational(-1, 2), 256), Real::of(3L, 256)});
    for (const auto& tau : points) {
        for (long s : {2L, 4L, 6L, 8L}) {
            CHECK(numerics::cocycle_residual(SeriesKind::Secant, UnimodularMatrix::T2(), s, tau,
                                             256) < bound);
            CHECK(numerics::cocycle_residual(SeriesKind::Secant, UnimodularMatrix::R2(), s, tau,
                                             256) < bound);
        }
        for (long s : {3L, 5L, 7L}) {
            CHECK(numerics::cocycle_residual(SeriesKind::Cotangent, UnimodularMatrix::T(), s, tau,
                                             256) < bound);
            CHECK(numerics::cocycle_residual(SeriesKind::Cotangent, UnimodularMatrix::S(), s, tau,
                                             256) < bound);
        }
    }
}

TEST_CASE("derivative lift bookkeeping") {
    AffineCocycle zero;
    zero.weight = -3;  // 1 - s at s = 4
    AffineCocycle lifted = cocycle::derivative_lift(zero, UnimodularMatrix::T2());
    CHECK(lifted.weight == -1);
    CHECK(lifted.level == 1);
    CHECK(lifted.free.is_zero());
    CHECK(lifted.deriv.empty());  // c = 0 contributes nothing

    AffineCocycle base;
    base.weight = -3;
    base.free = sec_period_generator(Gen::R2, 4).body;
    AffineCocycle up = cocycle::derivative_lift(base, UnimodularMatrix::R2());
    CHECK(up.weight == -1);
    CHECK(up.level == 1);
    CHECK(up.deriv.count(0) == 1);
}

TEST_CASE("lifted cocycle transforms the derivative series numerically") {
    // gamma = R^2, s = 4: check
    // (c tau + d)^{s-3} (D psi)(gamma tau) - (D psi)(tau)
    //   = pi^s free(tau) + deriv0(tau) psi(tau)
    long s = 4;
    UnimodularMatrix g = UnimodularMatrix::R2();
    AffineCocycle base;
    base.weight = 1 - s;
    base.free = sec_period_generator(Gen::R2, s).body;
    AffineCocycle lifted = cocycle::derivative_lift(base, g);

    mpfr_prec_t prec = 256;
    Complex tau{Real::of(1L, prec), Real::of(1L, prec)};
    Complex den = tau * Real::of(g.c, prec);
    den.re = den.re + Real::of(g.d, prec);
    Complex gamma_tau = (tau * Real::of(g.a, prec) + Complex{Real::of(g.b, prec), Real::of(0L, prec)}) / den;

    Complex dpsi_t = numerics::uhp_psi_derivative(SeriesKind::Secant, 1, s, tau, prec);
    Complex dpsi_gt = numerics::uhp_psi_derivative(SeriesKind::Secant, 1, s, gamma_tau, prec);
    Complex psi_t = numerics::uhp_psi_derivative(SeriesKind::Secant, 0, s, tau, prec);

    Complex lhs = numerics::cpow(den, s - 3) * dpsi_gt - dpsi_t;
    Real pis = numerics::pow_si(Real::pi(prec), s);
    Complex rhs = numerics::rf_eval(lifted.free, tau) * pis +
                  numerics::rf_eval(lifted.deriv.at(0), tau) * psi_t;
    CHECK(numerics::abs(lhs - rhs) < Real::parse("1e-20", prec));
}

TEST_CASE("derivative evaluation at fixed points") {
    auto s7 = normalize_surd(0, 1, 1, 7);
    // Value independently confirmed by direct summation of the series
    // (2e5 and 4e5 terms agree to 10+ digits).
    SurdValue v = cocycle::eval_derivative_at_fixed_point(SeriesKind::Cotangent, 0, 3, s7);
    CHECK(v == SurdValue(Rational(0), make_rational(-1, 140), 7));

    auto s11 = normalize_surd(0, 1, 1, 11);
    SurdValue w = cocycle::eval_derivative_at_fixed_point(SeriesKind::Cotangent, 1, 5, s11);
    CHECK(w == SurdValue(make_rational(-8, 385)));

    auto s2 = normalize_surd(0, 1, 1, 2);
    CHECK_THROWS_AS(cocycle::eval_derivative_at_fixed_point(SeriesKind::Secant, 0, 3, s2),
                    ParityError);
    CHECK_THROWS_AS(cocycle::eval_derivative_at_fixed_point(SeriesKind::Cotangent, 2, 5, s2),
                    ConvergenceBound);
}

TEST_CASE("fixed-point values lie in Q or sqrt(d) Q by derivative parity") {
    for (long d : {2L, 5L, 7L}) {
        auto rho = normalize_surd(0, 1, 1, d);
        for (long j : {0L, 1L}) {
            for (long s = 2 * j + 2; s <= 8; ++s) {
                if (s % 2 == 0) {
                    SurdValue v =
                        cocycle::eval_derivative_at_fixed_point(SeriesKind::Secant, j, s, rho);
                    if (j % 2 == 0) CHECK(v.y() == 0);
                    else CHECK(v.x() == 0);
                } else {
                    SurdValue v =
                        cocycle::eval_derivative_at_fixed_point(SeriesKind::Cotangent, j, s, rho);
                    if (j % 2 == 0) CHECK(v.x() == 0);
                    else CHECK(v.y() == 0);
                }
            }
        }
    }
}

TEST_CASE("solution does not depend on which fixing matrix is used") {
    // gamma and gamma^2 both fix rho; the triangular solve from either gives
    // the same series value.
    auto rho = normalize_surd(0, 1, 1, 7);
    long s = 3;
    UnimodularMatrix g = modular::fixing_matrix(rho, 1);
    UnimodularMatrix g2 = g * g;
    auto solve_with = [&](const UnimodularMatrix& m) {
        RationalFunction p =
            compose_cocycle(modular::decompose_full(m), SeriesKind::Cotangent, s).body;
        SurdValue rv = rho.value();
        SurdValue cd = SurdValue(Rational(m.c)) * rv + SurdValue(Rational(m.d));
        return p.eval(rv) / (cd.pow(s - 1) - SurdValue(Rational(1)));
    };
    CHECK(solve_with(g) == solve_with(g2));
}
