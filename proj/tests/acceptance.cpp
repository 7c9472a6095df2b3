// Acceptance suite: one [PASS]/[FAIL] line per criterion row, exit code =
// number of failed rows. Run a single criterion with --criterion N.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "tds/decompose.hpp"
#include "tds/pell.hpp"
#include "tds/selftest.hpp"
#include "tds/summation.hpp"
#include "tds/text.hpp"
#include "tds/verify.hpp"

using namespace tds;
using arith::Integer;
using arith::make_rational;
using arith::normalize_surd;
using arith::Rational;
using arith::SurdValue;
using cocycle::SeriesKind;
using evaluator::Evaluation;
using evaluator::TwistedVariant;
using modular::Gen;
using modular::GeneratorWord;
using modular::GroupId;
using modular::UnimodularMatrix;
using numerics::Complex;
using numerics::Real;

namespace {

int g_failures = 0;

double run_row(const std::string& name, const std::function<bool(std::string&)>& check) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = check(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << "  (" << sec << " s)\n";
    if (!ok) ++g_failures;
    return sec;
}

struct ExactCase {
    std::string name;
    std::string trig;
    std::string variant;
    long s;
    long d;
    SurdValue expected;
};

std::vector<ExactCase> exact_cases() {
    return {
        {"psi^{2,0}_4(sqrt5) = (14/135) pi^4", "sec^2", "", 4, 5, SurdValue(make_rational(14, 135))},
        {"psi^{-2,2}_4(sqrt5) = (13/945) pi^4", "cot^2", "", 4, 5, SurdValue(make_rational(13, 945))},
        {"psi^{0,2}_4(sqrt11) = (8/385) pi^4", "csc^2", "", 4, 11, SurdValue(make_rational(8, 385))},
        {"psi^{3,0}_4(sqrt2) = (-2483/5220) pi^4", "sec^3", "", 4, 2,
         SurdValue(make_rational(-2483, 5220))},
        {"psi^{-2,1}_3(sqrt2) = (1/2 - 253/(360 sqrt2)) pi^3", "cos*cot", "", 3, 2,
         SurdValue(make_rational(1, 2), make_rational(-253, 720), 2)},
        {"alt-csc(sqrt13, 3) = -pi^3/(12 sqrt13)", "", "alt-csc", 3, 13,
         SurdValue(Rational(0), make_rational(-1, 156), 13)},
        {"odd-tan(sqrt5, 5) = 23 pi^5/(3456 sqrt5)", "", "odd-tan", 5, 5,
         SurdValue(Rational(0), make_rational(23, 17280), 5)},
        {"chi-sec(sqrt7, 3) = -7 pi^3/96", "", "chi-sec", 3, 7,
         SurdValue(make_rational(-7, 96), Rational(0), 7)},
    };
}

Evaluation run_case(const ExactCase& c) {
    auto rho = normalize_surd(0, 1, 1, c.d);
    if (!c.variant.empty())
        return evaluator::eval_twisted(evaluator::twisted_from_name(c.variant), c.s, rho);
    auto spec = evaluator::parse_trig(c.trig);
    return evaluator::evaluate(spec.a, spec.b, c.s, rho);
}

void criterion1() {
    std::cout << "== C1: exact reproduction of the published values ==\n";
    for (const auto& c : exact_cases()) {
        double sec = run_row("C1 " + c.name, [&](std::string& detail) {
            Evaluation ev = run_case(c);
            detail = "computed " + text::surd_text(ev.coeff);
            return ev.coeff == c.expected && ev.pi_power == c.s;
        });
        if (sec >= 5.0) run_row("C1 runtime < 5 s: " + c.name, [&](std::string&) { return false; });
    }

    // The printed value of the cotangent example: asserted verbatim. The
    // pipeline and two independent summations (this repo's MPFR path at
    // N = 2e5/4e5 and an external 60-digit reference sum) all give
    // -(sqrt7/140) pi^3, so this row documents a defect in the printed
    // constant rather than in the evaluator; see the companion row.
    run_row("C1 psi^{-1,1}_3(sqrt7) = -(sqrt7/20) pi^3 (printed value, asserted verbatim)",
            [&](std::string& detail) {
                auto rho = normalize_surd(0, 1, 1, 7);
                Evaluation ev = evaluator::evaluate(-1, 1, 3, rho);
                detail = "computed " + text::surd_text(ev.coeff) +
                         "; direct summation agrees with the computed value to 10+ digits, "
                         "factor 7 off the printed one";
                return ev.coeff == SurdValue(Rational(0), make_rational(-1, 20), 7);
            });
    run_row("C1 companion: computed cotangent value matches its own series numerically",
            [&](std::string& detail) {
                auto rho = normalize_surd(0, 1, 1, 7);
                Evaluation ev = evaluator::evaluate(-1, 1, 3, rho);
                if (!(ev.coeff == SurdValue(Rational(0), make_rational(-1, 140), 7))) {
                    detail = "unexpected exact value " + text::surd_text(ev.coeff);
                    return false;
                }
                auto rep = numerics::verify(ev, 200000, 192, "1e-6", true);
                detail = "rel_error = " + rep.rel_error + " at 2e5 terms";
                return rep.pass;
            });

    run_row("C1 tan^3 at sqrt6, s=5: coefficient 35159/(17820 sqrt6), pi exponent resolved to 5",
            [&](std::string& detail) {
                auto rho = normalize_surd(0, 1, 1, 6);
                Evaluation ev = evaluator::evaluate(3, -3, 5, rho);
                detail = "computed (" + text::surd_text(ev.coeff) + ") pi^" +
                         std::to_string(ev.pi_power);
                // 35159/(17820 sqrt6) = 35159 sqrt6 / 106920
                return ev.coeff == SurdValue(Rational(0), make_rational(35159, 106920), 6) &&
                       ev.pi_power == 5;
            });
}

void criterion2() {
    std::cout << "== C2: numerical cross-validation (N = 1e5, prec = 192, rel <= 1e-3) ==\n";
    for (const auto& c : exact_cases()) {
        run_row("C2 " + c.name, [&](std::string& detail) {
            auto rep = numerics::verify(run_case(c), 100000, 192, "1e-3", true);
            detail = "rel_error = " + rep.rel_error;
            return rep.pass;
        });
    }
    run_row("C2 cotangent at sqrt7 (computed value)", [&](std::string& detail) {
        auto rho = normalize_surd(0, 1, 1, 7);
        auto rep = numerics::verify(evaluator::evaluate(-1, 1, 3, rho), 100000, 192, "1e-3", true);
        detail = "rel_error = " + rep.rel_error;
        return rep.pass;
    });
    run_row("C2 tan^3 at sqrt6 confirmed to >= 4 significant digits", [&](std::string& detail) {
        auto rho = normalize_surd(0, 1, 1, 6);
        auto rep = numerics::verify(evaluator::evaluate(3, -3, 5, rho), 100000, 192, "1e-4", true);
        detail = "rel_error = " + rep.rel_error;
        return rep.pass;
    });
}

GeneratorWord random_word(std::mt19937& rng, SeriesKind kind, int max_len, int max_exp) {
    std::uniform_int_distribution<int> len_dist(1, max_len), coin(0, 1), exp_dist(-max_exp, max_exp);
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

GeneratorWord random_word_bounded(std::mt19937& rng, SeriesKind kind, int max_len, int max_exp,
                                  long cap) {
    while (true) {
        GeneratorWord w = random_word(rng, kind, max_len, max_exp);
        auto m = w.product();
        if (abs(m.a) <= cap && abs(m.b) <= cap && abs(m.c) <= cap && abs(m.d) <= cap) return w;
    }
}

void criterion3() {
    std::cout << "== C3: cocycle property suite ==\n";
    auto t0 = std::chrono::steady_clock::now();
    Real bound20 = Real::parse("1e-20", 256);
    for (SeriesKind kind : {SeriesKind::Secant, SeriesKind::Cotangent}) {
        const char* label = kind == SeriesKind::Secant ? "secant" : "cotangent";
        for (long s : kind == SeriesKind::Secant ? std::vector<long>{2, 4, 6}
                                                 : std::vector<long>{3, 5, 7}) {
            run_row("C3 residual < 1e-20, " + std::string(label) + " s=" + std::to_string(s),
                    [&](std::string& detail) {
                        std::mt19937 rng(500u + static_cast<unsigned>(s));
                        std::vector<GeneratorWord> words;
                        if (kind == SeriesKind::Secant) {
                            words.push_back(GeneratorWord{{{Gen::T2, 1}}, 1});
                            words.push_back(GeneratorWord{{{Gen::R2, 1}}, 1});
                        } else {
                            words.push_back(GeneratorWord{{{Gen::T, 1}}, 1});
                            words.push_back(GeneratorWord{{{Gen::S, 1}}, 1});
                        }
                        for (int i = 0; i < 5; ++i)
                            words.push_back(random_word_bounded(rng, kind, 6, 3, 300));
                        Real worst(256);
                        for (const auto& w : words) {
                            auto gamma = w.product();
                            Complex tau = numerics::balanced_point(gamma, 256);
                            Real r = numerics::cocycle_residual(kind, gamma, s, tau, 256, 120);
                            if (r > worst) worst = r;
                        }
                        detail = "max residual = " + worst.str(6);
                        return worst < bound20;
                    });
            run_row("C3 exact cocycle relation, " + std::string(label) + " s=" + std::to_string(s),
                    [&](std::string& detail) {
                        std::mt19937 rng(700u + static_cast<unsigned>(s));
                        for (int i = 0; i < 17; ++i) {
                            GeneratorWord w1 = random_word(rng, kind, 4, 3);
                            GeneratorWord w2 = random_word(rng, kind, 4, 3);
                            GeneratorWord cat = w1;
                            cat.letters.insert(cat.letters.end(), w2.letters.begin(),
                                               w2.letters.end());
                            auto lhs = cocycle::compose_cocycle(cat, kind, s).body;
                            auto rhs = cocycle::rf_slash(cocycle::compose_cocycle(w1, kind, s).body,
                                                         1 - s, w2.product()) +
                                       cocycle::compose_cocycle(w2, kind, s).body;
                            if (!(lhs == rhs)) {
                                detail = "pair " + std::to_string(i) + " differs";
                                return false;
                            }
                        }
                        detail = "17 pairs exact";
                        return true;
                    });
        }
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    run_row("C3 total runtime < 60 s", [&](std::string& detail) {
        detail = std::to_string(total) + " s";
        return total < 60.0;
    });
}

void criterion4() {
    std::cout << "== C4: group machinery ==\n";
    run_row("C4 pell solutions exact and minimal for nonsquare k <= 99", [](std::string& detail) {
        int checked = 0;
        for (long k = 2; k <= 99; ++k) {
            if (arith::is_perfect_square(k)) continue;
            auto sol = modular::pell_fundamental(k);
            if (sol.X * sol.X - Integer(k) * sol.Y * sol.Y != 1) return false;
            auto brute = oracles::pell_brute_force(static_cast<std::uint64_t>(k));
            if (sol.X != Integer(static_cast<unsigned long>(brute.X)) ||
                sol.Y != Integer(static_cast<unsigned long>(brute.Y)))
                return false;
            ++checked;
        }
        detail = std::to_string(checked) + " moduli";
        return true;
    });
    run_row("C4 fixing matrices fix rho exactly and lie in Gamma(N)", [](std::string& detail) {
        int checked = 0;
        for (auto rho : {normalize_surd(0, 1, 1, 2), normalize_surd(0, 1, 1, 3),
                         normalize_surd(0, 1, 1, 5), normalize_surd(0, 1, 1, 7),
                         normalize_surd(1, 1, 2, 5)}) {
            for (long N : {1L, 2L, 4L}) {
                UnimodularMatrix g = modular::fixing_matrix(rho, N);
                if (!modular::is_member(g, GroupId::principal(N))) return false;
                if (g == UnimodularMatrix::identity() || g == -UnimodularMatrix::identity())
                    return false;
                if (!(g.apply(rho.value()) == rho.value())) return false;
                Integer u = g.c / rho.A();
                if (g.c != u * rho.A() || g.d - g.a != u * rho.B() || -g.b != u * rho.C())
                    return false;
                ++checked;
            }
        }
        detail = std::to_string(checked) + " (rho, N) pairs";
        return true;
    });
    run_row("C4 500 random decomposition round trips", [](std::string& detail) {
        std::mt19937 rng(97);
        for (int i = 0; i < 250; ++i) {
            UnimodularMatrix m = random_word(rng, SeriesKind::Cotangent, 30, 5).product();
            if (!(modular::decompose_full(m).product() == m)) return false;
        }
        for (int i = 0; i < 250; ++i) {
            UnimodularMatrix m = random_word(rng, SeriesKind::Secant, 12, 5).product();
            auto w = modular::decompose_gamma2(m);
            if (w.sign != 1 || !(w.product() == m)) return false;
        }
        detail = "250 full + 250 gamma_2";
        return true;
    });
}

void criterion5() {
    std::cout << "== C5: containment sweep (|a|,|b| <= 3, s <= 8) ==\n";
    auto t0 = std::chrono::steady_clock::now();
    run_row("C5 sweep", [](std::string& detail) {
        int evaluated = 0;
        for (auto rho : {normalize_surd(0, 1, 1, 2), normalize_surd(0, 1, 1, 3),
                         normalize_surd(0, 1, 1, 5), normalize_surd(0, 1, 1, 6),
                         normalize_surd(1, 1, 2, 5)}) {
            for (long a = -3; a <= 3; ++a) {
                for (long b = -3; b <= 3; ++b) {
                    for (long s = 2; s <= 8; ++s) {
                        if ((s - b) % 2 != 0) continue;
                        if (s < std::max({a, b, 1L}) + 1) continue;
                        Evaluation ev = evaluator::evaluate(a, b, s, rho);
                        // Q(rho): either rational or in the field of rho.
                        if (!ev.coeff.is_rational() && ev.coeff.d() != rho.d()) return false;
                        if (rho.square_is_rational() && a + b >= 0) {
                            bool contained =
                                (s % 2 == 0) ? ev.coeff.y() == 0 : ev.coeff.x() == 0;
                            if (!contained) return false;
                        }
                        ++evaluated;
                    }
                }
            }
        }
        detail = std::to_string(evaluated) + " evaluations";
        return true;
    });
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    run_row("C5 runtime < 10 min", [&](std::string& detail) {
        detail = std::to_string(total) + " s";
        return total < 600.0;
    });
}

void criterion6() {
    std::cout << "== C6: route consistency ==\n";
    run_row("C6 every combination passes the termwise tau = 2i gate (rel 1e-25, 256 bits)",
            [](std::string& detail) {
                Complex tau{Real::of(0L, 256), Real::of(2L, 256)};
                Real bound = Real::parse("1e-25", 256);
                int checked = 0;
                for (long a = -3; a <= 3; ++a) {
                    for (long b = -3; b <= 3; ++b) {
                        for (long s = 2; s <= 8; ++s) {
                            if ((s - b) % 2 != 0) continue;
                            if (s < std::max({a, b, 1L}) + 1) continue;
                            if (!(numerics::combination_residual(
                                      evaluator::reduce_to_base(a, b, s), tau, 256) < bound))
                                return false;
                            if (!(numerics::combination_residual(
                                      evaluator::lower_plan(a, b, s), tau, 256) < bound))
                                return false;
                            checked += 2;
                        }
                    }
                }
                detail = std::to_string(checked) + " combinations";
                return true;
            });
    run_row("C6 cosecant via cot identities agrees with direct summation", [](std::string& detail) {
        auto rho = normalize_surd(0, 1, 1, 2);
        auto rep = numerics::verify(evaluator::evaluate(0, 1, 3, rho), 100000, 192, "1e-3", true);
        detail = "rel_error = " + rep.rel_error;
        return rep.pass;
    });
    run_row("C6 tangent via cot identities agrees with direct summation", [](std::string& detail) {
        auto rho = normalize_surd(0, 1, 1, 6);
        auto rep = numerics::verify(evaluator::evaluate(1, -1, 5, rho), 100000, 192, "1e-3", true);
        detail = "rel_error = " + rep.rel_error;
        return rep.pass;
    });
    run_row("C6 grid spot checks against direct summation", [](std::string& detail) {
        struct Q {
            long a, b, s, p, q, r, d;
        };
        // A spread across the (a, b) grid, including mixed and nonpositive
        // branches and a non-surd point.
        for (Q q : std::initializer_list<Q>{{3, 3, 7, 0, 1, 1, 6},
                                            {3, -3, 5, 0, 1, 1, 2},
                                            {-3, 3, 5, 0, 1, 1, 3},
                                            {2, 2, 6, 1, 1, 2, 5},
                                            {3, 1, 5, 0, 1, 1, 5},
                                            {1, 3, 5, 0, 1, 1, 2},
                                            {-3, -3, 7, 0, 1, 1, 7},
                                            {2, -2, 4, 0, 1, 1, 11},
                                            {0, 3, 5, 0, 1, 1, 13},
                                            {3, 0, 6, 1, 1, 2, 5}}) {
            auto rho = normalize_surd(q.p, q.q, q.r, q.d);
            auto rep =
                numerics::verify(evaluator::evaluate(q.a, q.b, q.s, rho), 20000, 192, "1e-6", true);
            if (!rep.pass) {
                detail = "(" + std::to_string(q.a) + "," + std::to_string(q.b) + "," +
                         std::to_string(q.s) + ") at d=" + std::to_string(q.d) +
                         " rel_error = " + rep.rel_error;
                return false;
            }
        }
        detail = "10 queries within 1e-6";
        return true;
    });
}

void criterion7() {
    std::cout << "== C7: selftest ==\n";
    run_row("C7 selftest exits 0", [](std::string& detail) {
        std::ostringstream sink;
        int rc = selftest::run(sink);
        std::string table = sink.str();
        detail = "rows: " + std::to_string(std::count(table.begin(), table.end(), '\n') - 1);
        return rc == 0;
    });
}

}  // namespace

int main(int argc, char** argv) {
    int which = 0;
    for (int i = 1; i + 1 < argc + 1; ++i) {
        if (i < argc && std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            which = std::atoi(argv[i + 1]);
    }
    if (which == 0 || which == 1) criterion1();
    if (which == 0 || which == 2) criterion2();
    if (which == 0 || which == 3) criterion3();
    if (which == 0 || which == 4) criterion4();
    if (which == 0 || which == 5) criterion5();
    if (which == 0 || which == 6) criterion6();
    if (which == 0 || which == 7) criterion7();
    if (g_failures)
        std::cout << g_failures << " row(s) failed\n";
    else
        std::cout << "all rows passed\n";
    return g_failures;
}
