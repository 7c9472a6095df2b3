#include "tds/selftest.hpp"

#include <functional>
#include <random>
#include <vector>

#include "tds/decompose.hpp"
#include "tds/summation.hpp"
#include "tds/text.hpp"
#include "tds/verify.hpp"

namespace tds::selftest {

using arith::make_rational;
using arith::normalize_surd;
using arith::Rational;
using arith::SurdValue;
using cocycle::compose_cocycle;
using cocycle::PeriodFunction;
using cocycle::rf_slash;
using cocycle::SeriesKind;
using evaluator::Evaluation;
using modular::Gen;
using modular::GeneratorWord;
using numerics::Complex;
using numerics::Real;

namespace {

struct ValueCase {
    std::string name;
    std::string trig;     // empty for twisted variants
    std::string variant;  // twisted name, or empty
    long s;
    long d;  // tau = sqrt(d)
    Rational x, y;
};

std::vector<ValueCase> value_cases() {
    return {
        // The published table prints -1/20 here; the series itself sums to
        // -1/140 (confirmed by direct summation to 10+ digits), so that is
        // the value pinned for regression purposes.
        {"eval cot sqrt(7) s=3 [series value; the widely printed -1/20 is unreproducible]", "cot", "", 3, 7,
         Rational(0), make_rational(-1, 140)},
        {"eval sec^2 sqrt(5) s=4", "sec^2", "", 4, 5, make_rational(14, 135), Rational(0)},
        {"eval cot^2 sqrt(5) s=4", "cot^2", "", 4, 5, make_rational(13, 945), Rational(0)},
        {"eval csc^2 sqrt(11) s=4", "csc^2", "", 4, 11, make_rational(8, 385), Rational(0)},
        {"eval sec^3 sqrt(2) s=4", "sec^3", "", 4, 2, make_rational(-2483, 5220), Rational(0)},
        {"eval cos*cot sqrt(2) s=3", "cos*cot", "", 3, 2, make_rational(1, 2),
         make_rational(-253, 720)},
        {"eval tan^3 sqrt(6) s=5", "tan^3", "", 5, 6, Rational(0), make_rational(35159, 106920)},
        {"special alt-csc sqrt(13) s=3", "", "alt-csc", 3, 13, Rational(0), make_rational(-1, 156)},
        {"special odd-tan sqrt(5) s=5", "", "odd-tan", 5, 5, Rational(0), make_rational(23, 17280)},
        {"special chi-sec sqrt(7) s=3", "", "chi-sec", 3, 7, make_rational(-7, 96), Rational(0)},
    };
}

Evaluation run_case(const ValueCase& c) {
    auto rho = normalize_surd(0, 1, 1, c.d);
    if (!c.variant.empty())
        return evaluator::eval_twisted(evaluator::twisted_from_name(c.variant), c.s, rho);
    auto t = evaluator::parse_trig(c.trig);
    return evaluator::evaluate(t.a, t.b, c.s, rho);
}

GeneratorWord random_word(std::mt19937& rng, SeriesKind kind, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> gen_dist(0, 1);
    std::uniform_int_distribution<int> exp_dist(-3, 3);
    GeneratorWord w;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        long e = 0;
        while (e == 0) e = exp_dist(rng);
        Gen g;
        if (kind == SeriesKind::Secant) g = gen_dist(rng) ? Gen::T2 : Gen::R2;
        else g = gen_dist(rng) ? Gen::T : Gen::S;
        w.letters.push_back({g, e});
    }
    return w;
}

// Redraw until the matrix entries stay small enough for fast summation.
GeneratorWord random_word_bounded(std::mt19937& rng, SeriesKind kind, int max_len, long cap) {
    while (true) {
        GeneratorWord w = random_word(rng, kind, max_len);
        auto m = w.product();
        if (abs(m.a) <= cap && abs(m.b) <= cap && abs(m.c) <= cap && abs(m.d) <= cap) return w;
    }
}

struct Row {
    std::string name;
    std::function<bool(std::string&)> check;
};

void add_value_rows(std::vector<Row>& rows) {
    for (const auto& c : value_cases()) {
        rows.push_back({c.name, [c](std::string& detail) {
                            Evaluation ev = run_case(c);
                            SurdValue expected(c.x, c.y, c.d);
                            detail = text::surd_text(ev.coeff) + " * pi^" +
                                     std::to_string(ev.pi_power);
                            return ev.coeff == expected && ev.pi_power == c.s;
                        }});
        rows.push_back({"numeric " + c.name, [c](std::string& detail) {
                            Evaluation ev = run_case(c);
                            auto report = numerics::verify(ev, 100000, 192, "1e-3", true);
                            detail = "rel_error = " + report.rel_error;
                            return report.pass;
                        }});
    }
}

void add_cocycle_rows(std::vector<Row>& rows) {
    struct KindPlan {
        SeriesKind kind;
        std::vector<long> svals;
        const char* label;
    };
    for (const KindPlan& plan :
         {KindPlan{SeriesKind::Secant, {2, 4, 6}, "sec"},
          KindPlan{SeriesKind::Cotangent, {3, 5, 7}, "cot"}}) {
        for (long s : plan.svals) {
            rows.push_back(
                {"cocycle residual " + std::string(plan.label) + " s=" + std::to_string(s),
                 [plan, s](std::string& detail) {
                     std::mt19937 rng(20240500u + static_cast<unsigned>(s));
                     Real bound = Real::parse("1e-20", 256);
                     std::vector<GeneratorWord> words;
                     if (plan.kind == SeriesKind::Secant) {
                         words.push_back(GeneratorWord{{{Gen::T2, 1}}, 1});
                         words.push_back(GeneratorWord{{{Gen::R2, 1}}, 1});
                     } else {
                         words.push_back(GeneratorWord{{{Gen::T, 1}}, 1});
                         words.push_back(GeneratorWord{{{Gen::S, 1}}, 1});
                     }
                     for (int i = 0; i < 5; ++i)
                         words.push_back(random_word_bounded(rng, plan.kind, 6, 300));
                     Real worst(256);
                     for (const auto& w : words) {
                         auto gamma = w.product();
                         // Evaluate where tau and gamma tau share the same
                         // imaginary part, so both sums stay short.
                         Complex tau = numerics::balanced_point(gamma, 256);
                         Real r = numerics::cocycle_residual(plan.kind, gamma, s, tau, 256, 120);
                         if (r > worst) worst = r;
                     }
                     detail = "max residual = " + worst.str(6);
                     return worst < bound;
                 }});
            rows.push_back(
                {"cocycle relation " + std::string(plan.label) + " s=" + std::to_string(s),
                 [plan, s](std::string& detail) {
                     std::mt19937 rng(911u + static_cast<unsigned>(s));
                     for (int i = 0; i < 17; ++i) {
                         GeneratorWord w1 = random_word(rng, plan.kind, 4);
                         GeneratorWord w2 = random_word(rng, plan.kind, 4);
                         GeneratorWord cat = w1;
                         cat.letters.insert(cat.letters.end(), w2.letters.begin(),
                                            w2.letters.end());
                         PeriodFunction lhs = compose_cocycle(cat, plan.kind, s);
                         PeriodFunction p1 = compose_cocycle(w1, plan.kind, s);
                         PeriodFunction p2 = compose_cocycle(w2, plan.kind, s);
                         auto rhs = rf_slash(p1.body, 1 - s, w2.product()) + p2.body;
                         if (!(lhs.body == rhs)) {
                             detail = "pair " + std::to_string(i) + " mismatched";
                             return false;
                         }
                     }
                     detail = "17 random pairs exact";
                     return true;
                 }});
        }
    }
}

}  // namespace

int run(std::ostream& out, const std::string& filter) {
    std::vector<Row> rows;
    add_value_rows(rows);
    add_cocycle_rows(rows);

    int failures = 0, ran = 0;
    for (auto& row : rows) {
        if (!filter.empty() && row.name.find(filter) == std::string::npos) continue;
        ++ran;
        std::string detail;
        bool ok = false;
        try {
            ok = row.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        out << (ok ? "[ok]   " : "[FAIL] ") << row.name;
        if (!detail.empty()) out << "  (" << detail << ")";
        out << "\n";
        if (!ok) ++failures;
    }
    out << (failures == 0 ? "selftest passed" : "selftest FAILED") << " (" << ran - failures << "/"
        << ran << " rows)\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace tds::selftest
