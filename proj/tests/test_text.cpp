#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tds/text.hpp"

using namespace tds;
using arith::make_rational;
using arith::Rational;
using arith::SurdValue;

TEST_CASE("surd grammar accepts the documented forms") {
    auto a = text::parse_tau("sqrt(7)");
    CHECK(a.q() == 1);
    CHECK(a.d() == 7);

    auto b = text::parse_tau("(1 + sqrt(5))/2");
    CHECK(b.p() == 1);
    CHECK(b.q() == 1);
    CHECK(b.r() == 2);
    CHECK(b.d() == 5);

    auto c = text::parse_tau("1/2 + 1/2*sqrt(5)");
    CHECK(c == b);

    auto d = text::parse_tau("2*sqrt(2)");
    CHECK(d.q() == 2);
    CHECK(d.d() == 2);

    // sqrt(8) normalizes into the sqrt(2) field.
    CHECK(text::parse_tau("sqrt(8)") == d);
    auto e = text::parse_tau("sqrt(8) - sqrt(2)");
    CHECK(e.q() == 1);
    CHECK(e.d() == 2);

    auto f = text::parse_tau("-1 + 3*sqrt(13)");
    CHECK(f.p() == -1);
    CHECK(f.q() == 3);

    auto g = text::parse_tau("-sqrt(2)");
    CHECK(g.q() == -1);
    CHECK(g.d() == 2);

    auto h = text::parse_tau("3*sqrt(2)/5");
    CHECK(h.q() == 3);
    CHECK(h.r() == 5);
}

TEST_CASE("surd grammar rejections") {
    CHECK_THROWS_AS(text::parse_tau("3/4"), RationalInput);
    CHECK_THROWS_AS(text::parse_tau("sqrt(9)"), RationalInput);
    CHECK_THROWS_AS(text::parse_tau("sqrt(2) - sqrt(2)"), RationalInput);
    CHECK_THROWS_AS(text::parse_tau("sqrt("), ParseError);
    CHECK_THROWS_AS(text::parse_tau("sqrt(2) + sqrt(3)"), ParseError);
    CHECK_THROWS_AS(text::parse_tau("sqrt(2) * sqrt(3)"), ParseError);
    CHECK_THROWS_AS(text::parse_tau("sqrt(-4)"), NonRealInput);
    CHECK_THROWS_AS(text::parse_tau("(1+sqrt(5))/0"), ParseError);
    CHECK_THROWS_AS(text::parse_tau("1 + + sqrt(2)"), ParseError);
}

TEST_CASE("malformed inputs raise structured errors, never crash") {
    for (const char* bad : {"", "sqrt", "sqrt()", "((1+sqrt(2))", "1//2", "sqrt(2)sqrt(3)",
                            "*sqrt(2)", "1 +", "2 ** sqrt(2)", "0x12", "sqrt(2)/",
                            "9999999999999999999999999999999/3 + sqrt(2) + "}) {
        CHECK_THROWS_AS(text::parse_tau(bad), Error);
    }
    for (const char* bad : {"", "^2", "sec^-1", "sec csc^", "sec**2", "se c", "2sec"}) {
        CHECK_THROWS_AS(evaluator::parse_trig(bad), ParseError);
    }
}

TEST_CASE("json output round-trips byte-identically") {
    auto rho = text::parse_tau("sqrt(5)");
    auto ev = evaluator::evaluate(2, 0, 4, rho);
    auto j = text::evaluation_json(ev, "sec^2");
    std::string bytes = j.dump(2);
    CHECK(text::json::parse(bytes).dump(2) == bytes);
    CHECK(j["value"]["coeff"]["x"] == "14/135");
    CHECK(j["value"]["coeff"]["y"] == "0/1");
    CHECK(j["value"]["pi_power"] == 4);
    CHECK(j["value"]["field"]["d"] == 5);
}

namespace {

// Allow only \frac, \sqrt, \pi and check brace balance.
bool latex_ok(const std::string& s) {
    long depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '{') ++depth;
        if (c == '}') {
            if (--depth < 0) return false;
        }
        if (c == '\\') {
            bool ok = s.compare(i + 1, 4, "frac") == 0 || s.compare(i + 1, 4, "sqrt") == 0 ||
                      s.compare(i + 1, 2, "pi") == 0;
            if (!ok) return false;
        }
    }
    return depth == 0;
}

}  // namespace

TEST_CASE("latex rendering stays within the allowed tokens") {
    SurdValue mixed(make_rational(1, 2), make_rational(-253, 720), 2);
    std::string latex = text::latex_value(mixed, 3);
    CHECK(latex_ok(latex));
    CHECK(latex == "(\\frac{1}{2}-\\frac{253}{720}\\sqrt{2})\\pi^{3}");

    CHECK(text::latex_value(SurdValue(make_rational(-2483, 5220)), 4) ==
          "-\\frac{2483}{5220}\\pi^{4}");
    CHECK(text::latex_value(SurdValue(Rational(0), make_rational(23, 17280), 5), 5) ==
          "\\frac{23}{17280}\\sqrt{5}\\pi^{5}");
    CHECK(latex_ok(text::latex_value(SurdValue(Rational(0), make_rational(-1, 140), 7), 3)));
}

TEST_CASE("latex is well formed for every value the selftest table produces") {
    struct Row {
        const char* trig;
        const char* variant;
        long s, d;
    };
    for (Row r : std::initializer_list<Row>{{"cot", "", 3, 7},
                                            {"sec^2", "", 4, 5},
                                            {"cot^2", "", 4, 5},
                                            {"csc^2", "", 4, 11},
                                            {"sec^3", "", 4, 2},
                                            {"cos*cot", "", 3, 2},
                                            {"tan^3", "", 5, 6},
                                            {"", "alt-csc", 3, 13},
                                            {"", "odd-tan", 5, 5},
                                            {"", "chi-sec", 3, 7}}) {
        auto rho = arith::normalize_surd(0, 1, 1, r.d);
        evaluator::Evaluation ev =
            *r.variant ? evaluator::eval_twisted(evaluator::twisted_from_name(r.variant), r.s, rho)
                       : evaluator::evaluate(evaluator::parse_trig(r.trig), r.s, rho);
        CHECK(latex_ok(text::latex_value(ev.coeff, ev.pi_power)));
    }
}

TEST_CASE("decimal rendering is stable and correctly rounded") {
    std::string d = text::decimal_string(SurdValue(make_rational(14, 135)), 4);
    // Compare against an independent high-precision rendering.
    numerics::Real ref = numerics::Real::of(make_rational(14, 135), 320) *
                         numerics::pow_si(numerics::Real::pi(320), 4);
    CHECK(d == ref.str(40));
    CHECK(d.substr(0, 8) == "1.010168");
    // 40 significant digits: "d." + 39 digits + exponent.
    CHECK(d.find('e') == 41);
    // Identical calls give identical bytes.
    CHECK(d == text::decimal_string(SurdValue(make_rational(14, 135)), 4));
}
