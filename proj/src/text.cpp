#include "tds/text.hpp"

#include <cctype>

#include "tds/hp.hpp"

namespace tds::text {

using arith::Integer;
using arith::make_rational;

namespace {

// Recursive-descent parser for the surd grammar. Values are tracked as
// x + y*sqrt(d) with rational x, y; every sqrt is normalized squarefree so
// that sqrt(8) and sqrt(2) can combine.
class SurdParser {
  public:
    explicit SurdParser(const std::string& text) : s_(text) {}

    QuadraticIrrational parse() {
        auto [x, y, d] = sum();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input in surd", pos_);
        if (y == 0) throw RationalInput("tau is rational; evaluation requires a real quadratic irrationality");
        // x + y sqrt(d) -> (p + q sqrt(d))/r over a common denominator.
        Integer r = x.get_den() * y.get_den();
        Integer p = x.get_num() * y.get_den();
        Integer q = y.get_num() * x.get_den();
        return arith::normalize_surd(p, q, r, d);
    }

  private:
    struct Value {
        Rational x, y;
        Integer d;  // 0 until a sqrt appears
    };

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError("expected an integer", start);
        return Integer(s_.substr(start, pos_ - start));
    }

    Value merge_field(Value a, const Value& b) {
        if (a.d == 0) a.d = b.d;
        else if (b.d != 0 && a.d != b.d)
            throw ParseError("mixed sqrt radicands " + arith::to_string(a.d) + " and " +
                                 arith::to_string(b.d),
                             pos_);
        return a;
    }

    Value atom() {
        skip_ws();
        if (s_.compare(pos_, 5, "sqrt(") == 0) {
            pos_ += 5;
            Integer D = integer();
            if (!eat(')')) throw ParseError("expected ')' after sqrt radicand", pos_);
            if (D < 0) throw NonRealInput("sqrt of negative integer");
            // Pull out square factors so different spellings share a field.
            Integer q(1), d(D);
            for (Integer f = 2; f * f <= d; ++f)
                while (d % (f * f) == 0) {
                    d /= f * f;
                    q *= f;
                }
            if (d <= 1) return {Rational(q * d), Rational(0), 0};
            return {Rational(0), Rational(q), d};
        }
        return {Rational(integer()), Rational(0), 0};
    }

    Value product() {
        Value v = atom();
        while (true) {
            skip_ws();
            if (eat('*')) {
                Value o = atom();
                if (v.d != 0 && o.d != 0)
                    throw ParseError("products of two square roots are not part of the grammar",
                                     pos_);
                Value out = merge_field(v, o);
                // One factor is rational.
                Rational scalar = (o.d == 0) ? o.x : v.x;
                Value surd = (o.d == 0) ? v : o;
                out.x = surd.x * scalar;
                out.y = surd.y * scalar;
                v = out;
            } else if (pos_ < s_.size() && s_[pos_] == '/') {
                // Lookahead: '/' binds to this factor only for an integer
                // denominator; "(...)/R" is handled at the top level.
                ++pos_;
                Integer den = integer();
                if (den == 0) throw ParseError("division by zero", pos_);
                Rational inv = make_rational(Integer(1), den);
                v.x *= inv;
                v.y *= inv;
            } else {
                break;
            }
        }
        return v;
    }

    std::tuple<Rational, Rational, Integer> sum() {
        skip_ws();
        Value acc{Rational(0), Rational(0), 0};
        if (eat('(')) {
            Value inner = sum_tail();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            acc = inner;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                Integer den = integer();
                if (den == 0) throw ParseError("division by zero", pos_);
                Rational inv = make_rational(Integer(1), den);
                acc.x *= inv;
                acc.y *= inv;
            }
            // Allow a continued sum after the parenthesized group.
            acc = continue_sum(acc);
        } else {
            acc = sum_tail();
        }
        return {acc.x, acc.y, acc.d == 0 ? Integer(1) : acc.d};
    }

    Value sum_tail() {
        skip_ws();
        bool negate = false;
        if (pos_ < s_.size() && s_[pos_] == '-' && pos_ + 1 < s_.size() &&
            !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            negate = true;  // unary minus before sqrt, e.g. "-sqrt(2)"
            ++pos_;
        }
        Value acc = product();
        if (negate) {
            acc.x = -acc.x;
            acc.y = -acc.y;
        }
        return continue_sum(acc);
    }

    Value continue_sum(Value acc) {
        while (true) {
            skip_ws();
            if (eat('+')) {
                Value o = product();
                acc = merge_field(acc, o);
                acc.x += o.x;
                acc.y += o.y;
            } else if (pos_ < s_.size() && s_[pos_] == '-') {
                ++pos_;
                Value o = product();
                acc = merge_field(acc, o);
                acc.x -= o.x;
                acc.y -= o.y;
            } else {
                break;
            }
        }
        return acc;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string pi_power_text(long s) { return s == 1 ? "pi" : "pi^" + std::to_string(s); }

}  // namespace

QuadraticIrrational parse_tau(const std::string& textual) { return SurdParser(textual).parse(); }

std::string rational_str(const Rational& q) {
    return arith::to_string(q.get_num()) + "/" + arith::to_string(q.get_den());
}

std::string surd_text(const SurdValue& v) { return v.str(); }

std::string decimal_string(const SurdValue& coeff, long pi_power, int digits, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 64;
    numerics::Real value =
        numerics::surd_to_real(coeff, wp) * numerics::pow_si(numerics::Real::pi(wp), pi_power);
    return value.str(digits);
}

namespace {

std::string latex_rational(const Rational& q, bool leading_sign) {
    std::string sign = sgn(q) < 0 ? "-" : (leading_sign ? "+" : "");
    Rational a = abs(q);
    if (a.get_den() == 1) return sign + arith::to_string(a.get_num());
    return sign + "\\frac{" + arith::to_string(a.get_num()) + "}{" + arith::to_string(a.get_den()) +
           "}";
}

}  // namespace

std::string latex_value(const SurdValue& coeff, long pi_power) {
    std::string pi = pi_power == 1 ? "\\pi" : "\\pi^{" + std::to_string(pi_power) + "}";
    if (coeff.is_zero()) return "0";
    std::string body;
    bool both = coeff.x() != 0 && coeff.y() != 0;
    if (coeff.x() != 0) body += latex_rational(coeff.x(), false);
    if (coeff.y() != 0) {
        Rational y = coeff.y();
        std::string yterm;
        if (abs(y) == 1) yterm = (sgn(y) < 0 ? "-" : (both ? "+" : ""));
        else yterm = latex_rational(y, both);
        yterm += "\\sqrt{" + arith::to_string(coeff.d()) + "}";
        body += yterm;
    }
    if (both) return "(" + body + ")" + pi;
    return body + pi;
}

json evaluation_json(const Evaluation& ev, const std::string& trig_text) {
    json q;
    if (!ev.label.empty()) {
        q["variant"] = ev.label;
    } else {
        if (!trig_text.empty()) q["trig"] = trig_text;
        q["a"] = ev.a;
        q["b"] = ev.b;
    }
    q["tau"] = ev.rho.str();
    q["s"] = ev.pi_power;
    json j;
    j["query"] = q;
    json field;
    if (ev.rho.d().fits_slong_p()) field["d"] = ev.rho.d().get_si();
    else field["d"] = arith::to_string(ev.rho.d());
    j["value"] = {
        {"pi_power", ev.pi_power},
        {"field", field},
        {"coeff", {{"x", rational_str(ev.coeff.x())}, {"y", rational_str(ev.coeff.y())}}},
    };
    j["decimal"] = decimal_string(ev.coeff, ev.pi_power);
    return j;
}

json report_json(const VerificationReport& r) {
    json j;
    j["terms"] = r.terms_used;
    j["precision_bits"] = static_cast<long>(r.precision_bits);
    j["numeric"] = r.numeric_value;
    j["exact_decimal"] = r.exact_value_decimal;
    j["abs_error"] = r.abs_error;
    j["pass"] = r.pass;
    return j;
}

json word_json(const modular::GeneratorWord& w) {
    json letters = json::array();
    for (const auto& [g, e] : w.letters) {
        long mult = (g == modular::Gen::T2 || g == modular::Gen::R2) ? 2 : 1;
        std::string base =
            (g == modular::Gen::T || g == modular::Gen::T2) ? "T" : (g == modular::Gen::S ? "S" : "R");
        letters.push_back(base + "^" + std::to_string(e * mult));
    }
    json j;
    j["word"] = letters;
    j["sign"] = w.sign;
    return j;
}

std::string render_text(const Evaluation& ev, const std::string& trig_text) {
    std::string lhs;
    if (!ev.label.empty()) lhs = ev.label + "[s=" + std::to_string(ev.pi_power) + "]";
    else if (!trig_text.empty())
        lhs = "sum " + trig_text + "(pi n tau)/n^" + std::to_string(ev.pi_power);
    else
        lhs = "psi^{" + std::to_string(ev.a) + "," + std::to_string(ev.b) + "}_" +
              std::to_string(ev.pi_power);
    std::string coeff = surd_text(ev.coeff);
    bool wrap = ev.coeff.x() != 0 && ev.coeff.y() != 0;
    std::string out = lhs + " at tau = " + ev.rho.str() + "\n";
    out += "  = " + (wrap ? "(" + coeff + ")" : coeff) + " * " + pi_power_text(ev.pi_power) + "\n";
    out += "  = " + decimal_string(ev.coeff, ev.pi_power) + "\n";
    return out;
}

}  // namespace tds::text
