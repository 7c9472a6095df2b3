#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tds/decompose.hpp"
#include "tds/pell.hpp"
#include "tds/selftest.hpp"
#include "tds/text.hpp"
#include "tds/verify.hpp"

namespace py = pybind11;
using namespace tds;

namespace {

py::dict evaluation_dict(const evaluator::Evaluation& ev, const std::string& trig_text) {
    auto j = text::evaluation_json(ev, trig_text);
    py::dict d;
    d["pi_power"] = ev.pi_power;
    d["d"] = arith::to_string(ev.rho.d());
    d["x"] = text::rational_str(ev.coeff.x());
    d["y"] = text::rational_str(ev.coeff.y());
    d["decimal"] = std::string(j["decimal"]);
    d["pretty"] = text::surd_text(ev.coeff) + " * pi^" + std::to_string(ev.pi_power);
    d["latex"] = text::latex_value(ev.coeff, ev.pi_power);
    return d;
}

py::dict report_dict(const numerics::VerificationReport& r) {
    py::dict d;
    d["terms"] = r.terms_used;
    d["precision_bits"] = static_cast<long>(r.precision_bits);
    d["numeric"] = r.numeric_value;
    d["exact_decimal"] = r.exact_value_decimal;
    d["abs_error"] = r.abs_error;
    d["rel_error"] = r.rel_error;
    d["pass"] = r.pass;
    return d;
}

}  // namespace

PYBIND11_MODULE(_tds, m) {
    m.doc() = "exact evaluation of trigonometric Dirichlet series at real quadratic "
              "irrationalities";

    py::register_exception<ParseError>(m, "TdsParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "TdsDomainError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "TdsInternalError", PyExc_RuntimeError);

    m.def(
        "evaluate",
        [](const std::string& trig, const std::string& tau, long s) {
            auto spec = evaluator::parse_trig(trig);
            auto rho = text::parse_tau(tau);
            return evaluation_dict(evaluator::evaluate(spec.a, spec.b, s, rho), trig);
        },
        py::arg("trig"), py::arg("tau"), py::arg("s"),
        "Exact value of sum_n trig(pi n tau)/n^s as {x, y, d, pi_power, ...} meaning "
        "(x + y sqrt(d)) pi^pi_power");

    m.def(
        "special",
        [](const std::string& variant, const std::string& tau, long s) {
            auto rho = text::parse_tau(tau);
            auto ev = evaluator::eval_twisted(evaluator::twisted_from_name(variant), s, rho);
            return evaluation_dict(ev, "");
        },
        py::arg("variant"), py::arg("tau"), py::arg("s"),
        "Twisted series: variant is one of 'alt-csc', 'odd-tan', 'chi-sec'");

    m.def(
        "verify",
        [](const std::string& trig, const std::string& tau, long s, unsigned long terms,
           long prec, const std::string& tol) {
            auto spec = evaluator::parse_trig(trig);
            auto rho = text::parse_tau(tau);
            auto ev = evaluator::evaluate(spec.a, spec.b, s, rho);
            return report_dict(numerics::verify(ev, terms, prec, tol, true));
        },
        py::arg("trig"), py::arg("tau"), py::arg("s"), py::arg("terms") = 100000,
        py::arg("prec") = 192, py::arg("tol") = "1e-3",
        "Evaluate exactly, then cross-check against direct partial summation");

    m.def(
        "partial_sum",
        [](const std::string& trig, const std::string& tau, long s, unsigned long terms,
           long prec) {
            auto spec = evaluator::parse_trig(trig);
            auto rho = text::parse_tau(tau);
            return numerics::partial_sum(spec.a, spec.b, s, rho, terms, prec).str();
        },
        py::arg("trig"), py::arg("tau"), py::arg("s"), py::arg("terms") = 100000,
        py::arg("prec") = 192, "Truncated numerical summation with exact argument reduction");

    m.def(
        "pell",
        [](const std::string& k) {
            auto sol = modular::pell_fundamental(arith::Integer(k));
            return py::make_tuple(arith::to_string(sol.X), arith::to_string(sol.Y));
        },
        py::arg("k"), "Fundamental solution (X, Y) of X^2 - k Y^2 = 1, as decimal strings");

    m.def(
        "fixing_matrix",
        [](const std::string& tau, long level) {
            auto rho = text::parse_tau(tau);
            return modular::fixing_matrix(rho, level).str();
        },
        py::arg("tau"), py::arg("level") = 1,
        "Matrix a,b,c,d fixing tau and congruent to I mod level");

    m.def(
        "decompose",
        [](const std::string& matrix, const std::string& group) {
            auto m2 = modular::UnimodularMatrix::parse(matrix);
            auto w = group == "gamma2" ? modular::decompose_gamma2(m2)
                                       : modular::decompose_full(m2);
            auto j = text::word_json(w);
            std::vector<std::string> letters;
            for (const auto& item : j["word"]) letters.push_back(item);
            return py::make_tuple(letters, w.sign);
        },
        py::arg("matrix"), py::arg("group") = "full",
        "Generator word (letters, sign) with product = matrix");

    m.def(
        "cocycle",
        [](const std::string& kind, long s, const std::string& matrix) {
            auto m2 = modular::UnimodularMatrix::parse(matrix);
            cocycle::SeriesKind k = kind == "sec" ? cocycle::SeriesKind::Secant
                                                  : cocycle::SeriesKind::Cotangent;
            auto word = k == cocycle::SeriesKind::Secant ? modular::decompose_gamma2(m2)
                                                         : modular::decompose_full(m2);
            auto p = cocycle::compose_cocycle(word, k, s);
            py::dict d;
            d["weight"] = p.weight;
            d["num"] = p.body.num().str();
            d["den"] = p.body.den().str();
            return d;
        },
        py::arg("kind"), py::arg("s"), py::arg("matrix"),
        "Period function p_s(gamma; tau) as numerator/denominator strings");

    m.def(
        "selftest",
        []() {
            std::ostringstream out;
            int rc = selftest::run(out);
            return py::make_tuple(rc == 0, out.str());
        },
        "Run the embedded verification table; returns (ok, table_text)");
}
