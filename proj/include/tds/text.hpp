#pragma once

#include <string>

#include <json.hpp>

#include "tds/evaluate.hpp"
#include "tds/matrix.hpp"
#include "tds/verify.hpp"

namespace tds::text {

using arith::QuadraticIrrational;
using arith::Rational;
using arith::SurdValue;
using evaluator::Evaluation;
using numerics::VerificationReport;

using json = nlohmann::ordered_json;

/// Parse the surd grammar: "sqrt(D)", "(P + Q*sqrt(D))/R", "P/R + Q/R*sqrt(D)"
/// and natural variants with integer P, Q, R, D. Rational values are rejected
/// (RationalInput), malformed text raises ParseError.
QuadraticIrrational parse_tau(const std::string& text);

/// Canonical "num/den" rendering (always with the slash, e.g. "0/1", "-1/20").
std::string rational_str(const Rational& q);

/// Human-readable exact coefficient, e.g. "1/2 - 253/720*sqrt(2)".
std::string surd_text(const SurdValue& v);

/// coeff * pi^s as a decimal with the given significant digits, computed with
/// guard precision so the last digit is correctly rounded.
std::string decimal_string(const SurdValue& coeff, long pi_power, int digits = 40,
                           mpfr_prec_t prec = 192);

/// LaTeX form of coeff * pi^s using only \frac, \sqrt and \pi tokens.
std::string latex_value(const SurdValue& coeff, long pi_power);

json evaluation_json(const Evaluation& ev, const std::string& trig_text);
json report_json(const VerificationReport& r);
json word_json(const modular::GeneratorWord& w);

std::string render_text(const Evaluation& ev, const std::string& trig_text);

}  // namespace tds::text
