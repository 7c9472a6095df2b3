#pragma once

#include <string>

#include "tds/lift.hpp"
#include "tds/linear_combination.hpp"
#include "tds/surd.hpp"
#include "tds/trig_spec.hpp"

namespace tds::evaluator {

using arith::QuadraticIrrational;
using arith::SurdValue;

/// An exact closed form psi^{a,b}_s(rho) = coeff * pi^s with coeff in Q(rho).
struct Evaluation {
    Evaluation(SurdValue coeff, long pi_power, long a, long b, QuadraticIrrational rho,
               std::string label = "")
        : coeff(std::move(coeff)),
          pi_power(pi_power),
          a(a),
          b(b),
          rho(std::move(rho)),
          label(std::move(label)) {}

    SurdValue coeff;
    long pi_power;
    long a, b;
    QuadraticIrrational rho;
    std::string label;  // empty for plain queries, the variant name for twisted ones
};

/// Bernoulli branch: psi^{a,b}_s(rho) / pi^s for a <= 0, b <= 0, s > 1 of b's
/// parity. cos^{-a} sin^{-b} is expanded into exact harmonics; each one is a
/// Bernoulli polynomial at the fractional part of m*rho/2, and the constant
/// harmonic contributes through zeta(even s).
SurdValue eval_nonpositive(long a, long b, long s, const QuadraticIrrational& rho);

enum class CscTan { Csc, Tan };

/// (D^j psi^{0,1}_s)(rho) or (D^j psi^{1,-1}_s)(rho), divided by pi^s, through
/// the cotangent series at rho/2, rho, and 2 rho.
SurdValue eval_csc_tan_derivative(CscTan kind, long j, long s, const QuadraticIrrational& rho);

/// The full pipeline for psi^{a,b}_s(rho).
Evaluation evaluate(long a, long b, long s, const QuadraticIrrational& rho);

inline Evaluation evaluate(const TrigSpec& t, long s, const QuadraticIrrational& rho) {
    return evaluate(t.a, t.b, s, rho);
}

enum class TwistedVariant { AltCsc, OddTan, ChiSec };

TwistedVariant twisted_from_name(const std::string& name);
std::string twisted_name(TwistedVariant v);

/// The three twisted series of the alternating / odd-index / character type,
/// reduced to psi^{a,b}_s at shifted and scaled arguments:
///   alt-csc: sum (-1)^{n+1} csc(pi n rho)/n^s      = -psi^{0,1}_s(rho + 1)
///   odd-tan: sum_{n odd} tan(pi n rho)/n^s         = 2^{-s} psi^{-1,1}_s(2 rho)
///                                                    - psi^{-1,1}_s(rho + 1/2)
///   chi-sec: sum chi(n) sec(pi n rho)/n^s          = psi^{0,1}_s(rho + 1/2)
///                                                    - 2^{-s} psi^{0,1}_s(2 rho + 1)
Evaluation eval_twisted(TwistedVariant variant, long s, const QuadraticIrrational& rho);

}  // namespace tds::evaluator
