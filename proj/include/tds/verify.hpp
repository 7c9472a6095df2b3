#pragma once

#include <string>

#include "tds/summation.hpp"

namespace tds::numerics {

using evaluator::Evaluation;

/// Outcome of comparing an exact Evaluation against direct partial summation.
/// Real-line convergence is slow, so a pass is heuristic agreement with the
/// truncated series, not a certification.
struct VerificationReport {
    unsigned long terms_used = 0;
    mpfr_prec_t precision_bits = 0;
    std::string numeric_value;
    std::string exact_value_decimal;
    std::string abs_error;
    std::string rel_error;
    std::string tolerance;
    bool relative = true;
    bool pass = false;
};

/// Compare ev.coeff * pi^s against the N-term partial sum of the series
/// (twisted evaluations sum their twisted series). The tolerance string is an
/// exact decimal like "1e-3"; pass means rel_error <= tol (or abs_error <= tol
/// when relative = false).
VerificationReport verify(const Evaluation& ev, unsigned long N, mpfr_prec_t prec,
                          const std::string& tol, bool relative = true);

}  // namespace tds::numerics
