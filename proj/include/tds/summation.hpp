#pragma once

#include <vector>

#include "tds/evaluate.hpp"
#include "tds/hp.hpp"
#include "tds/period.hpp"

namespace tds::numerics {

using arith::QuadraticIrrational;
using cocycle::SeriesKind;
using evaluator::LinearCombination;
using evaluator::TwistedVariant;
using modular::UnimodularMatrix;

/// Partial quotients and convergents p_k/q_k of the continued fraction of a
/// quadratic irrational, computed with exact surd arithmetic.
struct ConvergentSeq {
    std::vector<Integer> partial_quotients;
    std::vector<std::pair<Integer, Integer>> convergents;  // (p_k, q_k)
};

ConvergentSeq convergents(const QuadraticIrrational& rho, std::size_t count);

/// sum_{n=1}^{N} trig^{a,b}(pi n rho)/n^s at a real quadratic point. The
/// argument pi*n*rho is reduced modulo 2*pi through the exact integer floor of
/// n*rho/2, so accuracy does not degrade with n. Works at
/// prec + ceil(log2 N) + 32 guard bits; requires prec >= 64
/// (PrecisionUnderflow otherwise).
Real partial_sum(long a, long b, long s, const QuadraticIrrational& rho, unsigned long N,
                 mpfr_prec_t prec);

/// The same truncated sum at a nonreal point (no argument reduction needed).
Complex partial_sum(long a, long b, long s, const Complex& tau, unsigned long N,
                    mpfr_prec_t prec);

/// Truncated twisted series: alternating cosecant, odd-index tangent, or
/// chi-twisted secant, summed over n <= N.
Real twisted_partial_sum(TwistedVariant variant, long s, const QuadraticIrrational& rho,
                         unsigned long N, mpfr_prec_t prec);

enum class TrigBase { Sec, Tan, Csc, Cot };

/// m-th derivative of sec/tan/csc/cot at a complex point, from the exact
/// symbolic derivative in the (sec, tan) or (csc, cot) polynomial basis.
Complex trig_derivative(TrigBase base, long m, const Complex& z);

/// trig^{a,b}(z) = cos(z)^{-a} sin(z)^{-b}.
Complex trig_ab(long a, long b, const Complex& z);

/// (D^m psi^{kind}_s)(tau) for Im tau > 0, summed until the exponentially
/// decaying terms are below the target precision. The m = 0 cotangent case
/// splits off the limit -i of cot and restores it through zeta(s).
/// tail_bits bounds the truncation error as 2^{-tail_bits} (0 = full prec);
/// points near the real axis need many terms, so callers chasing a fixed
/// residual bound should pass the accuracy they actually need.
Complex uhp_psi_derivative(SeriesKind kind, long m, long s, const Complex& tau, mpfr_prec_t prec,
                           long tail_bits = 0);

/// |(c tau + d)^{s-1} psi(gamma tau) - psi(tau) - pi^s p_s(gamma; tau)| at a
/// point in the upper half-plane.
Real cocycle_residual(SeriesKind kind, const UnimodularMatrix& gamma, long s, const Complex& tau,
                      mpfr_prec_t prec, long tail_bits = 0);

/// A point where the residual check is well conditioned for this gamma:
/// tau = (-d + i)/c has |c tau + d| = 1, so tau and gamma tau share the same
/// imaginary part 1/|c|. Falls back to 1 + 2i for c = 0.
Complex balanced_point(const UnimodularMatrix& gamma, mpfr_prec_t prec);

/// Max residual over n = 1..4 of the termwise identity behind a
/// LinearCombination at tau0: trig^{a,b}(pi n tau0)/n^s against the sum of its
/// terms (derivative terms evaluate as coeff * base^(j)(pi n (mu tau0 + sigma))/n^s).
/// This is the identity that makes the combination sum to psi^{a,b}_s wherever
/// both sides converge.
Real combination_residual(const LinearCombination& lc, const Complex& tau0, mpfr_prec_t prec);

/// Evaluate a rational function at a complex point (exact coefficients,
/// rounded arithmetic).
Complex rf_eval(const arith::RationalFunction& f, const Complex& z);

}  // namespace tds::numerics
