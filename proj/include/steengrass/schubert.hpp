#pragma once

#include "steengrass/diffop.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace steengrass {

/// Border-strip coefficient: d_{lambda mu} = coefficient of s_mu in D_k s_lambda
/// for k = |mu| - |lambda|; zero when mu/lambda has more than two components.
Int d_coeff(const Partition& lambda, const Partition& mu);

enum class DkDirection { raise, lower };

/// D_k (or D_k-perp) on the Schur basis via broken border strips; must agree
/// with the power-basis action in diffop.
SymElem apply_dk_schur(int k, const SymElem& f, DkDirection direction);

/// D_{(k^n)} on the Schur basis: the composition recursion evaluated with
/// strip moves throughout. Scales to partitions far past character range.
SymElem apply_strip_power_schur(int k, int n, const SymElem& f);

/// Apply a parsed operator pipeline with the strip-based action (integral).
SymElem apply_pipeline_schur(const OpPipeline& pipe, const SymElem& f);

/// Coefficient of s_mu in D_{(k^n)} s_lambda (n = (|mu|-|lambda|)/k) by the
/// layered path sum over intermediate partitions; asserts integrality.
Int a_coeff(const Partition& lambda, const Partition& mu, int k = 1);

/// The same coefficient via the specialization theorem:
/// a = ps^1_c((S^{|pi|} s_{pi'})^perp s_{rho'}) evaluated frame-side with
/// Jacobi-Trudi determinants; equals a_coeff (for k = 1) always.
Int a_coeff_spec(const Partition& lambda, const Partition& mu);

/// a as a polynomial in the frame content c, returned in the binomial basis:
/// value(c) = sum_j coeffs[j] * C(c, j). Exact interpolation at
/// |rho|-|pi|+1 integer points; the coefficients are integers.
std::vector<Int> a_poly(const Partition& pi, const Partition& rho);

/// Evaluate the specialization route directly on a frame at content c.
Rat a_spec_on_frame(const Partition& pi, const Partition& rho, long c);

/// An embedding (lambda, mu) realizing the given minimal frame at content c.
std::pair<Partition, Partition> embed_frame(const Partition& pi, const Partition& rho, long c);

/// Content window [lo, hi] where a_{lambda mu} provably vanishes
/// (1 - m(sigma,|pi|) <= c <= m(tau,|pi|) - 1); empty optional if no window.
std::optional<std::pair<int, int>> vanishing_window(const Partition& lambda,
                                                    const Partition& mu);

/// Row of the inverse Kostka matrix: m_lambda = sum_mu K^{-1}_{lambda mu} s_mu,
/// computed by the recursive operators M_lambda with M_lambda e_{l(lambda)} = m_lambda.
struct InvKostkaRow {
    Partition lambda;
    std::map<Partition, Int> entries;
};

InvKostkaRow inverse_kostka(const Partition& lambda);

/// The conjectured two-component product formula, reported but never asserted.
struct ConjectureReport {
    Partition lambda, mu;
    Int lhs = 0;          // a_coeff
    Rat rhs = 0;          // the conjectured double sum
    bool agree = false;
};

ConjectureReport conjecture_check(const Partition& lambda, const Partition& mu);

/// f(lambda, mu, k, n): the hook-content double sum of the conjecture.
Rat conjecture_f(const Partition& lambda, const Partition& mu, long k, long n);

/// a_{lambda mu} = c^mu_{lambda lambda} (mod 2) for every mu of weight 2|lambda|.
bool lr_mod2_check(const Partition& lambda);

}  // namespace steengrass
