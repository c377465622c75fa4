#pragma once

#include "size_profile.hpp"

namespace subgrowth {

// Phi(beta) = alphabet_size - sum_value - beta, where
// sum_value = sum over terms, n >= n_start, of weight(size(n)) * count(n) * beta^(1-size(n)).
struct PotentialEvaluation {
    double value = 0.0;       // -inf when not converged
    double sum_value = 0.0;   // +inf when not converged
    double derivative = 0.0;  // d value / d beta; NaN when not converged
    bool converged = true;
    double min_convergent_beta = 0.0;
};

// sum_{n>=1} n^k x^n in closed form, k = 0..4, requires |x| < 1
double power_sum(int k, double x);

// sum_{n>=n_start} n^k x^n, n_start >= 1
double power_sum_tail(int k, double x, long n_start);

// max over infinite terms of rho^(1/size_slope); 0 when all terms are finite.
// The series converges exactly for beta strictly above this value.
double min_convergent_beta(const SizeProfile& profile);

// Contribution of one term to sum_value, and its beta-derivative.
// Returns +inf / NaN respectively when the term diverges at this beta.
double term_series(const FamilyTerm& term, const WeightMode& mode, double beta);
double term_series_derivative(const FamilyTerm& term, const WeightMode& mode,
                              double beta);

// Closed-form evaluation of Phi. Throws std::invalid_argument if beta <= 0
// or the profile/mode is invalid.
PotentialEvaluation evaluate_potential(const SizeProfile& profile,
                                       const WeightMode& mode, double beta);

} // namespace subgrowth
