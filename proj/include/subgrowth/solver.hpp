#pragma once

#include <optional>
#include <string>
#include <vector>

#include "potential.hpp"
#include "size_profile.hpp"

namespace subgrowth {

enum class ConditionKind { NonStrict, Strict };

// NonStrict asks Phi(beta) >= 0; Strict asks Phi(beta) >= margin with margin > 0.
struct ConditionMode {
    ConditionKind kind = ConditionKind::NonStrict;
    double margin = 1e-9;

    static ConditionMode non_strict() { return {ConditionKind::NonStrict, 0.0}; }
    static ConditionMode strict(double eps = 1e-9) {
        return {ConditionKind::Strict, eps};
    }
    double threshold() const {
        return kind == ConditionKind::Strict ? margin : 0.0;
    }
};

struct BetaSolution {
    bool feasible = false;
    double beta_star = 0.0;        // sup of feasible beta
    double beta_low = 0.0;         // inf of feasible beta (0 = domain edge)
    double residual_at_star = 0.0; // Phi(beta_star)
    double g_minimizer = 0.0;      // argmin of g(beta) = beta + sum_value
    double phi_peak = 0.0;         // max of Phi over the search domain
    long iterations = 0;
    double entropy_nat = 0.0;      // ln beta_star
    double entropy_log2 = 0.0;
    std::string note;
};

// Supremum beta with Phi(beta) >= threshold(cond), exploiting convexity of
// g(beta) = beta + sum_value on (min_convergent_beta, alphabet_size].
BetaSolution solve_beta(const SizeProfile& profile, const WeightMode& mode,
                        const ConditionMode& cond = ConditionMode::non_strict());

struct ConditionCheck {
    bool holds = false;
    double residual = 0.0; // Phi(beta); -inf when the series diverges
    std::string reason;
};

// Point check of the condition at a given beta.
ConditionCheck verify_condition(const SizeProfile& profile, const WeightMode& mode,
                                const ConditionMode& cond, double beta);

// Best integer k obtainable from the unit-weight condition
// alphabet - sum beta^(1-size) > beta + k - 1 for some beta >= 1.
struct PavlovResult {
    long k_best = 0;
    double beta_witness = 0.0;
    double margin = 0.0; // max over beta of Phi with unit weights
};

PavlovResult solve_pavlov_k(const SizeProfile& profile);

// Largest real root in (0, bound], bound = 1 + max |c_i/c_lead|, located by a
// sign-change scan on a 10^4-point grid plus bisection to 1e-10. coeffs are in
// descending degree order. nullopt when no sign change is found.
std::optional<double> largest_real_root(const std::vector<double>& coeffs);

} // namespace subgrowth
