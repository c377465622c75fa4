#include "subgrowth/potential.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace subgrowth {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// binomial coefficients for k <= 4
const double kBinom[5][5] = {
    {1, 0, 0, 0, 0},
    {1, 1, 0, 0, 0},
    {1, 2, 1, 0, 0},
    {1, 3, 3, 1, 0},
    {1, 4, 6, 4, 1},
};
} // namespace

double power_sum(int k, double x) {
    double u = 1.0 - x;
    switch (k) {
    case 0: return x / u;
    case 1: return x / (u * u);
    case 2: return x * (1.0 + x) / (u * u * u);
    case 3: return x * (1.0 + x * (4.0 + x)) / (u * u * u * u);
    case 4: return x * (1.0 + x * (11.0 + x * (11.0 + x))) / (u * u * u * u * u);
    default: throw std::invalid_argument("power_sum supports k in 0..4");
    }
}

// sum_{n>=n0} n^k x^n = x^n0 * sum_{j>=0} (n0+j)^k x^j, expanded binomially so
// no partial sum is ever subtracted (safe for any n_start).
double power_sum_tail(int k, double x, long n_start) {
    if (n_start <= 1) return power_sum(k, x);
    if (k < 0 || k > 4) throw std::invalid_argument("power_sum_tail supports k in 0..4");
    double n0 = static_cast<double>(n_start);
    double shift = 0.0;
    double n0pow = 1.0; // n0^(k-i) built from the top
    for (int i = k; i >= 0; --i) {
        double series = power_sum(i, x) + (i == 0 ? 1.0 : 0.0); // sum from j=0
        shift += kBinom[k][i] * n0pow * series;
        n0pow *= n0;
    }
    return std::pow(x, n0) * shift;
}

double min_convergent_beta(const SizeProfile& profile) {
    double worst = 0.0;
    for (const FamilyTerm& t : profile.terms) {
        if (t.finite) continue;
        double edge = std::pow(t.rho, 1.0 / static_cast<double>(t.size_slope));
        if (edge > worst) worst = edge;
    }
    return worst;
}

double term_series(const FamilyTerm& t, const WeightMode& mode, double beta) {
    double tau = static_cast<double>(t.size_offset);
    if (t.finite) {
        double s = t.size(t.n_start);
        return mode.weight(s) * t.count(t.n_start) * std::pow(beta, 1.0 - s);
    }
    double sigma = static_cast<double>(t.size_slope);
    double x = t.rho * std::pow(beta, -sigma);
    if (!(x < 1.0)) return kInf;
    double a = mode.c0 + mode.c1 * tau; // weight(sigma*n+tau) = a + b*n
    double b = mode.c1 * sigma;
    double v = a * power_sum_tail(t.degree, x, t.n_start);
    if (b != 0.0) v += b * power_sum_tail(t.degree + 1, x, t.n_start);
    return t.kappa * std::pow(beta, 1.0 - tau) * v;
}

double term_series_derivative(const FamilyTerm& t, const WeightMode& mode,
                              double beta) {
    double tau = static_cast<double>(t.size_offset);
    if (t.finite) {
        double s = t.size(t.n_start);
        double val = mode.weight(s) * t.count(t.n_start) * std::pow(beta, 1.0 - s);
        return val * (1.0 - s) / beta;
    }
    double sigma = static_cast<double>(t.size_slope);
    double x = t.rho * std::pow(beta, -sigma);
    if (!(x < 1.0)) return std::numeric_limits<double>::quiet_NaN();
    double a = mode.c0 + mode.c1 * tau;
    double b = mode.c1 * sigma;
    double u = 1.0 - tau;
    double w = -sigma;
    // d/dbeta [beta^(1-tau) * f(x)] with x = rho * beta^(-sigma) and
    // x f'(x) shifting each power sum one degree up
    double acc = a * u * power_sum_tail(t.degree, x, t.n_start);
    double mid = a * w + b * u;
    if (mid != 0.0) acc += mid * power_sum_tail(t.degree + 1, x, t.n_start);
    if (b != 0.0) acc += b * w * power_sum_tail(t.degree + 2, x, t.n_start);
    return t.kappa * std::pow(beta, -tau) * acc;
}

PotentialEvaluation evaluate_potential(const SizeProfile& profile,
                                       const WeightMode& mode, double beta) {
    validate_profile(profile);
    validate_weight(profile, mode);
    if (!(beta > 0.0))
        throw std::invalid_argument("beta must be positive");

    PotentialEvaluation ev;
    ev.min_convergent_beta = min_convergent_beta(profile);
    double sum = 0.0;
    double deriv_sum = 0.0;
    for (const FamilyTerm& t : profile.terms) {
        double v = term_series(t, mode, beta);
        if (v == kInf || std::isnan(v)) {
            ev.converged = false;
            ev.sum_value = kInf;
            ev.value = -kInf;
            ev.derivative = std::numeric_limits<double>::quiet_NaN();
            return ev;
        }
        sum += v;
        deriv_sum += term_series_derivative(t, mode, beta);
    }
    ev.converged = true;
    ev.sum_value = sum;
    ev.value = static_cast<double>(profile.alphabet_size) - sum - beta;
    ev.derivative = -deriv_sum - 1.0;
    return ev;
}

} // namespace subgrowth
