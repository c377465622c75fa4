#include "subgrowth/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace subgrowth {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
// numerical slack for profiles whose maximum of Phi is exactly the threshold
// (tangency); applied in non-strict mode only
constexpr double kFeasSlack = 1e-9;

struct PhiFn {
    const SizeProfile& profile;
    const WeightMode& mode;

    double value(double beta) const {
        PotentialEvaluation ev = evaluate_potential(profile, mode, beta);
        return ev.converged ? ev.value : -kInf;
    }
    // sign-usable derivative: +1 left of the convergence edge
    double slope(double beta) const {
        PotentialEvaluation ev = evaluate_potential(profile, mode, beta);
        return ev.converged ? ev.derivative : kInf;
    }
};

// maximizer of the concave Phi on [lo, hi] by derivative-sign bisection
double locate_peak(const PhiFn& phi, double lo, double hi, long& iterations) {
    if (phi.slope(hi) >= 0.0) return hi;
    if (phi.slope(lo) <= 0.0) return lo;
    double a = lo, b = hi;
    for (int i = 0; i < 200 && (b - a) > 1e-15 * std::max(1.0, a); ++i) {
        double mid = 0.5 * (a + b);
        ++iterations;
        if (phi.slope(mid) > 0.0)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

} // namespace

BetaSolution solve_beta(const SizeProfile& profile, const WeightMode& mode,
                        const ConditionMode& cond) {
    validate_profile(profile);
    validate_weight(profile, mode);
    if (cond.kind == ConditionKind::Strict && !(cond.margin > 0.0))
        throw std::invalid_argument("strict condition needs margin > 0");

    const double A = static_cast<double>(profile.alphabet_size);
    const double thr = cond.threshold();
    BetaSolution out;

    if (profile.terms.empty()) {
        // Phi(beta) = A - beta
        out.feasible = true;
        out.beta_star = A - thr; // exactly A in non-strict mode
        out.beta_low = 0.0;
        out.residual_at_star = thr;
        out.g_minimizer = 0.0;
        out.phi_peak = A;
        out.entropy_nat = std::log(out.beta_star);
        out.entropy_log2 = std::log2(out.beta_star);
        return out;
    }

    const double mcb = min_convergent_beta(profile);
    if (mcb >= A) {
        out.feasible = false;
        out.beta_star = out.beta_low = out.residual_at_star = kNan;
        out.g_minimizer = out.phi_peak = kNan;
        out.entropy_nat = out.entropy_log2 = kNan;
        out.note = "series never converges below alphabet size";
        return out;
    }

    PhiFn phi{profile, mode};
    const double lo = std::max(mcb * (1.0 + 1e-12) + 1e-300, 1e-12);
    const double hi = A;

    double peak = locate_peak(phi, lo, hi, out.iterations);
    double phi_peak = phi.value(peak);
    out.g_minimizer = peak;
    out.phi_peak = phi_peak;

    // The slack only excuses rounding noise at an interior tangency, where the
    // exact maximum is >= 0 and bisection lands within sqrt(eps) of it.  A peak
    // pinned to a domain edge is an exact value (e.g. Phi = A - c - beta with
    // c >= A), so it gets no such forgiveness.
    const bool interior = peak != lo && peak != hi;
    const double slack =
        (cond.kind == ConditionKind::NonStrict && interior) ? kFeasSlack : 0.0;
    if (!(phi_peak >= thr - slack)) {
        out.feasible = false;
        out.beta_star = out.beta_low = out.residual_at_star = kNan;
        out.entropy_nat = out.entropy_log2 = kNan;
        out.note = "condition has no solution (max residual below threshold)";
        return out;
    }
    out.feasible = true;

    if (phi_peak < thr) {
        // tangency within slack: the feasible set degenerates to the peak
        out.beta_star = out.beta_low = peak;
        out.residual_at_star = phi_peak;
    } else {
        // right boundary on [peak, A]
        if (phi.value(hi) >= thr) {
            out.beta_star = hi;
            out.residual_at_star = phi.value(hi);
        } else {
            double a = peak, b = hi;
            for (int i = 0; i < 60 && (b - a) > 1e-12 * std::max(1.0, a); ++i) {
                double mid = 0.5 * (a + b);
                ++out.iterations;
                if (phi.value(mid) >= thr)
                    a = mid;
                else
                    b = mid;
            }
            out.beta_star = a;
            out.residual_at_star = phi.value(a);
        }
        // left boundary on [lo, peak]
        if (phi.value(lo) >= thr) {
            // feasible all the way down; only happens when every size is 1
            out.beta_low = 0.0;
        } else {
            double a = lo, b = peak;
            for (int i = 0; i < 60 && (b - a) > 1e-12 * std::max(1.0, b); ++i) {
                double mid = 0.5 * (a + b);
                ++out.iterations;
                if (phi.value(mid) >= thr)
                    b = mid;
                else
                    a = mid;
            }
            out.beta_low = b;
        }
    }
    out.entropy_nat = std::log(out.beta_star);
    out.entropy_log2 = std::log2(out.beta_star);
    return out;
}

ConditionCheck verify_condition(const SizeProfile& profile, const WeightMode& mode,
                                const ConditionMode& cond, double beta) {
    PotentialEvaluation ev = evaluate_potential(profile, mode, beta);
    ConditionCheck chk;
    if (!ev.converged) {
        chk.holds = false;
        chk.residual = -kInf;
        chk.reason = "series diverges at this beta (beta <= min_convergent_beta)";
        return chk;
    }
    chk.residual = ev.value;
    chk.holds = ev.value >= cond.threshold();
    return chk;
}

PavlovResult solve_pavlov_k(const SizeProfile& profile) {
    validate_profile(profile);
    const double A = static_cast<double>(profile.alphabet_size);
    PavlovResult out;

    if (profile.terms.empty()) {
        // max over beta >= 1 of A - beta, by convention at the left edge
        out.margin = A - 1.0;
        out.beta_witness = 1.0;
        out.k_best = profile.alphabet_size - 1;
        return out;
    }

    const WeightMode unit = WeightMode::z_connected();
    PhiFn phi{profile, unit};
    const double mcb = min_convergent_beta(profile);
    double lo = std::max(1.0, mcb * (1.0 + 1e-12) + 1e-300);

    // expand right until the slope is negative (Phi' -> -1 far right)
    double hi = std::max(A, lo * 2.0);
    for (int i = 0; i < 200 && phi.slope(hi) > 0.0; ++i) hi *= 2.0;

    long iters = 0;
    double witness = locate_peak(phi, lo, hi, iters);
    double margin = phi.value(witness);
    out.beta_witness = witness;
    out.margin = margin;
    if (std::isfinite(margin)) {
        // largest integer strictly below 1 + margin, robust to rounding
        long k = static_cast<long>(std::floor(margin + 1.0 - 1e-9));
        out.k_best = k > 0 ? k : 0;
    }
    return out;
}

std::optional<double> largest_real_root(const std::vector<double>& coeffs) {
    if (coeffs.empty() || coeffs[0] == 0.0)
        throw std::invalid_argument("leading coefficient must be nonzero");
    const std::size_t deg = coeffs.size() - 1;
    if (deg == 0) return std::nullopt;

    double ratio = 0.0;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        ratio = std::max(ratio, std::fabs(coeffs[i] / coeffs[0]));
    const double bound = 1.0 + ratio;

    auto horner = [&coeffs](double x) {
        long double acc = 0.0L;
        for (double c : coeffs) acc = acc * x + c;
        return static_cast<double>(acc);
    };

    const int grid = 10000;
    double x_hi = bound;
    double f_hi = horner(x_hi);
    if (f_hi == 0.0) return x_hi;
    for (int j = grid - 1; j >= 1; --j) {
        double x_lo = bound * static_cast<double>(j) / grid;
        double f_lo = horner(x_lo);
        if (f_lo == 0.0) return x_lo;
        if ((f_lo < 0.0) != (f_hi < 0.0)) {
            double a = x_lo, b = x_hi;
            double fa = f_lo;
            for (int i = 0; i < 200 && (b - a) > 1e-10 * std::max(1.0, a); ++i) {
                double mid = 0.5 * (a + b);
                double fm = horner(mid);
                if (fm == 0.0) return mid;
                if ((fm < 0.0) == (fa < 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        x_hi = x_lo;
        f_hi = f_lo;
    }
    return std::nullopt;
}

} // namespace subgrowth
