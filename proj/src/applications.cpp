#include "subgrowth/applications.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace subgrowth {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);

SizeProfile one_per_size(long alphabet, long first_size, long slope = 1) {
    SizeProfile p;
    p.alphabet_size = alphabet;
    FamilyTerm t;
    t.kappa = 1.0;
    t.rho = 1.0;
    t.degree = 0;
    t.n_start = first_size;
    t.size_slope = slope;
    t.size_offset = 0;
    t.finite = false;
    p.terms.push_back(t);
    return p;
}
} // namespace

AperiodicCheck aperiodic_check_eq7(int C, double beta) {
    if (C < 1) throw std::invalid_argument("C must be >= 1");
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    AperiodicCheck out;
    // family count 2^{Ci}, size 2Ci: geometric ratio 2^C / beta^{2C}
    if (!(beta > std::sqrt(2.0))) {
        out.holds = false;
        out.residual = -kInf;
        out.reason = "series diverges: beta <= sqrt(2)";
        return out;
    }
    double c = static_cast<double>(C);
    double log_num = (1.0 + c) * kLn2 + std::log(c) + (1.0 + 2.0 * c) * std::log(beta);
    // beta^{2C} - 2^C = beta^{2C} (1 - exp(C ln2 - 2C ln beta))
    double log_den = 2.0 * c * std::log(beta) +
                     std::log1p(-std::exp(c * kLn2 - 2.0 * c * std::log(beta)));
    out.residual = 2.0 - std::exp(log_num - 2.0 * log_den) - beta;
    out.holds = out.residual > 0.0;
    return out;
}

long aperiodic_min_C(const AperiodicQuery& q) {
    if (!(q.beta > 1.0)) throw std::invalid_argument("beta must be > 1");
    if (q.alphabet_size < 2) throw std::invalid_argument("alphabet_size must be >= 2");
    SizeProfile base = q.base_profile;
    base.alphabet_size = q.alphabet_size;

    PotentialEvaluation ev = evaluate_potential(base, WeightMode::general(), q.beta);
    double delta = ev.converged ? ev.value : -kInf;
    if (!(delta > 0.0))
        throw InfeasibleQueryError(
            "base condition has no positive slack at this beta");

    const double lb = std::log(q.beta);
    for (long C = 1; C <= 100000000L; ++C) {
        double c = static_cast<double>(C);
        // 2 C beta^{C+1} / (beta^C - 1)^2, evaluated in log space
        double lt = kLn2 + std::log(c) + (1.0 - c) * lb -
                    2.0 * std::log1p(-std::exp(-c * lb));
        if (std::exp(lt) < delta) return C;
    }
    throw std::runtime_error("aperiodic_min_C failed to terminate");
}

SizeProfile nonrepetitive_profile(long s, long alphabet) {
    if (s < 2) throw std::invalid_argument("generator count must be >= 2");
    if (alphabet < 2) throw std::invalid_argument("alphabet must be >= 2");
    SizeProfile p;
    p.alphabet_size = alphabet;
    // (2s)^(2n-1) * alphabet^n patterns of size 2n
    FamilyTerm t;
    t.kappa = 1.0 / (2.0 * static_cast<double>(s));
    t.rho = 4.0 * static_cast<double>(s) * static_cast<double>(s) *
            static_cast<double>(alphabet);
    t.degree = 0;
    t.n_start = 1;
    t.size_slope = 2;
    t.size_offset = 0;
    t.finite = false;
    p.terms.push_back(t);
    return p;
}

NonrepetitiveBound nonrepetitive_paper_bound(long s) {
    if (s < 2) throw std::invalid_argument("generator count must be >= 2");
    NonrepetitiveBound out;
    out.s = s;
    double sd = static_cast<double>(s);
    double s53 = std::pow(sd, 5.0 / 3.0);
    out.alphabet = static_cast<long>(std::ceil(4.0 * sd * sd + 16.0 * s53));
    out.beta = 4.0 * sd * sd + 12.0 * s53;
    ConditionCheck chk =
        verify_condition(nonrepetitive_profile(s, out.alphabet),
                         WeightMode::z_connected(), ConditionMode::non_strict(),
                         out.beta);
    out.holds = chk.holds;
    out.residual = chk.residual;
    return out;
}

long nonrepetitive_min_alphabet(long s) {
    if (s < 2) throw std::invalid_argument("generator count must be >= 2");
    auto feasible = [s](long alphabet) {
        return solve_beta(nonrepetitive_profile(s, alphabet),
                          WeightMode::z_connected())
            .feasible;
    };
    long lo = 4 * s * s; // the series diverges for every beta <= alphabet here
    long hi = nonrepetitive_paper_bound(s).alphabet;
    while (!feasible(hi)) hi *= 2; // defensive; the paper bound is feasible
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (feasible(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

KolmogorovConstant kolmogorov_constant(const KolmogorovQuery& kq) {
    if (!(kq.d > 0.0 && kq.d < 1.0))
        throw std::invalid_argument("d must lie in (0,1)");
    double p = std::pow(2.0, kq.d);
    if (!(kq.beta > p && kq.beta < 2.0))
        throw std::invalid_argument("beta must lie in (2^d, 2)");
    KolmogorovConstant out;
    out.C = 1.0 + kq.d + std::log2(kq.beta / ((2.0 - kq.beta) * (kq.beta - p)));
    out.residual =
        2.0 - std::pow(2.0, 1.0 - out.C + kq.d) * kq.beta / (kq.beta - p) - kq.beta;
    return out;
}

CaseBound integer_entropy_case(long q, const std::vector<long>& fn_counts,
                               int which_case) {
    if (q < 4) throw std::invalid_argument("alphabet must be >= 4");
    for (long c : fn_counts)
        if (c < 0) throw std::invalid_argument("pattern counts must be >= 0");

    double r, limit, beta;
    switch (which_case) {
    case 1:
        r = 3.0 / static_cast<double>(q);
        limit = 1.0 / 5.0;
        beta = 14.0 * static_cast<double>(q) / 15.0;
        break;
    case 2:
        r = 6.0 / (5.0 * static_cast<double>(q));
        limit = 1.0 / 5.0;
        beta = 5.0 * static_cast<double>(q) / 6.0;
        break;
    case 3:
        r = 3.0 / static_cast<double>(q);
        limit = 3.0 / 4.0;
        beta = 3.0 * static_cast<double>(q) / 4.0;
        break;
    default:
        throw std::invalid_argument("case must be 1, 2 or 3");
    }

    CaseBound out;
    out.claimed_beta = beta;
    out.premise_limit = limit;
    double sum = 0.0;
    double rn = 1.0;
    for (std::size_t i = 0; i < fn_counts.size(); ++i) {
        rn *= r;
        sum += static_cast<double>(fn_counts[i]) * rn;
    }
    out.premise_sum = sum;
    out.premise_holds = sum < limit;

    SizeProfile profile;
    profile.alphabet_size = q;
    for (std::size_t i = 0; i < fn_counts.size(); ++i) {
        if (fn_counts[i] == 0) continue;
        FamilyTerm t;
        t.kappa = static_cast<double>(fn_counts[i]);
        t.rho = 1.0;
        t.degree = 0;
        t.n_start = static_cast<long>(i) + 1;
        t.size_slope = 1;
        t.size_offset = 0;
        t.finite = true;
        profile.terms.push_back(t);
    }
    ConditionCheck chk = verify_condition(profile, WeightMode::z_connected(),
                                          ConditionMode::non_strict(), beta);
    out.residual = chk.residual;
    out.verified = out.premise_holds && chk.holds;
    return out;
}

namespace {
TableRow make_row(std::string label, SizeProfile profile, WeightMode mode,
                  double stated, double tolerance,
                  std::optional<std::vector<double>> poly) {
    TableRow row;
    row.label = std::move(label);
    row.profile = std::move(profile);
    row.mode = mode;
    row.stated = stated;
    row.tolerance = tolerance;
    BetaSolution sol = solve_beta(row.profile, mode);
    row.computed = sol.feasible ? sol.beta_star
                                : std::numeric_limits<double>::quiet_NaN();
    row.diff = std::fabs(row.computed - stated);
    row.ok = sol.feasible && row.diff <= tolerance;
    if (poly) {
        auto root = largest_real_root(*poly);
        if (root) {
            row.poly_root = *root;
            row.root_diff = std::fabs(row.computed - *root);
            row.ok = row.ok && *row.root_diff <= 1e-6;
        } else {
            row.ok = false;
        }
    }
    return row;
}
} // namespace

std::vector<TableRow> general_weight_table() {
    const WeightMode g = WeightMode::general();
    std::vector<TableRow> rows;
    rows.push_back(make_row("general-1", one_per_size(2, 10), g, 1.94, 1e-2,
                            std::vector<double>{1, -4, 5, -2, 0, 0, 0, 0, 0, 0, 10, -9}));
    rows.push_back(make_row("general-2", one_per_size(3, 4), g, 2.51, 1e-2,
                            std::vector<double>{1, -5, 7, -3, 4, -3}));
    rows.push_back(make_row("general-3", one_per_size(4, 3), g, 3.65, 1e-2,
                            std::vector<double>{1, -4, 1, 1}));
    rows.push_back(make_row("general-4", one_per_size(5, 2), g, 4.30, 1e-2,
                            std::vector<double>{1, -5, 3}));
    rows.push_back(make_row("general-5", one_per_size(6, 1), g, 4.30, 1e-2,
                            std::vector<double>{1, -5, 3}));
    return rows;
}

std::vector<TableRow> connected_weight_table() {
    const WeightMode z = WeightMode::z_connected();
    std::vector<TableRow> rows;
    rows.push_back(make_row("connected-1", one_per_size(2, 5), z, 1.754878, 1e-6,
                            std::vector<double>{1, -2, 1, -1}));
    rows.push_back(make_row("connected-2", one_per_size(2, 2, 2), z, 1.618034, 1e-6,
                            std::vector<double>{1, -1, -1}));
    rows.push_back(make_row("connected-3", one_per_size(3, 2), z, 2.0, 1e-6,
                            std::nullopt));
    rows.push_back(make_row("connected-4", one_per_size(4, 1), z, 2.0, 1e-6,
                            std::nullopt));
    return rows;
}

} // namespace subgrowth
