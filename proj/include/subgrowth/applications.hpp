#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "size_profile.hpp"
#include "solver.hpp"

namespace subgrowth {

// Raised when a query's own premise fails (e.g. no positive slack to spend).
struct InfeasibleQueryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- strong aperiodicity -------------------------------------------------

// Binary-alphabet condition 2 - sum_{i>=1} 2Ci * 2^{Ci} * beta^{1-2Ci} >= beta,
// evaluated through its closed form 2 - 2^{1+C} C beta^{1+2C} / (beta^{2C}-2^C)^2 - beta.
struct AperiodicCheck {
    bool holds = false;
    double residual = 0.0; // -inf when the series diverges
    std::string reason;
};
AperiodicCheck aperiodic_check_eq7(int C, double beta);

struct AperiodicQuery {
    SizeProfile base_profile; // may be empty
    double beta = 1.9;        // must be > 1
    long alphabet_size = 2;
};

// Smallest integer C >= 1 with 2 C beta^{C+1} / (beta^C - 1)^2 < delta, where
// delta is the slack of the base condition at beta (size-weighted). Throws
// InfeasibleQueryError when delta <= 0.
long aperiodic_min_C(const AperiodicQuery& q);

// ---- nonrepetitive colorings ---------------------------------------------

struct NonrepetitiveBound {
    long s = 0;
    long alphabet = 0;   // ceil(4s^2 + 16 s^(5/3))
    double beta = 0.0;   // 4s^2 + 12 s^(5/3)
    bool holds = false;
    double residual = 0.0;
};
// Family with count (2s)^(2n-1) * alphabet^n of size 2n, unit weights.
NonrepetitiveBound nonrepetitive_paper_bound(long s);

// The same family with the alphabet rebuilt per candidate; smallest alphabet
// for which some beta satisfies the condition. Feasibility is monotone in the
// alphabet (tested property), so the search bisects.
long nonrepetitive_min_alphabet(long s);

// profile used by both (exposed for tests / the feasibility property)
SizeProfile nonrepetitive_profile(long s, long alphabet);

// ---- incompressibility constant --------------------------------------------

struct KolmogorovQuery {
    double d = 0.5;    // 0 < d < 1
    double beta = 1.5; // 2^d < beta < 2
};
struct KolmogorovConstant {
    double C = 0.0;
    double residual = 0.0; // 2 - 2^(1-C+d) beta / (beta - 2^d) - beta
};
// C = 1 + d + log2(beta / ((2-beta)(beta-2^d))); the residual must vanish.
KolmogorovConstant kolmogorov_constant(const KolmogorovQuery& kq);

// ---- integer-entropy premise checks ----------------------------------------

struct CaseBound {
    bool premise_holds = false;
    double premise_sum = 0.0;
    double premise_limit = 0.0;
    double claimed_beta = 0.0;
    bool verified = false; // only asserted when the premise holds
    double residual = 0.0;
};
// cases: 1: sum |F_n| (3/q)^n < 1/5 -> beta = 14q/15
//        2: sum |F_n| (6/(5q))^n < 1/5 -> beta = 5q/6
//        3: sum |F_n| (3/q)^n < 3/4 -> beta = 3q/4
// fn_counts[i] = number of forbidden patterns of size i+1 (tail zero). q >= 4.
CaseBound integer_entropy_case(long q, const std::vector<long>& fn_counts,
                               int which_case);

// ---- reference tables -------------------------------------------------------

struct TableRow {
    std::string label;
    SizeProfile profile;
    WeightMode mode;
    double computed = 0.0;
    double stated = 0.0;
    double tolerance = 0.0;
    double diff = 0.0;
    std::optional<double> poly_root; // largest real root of the quoted polynomial
    std::optional<double> root_diff; // |computed - poly_root|
    bool ok = false;
};

// Five rows, size-weighted condition; stated constants 1.94 ... 4.30.
std::vector<TableRow> general_weight_table();
// Four rows, unit-weight condition on connected words; stated 1.754878 ... 2.
std::vector<TableRow> connected_weight_table();

} // namespace subgrowth
