// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion carries its own tolerance and wall-clock budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "subgrowth/applications.hpp"
#include "subgrowth/oracle.hpp"
#include "subgrowth/potential.hpp"
#include "subgrowth/solver.hpp"

using namespace subgrowth;

namespace {

int g_failures = 0;

void criterion(int idx, const char* name, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    if (dt >= budget_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s: %d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", idx, name, dt,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

bool unit_weight_table(std::string& detail) {
    auto rows = connected_weight_table();
    if (rows.size() != 4) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (std::fabs(rows[i].computed - rows[i].stated) > 1e-6) {
            detail = "row " + rows[i].label + " misses stated value";
            return false;
        }
        if (i < 2) {
            if (!rows[i].poly_root ||
                std::fabs(rows[i].computed - *rows[i].poly_root) > 1e-6) {
                detail = "row " + rows[i].label + " misses its polynomial root";
                return false;
            }
        }
    }
    return true;
}

bool size_weight_table(std::string& detail) {
    auto rows = general_weight_table();
    if (rows.size() != 5) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (std::fabs(rows[i].computed - rows[i].stated) > 1e-2) {
            detail = "row " + rows[i].label + " misses stated value";
            return false;
        }
        if (i < 3) {
            if (!rows[i].poly_root ||
                std::fabs(rows[i].computed - *rows[i].poly_root) > 1e-6) {
                detail = "row " + rows[i].label + " misses its polynomial root";
                return false;
            }
        }
    }
    return true;
}

bool aperiodicity_scan(std::string& detail) {
    int first_holding = 0;
    for (int C = 1; C <= 40; ++C) {
        bool holds = aperiodic_check_eq7(C, 1.9).holds;
        if (holds && first_holding == 0) first_holding = C;
        if (!holds && first_holding != 0) {
            detail = "condition flaps at C=" + std::to_string(C);
            return false;
        }
    }
    if (first_holding != 11) {
        detail = "first holding C = " + std::to_string(first_holding);
        return false;
    }
    return true; // fails for all C <= 10, holds for 11..40
}

bool coloring_bounds(std::string& detail) {
    for (long s = 2; s <= 10; ++s) {
        NonrepetitiveBound b = nonrepetitive_paper_bound(s);
        if (!b.holds) {
            detail = "bound fails at s=" + std::to_string(s);
            return false;
        }
    }
    long min2 = nonrepetitive_min_alphabet(2);
    if (min2 > 67) {
        detail = "smallest alphabet " + std::to_string(min2) + " > 67";
        return false;
    }
    bool pred_infeasible =
        !solve_beta(nonrepetitive_profile(2, min2 - 1), WeightMode::z_connected())
             .feasible;
    if (!pred_infeasible) {
        detail = "alphabet " + std::to_string(min2 - 1) + " is already feasible";
        return false;
    }
    return true;
}

bool incompressibility_grid(std::string& detail) {
    for (int i = 1; i <= 20; ++i) {
        double d = static_cast<double>(i) / 21.0;
        double p = std::pow(2.0, d);
        for (int j = 1; j <= 20; ++j) {
            double beta = p + (2.0 - p) * static_cast<double>(j) / 21.0;
            KolmogorovConstant kc = kolmogorov_constant({d, beta});
            if (std::fabs(kc.residual) > 1e-9) {
                char buf[96];
                std::snprintf(buf, sizeof(buf), "residual %.3g at d=%.3f beta=%.6f",
                              kc.residual, d, beta);
                detail = buf;
                return false;
            }
        }
    }
    return true;
}

bool oracle_soundness(std::string& detail) {
    std::mt19937 rng(20260401);
    int feasible_seen = 0;
    for (int it = 0; it < 100; ++it) {
        WordSet ws;
        ws.alphabet_size = 2 + static_cast<int>(rng() % 3); // q in [2,4]
        int nwords = static_cast<int>(rng() % 6);           // up to 5 words
        for (int i = 0; i < nwords; ++i) {
            int len = 1 + static_cast<int>(rng() % 6); // length up to 6
            std::string w;
            for (int j = 0; j < len; ++j)
                w.push_back(static_cast<char>('0' + rng() % ws.alphabet_size));
            bool dup = false;
            for (const auto& prev : ws.forbidden_words) dup = dup || prev == w;
            if (!dup) ws.forbidden_words.push_back(w);
        }

        double radius = growth_transfer_matrix(ws);
        if (!check_submultiplicative(admissible_word_counts(ws, 15))) {
            detail = "submultiplicativity fails at instance " + std::to_string(it);
            return false;
        }
        BetaSolution sol = solve_beta(profile_of(ws), WeightMode::z_connected());
        if (!sol.feasible) continue;
        ++feasible_seen;
        if (sol.beta_star > radius + 1e-6) {
            char buf[96];
            std::snprintf(buf, sizeof(buf),
                          "beta_star %.9f exceeds radius %.9f at instance %d",
                          sol.beta_star, radius, it);
            detail = buf;
            return false;
        }
        std::vector<bool> ratio = check_ratio_lemma(ws, sol.beta_star, 20);
        for (std::size_t n = 0; n < ratio.size(); ++n) {
            if (!ratio[n]) {
                detail = "ratio check fails at instance " + std::to_string(it) +
                         ", n=" + std::to_string(n + 1);
                return false;
            }
        }
    }
    if (feasible_seen == 0) {
        detail = "no feasible instance in the sample";
        return false;
    }
    return true;
}

bool integer_bound_domination(std::string& detail) {
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int seen = 0;
    for (long it = 0; seen < 200 && it < 100000; ++it) {
        SizeProfile p;
        p.alphabet_size = 2 + static_cast<long>(rng() % 9);
        int nterms = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < nterms; ++i) {
            FamilyTerm t;
            t.kappa = 0.2 + 2.0 * uni(rng);
            t.degree = static_cast<int>(rng() % 3);
            t.n_start = 1 + static_cast<long>(rng() % 4);
            t.size_slope = 1 + static_cast<long>(rng() % 3);
            t.size_offset =
                1 - t.size_slope * t.n_start + static_cast<long>(rng() % 3);
            t.rho = 0.3 + uni(rng) * 1.5;
            t.finite = (rng() % 4) == 0;
            p.terms.push_back(t);
        }
        PavlovResult pav = solve_pavlov_k(p);
        if (pav.k_best < 1) continue;
        ++seen;
        BetaSolution sol = solve_beta(p, WeightMode::z_connected());
        if (!sol.feasible || !(sol.beta_star > static_cast<double>(pav.k_best))) {
            detail = "violation with k=" + std::to_string(pav.k_best);
            return false;
        }
    }
    if (seen < 200) {
        detail = "only " + std::to_string(seen) + " nontrivial profiles sampled";
        return false;
    }
    return true;
}

bool case_implications(std::string& detail) {
    std::mt19937 rng(88);
    for (int which = 1; which <= 3; ++which) {
        int found = 0;
        long guard = 0;
        while (found < 100 && ++guard < 200000) {
            long q = 4 + static_cast<long>(rng() % 27);
            std::vector<long> fn(1 + rng() % 6);
            for (auto& f : fn) f = static_cast<long>(rng() % 4);
            CaseBound c = integer_entropy_case(q, fn, which);
            if (!c.premise_holds) continue;
            ++found;
            if (!c.verified) {
                detail = "case " + std::to_string(which) +
                         " premise holds but claim fails (q=" + std::to_string(q) +
                         ")";
                return false;
            }
        }
        if (found < 100) {
            detail = "case " + std::to_string(which) + " undersampled";
            return false;
        }
    }
    return true;
}

bool series_agreement(std::string& detail) {
    std::mt19937 rng(20260822);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int it = 0; it < 1000; ++it) {
        FamilyTerm t;
        t.kappa = 0.1 + 9.9 * uni(rng);
        t.degree = static_cast<int>(rng() % 3);
        t.n_start = 1 + static_cast<long>(rng() % 8);
        t.size_slope = 1 + static_cast<long>(rng() % 4);
        t.size_offset =
            1 - t.size_slope * t.n_start + static_cast<long>(rng() % 6);
        double x = 0.01 + 0.98 * uni(rng);
        t.rho = 0.1 + 9.9 * uni(rng);
        double beta = std::pow(t.rho / x, 1.0 / static_cast<double>(t.size_slope));
        WeightMode mode;
        switch (rng() % 3) {
        case 0: mode = WeightMode::general(); break;
        case 1: mode = WeightMode::z_connected(); break;
        default: mode = WeightMode::custom(1.0 + 2.0 * uni(rng), 2.0 * uni(rng));
        }

        double closed = term_series(t, mode, beta);
        long double acc = 0.0L;
        long double lx = static_cast<long double>(t.rho) *
                         powl(beta, -static_cast<long double>(t.size_slope));
        long double xn = powl(lx, static_cast<long double>(t.n_start));
        long double head = powl(static_cast<long double>(beta),
                                1.0L - static_cast<long double>(t.size_offset));
        for (long n = t.n_start; n <= t.n_start + 200000; ++n) {
            long double np = 1.0L;
            for (int i = 0; i < t.degree; ++i) np *= n;
            long double inc =
                static_cast<long double>(mode.weight(t.size(n))) *
                static_cast<long double>(t.kappa) * np * xn * head;
            acc += inc;
            if (n > t.n_start + 100 && inc < 1e-22L * acc) break;
            xn *= lx;
        }
        double brute = static_cast<double>(acc);
        if (std::fabs(closed - brute) > 1e-9 * std::max(1.0, brute)) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "term %d: closed %.12g vs sum %.12g",
                          it, closed, brute);
            detail = buf;
            return false;
        }
    }

    std::mt19937 rng2(424242);
    int done = 0;
    while (done < 1000) {
        SizeProfile p;
        p.alphabet_size = 2 + static_cast<long>(rng2() % 8);
        int nterms = 1 + static_cast<int>(rng2() % 3);
        for (int i = 0; i < nterms; ++i) {
            FamilyTerm t;
            t.kappa = 0.2 + 3.0 * uni(rng2);
            t.degree = static_cast<int>(rng2() % 3);
            t.n_start = 1 + static_cast<long>(rng2() % 4);
            t.size_slope = 1 + static_cast<long>(rng2() % 3);
            t.size_offset =
                1 - t.size_slope * t.n_start + static_cast<long>(rng2() % 3);
            t.rho = 0.3 + 2.0 * uni(rng2);
            t.finite = (rng2() % 4) == 0;
            p.terms.push_back(t);
        }
        double lo = std::max(min_convergent_beta(p), 0.05) * 1.05;
        double b1 = lo + uni(rng2) * 3.0;
        double b3 = b1 + 0.1 + uni(rng2) * 3.0;
        WeightMode mode =
            (done % 2) ? WeightMode::general() : WeightMode::z_connected();
        auto g = [&](double b) {
            return b + evaluate_potential(p, mode, b).sum_value;
        };
        double g1 = g(b1), g2 = g(0.5 * (b1 + b3)), g3 = g(b3);
        if (!std::isfinite(g1) || !std::isfinite(g3)) continue;
        double scale = std::max({1.0, std::fabs(g1), std::fabs(g3)});
        if (g2 > 0.5 * (g1 + g3) + 1e-9 * scale) {
            detail = "convexity violated on triple " + std::to_string(done);
            return false;
        }
        ++done;
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "unit-weight reference table", 1.0, unit_weight_table);
    criterion(2, "size-weighted reference table", 1.0, size_weight_table);
    criterion(3, "aperiodicity scan at beta=1.9", 1.0, aperiodicity_scan);
    criterion(4, "square-free coloring bounds", 5.0, coloring_bounds);
    criterion(5, "incompressibility residual grid", 1.0, incompressibility_grid);
    criterion(6, "oracle soundness on random word sets", 60.0, oracle_soundness);
    criterion(7, "integer-bound domination", 10.0, integer_bound_domination);
    criterion(8, "case implication suites", 10.0, case_implications);
    criterion(9, "series engine agreement", 10.0, series_agreement);

    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
