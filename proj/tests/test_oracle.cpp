#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <vector>

#include "subgrowth/oracle.hpp"
#include "subgrowth/solver.hpp"

using namespace subgrowth;

namespace {

WordSet make_ws(int q, std::vector<std::string> words) {
    WordSet ws;
    ws.alphabet_size = q;
    ws.forbidden_words = std::move(words);
    return ws;
}

const WordSet kGoldenMean = make_ws(2, {"11"});

WordSet random_ws(std::mt19937& rng, int max_q, int max_words, int max_len) {
    WordSet ws;
    ws.alphabet_size = 2 + static_cast<int>(rng() % (max_q - 1));
    int nwords = static_cast<int>(rng() % (max_words + 1));
    for (int i = 0; i < nwords; ++i) {
        int len = 1 + static_cast<int>(rng() % max_len);
        std::string w;
        for (int j = 0; j < len; ++j)
            w.push_back(static_cast<char>('0' + rng() % ws.alphabet_size));
        bool dup = false;
        for (const auto& prev : ws.forbidden_words) dup = dup || prev == w;
        if (!dup) ws.forbidden_words.push_back(w);
    }
    return ws;
}

} // namespace

TEST_CASE("wordset validation") {
    CHECK_NOTHROW(validate_wordset(kGoldenMean));
    CHECK_THROWS_AS(validate_wordset(make_ws(1, {})), std::invalid_argument);
    CHECK_THROWS_AS(validate_wordset(make_ws(7, {})), std::invalid_argument);
    CHECK_THROWS_AS(validate_wordset(make_ws(2, {""})), std::invalid_argument);
    CHECK_THROWS_AS(validate_wordset(make_ws(2, {"111111111111111"})),
                    std::invalid_argument); // length 15
    CHECK_THROWS_AS(validate_wordset(make_ws(2, {"12"})), std::invalid_argument);
    CHECK_THROWS_AS(validate_wordset(make_ws(2, {"01", "01"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_wordset(make_ws(2, {"0a"})), std::invalid_argument);
}

TEST_CASE("golden mean shift: counts, radius, ratios") {
    const std::vector<std::uint64_t> expect = {2,  3,  5,  8,  13, 21,
                                               34, 55, 89, 144, 233, 377};
    CHECK(admissible_word_counts(kGoldenMean, 12) == expect);
    for (int n = 1; n <= 12; ++n)
        CHECK(count_admissible_words(kGoldenMean, n) == expect[n - 1]);

    CHECK(growth_transfer_matrix(kGoldenMean) ==
          doctest::Approx(1.6180339887498948).epsilon(1e-9));

    // L(2)/L(1) = 1.5 is the worst ratio; 1.5 holds everywhere (with equality)
    auto ok = check_ratio_lemma(kGoldenMean, 1.5, 12);
    for (bool b : ok) CHECK(b);

    // 1.6 exceeds the first ratio: L(2)=3 < 1.6*2
    ok = check_ratio_lemma(kGoldenMean, 1.6, 12);
    CHECK(ok[0]);       // L(1) = 2 >= 1.6
    CHECK_FALSE(ok[1]);
    CHECK(ok[4]);       // 13 >= 1.6*8

    CHECK(check_submultiplicative(expect));
}

TEST_CASE("full shift and degenerate shifts") {
    WordSet full = make_ws(3, {});
    auto counts = admissible_word_counts(full, 10);
    std::uint64_t p = 1;
    for (int n = 0; n < 10; ++n) {
        p *= 3;
        CHECK(counts[n] == p);
    }
    CHECK(growth_transfer_matrix(full) == doctest::Approx(3.0).epsilon(1e-9));

    WordSet dead = make_ws(2, {"00", "01", "10", "11"});
    counts = admissible_word_counts(dead, 5);
    CHECK(counts[0] == 2);
    for (int n = 1; n < 5; ++n) CHECK(counts[n] == 0);
    CHECK(growth_transfer_matrix(dead) == 0.0);

    // only the two constant words survive: growth rate exactly 1
    WordSet alt = make_ws(2, {"01", "10"});
    counts = admissible_word_counts(alt, 8);
    for (int n = 0; n < 8; ++n) CHECK(counts[n] == 2);
    CHECK(growth_transfer_matrix(alt) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("ternary avoid-10^j family matches its reference counts") {
    WordSet ws = make_ws(3, {});
    std::string w = "1";
    for (int j = 1; j <= 7; ++j) {
        w += "0";
        ws.forbidden_words.push_back(w); // "10", "100", ..., "10000000"
    }
    const std::vector<std::uint64_t> expect = {3,    8,    21,   55,
                                               144,  377,  987,  2584,
                                               6765, 17711, 46368, 121393};
    CHECK(admissible_word_counts(ws, 12) == expect);
    auto ok = check_ratio_lemma(ws, 2.0, 12);
    for (bool b : ok) CHECK(b);
}

TEST_CASE("resource caps are enforced") {
    CHECK_THROWS_AS(count_admissible_words(kGoldenMean, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_admissible_words(kGoldenMean, 31), std::invalid_argument);
    // 6^12 > 1e8
    CHECK_THROWS_AS(count_admissible_words(make_ws(6, {"55"}), 12),
                    ResourceLimitError);
    CHECK_NOTHROW(count_admissible_words(make_ws(2, {"11"}), 26)); // 2^26 < 1e8

    CHECK_THROWS_AS(admissible_word_counts(kGoldenMean, 26), std::invalid_argument);
    CHECK_THROWS_AS(admissible_word_counts(kGoldenMean, 0), std::invalid_argument);

    // window length 13 over 6 letters: 6^13 states blows the automaton cap
    WordSet big = make_ws(6, {"55555555555555"});
    CHECK_THROWS_AS(growth_transfer_matrix(big), ResourceLimitError);
    // ...but small-n counts never build the automaton
    auto counts = admissible_word_counts(big, 3);
    CHECK(counts == std::vector<std::uint64_t>{6, 36, 216});
}

TEST_CASE("automaton cap is adjustable through the environment") {
    WordSet ws = make_ws(2, {"10101"}); // window 2^4 = 16 states
    CHECK_NOTHROW(growth_transfer_matrix(ws));
    setenv("SUBSHIFT_MAX_STATES", "10", 1);
    CHECK_THROWS_AS(growth_transfer_matrix(ws), ResourceLimitError);
    setenv("SUBSHIFT_MAX_STATES", "100", 1);
    CHECK_NOTHROW(growth_transfer_matrix(ws));
    unsetenv("SUBSHIFT_MAX_STATES");
}

TEST_CASE("pattern sets: validation and support counting") {
    GeneralPatternSet gm = to_patterns(kGoldenMean);
    CHECK(gm.alphabet_size == 2);
    REQUIRE(gm.patterns.size() == 1);
    CHECK(gm.patterns[0].support == std::vector<long>{0, 1});
    CHECK(gm.patterns[0].values == std::vector<int>{1, 1});

    // no adjacent pair inside the support: the pattern never fits
    CHECK(count_admissible_on_support(gm, {0, 2}) == 4);
    CHECK(count_admissible_on_support(gm, {0, 1}) == 3);
    CHECK(count_admissible_on_support(gm, {0, 2, 4, 6, 8}) == 32);
    // runs {0,1}, {3}, {10,11}: 3 * 2 * 3
    CHECK(count_admissible_on_support(gm, {0, 1, 3, 10, 11}) == 18);
    // contiguous support reproduces the word count
    CHECK(count_admissible_on_support(gm, {0, 1, 2, 3, 4, 5}) == 21);
    // translation invariance
    CHECK(count_admissible_on_support(gm, {-7, -6, -5, -4, -3, -2}) == 21);

    std::vector<long> too_big(23);
    for (long i = 0; i < 23; ++i) too_big[i] = 2 * i;
    CHECK_THROWS_AS(count_admissible_on_support(gm, too_big), ResourceLimitError);
    CHECK_THROWS_AS(count_admissible_on_support(gm, {0, 0}), std::invalid_argument);

    GeneralPatternSet bad = gm;
    bad.patterns[0].values = {1};
    CHECK_THROWS_AS(validate_patternset(bad), std::invalid_argument);
    bad = gm;
    bad.patterns[0].support = {0, 25};
    bad.patterns[0].values = {1, 1};
    CHECK_THROWS_AS(validate_patternset(bad), std::invalid_argument);
    bad = gm;
    bad.patterns[0].values = {1, 2};
    CHECK_THROWS_AS(validate_patternset(bad), std::invalid_argument);
    bad = gm;
    bad.patterns[0].support.clear();
    bad.patterns[0].values.clear();
    CHECK_THROWS_AS(validate_patternset(bad), std::invalid_argument);
}

TEST_CASE("patterns on contiguous supports agree with word counting") {
    std::mt19937 rng(4711);
    for (int it = 0; it < 20; ++it) {
        WordSet ws = random_ws(rng, 3, 3, 4);
        GeneralPatternSet ps = to_patterns(ws);
        for (int n = 1; n <= 7; ++n) {
            std::vector<long> support(n);
            for (int i = 0; i < n; ++i) support[i] = i;
            CHECK(count_admissible_on_support(ps, support) ==
                  count_admissible_words(ws, n));
        }
    }
}

TEST_CASE("profile_of extracts the size multiset") {
    SizeProfile p = profile_of(kGoldenMean);
    REQUIRE(p.terms.size() == 1);
    CHECK(p.alphabet_size == 2);
    CHECK(p.terms[0].kappa == 1.0);
    CHECK(p.terms[0].n_start == 2);
    CHECK(p.terms[0].finite);

    p = profile_of(make_ws(3, {"11", "00", "101", "21"}));
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms[0].n_start == 2);
    CHECK(p.terms[0].kappa == 3.0);
    CHECK(p.terms[1].n_start == 3);
    CHECK(p.terms[1].kappa == 1.0);
}

TEST_CASE("submultiplicativity checker") {
    CHECK(check_submultiplicative({2, 3, 5, 8, 13}));
    CHECK_FALSE(check_submultiplicative({2, 5})); // L(2)=5 > L(1)^2=4
    CHECK(check_submultiplicative({}));
    CHECK(check_submultiplicative({7}));
}

TEST_CASE("automaton path counting agrees with direct enumeration") {
    std::mt19937 rng(90210);
    for (int it = 0; it < 25; ++it) {
        WordSet ws = random_ws(rng, 4, 4, 6);
        int n_hi = 1;
        double qn = ws.alphabet_size;
        while (n_hi < 12 && qn * ws.alphabet_size <= 1e8) {
            qn *= ws.alphabet_size;
            ++n_hi;
        }
        auto counts = admissible_word_counts(ws, n_hi);
        for (int n = 1; n <= n_hi; ++n)
            CHECK(counts[n - 1] == count_admissible_words(ws, n));
    }
}

TEST_CASE("forbidding more words never increases counts") {
    std::mt19937 rng(1234);
    for (int it = 0; it < 30; ++it) {
        WordSet ws = random_ws(rng, 4, 3, 5);
        WordSet more = ws;
        std::string extra;
        int len = 1 + static_cast<int>(rng() % 5);
        for (int j = 0; j < len; ++j)
            extra.push_back(static_cast<char>('0' + rng() % ws.alphabet_size));
        bool dup = false;
        for (const auto& w : more.forbidden_words) dup = dup || w == extra;
        if (dup) continue;
        more.forbidden_words.push_back(extra);
        auto a = admissible_word_counts(ws, 10);
        auto b = admissible_word_counts(more, 10);
        for (int n = 0; n < 10; ++n) CHECK(b[n] <= a[n]);
    }
}

TEST_CASE("certified beta never exceeds the transfer-matrix growth") {
    std::mt19937 rng(20260822);
    int feasible_seen = 0;
    for (int it = 0; it < 100; ++it) {
        WordSet ws = random_ws(rng, 4, 5, 6);
        double radius = growth_transfer_matrix(ws);
        BetaSolution sol = solve_beta(profile_of(ws), WeightMode::z_connected());
        if (!sol.feasible) continue;
        CHECK(sol.beta_star <= radius + 1e-6);
        auto ratio = check_ratio_lemma(ws, sol.beta_star, 20);
        for (bool b : ratio) CHECK(b);
        CHECK(check_submultiplicative(admissible_word_counts(ws, 15)));
        ++feasible_seen;
    }
    CHECK(feasible_seen > 20); // the sample must actually exercise the bound
}

TEST_CASE("admissible counts on sparse supports beat beta^|S|") {
    std::mt19937 rng(5150);
    int tried = 0;
    for (int it = 0; it < 200 && tried < 40; ++it) {
        WordSet ws = random_ws(rng, 3, 3, 4);
        BetaSolution sol = solve_beta(profile_of(ws), WeightMode::z_connected());
        if (!sol.feasible) continue;
        GeneralPatternSet ps = to_patterns(ws);
        int m = 2 + static_cast<int>(rng() % 6);
        std::vector<long> support;
        long pos = -10;
        for (int i = 0; i < m; ++i) {
            pos += 1 + static_cast<long>(rng() % 3);
            support.push_back(pos);
        }
        double lower = std::pow(sol.beta_star, static_cast<double>(m));
        double got = static_cast<double>(count_admissible_on_support(ps, support));
        CHECK(got >= lower * (1.0 - 1e-9));
        ++tried;
    }
    CHECK(tried == 40);
}

TEST_CASE("oracle_report bundles the individual checks") {
    OracleReport rep = oracle_report(kGoldenMean, 8, 1.5);
    CHECK(rep.counts.size() == 8);
    CHECK(rep.counts[7] == 55);
    CHECK(rep.spectral_radius == doctest::Approx(1.618034).epsilon(1e-6));
    CHECK(rep.beta_used == 1.5);
    CHECK(rep.submultiplicative_ok);
    REQUIRE(rep.ratio_ok.size() == 8);
    for (bool b : rep.ratio_ok) CHECK(b);
}
