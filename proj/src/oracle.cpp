#include "subgrowth/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace subgrowth {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr long kDefaultStateCap = 1000000;
constexpr u64 kDfsNodeBudget = 200000000;

long automaton_state_cap() {
    if (const char* env = std::getenv("SUBSHIFT_MAX_STATES")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultStateCap;
}

int max_word_length(const WordSet& ws) {
    std::size_t m = 1;
    for (const auto& w : ws.forbidden_words) m = std::max(m, w.size());
    return static_cast<int>(m);
}

// forbidden words bucketed by length, as letter vectors
std::vector<std::vector<std::vector<int>>> bucket_by_length(const WordSet& ws) {
    std::vector<std::vector<std::vector<int>>> by_len(15);
    for (const auto& w : ws.forbidden_words) {
        std::vector<int> letters(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) letters[i] = w[i] - '0';
        by_len[w.size()].push_back(std::move(letters));
    }
    return by_len;
}

// true when some forbidden word ends exactly at position end (inclusive)
bool suffix_hits(const std::vector<std::vector<std::vector<int>>>& by_len,
                 const std::vector<int>& word, int end) {
    for (std::size_t len = 1; len < by_len.size(); ++len) {
        if (static_cast<int>(len) > end + 1) break;
        for (const auto& f : by_len[len]) {
            bool match = true;
            for (std::size_t i = 0; i < len; ++i) {
                if (word[end + 1 - len + i] != f[i]) {
                    match = false;
                    break;
                }
            }
            if (match) return true;
        }
    }
    return false;
}

u64 dfs_count_words(const std::vector<std::vector<std::vector<int>>>& by_len, int q,
                    int n, u64& budget) {
    std::vector<int> word(n, 0);
    u64 total = 0;
    // explicit stack: depth + next letter to try
    std::vector<int> next(n + 1, 0);
    int depth = 0;
    while (depth >= 0) {
        if (depth == n) {
            ++total;
            --depth;
            continue;
        }
        int a = next[depth];
        if (a >= q) {
            next[depth] = 0;
            --depth;
            continue;
        }
        ++next[depth];
        if (budget == 0)
            throw ResourceLimitError("admissible-word enumeration exceeded node budget");
        --budget;
        word[depth] = a;
        if (!suffix_hits(by_len, word, depth)) {
            ++depth;
            if (depth <= n) next[depth] = 0;
        }
    }
    return total;
}

struct Automaton {
    int q = 2;
    int k = 0;                           // window length (max word length - 1)
    long num_states = 0;                 // admissible k-words
    std::vector<std::vector<long>> out;  // adjacency with multiplicity
};

Automaton build_automaton(const WordSet& ws) {
    const int q = ws.alphabet_size;
    const int m = max_word_length(ws);
    const int k = m - 1;
    const long cap = automaton_state_cap();

    double potential = std::pow(static_cast<double>(q), k);
    if (potential > static_cast<double>(cap))
        throw ResourceLimitError("automaton state space exceeds cap (" +
                                 std::to_string(cap) +
                                 "); raise SUBSHIFT_MAX_STATES to override");

    auto by_len = bucket_by_length(ws);

    Automaton au;
    au.q = q;
    au.k = k;

    // enumerate admissible k-words depth-first; lexicographic order makes the
    // code list sorted, so lookups are binary searches
    std::vector<u64> codes;
    {
        std::vector<int> word(std::max(k, 1), 0);
        std::vector<int> next(k + 1, 0);
        int depth = 0;
        if (k == 0) {
            codes.push_back(0);
        } else {
            while (depth >= 0) {
                if (depth == k) {
                    u64 code = 0;
                    for (int i = 0; i < k; ++i) code = code * q + word[i];
                    codes.push_back(code);
                    --depth;
                    continue;
                }
                int a = next[depth];
                if (a >= q) {
                    next[depth] = 0;
                    --depth;
                    continue;
                }
                ++next[depth];
                word[depth] = a;
                if (!suffix_hits(by_len, word, depth)) {
                    ++depth;
                    if (depth <= k) next[depth] = 0;
                }
            }
        }
    }

    au.num_states = static_cast<long>(codes.size());
    au.out.assign(codes.size(), {});

    std::vector<int> window(k + 1, 0);
    for (long s = 0; s < au.num_states; ++s) {
        u64 code = codes[s];
        for (int i = k - 1; i >= 0; --i) {
            window[i] = static_cast<int>(code % q);
            code /= q;
        }
        for (int a = 0; a < q; ++a) {
            window[k] = a;
            // the new window is admissible iff no forbidden word ends at its
            // last position (everything shorter is inside an admissible state)
            if (suffix_hits(by_len, window, k)) continue;
            u64 target = 0;
            for (int i = 1; i <= k; ++i) target = target * q + window[i];
            auto it = std::lower_bound(codes.begin(), codes.end(), target);
            if (it != codes.end() && *it == target)
                au.out[s].push_back(static_cast<long>(it - codes.begin()));
        }
    }
    return au;
}

// spectral radius of one strongly connected block via power iteration on A+I,
// with Collatz-Wielandt bounds as the stopping rule
double scc_radius(const Automaton& au, const std::vector<long>& members,
                  const std::vector<long>& local_index) {
    const std::size_t n = members.size();
    std::vector<double> x(n, 1.0), y(n);
    double lo = 0.0, hi = 0.0;
    for (int iter = 0; iter < 5000; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = x[i]; // the +I shift kills periodicity
            for (long t : au.out[members[i]]) {
                long li = local_index[t];
                if (li >= 0) acc += x[li];
            }
            y[i] = acc;
        }
        lo = std::numeric_limits<double>::infinity();
        hi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double r = y[i] / x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        double norm = *std::max_element(y.begin(), y.end());
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (hi - lo <= 1e-12 * hi) break;
    }
    return 0.5 * (lo + hi) - 1.0;
}

std::vector<u64> counts_via_automaton(const WordSet& ws, int n_max) {
    const auto by_len = bucket_by_length(ws);
    const int q = ws.alphabet_size;
    const int k = max_word_length(ws) - 1;

    std::vector<u64> counts(n_max, 0);

    // below the window length only direct enumeration fits the structure
    u64 budget = kDfsNodeBudget;
    for (int n = 1; n < k && n <= n_max; ++n)
        counts[n - 1] = dfs_count_words(by_len, q, n, budget);

    if (n_max < k) return counts;

    Automaton au = build_automaton(ws);

    // L(k + j) = total walks of j edges; L(k) is the state count itself
    std::vector<u128> v(au.num_states, 1);
    auto total = [&v]() {
        u128 acc = 0;
        for (u128 val : v) acc += val;
        return acc;
    };
    auto to_u64 = [](u128 val) -> u64 {
        if (val > static_cast<u128>(UINT64_MAX))
            throw ResourceLimitError("admissible count exceeds 64-bit range");
        return static_cast<u64>(val);
    };

    if (k >= 1 && k <= n_max) counts[k - 1] = to_u64(total());
    std::vector<u128> w(au.num_states);
    for (int n = k + 1; n <= n_max; ++n) {
        for (long s = 0; s < au.num_states; ++s) {
            u128 acc = 0;
            for (long t : au.out[s]) acc += v[t];
            w[s] = acc;
        }
        v.swap(w);
        counts[n - 1] = to_u64(total());
    }
    return counts;
}

} // namespace

void validate_wordset(const WordSet& ws) {
    if (ws.alphabet_size < 2 || ws.alphabet_size > 6)
        throw std::invalid_argument("wordset alphabet_size must be in [2,6]");
    std::set<std::string> seen;
    for (const auto& w : ws.forbidden_words) {
        if (w.empty() || w.size() > 14)
            throw std::invalid_argument("forbidden word length must be in [1,14]");
        for (char c : w)
            if (c < '0' || c >= '0' + ws.alphabet_size)
                throw std::invalid_argument("forbidden word letter out of alphabet: '" +
                                            std::string(1, c) + "'");
        if (!seen.insert(w).second)
            throw std::invalid_argument("duplicate forbidden word: " + w);
    }
}

void validate_patternset(GeneralPatternSet& ps) {
    if (ps.alphabet_size < 2 || ps.alphabet_size > 6)
        throw std::invalid_argument("pattern set alphabet_size must be in [2,6]");
    for (auto& p : ps.patterns) {
        if (p.support.empty())
            throw std::invalid_argument("pattern support must be nonempty");
        if (p.support.size() > 10)
            throw std::invalid_argument("pattern support larger than 10");
        if (p.support.size() != p.values.size())
            throw std::invalid_argument("pattern support/values length mismatch");
        std::vector<std::size_t> order(p.support.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&p](std::size_t a, std::size_t b) { return p.support[a] < p.support[b]; });
        GeneralPattern sorted;
        for (std::size_t i : order) {
            sorted.support.push_back(p.support[i]);
            sorted.values.push_back(p.values[i]);
        }
        p = std::move(sorted);
        for (std::size_t i = 0; i + 1 < p.support.size(); ++i)
            if (p.support[i] == p.support[i + 1])
                throw std::invalid_argument("pattern support has duplicate positions");
        for (long c : p.support)
            if (c < -20 || c > 20)
                throw std::invalid_argument("pattern support coordinate outside [-20,20]");
        for (int v : p.values)
            if (v < 0 || v >= ps.alphabet_size)
                throw std::invalid_argument("pattern value out of alphabet");
    }
}

std::uint64_t count_admissible_words(const WordSet& ws, int n) {
    validate_wordset(ws);
    if (n < 1 || n > 30)
        throw std::invalid_argument("word length must be in [1,30]");
    double space = std::pow(static_cast<double>(ws.alphabet_size), n);
    if (space > 1e8)
        throw ResourceLimitError("direct enumeration capped at q^n <= 1e8");
    auto by_len = bucket_by_length(ws);
    u64 budget = kDfsNodeBudget;
    return dfs_count_words(by_len, ws.alphabet_size, n, budget);
}

std::vector<std::uint64_t> admissible_word_counts(const WordSet& ws, int n_max) {
    validate_wordset(ws);
    if (n_max < 1 || n_max > 25)
        throw std::invalid_argument("n_max must be in [1,25]");
    return counts_via_automaton(ws, n_max);
}

double growth_transfer_matrix(const WordSet& ws) {
    validate_wordset(ws);
    Automaton au = build_automaton(ws);

    // iterative Tarjan
    const long n = au.num_states;
    std::vector<long> index(n, -1), low(n, 0), scc_id(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<long> stack;
    long next_index = 0, next_scc = 0;

    struct Frame {
        long v;
        std::size_t edge;
    };
    for (long root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < au.out[f.v].size()) {
                long t = au.out[f.v][f.edge++];
                if (index[t] == -1) {
                    index[t] = low[t] = next_index++;
                    stack.push_back(t);
                    on_stack[t] = true;
                    frames.push_back({t, 0});
                } else if (on_stack[t]) {
                    low[f.v] = std::min(low[f.v], index[t]);
                }
            } else {
                long v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    while (true) {
                        long w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        scc_id[w] = next_scc;
                        if (w == v) break;
                    }
                    ++next_scc;
                }
            }
        }
    }

    std::vector<std::vector<long>> members(next_scc);
    for (long v = 0; v < n; ++v) members[scc_id[v]].push_back(v);

    double radius = 0.0;
    std::vector<long> local_index(n, -1);
    for (const auto& block : members) {
        bool has_cycle = block.size() > 1;
        if (!has_cycle) {
            for (long t : au.out[block[0]])
                if (t == block[0]) has_cycle = true;
        }
        if (!has_cycle) continue;
        for (std::size_t i = 0; i < block.size(); ++i) local_index[block[i]] = static_cast<long>(i);
        radius = std::max(radius, scc_radius(au, block, local_index));
        for (long v : block) local_index[v] = -1;
    }
    return radius;
}

std::vector<bool> check_ratio_lemma(const WordSet& ws, double beta, int n_max) {
    auto counts = admissible_word_counts(ws, n_max);
    std::vector<bool> ok(n_max);
    ok[0] = static_cast<long double>(counts[0]) >= static_cast<long double>(beta);
    for (int n = 1; n < n_max; ++n)
        ok[n] = static_cast<long double>(counts[n]) >=
                static_cast<long double>(beta) * static_cast<long double>(counts[n - 1]);
    return ok;
}

bool check_submultiplicative(const std::vector<std::uint64_t>& counts) {
    const std::size_t len = counts.size();
    for (std::size_t i = 1; i <= len; ++i) {
        for (std::size_t j = i; i + j <= len; ++j) {
            u128 prod = static_cast<u128>(counts[i - 1]) * counts[j - 1];
            if (static_cast<u128>(counts[i + j - 1]) > prod) return false;
        }
    }
    return true;
}

std::uint64_t count_admissible_on_support(const GeneralPatternSet& ps,
                                          std::vector<long> support) {
    GeneralPatternSet copy = ps;
    validate_patternset(copy);
    if (support.empty()) return 1;
    if (support.size() > 22)
        throw ResourceLimitError("support larger than 22 positions");
    std::sort(support.begin(), support.end());
    for (std::size_t i = 0; i + 1 < support.size(); ++i)
        if (support[i] == support[i + 1])
            throw std::invalid_argument("support has duplicate positions");

    const int q = copy.alphabet_size;
    const std::size_t ns = support.size();

    auto index_of = [&support](long pos) -> long {
        auto it = std::lower_bound(support.begin(), support.end(), pos);
        if (it == support.end() || *it != pos) return -1;
        return static_cast<long>(it - support.begin());
    };

    // a placement: one forbidden pattern translated fully inside the support
    struct Placement {
        std::vector<long> idx; // increasing indices into the support
        std::vector<int> val;
    };
    std::vector<Placement> placements;
    for (const auto& p : copy.patterns) {
        for (std::size_t anchor = 0; anchor < ns; ++anchor) {
            long g = support[anchor] - p.support.front();
            Placement pl;
            bool fits = true;
            for (std::size_t i = 0; i < p.support.size(); ++i) {
                long at = index_of(g + p.support[i]);
                if (at < 0) {
                    fits = false;
                    break;
                }
                pl.idx.push_back(at);
                pl.val.push_back(p.values[i]);
            }
            if (fits) placements.push_back(std::move(pl));
        }
    }

    // maximal runs of consecutive coordinates, as index ranges
    std::vector<long> run_id(ns, 0);
    std::vector<std::pair<long, long>> runs; // [begin, end)
    for (std::size_t i = 0; i < ns; ++i) {
        if (i == 0 || support[i] != support[i - 1] + 1)
            runs.push_back({static_cast<long>(i), static_cast<long>(i)});
        runs.back().second = static_cast<long>(i) + 1;
        run_id[i] = static_cast<long>(runs.size()) - 1;
    }

    bool spans = false;
    for (const auto& pl : placements)
        if (run_id[pl.idx.front()] != run_id[pl.idx.back()]) spans = true;

    // DFS over an index range, rejecting any completed placement
    auto dfs_range = [&](long begin, long end,
                         const std::vector<const Placement*>& local) -> u64 {
        const long len = end - begin;
        // placements keyed by their last index
        std::vector<std::vector<const Placement*>> ending(len);
        for (const Placement* pl : local)
            ending[pl->idx.back() - begin].push_back(pl);
        std::vector<int> letter(len, 0), next(len + 1, 0);
        u64 budget = kDfsNodeBudget;
        u64 total = 0;
        long depth = 0;
        while (depth >= 0) {
            if (depth == len) {
                ++total;
                --depth;
                continue;
            }
            int a = next[depth];
            if (a >= q) {
                next[depth] = 0;
                --depth;
                continue;
            }
            ++next[depth];
            if (budget == 0)
                throw ResourceLimitError("support enumeration exceeded node budget");
            --budget;
            letter[depth] = a;
            bool blocked = false;
            for (const Placement* pl : ending[depth]) {
                bool match = true;
                for (std::size_t i = 0; i < pl->idx.size(); ++i) {
                    if (letter[pl->idx[i] - begin] != pl->val[i]) {
                        match = false;
                        break;
                    }
                }
                if (match) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                ++depth;
                if (depth <= len) next[depth] = 0;
            }
        }
        return total;
    };

    if (spans) {
        std::vector<const Placement*> all;
        for (const auto& pl : placements) all.push_back(&pl);
        return dfs_range(0, static_cast<long>(ns), all);
    }

    // no placement crosses a gap: runs are independent
    u64 total = 1;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        std::vector<const Placement*> local;
        for (const auto& pl : placements)
            if (run_id[pl.idx.front()] == static_cast<long>(r)) local.push_back(&pl);
        u64 part;
        if (local.empty()) {
            part = 1;
            for (long i = runs[r].first; i < runs[r].second; ++i) part *= q;
        } else {
            part = dfs_range(runs[r].first, runs[r].second, local);
        }
        total *= part;
    }
    return total;
}

GeneralPatternSet to_patterns(const WordSet& ws) {
    validate_wordset(ws);
    GeneralPatternSet ps;
    ps.alphabet_size = ws.alphabet_size;
    for (const auto& w : ws.forbidden_words) {
        GeneralPattern p;
        for (std::size_t i = 0; i < w.size(); ++i) {
            p.support.push_back(static_cast<long>(i));
            p.values.push_back(w[i] - '0');
        }
        ps.patterns.push_back(std::move(p));
    }
    validate_patternset(ps);
    return ps;
}

namespace {
SizeProfile profile_from_size_counts(long alphabet, const std::map<long, long>& sizes) {
    SizeProfile profile;
    profile.alphabet_size = alphabet;
    for (const auto& [size, count] : sizes) {
        FamilyTerm t;
        t.kappa = static_cast<double>(count);
        t.rho = 1.0;
        t.degree = 0;
        t.n_start = size;
        t.size_slope = 1;
        t.size_offset = 0;
        t.finite = true;
        profile.terms.push_back(t);
    }
    return profile;
}
} // namespace

SizeProfile profile_of(const WordSet& ws) {
    validate_wordset(ws);
    std::map<long, long> sizes;
    for (const auto& w : ws.forbidden_words) ++sizes[static_cast<long>(w.size())];
    return profile_from_size_counts(ws.alphabet_size, sizes);
}

SizeProfile profile_of(const GeneralPatternSet& ps) {
    GeneralPatternSet copy = ps;
    validate_patternset(copy);
    std::map<long, long> sizes;
    for (const auto& p : copy.patterns) ++sizes[static_cast<long>(p.support.size())];
    return profile_from_size_counts(ps.alphabet_size, sizes);
}

OracleReport oracle_report(const WordSet& ws, int n_max, double beta) {
    OracleReport rep;
    rep.counts = admissible_word_counts(ws, n_max);
    rep.spectral_radius = growth_transfer_matrix(ws);
    rep.ratio_ok = check_ratio_lemma(ws, beta, n_max);
    rep.submultiplicative_ok = check_submultiplicative(rep.counts);
    rep.beta_used = beta;
    return rep;
}

} // namespace subgrowth
