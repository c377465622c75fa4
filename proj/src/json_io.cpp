#include "subgrowth/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace subgrowth {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known)
            throw std::invalid_argument(std::string("unknown key '") + it.key() +
                                        "' in " + where);
    }
}

const json& require(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string("missing key '") + key + "' in " +
                                    where);
    return *it;
}

long get_integer(const json& j, const char* key, const char* where) {
    const json& v = require(j, key, where);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("field '") + key + "' in " + where +
                                    " must be an integer");
    return v.get<long>();
}

double get_number(const json& j, const char* key, const char* where) {
    const json& v = require(j, key, where);
    if (!v.is_number())
        throw std::invalid_argument(std::string("field '") + key + "' in " + where +
                                    " must be a number");
    return v.get<double>();
}

void put_finite(json& j, const char* key, double v) {
    if (std::isfinite(v)) j[key] = v;
}

} // namespace

SizeProfile profile_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("profile must be a JSON object");
    reject_unknown(j, {"alphabet_size", "terms"}, "profile");
    SizeProfile p;
    p.alphabet_size = get_integer(j, "alphabet_size", "profile");
    const json& terms = require(j, "terms", "profile");
    if (!terms.is_array())
        throw std::invalid_argument("'terms' must be an array");
    int idx = 0;
    for (const json& tj : terms) {
        std::string where = "terms[" + std::to_string(idx++) + "]";
        if (!tj.is_object())
            throw std::invalid_argument(where + " must be an object");
        reject_unknown(tj,
                       {"kappa", "rho", "degree", "n_start", "size_slope",
                        "size_offset", "finite"},
                       where.c_str());
        FamilyTerm t;
        t.kappa = get_number(tj, "kappa", where.c_str());
        t.rho = get_number(tj, "rho", where.c_str());
        t.n_start = get_integer(tj, "n_start", where.c_str());
        if (tj.contains("degree"))
            t.degree = static_cast<int>(get_integer(tj, "degree", where.c_str()));
        if (tj.contains("size_slope"))
            t.size_slope = get_integer(tj, "size_slope", where.c_str());
        if (tj.contains("size_offset"))
            t.size_offset = get_integer(tj, "size_offset", where.c_str());
        if (tj.contains("finite")) {
            const json& f = tj["finite"];
            if (!f.is_boolean())
                throw std::invalid_argument("field 'finite' in " + where +
                                            " must be a boolean");
            t.finite = f.get<bool>();
        }
        p.terms.push_back(t);
    }
    validate_profile(p);
    return p;
}

WordSet wordset_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("word set must be a JSON object");
    reject_unknown(j, {"alphabet_size", "forbidden_words"}, "word set");
    WordSet ws;
    ws.alphabet_size = static_cast<int>(get_integer(j, "alphabet_size", "word set"));
    const json& words = require(j, "forbidden_words", "word set");
    if (!words.is_array())
        throw std::invalid_argument("'forbidden_words' must be an array");
    for (const json& w : words) {
        if (!w.is_string())
            throw std::invalid_argument("forbidden words must be strings of digits");
        ws.forbidden_words.push_back(w.get<std::string>());
    }
    validate_wordset(ws);
    return ws;
}

GeneralPatternSet patternset_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("pattern set must be a JSON object");
    reject_unknown(j, {"alphabet_size", "patterns"}, "pattern set");
    GeneralPatternSet ps;
    ps.alphabet_size =
        static_cast<int>(get_integer(j, "alphabet_size", "pattern set"));
    const json& pats = require(j, "patterns", "pattern set");
    if (!pats.is_array())
        throw std::invalid_argument("'patterns' must be an array");
    int idx = 0;
    for (const json& pj : pats) {
        std::string where = "patterns[" + std::to_string(idx++) + "]";
        if (!pj.is_object())
            throw std::invalid_argument(where + " must be an object");
        reject_unknown(pj, {"support", "values"}, where.c_str());
        const json& sup = require(pj, "support", where.c_str());
        const json& val = require(pj, "values", where.c_str());
        if (!sup.is_array() || !val.is_array())
            throw std::invalid_argument(where + ": support/values must be arrays");
        GeneralPattern p;
        for (const json& c : sup) {
            if (!c.is_number_integer())
                throw std::invalid_argument(where + ": support must hold integers");
            p.support.push_back(c.get<long>());
        }
        for (const json& v : val) {
            if (!v.is_number_integer())
                throw std::invalid_argument(where + ": values must hold integers");
            p.values.push_back(v.get<int>());
        }
        ps.patterns.push_back(std::move(p));
    }
    validate_patternset(ps);
    return ps;
}

json to_json(const FamilyTerm& t) {
    return json{{"kappa", t.kappa},          {"rho", t.rho},
                {"degree", t.degree},        {"n_start", t.n_start},
                {"size_slope", t.size_slope}, {"size_offset", t.size_offset},
                {"finite", t.finite}};
}

json to_json(const SizeProfile& p) {
    json terms = json::array();
    for (const auto& t : p.terms) terms.push_back(to_json(t));
    return json{{"alphabet_size", p.alphabet_size}, {"terms", terms}};
}

json to_json(const BetaSolution& s) {
    json j;
    j["feasible"] = s.feasible;
    put_finite(j, "beta_star", s.beta_star);
    put_finite(j, "beta_low", s.beta_low);
    put_finite(j, "residual_at_star", s.residual_at_star);
    put_finite(j, "g_minimizer", s.g_minimizer);
    put_finite(j, "phi_peak", s.phi_peak);
    put_finite(j, "entropy_nat", s.entropy_nat);
    put_finite(j, "entropy_log2", s.entropy_log2);
    j["iterations"] = s.iterations;
    if (!s.note.empty()) j["note"] = s.note;
    return j;
}

json to_json(const PavlovResult& p) {
    json j;
    j["k_best"] = p.k_best;
    put_finite(j, "beta_witness", p.beta_witness);
    put_finite(j, "margin", p.margin);
    return j;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(std::string_view bytes) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string(buf);
}

} // namespace subgrowth
