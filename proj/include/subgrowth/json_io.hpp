#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "oracle.hpp"
#include "size_profile.hpp"
#include "solver.hpp"

namespace subgrowth {

// Strict parsers: unknown keys and wrong types raise std::invalid_argument
// with the offending field named.
SizeProfile profile_from_json(const nlohmann::json& j);
WordSet wordset_from_json(const nlohmann::json& j);
GeneralPatternSet patternset_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FamilyTerm& t);
nlohmann::json to_json(const SizeProfile& p);
nlohmann::json to_json(const BetaSolution& s);
nlohmann::json to_json(const PavlovResult& p);

// FNV-1a 64-bit over raw bytes, rendered as "fnv1a:%016x".
std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);

} // namespace subgrowth
