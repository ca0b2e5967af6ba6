#pragma once

// Decimal-snapshot cache for closed-form constants. The cache is advisory:
// entries are keyed by id, carry the digits they were computed at, and a
// checksum of the recipe they came from. Entries whose checksum no longer
// matches the registry are dropped on load.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "septica/closed_forms.hpp"

namespace septica {

struct ConstantCacheEntry {
    std::string id;
    int digits = 0;
    std::string decimal;
    std::string checksum;
};

struct ConstantCache {
    std::map<std::string, ConstantCacheEntry> entries;
};

/// FNV-1a over the recipe text, hex encoded.
inline std::string recipe_checksum(const std::string& recipe) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : recipe) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string registry_checksum(const std::string& id) {
    return recipe_checksum(closed_form_entry(id).recipe);
}

/// Load a cache file. A missing file yields an empty cache; a malformed
/// file raises parse_error with the parser's position context. Entries with
/// unknown ids or stale checksums are silently dropped.
inline ConstantCache cache_load(const std::string& path) {
    ConstantCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("cache file ") + path + ": " + e.what());
    }
    try {
        for (const auto& item : doc.at("entries")) {
            ConstantCacheEntry entry{item.at("id").get<std::string>(),
                                     item.at("digits").get<int>(),
                                     item.at("decimal").get<std::string>(),
                                     item.at("checksum").get<std::string>()};
            const auto& reg = closed_form_registry();
            auto it = reg.find(entry.id);
            if (it == reg.end()) continue;
            if (recipe_checksum(it->second.recipe) != entry.checksum) continue;
            cache.entries[entry.id] = std::move(entry);
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("cache file ") + path + ": " + e.what());
    }
    return cache;
}

inline void cache_store(const std::string& path, const ConstantCache& cache) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [id, e] : cache.entries) {
        entries.push_back({{"id", e.id},
                           {"digits", e.digits},
                           {"decimal", e.decimal},
                           {"checksum", e.checksum}});
    }
    nlohmann::json doc{{"version", 1}, {"entries", entries}};
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw error("cannot write cache file: " + path);
    out << doc.dump(2) << "\n";
}

/// Truncate a plain decimal string to `digits` significant digits. Returns
/// nullopt for exponent-notation strings, which this cache does not trim.
inline std::optional<std::string> truncate_decimal_string(const std::string& full, int digits) {
    if (full.find('e') != std::string::npos) return std::nullopt;
    std::string out;
    int kept = 0;
    for (char c : full) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (kept == digits) break;
            if (!(kept == 0 && c == '0')) ++kept; // leading zeros are not significant
        }
        out += c;
    }
    while (!out.empty() && out.back() == '.') out.pop_back();
    return out;
}

/// A hit requires at least the requested digits; the stored decimal is then
/// truncated down. Anything shorter is a miss and must be recomputed.
inline std::optional<std::string> cache_lookup(const ConstantCache& cache, const std::string& id,
                                               int digits) {
    auto it = cache.entries.find(id);
    if (it == cache.entries.end() || it->second.digits < digits) return std::nullopt;
    if (it->second.digits == digits) return it->second.decimal;
    return truncate_decimal_string(it->second.decimal, digits);
}

inline void cache_update(ConstantCache& cache, const std::string& id, int digits,
                         const std::string& decimal) {
    auto it = cache.entries.find(id);
    if (it != cache.entries.end() && it->second.digits >= digits) return;
    cache.entries[id] = ConstantCacheEntry{id, digits, decimal, registry_checksum(id)};
}

} // namespace septica
