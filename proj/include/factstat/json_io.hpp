#pragma once

#include <factstat/class_function.hpp>
#include <factstat/ffpoly.hpp>
#include <factstat/lie_characters.hpp>
#include <factstat/measures.hpp>

#include <json.hpp>

#include <string>

namespace factstat::json {

using Json = nlohmann::ordered_json;

inline Json rational(const Rational& r) { return to_string(r); }

inline Json series(const QInvSeries& s) {
    Json out = Json::array();
    for (const auto& c : s.coeffs()) out.push_back(to_string(c));
    return out;
}

inline Json poly(const QPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

/// {"q^-1": "2", ...} for the nonzero terms.
inline Json series_terms(const QInvSeries& s) {
    Json out = Json::object();
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s.coeffs()[k] != 0) out["q^-" + std::to_string(k)] = to_string(s.coeffs()[k]);
    return out;
}

inline Json partition(const Partition& p) {
    Json out = Json::array();
    for (unsigned part : p.parts()) out.push_back(part);
    return out;
}

inline QInvSeries parse_series(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
    return QInvSeries(std::move(coeffs));
}

inline Partition parse_partition(const Json& j) { return Partition(j.get<std::vector<unsigned>>()); }

/// Entries in reverse-lexicographic order of partitions.
inline Json measure_table(const MeasureTable& t) {
    Json entries = Json::array();
    for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it)
        entries.push_back(Json{{"type", partition(it->first)}, {"series", series(it->second)}});
    return Json{{"d", t.d}, {"flavor", to_string(t.flavor)}, {"entries", std::move(entries)}};
}

inline Json census(const Census& c) {
    Json entries = Json::array();
    for (auto it = c.counts.rbegin(); it != c.counts.rend(); ++it)
        entries.push_back(Json{{"type", partition(it->first)}, {"count", it->second}});
    return Json{{"q", c.q}, {"d", c.d}, {"flavor", to_string(c.flavor)}, {"total", c.total()}, {"entries", std::move(entries)}};
}

inline Json decomposition(const std::map<Partition, Rational>& m) {
    Json out = Json::array();
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        out.push_back(Json{{"irreducible", partition(it->first)}, {"multiplicity", rational(it->second)}});
    return out;
}

inline constexpr int kCacheVersion = 1;

/// Cache document: integers as strings, rows indexed by k, columns by partitions in revlex order.
inline Json character_family(const CharacterFamily& fam) {
    Json values = Json::array();
    for (const auto& row : fam.values) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        values.push_back(std::move(r));
    }
    return Json{{"version", kCacheVersion}, {"d", fam.d}, {"kind", to_string(fam.kind)}, {"order", "revlex"},
                {"values", std::move(values)}};
}

/// Parses a cache document, validating it against the expected (d, kind).
/// Throws std::runtime_error on any mismatch or malformed content.
inline CharacterFamily parse_character_family(const Json& j, unsigned d, CharacterKind kind) {
    if (j.at("version").get<int>() != kCacheVersion) throw std::runtime_error("cache version mismatch");
    if (j.at("d").get<unsigned>() != d) throw std::runtime_error("cache degree mismatch");
    if (j.at("kind").get<std::string>() != to_string(kind)) throw std::runtime_error("cache kind mismatch");
    if (j.at("order").get<std::string>() != "revlex") throw std::runtime_error("cache order mismatch");
    CharacterFamily fam{d, kind, partitions_of(d), {}};
    const std::size_t rows = kind == CharacterKind::chi ? d - 1 : d;
    const auto& values = j.at("values");
    if (!values.is_array() || values.size() != rows) throw std::runtime_error("cache row count mismatch");
    for (const auto& row : values) {
        if (!row.is_array() || row.size() != fam.partitions.size()) throw std::runtime_error("cache column count mismatch");
        std::vector<Integer> r;
        for (const auto& v : row) {
            Integer z;
            if (z.set_str(v.get<std::string>(), 10) != 0) throw std::runtime_error("cache value is not an integer");
            r.push_back(std::move(z));
        }
        fam.values.push_back(std::move(r));
    }
    return fam;
}

}  // namespace factstat::json
