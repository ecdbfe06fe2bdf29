#pragma once

#include <factstat/character_cache.hpp>
#include <factstat/class_function.hpp>
#include <factstat/ffpoly.hpp>
#include <factstat/json_io.hpp>
#include <factstat/stability.hpp>
#include <factstat/stat_expr.hpp>

#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace factstat::commands {

using json::Json;

inline constexpr int kOutputVersion = 1;

enum class Format { json, csv, latex };

inline Format parse_format(std::string_view s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "latex") return Format::latex;
    throw std::invalid_argument("unknown format: " + std::string(s));
}

/// Shared options for every command.
struct Context {
    std::optional<std::filesystem::path> cache_dir;
    unsigned shards = 1;
    std::uint64_t enumeration_bound = kDefaultEnumerationBound;
    unsigned max_degree = 24;
    unsigned stable_limit = kDefaultStableDegreeLimit;
};

inline void check_degree(unsigned d, const Context& ctx) {
    if (d > ctx.max_degree)
        throw resource_error("degree " + std::to_string(d) + " exceeds the configured limit " + std::to_string(ctx.max_degree));
}

/// One output document: command name plus payload; rendering is separate.
struct OutputDoc {
    std::string command;
    Json body;
    /// Mathematical mismatch found while producing the document (exit status 1).
    bool mismatch = false;
};

// ---------------------------------------------------------------------------
// measure

inline OutputDoc cmd_measure(unsigned d, std::optional<std::uint64_t> q, bool squarefree, const Context& ctx = {}) {
    check_degree(d, ctx);
    const Flavor flavor = squarefree ? Flavor::squarefree : Flavor::all;
    if (squarefree && d < 2) throw std::invalid_argument("squarefree measure needs d >= 2");
    if (d < 1) throw std::invalid_argument("measure needs d >= 1");
    MeasureTable table = measure_table(d, flavor);
    Json body{{"command", "measure"}, {"version", kOutputVersion}, {"d", d}, {"flavor", to_string(flavor)}};
    if (!q) {
        body["entries"] = json::measure_table(table)["entries"];
    } else {
        if (!prime_power(*q)) throw std::invalid_argument(std::to_string(*q) + " is not a prime power");
        body["q"] = *q;
        Json entries = Json::array();
        for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it)
            entries.push_back(Json{{"type", json::partition(it->first)},
                                   {"value", json::rational(it->second.eval_at(Rational(static_cast<unsigned long>(*q))))}});
        body["entries"] = std::move(entries);
    }
    return {"measure", std::move(body)};
}

// ---------------------------------------------------------------------------
// expect

/// E_d(P) (or E_d^sf(P)) for each requested degree, with the per-k inner
/// products. The character-side series is checked against sum_l P(l) nu(l).
inline OutputDoc cmd_expect(const std::vector<unsigned>& degrees, std::string_view stat_text, bool squarefree,
                            const Context& ctx = {}) {
    const Statistic stat = resolve_statistic(stat_text);
    Json results = Json::array();
    bool mismatch = false;
    for (unsigned d : degrees) {
        check_degree(d, ctx);
        if (d < 1) throw std::invalid_argument("expect needs d >= 1");
        if (squarefree && d < 2) throw std::invalid_argument("squarefree expectation needs d >= 2");
        const ClassFunction p = stat(d);
        const CharacterKind kind = squarefree ? CharacterKind::chi : CharacterKind::psi;
        const CharacterFamily fam = character_family(d, kind, ctx.cache_dir);
        const QInvSeries series = squarefree ? expected_value_sf(p, fam) : expected_value(p, fam);
        const QInvSeries via_measure =
            expected_value_from_measure(p, measure_table(d, squarefree ? Flavor::squarefree : Flavor::all));
        const bool agree = series == via_measure;
        mismatch |= !agree;
        Json inner_products = Json::array();
        for (std::size_t k = 0; k < fam.degrees(); ++k)
            inner_products.push_back(Json{{"k", k}, {"value", json::rational(series.coeff(k))}});
        results.push_back(Json{{"d", d},
                               {"series", json::series(series)},
                               {"terms", json::series_terms(series)},
                               {"display", to_display(series)},
                               {squarefree ? "signed_inner_products_chi" : "inner_products_psi", std::move(inner_products)},
                               {"measure_path_agrees", agree}});
    }
    Json body{{"command", "expect"},
              {"version", kOutputVersion},
              {"stat", std::string(stat_text)},
              {"flavor", squarefree ? "squarefree" : "all"},
              {"results", std::move(results)}};
    if (stat.expr) body["expression"] = to_string(*stat.expr);
    return {"expect", std::move(body), mismatch};
}

// ---------------------------------------------------------------------------
// characters

inline OutputDoc cmd_characters(unsigned d, CharacterKind kind, bool with_decomposition, const Context& ctx = {}) {
    check_degree(d, ctx);
    const CharacterFamily fam = character_family(d, kind, ctx.cache_dir);
    std::optional<CharacterTable> table;
    if (with_decomposition) table = character_table(d);
    Json parts = Json::array();
    for (const auto& p : fam.partitions) parts.push_back(json::partition(p));
    Json rows = Json::array();
    bool mismatch = false;
    for (std::size_t k = 0; k < fam.degrees(); ++k) {
        Json values = Json::array();
        for (const auto& v : fam.values[k]) values.push_back(to_string(v));
        Json row{{"k", k}, {"values", std::move(values)}};
        if (table) {
            const ClassFunction row_fn = family_row(fam, k);
            auto dec = decompose(row_fn, *table);
            mismatch |= !is_character(dec) || !(reconstruct(dec, *table) == row_fn);
            Json nonzero = Json::array();
            for (auto it = dec.rbegin(); it != dec.rend(); ++it)
                if (it->second != 0)
                    nonzero.push_back(Json{{"irreducible", json::partition(it->first)}, {"multiplicity", json::rational(it->second)}});
            row["decomposition"] = std::move(nonzero);
        }
        rows.push_back(std::move(row));
    }
    Json body{{"command", "characters"}, {"version", kOutputVersion}, {"d", d},       {"kind", to_string(kind)},
              {"order", "revlex"},        {"partitions", std::move(parts)}, {"rows", std::move(rows)}};
    return {"characters", std::move(body), mismatch};
}

// ---------------------------------------------------------------------------
// stable

inline OutputDoc cmd_stable(std::string_view stat_text, long k, unsigned d_max, const Context& ctx = {}) {
    const Statistic stat = resolve_statistic(stat_text);
    if (!stat.expr) throw std::invalid_argument("statistic '" + std::string(stat_text) + "' is not a character polynomial");
    const StabilityReport r = stable_inner(*stat.expr, k, d_max, ctx.stable_limit);
    Json seq = Json::array();
    for (const auto& [d, v] : r.sequence) seq.push_back(Json{{"d", d}, {"value", json::rational(v)}});
    Json body{{"command", "stable"},
              {"version", kOutputVersion},
              {"stat", std::string(stat_text)},
              {"expression", to_string(*stat.expr)},
              {"k", k},
              {"d_max", d_max},
              {"status", r.stabilized ? "stable" : "not_stabilized"},
              {"value", r.value ? Json(json::rational(*r.value)) : Json(nullptr)},
              {"onset", r.onset ? Json(*r.onset) : Json(nullptr)},
              {"criterion", "heuristic: " + std::to_string(StabilityReport::kRun) + " consecutive equal values"},
              {"sequence", std::move(seq)}};
    return {"stable", std::move(body)};
}

// ---------------------------------------------------------------------------
// verify

/// Oracle-versus-formula comparisons for every q in q_list and 1 <= d <= d_max:
/// census counts against count_all / count_sf at q, empirical expectations
/// against the exact series at q, plus the regular-representation and chi
/// top-degree checks for each d.
inline OutputDoc cmd_verify(unsigned d_max, const std::vector<std::uint64_t>& q_list, const std::vector<std::string>& stats,
                            const Context& ctx = {}) {
    check_degree(d_max, ctx);
    std::vector<Statistic> statistics;
    for (const auto& s : stats) statistics.push_back(resolve_statistic(s));
    for (std::uint64_t q : q_list) {
        if (!prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        if (checked_pow(q, d_max) > ctx.enumeration_bound)
            throw resource_error(std::to_string(q) + "^" + std::to_string(d_max) + " exceeds enumeration bound " +
                                 std::to_string(ctx.enumeration_bound));
    }

    Json checks = Json::array();
    bool all_pass = true;
    auto record = [&](Json entry, bool pass) {
        entry["pass"] = pass;
        all_pass &= pass;
        checks.push_back(std::move(entry));
    };

    for (unsigned d = 1; d <= d_max; ++d) {
        const auto report = regular_check(character_family(d, CharacterKind::psi, ctx.cache_dir));
        Json offending = Json::array();
        for (const auto& p : report.offending) offending.push_back(json::partition(p));
        record(Json{{"check", "regular_representation"}, {"d", d}, {"offending", std::move(offending)}}, report.passed);
        if (d >= 2) {
            bool ok = true;
            try {
                (void)compute_character_family(d, CharacterKind::chi);
            } catch (const internal_error&) {
                ok = false;
            }
            record(Json{{"check", "chi_top_degree_vanishes"}, {"d", d}}, ok);
        }
    }

    for (std::uint64_t q : q_list) {
        const FiniteField field = field_of_order(q);
        const IrreducibleTable irreducibles = irreducibles_by_degree(field, d_max, 2 * ctx.enumeration_bound);
        const Rational qr(static_cast<unsigned long>(q));
        for (unsigned d = 1; d <= d_max; ++d) {
            for (Flavor flavor : {Flavor::all, Flavor::squarefree}) {
                if (flavor == Flavor::squarefree && d < 2) continue;
                const Census c = census(field, d, flavor, ctx.shards, ctx.enumeration_bound, &irreducibles);
                Json mismatches = Json::array();
                for (const auto& [lambda, n] : c.counts) {
                    const Rational formula = (flavor == Flavor::all ? count_all(lambda) : count_sf(lambda)).eval_at(qr);
                    const Rational oracle(static_cast<unsigned long>(n));
                    if (formula != oracle)
                        mismatches.push_back(Json{{"type", json::partition(lambda)},
                                                  {"oracle", json::rational(oracle)},
                                                  {"formula", json::rational(formula)}});
                }
                const bool counts_ok = mismatches.empty();
                record(Json{{"check", "census"}, {"q", q}, {"d", d}, {"flavor", to_string(flavor)}, {"total", c.total()},
                            {"mismatches", std::move(mismatches)}},
                       counts_ok);

                const CharacterFamily fam =
                    character_family(d, flavor == Flavor::all ? CharacterKind::psi : CharacterKind::chi, ctx.cache_dir);
                for (const auto& stat : statistics) {
                    const ClassFunction p = stat(d);
                    const QInvSeries series = flavor == Flavor::all ? expected_value(p, fam) : expected_value_sf(p, fam);
                    const Rational formula = series.eval_at(qr);
                    const Rational oracle = empirical_expectation(p, c);
                    record(Json{{"check", "expectation"},
                                {"q", q},
                                {"d", d},
                                {"flavor", to_string(flavor)},
                                {"stat", stat.name},
                                {"oracle", json::rational(oracle)},
                                {"formula", json::rational(formula)}},
                           oracle == formula);
                }
            }
        }
    }

    Json qs = Json::array();
    for (auto q : q_list) qs.push_back(q);
    Json body{{"command", "verify"}, {"version", kOutputVersion}, {"d_max", d_max}, {"q_list", std::move(qs)},
              {"stats", stats},      {"all_pass", all_pass},      {"checks", std::move(checks)}};
    return {"verify", std::move(body), !all_pass};
}

// ---------------------------------------------------------------------------
// Rendering

/// \tfrac-style rendering of a 1/q series, matching the layout of the
/// printed E_d(Q) table.
inline std::string latex_series(const std::vector<std::string>& coeffs) {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Rational c = parse_rational(coeffs[k]);
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        c = abs(c);
        const std::string power = k == 1 ? "q" : "q^" + std::to_string(k);
        if (k == 0) {
            out += c.get_den() == 1 ? c.get_num().get_str() : "\\tfrac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
        } else {
            const std::string den = c.get_den() == 1 ? power : c.get_den().get_str() + power;
            out += "\\tfrac{" + c.get_num().get_str() + "}{" + den + "}";
        }
    }
    return out.empty() ? "0" : out;
}

inline std::string render_json(const OutputDoc& doc) { return doc.body.dump(2) + "\n"; }

inline std::string partition_cell(const Json& p) {
    std::string out;
    for (const auto& v : p) out += (out.empty() ? "" : " ") + std::to_string(v.get<unsigned>());
    return out;
}

inline std::string render_csv(const OutputDoc& doc) {
    std::ostringstream os;
    const Json& b = doc.body;
    if (doc.command == "measure") {
        if (b.contains("q")) {
            os << "type,value\n";
            for (const auto& e : b["entries"]) os << partition_cell(e["type"]) << "," << e["value"].get<std::string>() << "\n";
        } else {
            os << "type,k,coefficient\n";
            for (const auto& e : b["entries"]) {
                std::size_t k = 0;
                for (const auto& c : e["series"]) os << partition_cell(e["type"]) << "," << k++ << "," << c.get<std::string>() << "\n";
            }
        }
    } else if (doc.command == "expect") {
        os << "d,k,coefficient\n";
        for (const auto& r : b["results"]) {
            std::size_t k = 0;
            for (const auto& c : r["series"]) os << r["d"].get<unsigned>() << "," << k++ << "," << c.get<std::string>() << "\n";
        }
    } else if (doc.command == "characters") {
        os << "k,type,value\n";
        for (const auto& r : b["rows"])
            for (std::size_t i = 0; i < r["values"].size(); ++i)
                os << r["k"].get<std::size_t>() << "," << partition_cell(b["partitions"][i]) << "," << r["values"][i].get<std::string>() << "\n";
    } else if (doc.command == "stable") {
        os << "d,value\n";
        for (const auto& s : b["sequence"]) os << s["d"].get<unsigned>() << "," << s["value"].get<std::string>() << "\n";
    } else if (doc.command == "verify") {
        os << "check,q,d,flavor,stat,oracle,formula,pass\n";
        for (const auto& c : b["checks"]) {
            auto field = [&](const char* key) -> std::string {
                if (!c.contains(key)) return "";
                return c[key].is_string() ? c[key].get<std::string>() : c[key].dump();
            };
            os << field("check") << "," << field("q") << "," << field("d") << "," << field("flavor") << "," << field("stat") << ","
               << field("oracle") << "," << field("formula") << "," << (c["pass"].get<bool>() ? "true" : "false") << "\n";
        }
    }
    return os.str();
}

inline std::string render_latex(const OutputDoc& doc) {
    std::ostringstream os;
    const Json& b = doc.body;
    auto series_of = [](const Json& arr) {
        std::vector<std::string> v;
        for (const auto& c : arr) v.push_back(c.get<std::string>());
        return v;
    };
    if (doc.command == "expect") {
        const std::string lhs = b["flavor"] == "squarefree" ? "E_d^{\\mathrm{sf}}" : "E_d";
        os << "\\begin{tabular}{c|l}\n    $d$ & $" << lhs << "(P)$\\\\\n\\hline\n";
        for (const auto& r : b["results"])
            os << "    $" << r["d"].get<unsigned>() << "$ & $" << latex_series(series_of(r["series"])) << "$\\\\\n";
        os << "\\end{tabular}\n";
    } else if (doc.command == "measure") {
        os << "\\begin{tabular}{c|l}\n    $\\lambda$ & $\\nu(\\lambda)$\\\\\n\\hline\n";
        for (const auto& e : b["entries"]) {
            const std::string cell = b.contains("q") ? latex_series({e["value"].get<std::string>()}) : latex_series(series_of(e["series"]));
            os << "    $[" << partition_cell(e["type"]) << "]$ & $" << cell << "$\\\\\n";
        }
        os << "\\end{tabular}\n";
    } else if (doc.command == "characters") {
        os << "\\begin{tabular}{c|" << std::string(b["partitions"].size(), 'r') << "}\n    $k$";
        for (const auto& p : b["partitions"]) os << " & $[" << partition_cell(p) << "]$";
        os << "\\\\\n\\hline\n";
        for (const auto& r : b["rows"]) {
            os << "    $" << r["k"].get<std::size_t>() << "$";
            for (const auto& v : r["values"]) os << " & $" << v.get<std::string>() << "$";
            os << "\\\\\n";
        }
        os << "\\end{tabular}\n";
    } else if (doc.command == "stable") {
        os << "\\begin{tabular}{c|r}\n    $d$ & value\\\\\n\\hline\n";
        for (const auto& s : b["sequence"]) os << "    $" << s["d"].get<unsigned>() << "$ & $" << s["value"].get<std::string>() << "$\\\\\n";
        os << "\\end{tabular}\n";
    } else {
        os << "% " << doc.command << ": " << (b.value("all_pass", false) ? "all checks passed" : "mismatches found") << "\n";
    }
    return os.str();
}

inline std::string render(const OutputDoc& doc, Format f) {
    switch (f) {
        case Format::json: return render_json(doc);
        case Format::csv: return render_csv(doc);
        case Format::latex: return render_latex(doc);
    }
    return {};
}

}  // namespace factstat::commands
