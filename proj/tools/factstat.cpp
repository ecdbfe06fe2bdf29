// factstat: exact factorization statistics over finite fields.
//
// Exit status: 0 success / all checks passed, 1 mathematical mismatch or
// internal assertion, 2 usage error.

#include <factstat/commands.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace cmd = factstat::commands;

namespace {

const char* const kFormatHelp = "Output format: json, csv or latex";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact factorization statistics, splitting measures and configuration-space characters"};
    app.require_subcommand(1);

    cmd::Context ctx;
    std::string cache_dir;
    std::string format = "json";
    bool no_cache = false;
    app.add_option("--cache-dir", cache_dir, "Character cache directory (default: $FACTSTAT_CACHE_DIR)");
    app.add_flag("--no-cache", no_cache, "Disable the character cache");
    app.add_option("--format", format, kFormatHelp)->check(CLI::IsMember({"json", "csv", "latex"}));
    app.add_option("--max-degree", ctx.max_degree, "Largest degree accepted by measure/expect/characters/verify");
    app.add_option("--enumeration-bound", ctx.enumeration_bound, "Largest number of polynomials one census may enumerate");

    auto* measure = app.add_subcommand("measure", "Splitting measure table");
    unsigned measure_d = 0;
    std::uint64_t measure_q = 0;
    bool measure_sf = false;
    measure->add_option("--d", measure_d, "Degree")->required();
    auto* measure_q_opt = measure->add_option("--q", measure_q, "Evaluate at this prime power");
    measure->add_flag("--squarefree", measure_sf, "Squarefree splitting measure");
    measure->add_option("--format", format, kFormatHelp)->check(CLI::IsMember({"json", "csv", "latex"}));

    auto* expect = app.add_subcommand("expect", "Expected value of a factorization statistic");
    std::vector<unsigned> expect_d;
    std::string expect_stat;
    bool expect_sf = false;
    expect->add_option("--d", expect_d, "Degree, or comma-separated degrees")->required()->delimiter(',');
    expect->add_option("--stat", expect_stat, "Built-in name or character-polynomial expression")->required();
    expect->add_flag("--squarefree", expect_sf, "Expectation over squarefree polynomials");
    expect->add_option("--format", format, kFormatHelp)->check(CLI::IsMember({"json", "csv", "latex"}));

    auto* verify = app.add_subcommand("verify", "Compare the enumeration oracle against the exact formulas");
    unsigned verify_dmax = 0;
    std::vector<std::uint64_t> verify_q;
    std::vector<std::string> verify_stats = factstat::builtin_names();
    verify->add_option("--d-max", verify_dmax, "Largest degree")->required();
    verify->add_option("--q-list", verify_q, "Comma-separated prime powers")->required()->delimiter(',');
    verify->add_option("--stats", verify_stats, "Statistics to compare (default: all built-ins)");
    verify->add_option("--shards", ctx.shards, "Parallel enumeration shards")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, kFormatHelp)->check(CLI::IsMember({"json", "csv", "latex"}));

    auto* characters = app.add_subcommand("characters", "psi, phi or chi character table");
    unsigned char_d = 0;
    std::string char_kind = "psi";
    bool char_decompose = false;
    characters->add_option("--d", char_d, "Degree")->required();
    characters->add_option("--kind", char_kind, "psi, phi or chi")->check(CLI::IsMember({"psi", "phi", "chi"}));
    characters->add_flag("--decompose", char_decompose, "Irreducible multiplicities per degree");
    characters->add_option("--format", format, kFormatHelp)->check(CLI::IsMember({"json", "csv", "latex"}));

    auto* stable = app.add_subcommand("stable", "Detect stabilization of <P, psi_d^k> as d grows");
    std::string stable_stat;
    long stable_k = 0;
    unsigned stable_dmax = 0;
    stable->add_option("--stat", stable_stat, "Character-polynomial statistic")->required();
    stable->add_option("--k", stable_k, "Cohomological degree k")->required()->check(CLI::NonNegativeNumber);
    stable->add_option("--d-max", stable_dmax, "Largest degree to try")->required();
    stable->add_option("--format", format, kFormatHelp)->check(CLI::IsMember({"json", "csv", "latex"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (!no_cache) {
        if (!cache_dir.empty()) ctx.cache_dir = cache_dir;
        else ctx.cache_dir = factstat::cache_dir_from_env();
    }

    try {
        cmd::OutputDoc doc;
        if (*measure) {
            std::optional<std::uint64_t> q;
            if (*measure_q_opt) q = measure_q;
            doc = cmd::cmd_measure(measure_d, q, measure_sf, ctx);
        } else if (*expect) {
            doc = cmd::cmd_expect(expect_d, expect_stat, expect_sf, ctx);
        } else if (*verify) {
            doc = cmd::cmd_verify(verify_dmax, verify_q, verify_stats, ctx);
        } else if (*characters) {
            doc = cmd::cmd_characters(char_d, factstat::parse_character_kind(char_kind), char_decompose, ctx);
        } else if (*stable) {
            doc = cmd::cmd_stable(stable_stat, stable_k, stable_dmax, ctx);
        }
        std::cout << cmd::render(doc, cmd::parse_format(format));
        return doc.mismatch ? 1 : 0;
    } catch (const factstat::parse_error& e) {
        std::cerr << "factstat: parse error: " << e.what() << "\n";
        return 2;
    } catch (const factstat::internal_error& e) {
        std::cerr << "factstat: internal error: " << e.what() << "\n";
        return 1;
    } catch (const factstat::resource_error& e) {
        std::cerr << "factstat: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "factstat: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "factstat: internal error: " << e.what() << "\n";
        return 1;
    }
}
