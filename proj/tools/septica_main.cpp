// Command-line front end: evaluate closed-form constants, run the named
// verification checks, and emit the special-values table.
//
// Exit codes: 0 all selected work passed, 1 at least one check failed,
// 2 usage or registry error, 3 convergence/ambiguity error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "septica/septica.hpp"

namespace {

std::string default_cache_path() {
    if (const char* env = std::getenv("SEPTICA_CACHE")) return env; // empty disables
    return "septica_cache.json";
}

int cmd_eval(const std::string& id, int digits) {
    septica::PrecisionContext ctx(digits); // validates digits before anything else
    const std::string cache_path = default_cache_path();
    septica::ConstantCache cache;
    bool use_cache = !cache_path.empty();
    if (use_cache) {
        cache = septica::cache_load(cache_path);
        if (auto hit = septica::cache_lookup(cache, id, digits)) {
            septica::closed_form_entry(id); // unknown ids fail even on a hit
            std::cout << *hit << "\n";
            return 0;
        }
    }
    septica::Real value = septica::evaluate_closed_form(id, ctx);
    std::string decimal = septica::to_decimal(value, digits);
    if (use_cache) {
        septica::cache_update(cache, id, digits, decimal);
        septica::cache_store(cache_path, cache);
    }
    std::cout << decimal << "\n";
    return 0;
}

int cmd_verify(bool all, const std::vector<std::string>& ids, int digits,
               const std::string& json_path, const std::string& markdown_path, bool no_timing,
               bool parallel) {
    std::vector<septica::VerificationResult> results;
    if (all || ids.empty()) {
        results = septica::run_all(digits, parallel);
    } else {
        for (const auto& id : ids) results.push_back(septica::run_check(id, digits));
    }

    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.check_id << " (agreed "
                  << r.digits_agreed << ", required " << r.required_digits << ")\n";
    }
    std::cout << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << " ("
              << results.size() << " checks, digits = " << digits << ")\n";

    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::trunc);
        if (!out) throw septica::error("cannot write report: " + json_path);
        out << septica::emit_report(results, digits, !no_timing);
    }
    if (!markdown_path.empty()) {
        std::ofstream out(markdown_path, std::ios::trunc);
        if (!out) throw septica::error("cannot write report: " + markdown_path);
        out << septica::emit_report_markdown(results, digits, !no_timing);
    }
    return all_pass ? 0 : 1;
}

struct TableRow {
    std::string name;
    std::string value;
};

std::vector<TableRow> build_table(int digits) {
    septica::PrecisionContext ctx(digits);
    std::vector<TableRow> rows;
    auto add = [&](const std::string& name, const septica::Real& v) {
        rows.push_back({name, septica::to_decimal(v, digits)});
    };
    septica::Real phi1 = septica::phi_e_pi(ctx);
    add("phi(e^-pi)", phi1);
    add("phi(e^-3pi)", septica::e3_constant(ctx) * phi1);
    add("phi(e^-5pi)", septica::e5_constant(ctx) * phi1);
    add("phi(e^-7pi)", sqrt(septica::theorem_e7(ctx)) * phi1);
    add("phi(e^-9pi)", septica::ratio_9pi_sqrt_n(septica::Rational(1), ctx) * phi1);
    add("phi(e^-21pi)", septica::theorem_e21(ctx) * phi1);
    add("phi(e^-35pi)", septica::theorem_e35(ctx) * phi1);
    add("phi(e^-49pi)", septica::theorem_e49(ctx) * phi1);
    add("phi(e^-7pi sqrt3)", septica::phi_e_7pi_sqrt3(ctx));
    add("phi(e^-7pi sqrt7)", septica::phi_e_7pi_sqrt7(ctx));
    for (const auto& record : septica::invariant_table(ctx))
        add("G_" + std::to_string(record.n.num), record.value);
    return rows;
}

int cmd_table(const std::string& format, int digits) {
    auto rows = build_table(digits);
    if (format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& r : rows) doc.push_back({{"name", r.name}, {"value", r.value}});
        std::cout << doc.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << "\\begin{tabular}{ll}\n";
        for (const auto& r : rows) std::cout << r.name << " & " << r.value << " \\\\\n";
        std::cout << "\\end{tabular}\n";
    } else {
        std::cout << "| quantity | value |\n|---|---|\n";
        for (const auto& r : rows) std::cout << "| " << r.name << " | " << r.value << " |\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arbitrary-precision evaluation and verification of septic theta identities"};
    app.require_subcommand(1);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one closed-form constant");
    std::string eval_id;
    int eval_digits = 60;
    eval_cmd->add_option("--id", eval_id, "closed-form id")->required();
    eval_cmd->add_option("--digits", eval_digits, "decimal digits")->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
    bool verify_all = false, no_timing = false, parallel = false;
    std::vector<std::string> check_ids;
    int verify_digits = 60;
    std::string json_path, markdown_path;
    verify_cmd->add_flag("--all", verify_all, "run every registered check");
    verify_cmd->add_option("--check", check_ids, "run one check (repeatable)");
    verify_cmd->add_option("--digits", verify_digits, "decimal digits")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--json", json_path, "write a JSON report here");
    verify_cmd->add_option("--markdown", markdown_path, "write a markdown report here");
    verify_cmd->add_flag("--no-timing", no_timing, "omit elapsed times from reports");
    verify_cmd->add_flag("--parallel", parallel, "run checks concurrently");

    auto* table_cmd = app.add_subcommand("table", "emit the special-values table");
    std::string format = "markdown";
    int table_digits = 60;
    table_cmd->add_option("--format", format, "json, markdown, or latex")
        ->check(CLI::IsMember({"json", "markdown", "latex"}));
    table_cmd->add_option("--digits", table_digits, "decimal digits")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(eval_cmd)) return cmd_eval(eval_id, eval_digits);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(verify_all, check_ids, verify_digits, json_path, markdown_path,
                              no_timing, parallel);
        if (app.got_subcommand(table_cmd)) return cmd_table(format, table_digits);
    } catch (const septica::ambiguous_orientation& e) {
        std::cerr << "ambiguity error: " << e.what() << "\n";
        return 3;
    } catch (const septica::non_convergence& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const septica::registry_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const septica::invalid_precision& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const septica::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const septica::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
