#pragma once

// Machine-readable reports over verification results. JSON first, markdown
// rendering the same table. Reports are deterministic for a fixed check set
// and digit count once timing is excluded.

#include <string>
#include <vector>

#include <json.hpp>

#include "septica/verification.hpp"

namespace septica {

inline constexpr int kReportVersion = 1;

inline nlohmann::json report_json(const std::vector<VerificationResult>& results, int digits,
                                  bool include_timing) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json row{{"id", r.check_id},
                           {"pass", r.pass},
                           {"digits_agreed", r.digits_agreed},
                           {"lhs", r.lhs},
                           {"rhs", r.rhs}};
        if (include_timing) row["elapsed_ms"] = r.elapsed.count() / 1000.0;
        checks.push_back(std::move(row));
    }
    return nlohmann::json{{"version", kReportVersion}, {"digits", digits}, {"checks", checks}};
}

inline std::string emit_report(const std::vector<VerificationResult>& results, int digits,
                               bool include_timing) {
    return report_json(results, digits, include_timing).dump(2) + "\n";
}

inline std::string emit_report_markdown(const std::vector<VerificationResult>& results,
                                        int digits, bool include_timing) {
    std::string out = "# verification report (digits = " + std::to_string(digits) + ")\n\n";
    out += "| check | pass | digits agreed | lhs | rhs |";
    if (include_timing) out += " elapsed ms |";
    out += "\n|---|---|---|---|---|";
    if (include_timing) out += "---|";
    out += "\n";
    for (const auto& r : results) {
        out += "| " + r.check_id + " | " + (r.pass ? "yes" : "NO") + " | " +
               std::to_string(r.digits_agreed) + " | " + r.lhs + " | " + r.rhs + " |";
        if (include_timing) out += " " + std::to_string(r.elapsed.count() / 1000.0) + " |";
        out += "\n";
    }
    return out;
}

} // namespace septica
