#pragma once

/**
 * @file report.hpp
 * @brief Text and JSON serialization of verification reports.
 *
 * Exact values always serialize as decimal strings: coefficient magnitudes
 * blow past 64 bits early, and JSON numbers are not interoperable past 2^53.
 * JSON output is canonical (alphabetical keys, two-space indent, trailing
 * newline), so parsing a report and re-serializing it is byte-identical.
 */

#include "stickkit/identities.hpp"
#include "stickkit/integer.hpp"

#include <json.hpp>

#include <span>
#include <sstream>
#include <string>

namespace stickkit {

/// "1+3+10+35" — unsigned join of LHS terms.
inline std::string join_terms_plain(const std::vector<Integer>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out += '+';
        out += terms[i].str();
    }
    return out;
}

/// "56-7" / "90-21+1" — signed join of RHS terms, leading '+' omitted.
inline std::string join_terms_signed(const std::vector<Integer>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0 && terms[i] >= 0) out += '+';
        out += terms[i].str();
    }
    return out;
}

inline std::string case_line(const case_result& result) {
    std::ostringstream out;
    out << (result.equal ? "ok  " : "FAIL") << " n=" << result.id.n << " k=" << result.id.k
        << ": " << join_terms_plain(result.lhs.terms);
    if (result.equal) {
        out << " = " << join_terms_signed(result.rhs.terms) << " = " << result.rhs.total.str();
    } else {
        out << " = " << result.lhs.total.str() << " but " << join_terms_signed(result.rhs.terms)
            << " = " << result.rhs.total.str();
    }
    return out.str();
}

inline std::string report_text(const verification_report& report) {
    std::ostringstream out;
    out << "family " << family_name(report.family) << " n_max=" << report.n_max
        << " k_max=" << report.k_max << ": checked=" << report.checked
        << " failed=" << report.failed << " elapsed_ms=" << report.elapsed.count() << '\n';
    for (const case_result& result : report.cases) out << case_line(result) << '\n';
    return out.str();
}

inline nlohmann::json report_json(const verification_report& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const case_result& result : report.cases) {
        nlohmann::json lhs_terms = nlohmann::json::array();
        for (const Integer& t : result.lhs.terms) lhs_terms.push_back(t.str());
        nlohmann::json rhs_terms = nlohmann::json::array();
        for (const Integer& t : result.rhs.terms)
            rhs_terms.push_back((t >= 0 ? "+" : "") + t.str());
        cases.push_back({{"n", result.id.n},
                         {"k", result.id.k},
                         {"lhs_terms", std::move(lhs_terms)},
                         {"lhs_total", result.lhs.total.str()},
                         {"rhs_terms", std::move(rhs_terms)},
                         {"rhs_total", result.rhs.total.str()},
                         {"equal", result.equal}});
    }
    return {{"family", std::string(family_name(report.family))},
            {"n_max", report.n_max},
            {"k_max", report.k_max},
            {"checked", report.checked},
            {"failed", report.failed},
            {"elapsed_ms", report.elapsed.count()},
            {"cases", std::move(cases)}};
}

/// The one canonical JSON text form used everywhere reports are emitted.
inline std::string canonical_json_text(const nlohmann::json& doc) {
    return doc.dump(2) + "\n";
}

/// Process exit status for a batch of sweeps: 0 iff no case failed anywhere.
inline int exit_status(std::span<const verification_report> reports) {
    for (const verification_report& report : reports)
        if (report.failed > 0) return 1;
    return 0;
}

} // namespace stickkit
