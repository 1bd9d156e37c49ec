#pragma once

// Deterministic CSV/JSON/plot-data emission. Numbers print with 17 significant
// digits (%.17g), which round-trips every double exactly, so identical inputs
// produce byte-identical reports.

#include <cstdio>
#include <map>
#include <string>

#include "hyperlab/functionals.hpp"
#include "hyperlab/sharp_constants.hpp"

namespace hyperlab {

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace detail {

inline void append_json_map(std::string& out, const std::map<std::string, double>& m) {
    out += '{';
    bool first = true;
    for (const auto& [key, value] : m) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += '"';
        out += key;
        out += "\":";
        out += fmt17(value);
    }
    out += '}';
}

}  // namespace detail

inline std::string report_to_json(const InequalityReport& rep) {
    std::string out = "{";
    out += "\"lhs\":" + fmt17(rep.lhs);
    out += ",\"rhs\":" + fmt17(rep.rhs);
    out += ",\"ratio\":" + fmt17(rep.ratio);
    out += ",\"degenerate\":";
    out += rep.degenerate ? "true" : "false";
    out += ",\"quad_error\":" + fmt17(rep.quad_error);
    out += ",\"params\":";
    detail::append_json_map(out, rep.params);
    out += ",\"extras\":";
    detail::append_json_map(out, rep.extras);
    out += "}\n";
    return out;
}

/// Wide CSV: one header row over lhs,rhs,ratio,degenerate,quad_error followed
/// by the params and extras columns (sorted by name), one data row.
inline std::string report_to_csv(const InequalityReport& rep) {
    std::string header = "lhs,rhs,ratio,degenerate,quad_error";
    std::string row = fmt17(rep.lhs) + "," + fmt17(rep.rhs) + "," + fmt17(rep.ratio) + "," +
                      (rep.degenerate ? "1" : "0") + "," + fmt17(rep.quad_error);
    for (const auto& [key, value] : rep.params) {
        header += ",param:" + key;
        row += "," + fmt17(value);
    }
    for (const auto& [key, value] : rep.extras) {
        header += ",extra:" + key;
        row += "," + fmt17(value);
    }
    return header + "\n" + row + "\n";
}

/// Plot data is two-column everywhere; for a report the columns are the two
/// sides of the inequality.
inline std::string report_to_plotdata(const InequalityReport& rep) {
    return fmt17(rep.lhs) + " " + fmt17(rep.rhs) + "\n";
}

inline std::string sweep_to_csv(const SweepResult& sweep) {
    std::string out = "q,estimate,target_B,gap\n";
    for (const auto& e : sweep.entries) {
        out += fmt17(e.q) + "," + fmt17(e.estimate) + "," + fmt17(sweep.target_B) + "," +
               fmt17(std::abs(e.estimate - sweep.target_B) / sweep.target_B) + "\n";
    }
    return out;
}

inline std::string sweep_to_json(const SweepResult& sweep) {
    std::string out = "{\"entries\":[";
    bool first = true;
    for (const auto& e : sweep.entries) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += "{\"q\":" + fmt17(e.q) + ",\"estimate\":" + fmt17(e.estimate) +
               ",\"profile_id\":\"" + e.profile_id +
               "\",\"iterations\":" + std::to_string(e.iterations) + "}";
    }
    out += "],\"target_B\":" + fmt17(sweep.target_B);
    out += ",\"trend_gap\":" + fmt17(sweep.trend_gap);
    out += "}\n";
    return out;
}

inline std::string sweep_to_plotdata(const SweepResult& sweep) {
    std::string out;
    for (const auto& e : sweep.entries) {
        out += fmt17(e.q) + " " + fmt17(e.estimate) + "\n";
    }
    return out;
}

inline std::string moser_to_csv(const MoserDiagnostic& diag) {
    std::string out = "j,dirichlet_norm,decay_integral,tm_ratio\n";
    for (const auto& row : diag.rows) {
        out += fmt17(row.j) + "," + fmt17(row.dirichlet) + "," + fmt17(row.decay_integral) + "," +
               fmt17(row.tm_ratio) + "\n";
    }
    out += std::string("# trend=") + to_string(diag.trend) + "\n";
    return out;
}

inline std::string moser_to_json(const MoserDiagnostic& diag) {
    std::string out = "{\"rows\":[";
    bool first = true;
    for (const auto& row : diag.rows) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += "{\"j\":" + fmt17(row.j) + ",\"dirichlet_norm\":" + fmt17(row.dirichlet) +
               ",\"decay_integral\":" + fmt17(row.decay_integral) +
               ",\"tm_ratio\":" + fmt17(row.tm_ratio) + "}";
    }
    out += std::string("],\"trend\":\"") + to_string(diag.trend) + "\"";
    out += ",\"alpha\":" + fmt17(diag.alpha);
    out += ",\"alpha_critical\":" + fmt17(diag.alpha_critical);
    out += "}\n";
    return out;
}

inline std::string moser_to_plotdata(const MoserDiagnostic& diag) {
    std::string out;
    for (const auto& row : diag.rows) {
        out += fmt17(row.j) + " " + fmt17(row.tm_ratio) + "\n";
    }
    return out;
}

}  // namespace hyperlab
