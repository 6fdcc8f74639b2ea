#include "graphcent/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace graphcent {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// Divide nats-denominated values by ln 2 when bits display is requested.
double scaled(double nats_value, bool bits) { return bits ? nats_value / kLn2 : nats_value; }

// Round to the emitted precision so every format carries identical values.
double emit(double v) { return std::stod(format_sig(v)); }

const char* case_name(CaseLabel label) {
    switch (label) {
        case CaseLabel::A: return "A";
        case CaseLabel::B: return "B";
        case CaseLabel::boundary: return "boundary";
    }
    return "?";
}

const char* crossing_name(CrossingKind kind) {
    switch (kind) {
        case CrossingKind::finite: return "finite";
        case CrossingKind::asymptotic: return "asymptotic";
        case CrossingKind::at_k_equals_one: return "at_k_equals_one";
    }
    return "?";
}

nlohmann::ordered_json verdict_json(const DichotomyVerdict& v, bool bits) {
    nlohmann::ordered_json out;
    out["case"] = case_name(v.case_label);
    out["threshold"] = emit(scaled(v.threshold, bits));
    out["t_q"] = emit(scaled(v.t_q, bits));
    out["sufficient_condition_holds"] = v.sufficient_condition_holds;
    if (v.crossing) {
        nlohmann::ordered_json c;
        c["kind"] = crossing_name(v.crossing->kind);
        c["k"] = emit(v.crossing->k);
        c["t_dk"] = emit(scaled(v.crossing->t_dk, bits));
        out["crossing"] = c;
    } else {
        out["crossing"] = nullptr;
    }
    return out;
}

} // namespace

const std::vector<double>& default_k_grid() {
    static const std::vector<double> grid{0.25, 0.5, 1, 2, 4, 8, 16, 50, 200};
    return grid;
}

const std::vector<double>& default_p_grid() {
    static const std::vector<double> grid{0.5, 2, 3};
    return grid;
}

std::string graph_hash(const Graph& g) {
    std::ostringstream canonical;
    canonical << g.vertex_count() << ";";
    for (auto [i, j] : g.edges()) {
        canonical << i << "," << j << ";";
    }
    const std::string s = canonical.str();
    std::uint64_t hash = 14695981039346656037ULL; // FNV-1a 64-bit
    for (const unsigned char c : s) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

std::string format_sig(double v) {
    if (v == 0.0) v = 0.0; // normalize -0.0 so zeros always print as "0"
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", v);
    return buffer;
}

CentralizationReport make_report(const Graph& g, const std::string& id,
                                 const std::vector<double>& k_grid,
                                 const std::vector<double>& p_grid) {
    CentralizationReport report;
    report.id = id;
    report.hash = graph_hash(g);
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.connected = is_connected(g);
    for (const double k : k_grid) {
        report.t_dk.emplace_back(k, degree_theil(g, k));
    }
    report.t_q = von_neumann_theil(g);
    for (const double p : p_grid) {
        report.t_qp.emplace_back(p, generalized_theil(g, p));
    }
    report.c_d = freeman_degree_centralization(g);
    report.c_b = freeman_betweenness_centralization(g);
    report.jain = jain_index(degrees(g));
    report.minus_ln_jain = -std::log(report.jain);
    if (report.connected) {
        report.verdict = classify_dichotomy(g);
    }
    return report;
}

std::string render_report(const CentralizationReport& r, OutputFormat format, bool bits) {
    const char* units = bits ? "bits" : "nats";
    if (format == OutputFormat::json) {
        nlohmann::ordered_json out;
        out["id"] = r.id;
        out["hash"] = r.hash;
        out["n"] = r.n;
        out["m"] = r.m;
        out["connected"] = r.connected;
        out["units"] = units;
        auto& tdk = out["t_dk"] = nlohmann::ordered_json::array();
        for (auto [k, v] : r.t_dk) {
            tdk.push_back({{"k", emit(k)}, {"value", emit(scaled(v, bits))}});
        }
        out["t_q"] = emit(scaled(r.t_q, bits));
        auto& tqp = out["t_qp"] = nlohmann::ordered_json::array();
        for (auto [p, v] : r.t_qp) {
            tqp.push_back({{"p", emit(p)}, {"value", emit(scaled(v, bits))}});
        }
        out["c_d"] = emit(r.c_d);
        out["c_b"] = emit(r.c_b);
        out["jain"] = emit(r.jain);
        out["minus_ln_jain"] = emit(scaled(r.minus_ln_jain, bits));
        out["verdict"] = r.verdict ? verdict_json(*r.verdict, bits)
                                   : nlohmann::ordered_json(nullptr);
        return out.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream head;
        std::ostringstream row;
        head << "id,hash,n,m,connected,units";
        row << r.id << "," << r.hash << "," << r.n << "," << r.m << ","
            << (r.connected ? "true" : "false") << "," << units;
        for (auto [k, v] : r.t_dk) {
            head << ",t_d@" << format_sig(k);
            row << "," << format_sig(scaled(v, bits));
        }
        head << ",t_q";
        row << "," << format_sig(scaled(r.t_q, bits));
        for (auto [p, v] : r.t_qp) {
            head << ",t_q@" << format_sig(p);
            row << "," << format_sig(scaled(v, bits));
        }
        head << ",c_d,c_b,jain,minus_ln_jain,case,threshold,crossing_kind,crossing_k";
        row << "," << format_sig(r.c_d) << "," << format_sig(r.c_b) << ","
            << format_sig(r.jain) << "," << format_sig(scaled(r.minus_ln_jain, bits));
        if (r.verdict) {
            row << "," << case_name(r.verdict->case_label) << ","
                << format_sig(scaled(r.verdict->threshold, bits));
            if (r.verdict->crossing) {
                row << "," << crossing_name(r.verdict->crossing->kind) << ","
                    << format_sig(r.verdict->crossing->k);
            } else {
                row << ",,";
            }
        } else {
            row << ",,,,";
        }
        return head.str() + "\n" + row.str() + "\n";
    }
    // markdown_table
    std::ostringstream out;
    out << "| quantity | value |\n|---|---|\n";
    out << "| id | " << r.id << " |\n";
    out << "| hash | " << r.hash << " |\n";
    out << "| n | " << r.n << " |\n";
    out << "| m | " << r.m << " |\n";
    out << "| connected | " << (r.connected ? "true" : "false") << " |\n";
    out << "| units | " << units << " |\n";
    for (auto [k, v] : r.t_dk) {
        out << "| T_d@" << format_sig(k) << " | " << format_sig(scaled(v, bits)) << " |\n";
    }
    out << "| T_Q | " << format_sig(scaled(r.t_q, bits)) << " |\n";
    for (auto [p, v] : r.t_qp) {
        out << "| T_Q@" << format_sig(p) << " | " << format_sig(scaled(v, bits)) << " |\n";
    }
    out << "| C_D | " << format_sig(r.c_d) << " |\n";
    out << "| C_B | " << format_sig(r.c_b) << " |\n";
    out << "| Jain J | " << format_sig(r.jain) << " |\n";
    out << "| -ln J | " << format_sig(scaled(r.minus_ln_jain, bits)) << " |\n";
    if (r.verdict) {
        out << "| case | " << case_name(r.verdict->case_label) << " |\n";
        out << "| threshold | " << format_sig(scaled(r.verdict->threshold, bits)) << " |\n";
        out << "| sufficient condition | "
            << (r.verdict->sufficient_condition_holds ? "true" : "false") << " |\n";
        if (r.verdict->crossing) {
            out << "| crossing | " << crossing_name(r.verdict->crossing->kind) << " at k="
                << format_sig(r.verdict->crossing->k) << " |\n";
        }
    } else {
        out << "| case | (disconnected: no verdict) |\n";
    }
    return out.str();
}

} // namespace graphcent
