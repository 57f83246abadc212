#include "crossnum/io.hpp"

#include <charconv>

namespace crossnum::io {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_cross_csv(std::ostream& out, int d, std::span<const IndexVector> points) {
    for (int j = 1; j <= d; ++j) out << 'k' << j << ',';
    out << "product\n";
    for (const auto& k : points) {
        for (auto kj : k) out << kj << ',';
        out << k.cross_product() << '\n';
    }
}

json count_json(const CrossSpec& spec, const BigCount& count) {
    return {{"r", spec.r}, {"d", spec.d}, {"count", to_decimal(count)}};
}

void write_spectrum_csv(std::ostream& out, const SpectrumTable& table) {
    const bool sharp = !table.sharp_bases.empty();
    out << (sharp ? "n,sigma,r\n" : "n,sigma\n");
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        out << i + 1 << ',' << format_double(table.values[i]);
        if (sharp) out << ',' << table.sharp_bases[i];
        out << '\n';
    }
}

json spectrum_json(const SpectrumTable& table) {
    json j;
    j["kind"] = table.kind.describe();
    j["d"] = table.d;
    j["certification"] = table.certification == Certification::Exact ? "exact" : "enumerated-certified";
    j["enumeration_radius"] = table.enumeration_radius;
    j["sigma"] = table.values;
    if (!table.sharp_bases.empty()) j["r"] = table.sharp_bases;
    return j;
}

json report_json(const VerificationReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"n", to_decimal(v.n)}, {"exact", v.exact}, {"bound", v.bound}});
    json j = {{"formula", report.formula},
              {"d", report.d},
              {"s", report.s},
              {"grid", {{"points_checked", report.points_checked}, {"points_skipped", report.points_skipped}}},
              {"pass", report.pass()},
              {"violations", violations},
              {"min_slack", report.min_slack},
              {"max_slack", report.max_slack}};
    if (!report.grid_note.empty()) j["grid"]["note"] = report.grid_note;
    return j;
}

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace, double constant) {
    out << "n,ratio,constant\n";
    for (const auto& p : trace) out << to_decimal(p.n) << ',' << format_double(p.ratio) << ',' << format_double(constant) << '\n';
}

json trace_json(const std::vector<TracePoint>& trace, double constant) {
    json rows = json::array();
    for (const auto& p : trace) rows.push_back({{"r", p.r}, {"n", to_decimal(p.n)}, {"ratio", p.ratio}});
    return {{"constant", constant}, {"trace", rows}};
}

namespace {
json point_json(const QptPoint& p) {
    return {{"eps", p.eps}, {"d", p.d}, {"n", to_decimal(p.n)}, {"log_n", p.log_n}, {"log_rhs", p.log_rhs},
            {"t_needed", p.t_needed}};
}
} // namespace

json certificate_json(const QptCertificate& cert) {
    json violations = json::array();
    for (const auto& p : cert.violations) violations.push_back(point_json(p));
    return {{"s", cert.s},
            {"t", cert.t},
            {"C_t", cert.C_t},
            {"grid", {{"d", cert.d_grid}, {"eps", cert.eps_grid}}},
            {"pass", cert.pass},
            {"worst_point", point_json(cert.worst_point)},
            {"slack", cert.slack},
            {"violations", violations}};
}

void write_complexity_csv(std::ostream& out, const std::vector<ComplexityRow>& rows) {
    out << "eps,d,n\n";
    for (const auto& r : rows) out << format_double(r.eps) << ',' << r.d << ',' << to_decimal(r.n) << '\n';
}

json error_report_json(const BigCount& n, const TruncationOperator& op, double worst_case, const TruncationError& err) {
    return {{"n", to_decimal(n)},
            {"r", op.r},
            {"rank", to_decimal(op.rank)},
            {"worst_case", worst_case},
            {"model_error", err.error_estimate},
            {"certified_bound", err.certified_bound}};
}

} // namespace crossnum::io
