#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crossnum/bounds.hpp"
#include "crossnum/combinatorics.hpp"
#include "crossnum/fourier.hpp"
#include "crossnum/spectra.hpp"
#include "crossnum/tractability.hpp"

namespace crossnum::io {

using nlohmann::json;

/// Header "k1,...,kd,product", one row per index. LF line endings.
void write_cross_csv(std::ostream& out, int d, std::span<const IndexVector> points);

/// {"r":..,"d":..,"count":"<decimal>"}
json count_json(const CrossSpec& spec, const BigCount& count);

/// Columns n,sigma and, for Sharp, r.
void write_spectrum_csv(std::ostream& out, const SpectrumTable& table);
json spectrum_json(const SpectrumTable& table);

json report_json(const VerificationReport& report);

/// Columns n,ratio,constant.
void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace, double constant);
json trace_json(const std::vector<TracePoint>& trace, double constant);

json certificate_json(const QptCertificate& cert);

struct ComplexityRow {
    double eps;
    int d;
    BigCount n;
};
void write_complexity_csv(std::ostream& out, const std::vector<ComplexityRow>& rows);

json error_report_json(const BigCount& n, const TruncationOperator& op, double worst_case,
                       const TruncationError& err);

/// Shortest decimal that round-trips a double.
std::string format_double(double v);

} // namespace crossnum::io
