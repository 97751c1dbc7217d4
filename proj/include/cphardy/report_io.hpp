#pragma once

#include <string>

#include <json.hpp>

#include "cphardy/dynamics.hpp"

namespace cphardy {

using json = nlohmann::ordered_json;

inline constexpr const char* report_schema_version = "1";

/// Serializable wrapper around a symbol and its dynamics report.
struct ReportDocument {
    std::string schema_version = report_schema_version;
    double a = 1.0;
    double b_re = 0.0;
    double b_im = 0.0;
    DynamicsReport report;
};

ReportDocument make_report_document(const AffineSymbol& phi);

json to_json(const ReportDocument& doc);
ReportDocument report_document_from_json(const json& j);

/// Fixed-width decimal formatting used by the CSV writers: 17 significant
/// digits, '.' separator, no locale dependence.
std::string fmt17(double x);

} // namespace cphardy
