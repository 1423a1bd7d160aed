#pragma once

#include <string>

#include "grouplat/verify.hpp"

namespace grouplat {

struct ReportDocument {
    std::string schema_version;
    std::string engine_version;
    std::vector<TheoremReport> reports;
    ScanSummary summary;
};

ReportDocument make_document(const ScanReport& scan);

// Canonical JSON: object keys sorted, arrays in report order, integers and
// booleans only. Byte-stable across runs and thread counts.
std::string emit_report(const ReportDocument& doc);

// Lossless inverse of emit_report (throws ValidationError on bad input).
ReportDocument parse_report(const std::string& bytes);

}  // namespace grouplat
