#pragma once

// Machine-readable experiment reports: JSON with sorted keys and shortest
// round-trip floats, plus flat CSV curves.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcauchy/types.hpp"

namespace qcauchy {

using Json = nlohmann::json;

// Complex values serialize as {"im": ..., "re": ...}.
Json toJson(Complex z);
Complex complexFromJson(const Json& j);

struct ReportRow {
    Json inputs = Json::object();
    Json outputs = Json::object();
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    bool operator==(const ReportRow&) const = default;
};

class ExperimentReport {
public:
    static constexpr const char* kVersion = "1.0.0";

    ExperimentReport(std::string name, Json params, std::uint64_t seed = 0);

    // pass = residual <= tolerance (a NaN residual fails).
    const ReportRow& addRow(Json inputs, Json outputs, double residual, double tolerance);

    const std::string& name() const { return name_; }
    const Json& params() const { return params_; }
    const std::vector<ReportRow>& rows() const { return rows_; }
    std::uint64_t seed() const { return seed_; }
    bool allPass() const;
    std::vector<std::size_t> failingRows() const;

    Json toJson() const;
    static ExperimentReport fromJson(const Json& j);
    std::string dumpJson() const;  // two-space indent, trailing newline

    // One line per row; columns are the flattened inputs.* and outputs.*
    // keys (union over rows, sorted), then residual, tolerance, pass.
    std::string dumpCsv() const;

    bool operator==(const ExperimentReport&) const = default;

private:
    std::string name_;
    Json params_;
    std::vector<ReportRow> rows_;
    std::uint64_t seed_;
};

// RFC-4180 field quoting.
std::string csvField(const std::string& s);

}  // namespace qcauchy
