#include "qcauchy/report.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "qcauchy/errors.hpp"

namespace qcauchy {

namespace {

void flatten(const Json& j, const std::string& prefix, std::map<std::string, std::string>& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        return;
    }
    if (j.is_string()) {
        out[prefix] = j.get<std::string>();
        return;
    }
    out[prefix] = j.dump();
}

}  // namespace

Json toJson(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complexFromJson(const Json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

ExperimentReport::ExperimentReport(std::string name, Json params, std::uint64_t seed)
    : name_(std::move(name)), params_(std::move(params)), seed_(seed) {
    if (!params_.is_object()) throw DomainError("report parameters must be an object");
}

const ReportRow& ExperimentReport::addRow(Json inputs, Json outputs, double residual, double tolerance) {
    ReportRow row;
    row.inputs = std::move(inputs);
    row.outputs = std::move(outputs);
    row.residual = residual;
    row.tolerance = tolerance;
    row.pass = residual <= tolerance;
    rows_.push_back(std::move(row));
    return rows_.back();
}

bool ExperimentReport::allPass() const { return failingRows().empty(); }

std::vector<std::size_t> ExperimentReport::failingRows() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!rows_[i].pass) out.push_back(i);
    }
    return out;
}

Json ExperimentReport::toJson() const {
    Json rows = Json::array();
    for (const auto& r : rows_) {
        rows.push_back({{"inputs", r.inputs},
                        {"outputs", r.outputs},
                        {"residual", r.residual},
                        {"tolerance", r.tolerance},
                        {"pass", r.pass}});
    }
    return {{"experiment", name_},
            {"params", params_},
            {"rows", rows},
            {"meta", {{"version", kVersion}, {"seed", seed_}}}};
}

ExperimentReport ExperimentReport::fromJson(const Json& j) {
    ExperimentReport r(j.at("experiment").get<std::string>(), j.at("params"),
                       j.at("meta").at("seed").get<std::uint64_t>());
    for (const auto& row : j.at("rows")) {
        ReportRow rr;
        rr.inputs = row.at("inputs");
        rr.outputs = row.at("outputs");
        // NaN residuals are written as null
        rr.residual = row.at("residual").is_null() ? std::nan("") : row.at("residual").get<double>();
        rr.tolerance = row.at("tolerance").get<double>();
        rr.pass = row.at("pass").get<bool>();
        r.rows_.push_back(std::move(rr));
    }
    return r;
}

std::string ExperimentReport::dumpJson() const { return toJson().dump(2) + "\n"; }

std::string ExperimentReport::dumpCsv() const {
    std::vector<std::map<std::string, std::string>> flat;
    std::map<std::string, int> columns;
    for (const auto& r : rows_) {
        std::map<std::string, std::string> f;
        flatten(r.inputs, "inputs", f);
        flatten(r.outputs, "outputs", f);
        for (const auto& [k, v] : f) columns[k] = 0;
        flat.push_back(std::move(f));
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : columns) {
        os << (first ? "" : ",") << csvField(k);
        first = false;
    }
    os << (first ? "" : ",") << "residual,tolerance,pass\r\n";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto& [k, v] : columns) {
            auto it = flat[i].find(k);
            os << csvField(it == flat[i].end() ? "" : it->second) << ",";
        }
        os << Json(rows_[i].residual).dump() << "," << Json(rows_[i].tolerance).dump() << ","
           << (rows_[i].pass ? "true" : "false") << "\r\n";
    }
    return os.str();
}

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace qcauchy
