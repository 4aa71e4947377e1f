#include "hopfgal/report.hpp"

#include "json.hpp"

namespace hopfgal {

namespace {
const char* verdict_str(ReportRow::Verdict v) {
    switch (v) {
        case ReportRow::Verdict::Pass: return "pass";
        case ReportRow::Verdict::Fail: return "FAIL";
        default: return "info";
    }
}
}  // namespace

std::string Report::text() const {
    std::string out;
    for (const auto& r : rows) {
        out += verdict_str(r.verdict);
        out += "  ";
        out += r.id;
        if (!r.label.empty()) out += "  " + r.label;
        if (!r.detail.empty()) out += "  :: " + r.detail;
        out += "\n";
    }
    size_t fails = fail_count();
    out += "-- " + std::to_string(rows.size()) + " checks, " + std::to_string(fails) + " failed\n";
    return out;
}

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["id"] = r.id;
        row["verdict"] = verdict_str(r.verdict);
        row["detail"] = r.detail;
        row["label"] = r.label;
        j["rows"].push_back(row);
    }
    j["failed"] = fail_count();
    return j.dump(2);
}

}  // namespace hopfgal
