#pragma once

#include <string>
#include <vector>

namespace hopfgal {

// One check outcome.  `label` carries the conventional identity tag
// ("(gira-H)", "(tauS2)", ...) so report lines are traceable.
struct ReportRow {
    enum class Verdict { Pass, Fail, Info };
    std::string id;
    Verdict verdict = Verdict::Info;
    std::string detail;  // witness or value; replayable input on failure
    std::string label;
};

struct Report {
    std::vector<ReportRow> rows;

    void pass(const std::string& id, const std::string& label = "", const std::string& detail = "") {
        rows.push_back({id, ReportRow::Verdict::Pass, detail, label});
    }
    void fail(const std::string& id, const std::string& label, const std::string& witness) {
        rows.push_back({id, ReportRow::Verdict::Fail, witness, label});
    }
    void info(const std::string& id, const std::string& detail, const std::string& label = "") {
        rows.push_back({id, ReportRow::Verdict::Info, detail, label});
    }
    void check(bool ok, const std::string& id, const std::string& label, const std::string& witness_on_fail,
               const std::string& detail_on_pass = "") {
        if (ok)
            pass(id, label, detail_on_pass);
        else
            fail(id, label, witness_on_fail);
    }
    void merge(const Report& o, const std::string& prefix = "") {
        for (auto r : o.rows) {
            r.id = prefix.empty() ? r.id : prefix + "." + r.id;
            rows.push_back(std::move(r));
        }
    }
    bool all_pass() const {
        for (const auto& r : rows)
            if (r.verdict == ReportRow::Verdict::Fail) return false;
        return true;
    }
    size_t fail_count() const {
        size_t n = 0;
        for (const auto& r : rows)
            if (r.verdict == ReportRow::Verdict::Fail) ++n;
        return n;
    }

    std::string text() const;
    std::string json() const;
};

}  // namespace hopfgal
