#ifndef GRMOD_REPORT_HPP
#define GRMOD_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

namespace grmod {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool expected_fail = false; // a deliberate control whose failure is the pass condition
    bool probabilistic = false;
    std::string witness;

    bool ok() const { return expected_fail ? !pass : pass; }
};

struct SeriesRow {
    long degree;
    long long value;
};

struct NamedSeries {
    std::string name;
    std::vector<SeriesRow> rows;
};

struct ReportSection {
    std::string name;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> data;
    std::vector<NamedSeries> series;

    CheckResult& add_check(const std::string& cname, bool pass) {
        checks.push_back(CheckResult{cname, pass});
        return checks.back();
    }
    void add_data(std::string key, std::string value) {
        data.emplace_back(std::move(key), std::move(value));
    }

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok()) return false;
        return true;
    }
};

struct Report {
    std::vector<ReportSection> sections;

    ReportSection& add_section(std::string name) {
        sections.push_back(ReportSection{std::move(name), {}, {}, {}});
        return sections.back();
    }

    bool ok() const {
        for (const auto& s : sections)
            if (!s.ok()) return false;
        return true;
    }

    void render_text(std::ostream& os) const {
        for (const auto& s : sections) {
            os << "== " << s.name << " ==\n";
            for (const auto& c : s.checks) {
                const char* verdict = c.ok() ? (c.expected_fail ? "XFAIL" : "PASS") : "FAIL";
                os << "  [" << verdict << "] " << c.name;
                if (c.probabilistic) os << " (probabilistic)";
                os << "\n";
                if (!c.witness.empty()) os << "    witness: " << c.witness << "\n";
            }
            for (const auto& [k, v] : s.data) os << "  " << k << " = " << v << "\n";
            for (const auto& ser : s.series) {
                os << "  series " << ser.name << ":";
                for (const auto& row : ser.rows) os << " (" << row.degree << ", " << row.value << ")";
                os << "\n";
            }
        }
        os << "overall = " << (ok() ? "pass" : "fail") << "\n";
    }

    void render_kv(std::ostream& os) const {
        for (const auto& s : sections) {
            for (const auto& c : s.checks) {
                os << s.name << "." << c.name << " = " << (c.ok() ? "pass" : "fail") << "\n";
                if (c.expected_fail)
                    os << s.name << "." << c.name << ".expected-fail = true\n";
                if (c.probabilistic)
                    os << s.name << "." << c.name << ".probabilistic = true\n";
                if (!c.witness.empty())
                    os << s.name << "." << c.name << ".witness = " << c.witness << "\n";
            }
            for (const auto& [k, v] : s.data) os << s.name << "." << k << " = " << v << "\n";
            for (const auto& ser : s.series)
                for (const auto& row : ser.rows)
                    os << s.name << ".series." << ser.name << "." << row.degree << " = "
                       << row.value << "\n";
        }
        os << "overall = " << (ok() ? "pass" : "fail") << "\n";
    }

    void render_csv(std::ostream& os) const {
        os << "section,kind,name,degree,value\n";
        for (const auto& s : sections) {
            for (const auto& c : s.checks)
                os << s.name << ",check," << c.name << ",," << (c.ok() ? "pass" : "fail") << "\n";
            for (const auto& [k, v] : s.data) os << s.name << ",data," << k << ",," << v << "\n";
            for (const auto& ser : s.series)
                for (const auto& row : ser.rows)
                    os << s.name << ",series," << ser.name << "," << row.degree << ","
                       << row.value << "\n";
        }
        os << ",overall,,," << (ok() ? "pass" : "fail") << "\n";
    }
};

} // namespace grmod

#endif
