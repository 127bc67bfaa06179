#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace oredil {

struct Failure {
    std::string case_id;
    std::string witness;
};

struct VerificationReport {
    std::string suite;
    std::int64_t cases = 0;
    std::vector<Failure> failures;
    std::int64_t millis = 0;

    bool pass() const { return failures.empty(); }
};

/// Accumulates one suite run; failures come out sorted by case identifier
/// and the wall time covers construction to finish().
class ReportBuilder {
    VerificationReport r_;
    std::string filter_;
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();

public:
    /// Cases whose identifier does not start with `filter` are skipped
    /// entirely (not run, not counted); empty matches everything.
    explicit ReportBuilder(std::string suite, std::string filter = "")
        : filter_(std::move(filter)) {
        r_.suite = std::move(suite);
    }

    bool selected(const std::string& case_id) const {
        return filter_.empty() || case_id.rfind(filter_, 0) == 0;
    }

    void require(const std::string& case_id, bool ok, const std::string& witness = "") {
        if (!selected(case_id))
            return;
        ++r_.cases;
        if (!ok)
            r_.failures.push_back({case_id, witness});
    }

    template <class F>
    void require_w(const std::string& case_id, bool ok, F&& witness) {
        if (!selected(case_id))
            return;
        ++r_.cases;
        if (!ok)
            r_.failures.push_back({case_id, std::forward<F>(witness)()});
    }

    std::int64_t cases_so_far() const { return r_.cases; }

    VerificationReport finish() {
        auto dt = std::chrono::steady_clock::now() - t0_;
        r_.millis = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
        std::stable_sort(r_.failures.begin(), r_.failures.end(),
                         [](const Failure& a, const Failure& b) { return a.case_id < b.case_id; });
        return std::move(r_);
    }
};

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"case", f.case_id}, {"witness", f.witness}});
    return {{"suite", r.suite},
            {"cases", r.cases},
            {"failures", fails},
            {"millis", r.millis},
            {"pass", r.pass()}};
}

inline nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs) {
    nlohmann::json suites = nlohmann::json::array();
    std::int64_t total_failures = 0;
    bool pass = true;
    for (const auto& r : rs) {
        suites.push_back(report_to_json(r));
        total_failures += static_cast<std::int64_t>(r.failures.size());
        pass = pass && r.pass();
    }
    return {{"suites", suites}, {"total_failures", total_failures}, {"pass", pass}};
}

inline void print_report(std::ostream& os, const VerificationReport& r) {
    os << (r.pass() ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.cases << " cases, "
       << r.failures.size() << " failures, " << r.millis << " ms\n";
    for (const auto& f : r.failures)
        os << "    " << f.case_id << ": " << f.witness << "\n";
}

inline bool print_reports(std::ostream& os, const std::vector<VerificationReport>& rs) {
    bool pass = true;
    for (const auto& r : rs) {
        print_report(os, r);
        pass = pass && r.pass();
    }
    os << (pass ? "all suites passed\n" : "FAILURES PRESENT\n");
    return pass;
}

} // namespace oredil
