#ifndef FEWEARS_VERIFY_HPP
#define FEWEARS_VERIFY_HPP

// Identity checks that pit every closed form against an enumeration or a
// second algebraic route, grouped into suites. Reports are deterministic: the
// text and JSON renderings never depend on the thread count unless timing is
// requested.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fewears/parallel.hpp"

namespace fewears {

enum class CheckStatus { Pass, Fail, Erratum };

std::string_view status_name(CheckStatus s);
CheckStatus parse_status(std::string_view text);

struct CheckResult {
    CheckStatus status = CheckStatus::Pass;
    std::string id;
    /// Polygon size (or composition total for composition checks); -1 when the
    /// check is not indexed by a size.
    int n = -1;
    std::string params = "-";
    std::string expected;
    std::string got;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> results;
    double seconds = 0.0;

    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

struct RunReport {
    std::optional<int> max_n;
    std::vector<SuiteReport> suites;
    bool timing = false;
    double seconds = 0.0;

    std::size_t count(CheckStatus s) const;
    /// 0 when nothing failed (ERRATUM lines do not fail a run), 2 otherwise.
    int exit_code() const;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// How large a suite may go: pairwise suites compare all pairs of
/// triangulations, single suites enumerate triangulations once, formula suites
/// never enumerate triangulations.
enum class SuiteScale { Pairwise, Single, Formula };

struct SuiteInfo {
    std::string name;
    SuiteScale scale;
    std::string description;
};

/// All suites in report order.
const std::vector<SuiteInfo>& suite_catalog();

/// Default upper size per scale (10 / 12 / 18) and the feasibility cap applied
/// to an explicit --max-n (11 / 14 / 30).
int default_max_n(SuiteScale scale);
int feasible_max_n(SuiteScale scale);

struct VerifyOptions {
    /// Overrides every suite's default, clamped to its feasibility cap.
    std::optional<int> max_n;
    /// Empty means all suites. Unknown names throw InputError.
    std::vector<std::string> suites;
    int threads = default_thread_count();
    bool timing = false;
};

RunReport run_verify(const VerifyOptions& options);

/// One line per check: `STATUS  id  n=.. params=.. expected=.. got=..`, followed
/// by a summary line (and wall times when timing is on).
std::string format_report_text(const RunReport& report);

nlohmann::json report_to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

}  // namespace fewears

#endif  // FEWEARS_VERIFY_HPP
