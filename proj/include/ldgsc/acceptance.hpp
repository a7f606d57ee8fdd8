#pragma once

#include <map>
#include <string>
#include <vector>

#include "ldgsc/study.hpp"

namespace ldgsc {

/// Published error values for one preset, keyed by metric.
struct ReferenceTable {
    std::string preset;
    std::vector<int> cells;
    std::map<std::string, std::vector<double>> values;

    double value(const std::string& key, int n) const;
};

const ReferenceTable& reference_table(const std::string& preset);

namespace tolerance {
inline constexpr double kTableFactor = 3.0;
inline constexpr double kZeroAverage = 1e-12;
inline constexpr double kLocalRateK3 = 4.6;
inline constexpr double kNodalRateK3 = 6.5;
inline constexpr double kLocalRateK4 = 5.6;
inline constexpr double kNodalRateK4 = 8.4;
}  // namespace tolerance

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = true;
    std::vector<std::string> notes;  // one entry per failed sub-check

    void require(bool ok, const std::string& note);
};

/// The study runs the criteria need.
struct AcceptanceRuns {
    StudyRecord example1_k3;
    StudyRecord example2_k3;
    StudyRecord example1_k4;
    StudyRecord example2_k4;
    StudyRecord example1_k3_plain;
};

AcceptanceRuns run_acceptance_studies(bool parallel = true);

CriterionResult check_table1(const StudyRecord& example1_k3);
CriterionResult check_rates_periodic(const StudyRecord& example1_k3);
CriterionResult check_table3(const StudyRecord& example2_k3);
CriterionResult check_k4(const StudyRecord& example1_k4, const StudyRecord& example2_k4);
CriterionResult check_ablation(const StudyRecord& example1_k3_plain);

/// Criteria 2-6 in order.
std::vector<CriterionResult> evaluate_study_criteria(const AcceptanceRuns& runs);

/// "PASS [n] title" or "FAIL [n] title", followed by indented notes on failure.
std::string format_result(const CriterionResult& result);

}  // namespace ldgsc
