#include "ldgsc/acceptance.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

namespace ldgsc {

namespace {

using Rows = std::vector<std::vector<double>>;

// Rows are N values; columns follow metric_columns() order.
ReferenceTable make_table(const std::string& preset, std::vector<int> cells, const Rows& rows) {
    ReferenceTable t{preset, std::move(cells), {}};
    const auto& cols = metric_columns();
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& row : rows) t.values[cols[c].key].push_back(row.at(c));
    return t;
}

const std::vector<ReferenceTable>& tables() {
    static const std::vector<ReferenceTable> all{
        make_table("example1-k3", {4, 8, 16, 32},
                   {
                       {5.06e-04, 2.82e-04, 1.72e-04, 1.04e-04, 5.92e-05, 7.57e-05, 3.12e-04,
                        4.01e-04, 1.72e-04, 2.41e-04, 1.12e-04, 6.67e-05, 3.74e-05, 1.84e-13},
                       {1.29e-05, 5.13e-06, 4.14e-06, 7.19e-07, 4.17e-07, 5.11e-07, 2.00e-06,
                        1.11e-05, 4.14e-06, 4.76e-06, 6.86e-07, 4.12e-07, 3.18e-07, 4.05e-17},
                       {3.92e-07, 1.35e-07, 1.25e-07, 5.65e-09, 3.16e-09, 3.89e-09, 1.44e-08,
                        3.44e-07, 1.25e-07, 1.32e-07, 5.24e-09, 3.17e-09, 2.56e-09, 9.64e-21},
                       {1.22e-08, 3.98e-09, 3.92e-09, 4.37e-11, 2.44e-11, 3.01e-11, 1.08e-10,
                        1.07e-08, 3.92e-09, 3.98e-09, 4.14e-11, 2.47e-11, 2.02e-11, 2.34e-24},
                   }),
        make_table("example1-k4", {4, 8, 16},
                   {
                       {2.34e-05, 8.40e-06, 1.06e-05, 1.47e-06, 7.96e-07, 1.04e-06, 2.94e-06,
                        3.06e-05, 1.07e-05, 9.30e-06, 1.92e-06, 1.14e-06, 6.52e-07, 1.86e-13},
                       {3.92e-07, 1.32e-07, 1.28e-07, 2.62e-09, 1.47e-09, 1.74e-09, 5.96e-09,
                        4.56e-07, 1.28e-07, 1.33e-07, 2.41e-09, 1.50e-09, 1.23e-09, 4.06e-17},
                       {6.21e-09, 2.02e-09, 2.05e-09, 5.06e-12, 2.85e-12, 3.37e-12, 1.21e-11,
                        7.09e-09, 2.05e-09, 2.03e-09, 4.44e-12, 2.78e-12, 2.37e-12, 9.64e-21},
                   }),
        make_table("example2-k3", {4, 8, 16, 32},
                   {
                       {5.08e-01, 2.63e-01, 2.33e-01, 5.50e-03, 3.64e-03, 1.46e-02, 6.67e-02,
                        5.99e-01, 2.33e-01, 2.62e-01, 4.48e-02, 2.30e-02, 2.02e-03, 7.30e-04},
                       {1.89e-02, 1.06e-02, 1.05e-02, 2.57e-05, 1.63e-05, 1.36e-04, 5.59e-04,
                        2.07e-02, 1.05e-02, 1.06e-02, 4.68e-04, 1.85e-04, 8.39e-06, 4.90e-06},
                       {6.28e-04, 3.73e-04, 3.85e-04, 1.62e-07, 9.89e-08, 1.13e-06, 4.46e-06,
                        6.57e-04, 3.85e-04, 3.73e-04, 3.95e-06, 1.32e-06, 5.22e-08, 3.62e-08},
                       {2.00e-05, 1.24e-05, 1.29e-05, 1.16e-09, 7.00e-10, 8.99e-09, 3.49e-08,
                        2.05e-05, 1.29e-05, 1.24e-05, 3.14e-08, 9.63e-09, 3.88e-10, 2.76e-10},
                   }),
        make_table("example2-k4", {4, 8, 16},
                   {
                       {3.05e-02, 1.14e-02, 1.12e-02, 2.59e-05, 1.61e-05, 1.03e-04, 4.55e-04,
                        3.46e-02, 1.12e-02, 1.14e-02, 3.64e-04, 1.85e-04, 8.32e-06, 3.43e-06},
                       {5.61e-04, 2.40e-04, 2.47e-04, 3.60e-08, 2.12e-08, 2.55e-07, 1.01e-06,
                        5.99e-04, 2.47e-04, 2.40e-04, 9.08e-07, 3.57e-07, 1.34e-08, 6.60e-09},
                       {9.23e-06, 4.67e-06, 4.72e-06, 6.42e-11, 3.77e-11, 5.36e-10, 2.07e-09,
                        9.54e-06, 4.72e-06, 4.67e-06, 1.89e-09, 6.33e-10, 2.42e-11, 1.30e-11},
                   }),
    };
    return all;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

bool within_factor(double measured, double reference, double factor) {
    return measured > 0.0 && reference > 0.0 && measured <= factor * reference && reference <= factor * measured;
}

void require_factor(CriterionResult& r, const StudyRecord& record, const ReferenceTable& table,
                    const std::string& key) {
    for (int n : table.cells) {
        const double measured = record.run_for(n).report.*metric_column(key).field;
        const double reference = table.value(key, n);
        r.require(within_factor(measured, reference, tolerance::kTableFactor),
                  table.preset + " " + key + " N=" + std::to_string(n) + ": measured " + sci(measured) + " vs reference " +
                      sci(reference) + " (ratio " + fixed2(measured / reference) + ")");
    }
}

std::optional<double> rate_between(const StudyRecord& record, const std::string& key, int coarse, int fine) {
    const auto& col = metric_column(key);
    return convergence_rate(record.run_for(coarse).report.*col.field, record.run_for(fine).report.*col.field,
                            static_cast<double>(fine) / coarse);
}

void require_rate(CriterionResult& r, const StudyRecord& record, const std::string& key, int coarse, int fine,
                  double minimum) {
    const auto rate = rate_between(record, key, coarse, fine);
    r.require(rate && *rate >= minimum, record.config.name + " rate(" + key + ") N=" + std::to_string(coarse) + "->" +
                                            std::to_string(fine) + " = " + (rate ? fixed2(*rate) : "undefined") +
                                            " < " + fixed2(minimum));
}

bool has_runs(CriterionResult& r, const StudyRecord& record, const std::vector<int>& cells) {
    if (record.abort) {
        r.require(false, record.config.name + " aborted at N=" + std::to_string(record.abort->cells) + ": " +
                             record.abort->reason);
        return false;
    }
    for (int n : cells) {
        bool found = false;
        for (const auto& run : record.runs) found = found || run.cells == n;
        if (!found) {
            r.require(false, record.config.name + " has no run for N=" + std::to_string(n));
            return false;
        }
    }
    return true;
}

const std::vector<std::string> kLocalKeys{"xi_u_L2", "e_u_radau", "e_ux_radau", "xi_q_L2", "e_q_radau",
                                          "e_qx_radau"};
const std::vector<std::string> kNodalKeys{"e_u_n", "e_u_star", "e_u_dom", "e_u_cell",
                                          "e_q_n", "e_q_star", "e_q_dom", "e_q_cell"};

}  // namespace

double ReferenceTable::value(const std::string& key, int n) const {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i] == n) return values.at(key).at(i);
    throw std::out_of_range("reference table " + preset + " has no N=" + std::to_string(n));
}

const ReferenceTable& reference_table(const std::string& preset) {
    for (const auto& t : tables())
        if (t.preset == preset) return t;
    throw std::out_of_range("no reference table for preset '" + preset + "'");
}

void CriterionResult::require(bool ok, const std::string& note) {
    if (ok) return;
    passed = false;
    notes.push_back(note);
}

AcceptanceRuns run_acceptance_studies(bool parallel) {
    StudyConfig plain = preset("example1-k3");
    plain.name = "example1-k3-plain";
    plain.init = InitMode::Plain;
    const std::vector<StudyConfig> configs{preset("example1-k3"), preset("example2-k3"), preset("example1-k4"),
                                           preset("example2-k4"), plain};
    std::vector<std::future<StudyRecord>> pending;
    for (const auto& c : configs) {
        pending.push_back(std::async(parallel ? std::launch::async : std::launch::deferred,
                                     [c, parallel] { return run_study(c, {parallel, {}}); }));
    }
    AcceptanceRuns runs;
    runs.example1_k3 = pending[0].get();
    runs.example2_k3 = pending[1].get();
    runs.example1_k4 = pending[2].get();
    runs.example2_k4 = pending[3].get();
    runs.example1_k3_plain = pending[4].get();
    return runs;
}

CriterionResult check_table1(const StudyRecord& record) {
    CriterionResult r{2, "periodic k=3 error table within x3 of the reference, |e_q|_d <= 1e-12", true, {}};
    const ReferenceTable& table = reference_table("example1-k3");
    if (!has_runs(r, record, table.cells)) return r;
    for (const auto& col : metric_columns()) {
        if (std::string(col.key) == "e_q_dom") continue;  // reference entries are round-off of an exact zero
        require_factor(r, record, table, col.key);
    }
    for (int n : table.cells) {
        const double v = record.run_for(n).report.e_q_dom;
        r.require(v <= tolerance::kZeroAverage, "e_q_dom N=" + std::to_string(n) + " = " + sci(v) + " > 1e-12");
    }
    return r;
}

CriterionResult check_rates_periodic(const StudyRecord& record) {
    CriterionResult r{3, "periodic k=3 rates at N=16->32 (local >= 4.6, nodal/averaged >= 6.5)", true, {}};
    if (!has_runs(r, record, {16, 32})) return r;
    for (const auto& key : kLocalKeys) require_rate(r, record, key, 16, 32, tolerance::kLocalRateK3);
    for (const auto& key : kNodalKeys) {
        if (key == "e_q_dom") continue;  // identically zero up to round-off; checked by criterion 2
        require_rate(r, record, key, 16, 32, tolerance::kNodalRateK3);
    }
    return r;
}

CriterionResult check_table3(const StudyRecord& record) {
    CriterionResult r{4, "mixed-boundary k=3 error table within x3 and rates at N=16->32", true, {}};
    const ReferenceTable& table = reference_table("example2-k3");
    if (!has_runs(r, record, table.cells)) return r;
    for (const auto& col : metric_columns()) require_factor(r, record, table, col.key);
    for (const auto& key : kLocalKeys) require_rate(r, record, key, 16, 32, tolerance::kLocalRateK3);
    for (const auto& key : kNodalKeys) require_rate(r, record, key, 16, 32, tolerance::kNodalRateK3);
    return r;
}

CriterionResult check_k4(const StudyRecord& example1, const StudyRecord& example2) {
    CriterionResult r{5, "k=4 runs: xi_u and e_u_n within x3, rates at N=8->16 >= 5.6 and >= 8.4", true, {}};
    const std::pair<const StudyRecord*, const char*> cases[] = {{&example1, "example1-k4"},
                                                                {&example2, "example2-k4"}};
    for (const auto& [record, name] : cases) {
        const ReferenceTable& table = reference_table(name);
        if (!has_runs(r, *record, table.cells)) continue;
        require_factor(r, *record, table, "xi_u_L2");
        require_factor(r, *record, table, "e_u_n");
        require_rate(r, *record, "xi_u_L2", 8, 16, tolerance::kLocalRateK4);
        require_rate(r, *record, "e_u_n", 8, 16, tolerance::kNodalRateK4);
    }
    return r;
}

CriterionResult check_ablation(const StudyRecord& plain) {
    CriterionResult r{6, "plain projection start: e_u_n rate at N=16->32 < 6.5 while xi_u rate >= 4.6", true, {}};
    if (!has_runs(r, plain, {16, 32})) return r;
    const auto nodal = rate_between(plain, "e_u_n", 16, 32);
    r.require(nodal && *nodal < tolerance::kNodalRateK3,
              "rate(e_u_n) N=16->32 = " + (nodal ? fixed2(*nodal) : std::string("undefined")) +
                  ", expected < " + fixed2(tolerance::kNodalRateK3));
    require_rate(r, plain, "xi_u_L2", 16, 32, tolerance::kLocalRateK3);
    return r;
}

std::vector<CriterionResult> evaluate_study_criteria(const AcceptanceRuns& runs) {
    return {check_table1(runs.example1_k3), check_rates_periodic(runs.example1_k3), check_table3(runs.example2_k3),
            check_k4(runs.example1_k4, runs.example2_k4), check_ablation(runs.example1_k3_plain)};
}

std::string format_result(const CriterionResult& result) {
    std::ostringstream out;
    out << (result.passed ? "PASS" : "FAIL") << " [" << result.id << "] " << result.title << '\n';
    for (const auto& note : result.notes) out << "       " << note << '\n';
    return out.str();
}

}  // namespace ldgsc
