#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "portlab/errors.hpp"

namespace portlab {

enum class RunStatus : std::uint8_t { solved, timeout, error };

const char* to_string(RunStatus s);
RunStatus parse_status(const std::string& token);  // throws DataError on unknown token

// Immutable runtime dataset: a total instances x solvers matrix of recorded
// runs plus one feature vector and feature-extraction cost per instance.
// Instances and solvers are kept sorted by id so the in-memory layout does not
// depend on input row order.
class Scenario {
public:
    Scenario() = default;

    // All vectors are indexed consistently: run_time(i, s) pairs instances[i]
    // with solvers[s]. Construction validates every type invariant.
    Scenario(std::vector<std::string> solvers, std::vector<std::string> instances,
             Eigen::MatrixXd run_time, std::vector<RunStatus> status,
             Eigen::MatrixXd features, Eigen::VectorXd feature_cost, double timeout);

    int num_solvers() const { return static_cast<int>(solvers_.size()); }
    int num_instances() const { return static_cast<int>(instances_.size()); }
    int num_features() const { return static_cast<int>(features_.cols()); }
    double timeout() const { return timeout_; }

    const std::vector<std::string>& solvers() const { return solvers_; }
    const std::vector<std::string>& instances() const { return instances_; }

    RunStatus status(int instance, int solver) const {
        return status_[static_cast<std::size_t>(instance) * solvers_.size() + solver];
    }
    double time(int instance, int solver) const { return run_time_(instance, solver); }
    bool solved(int instance, int solver) const {
        return status(instance, solver) == RunStatus::solved;
    }
    // min(time, timeout) for solved runs, the full timeout otherwise.
    double capped_time(int instance, int solver) const {
        return solved(instance, solver) ? run_time_(instance, solver) : timeout_;
    }

    const Eigen::MatrixXd& run_times() const { return run_time_; }
    const Eigen::MatrixXd& features() const { return features_; }
    Eigen::VectorXd feature_row(int instance) const { return features_.row(instance); }
    double feature_cost(int instance) const { return feature_cost_(instance); }
    const Eigen::VectorXd& feature_costs() const { return feature_cost_; }

    int solver_index(const std::string& id) const;   // throws DataError if unknown
    int instance_index(const std::string& id) const;

    // New scenario over a subset of instance indices; solvers and timeout kept.
    Scenario restrict(const std::vector<int>& instance_rows) const;

    std::optional<std::string> presolver;       // from meta.csv, if present
    std::optional<double> presolve_seconds;

private:
    std::vector<std::string> solvers_;
    std::vector<std::string> instances_;
    Eigen::MatrixXd run_time_;        // instances x solvers
    std::vector<RunStatus> status_;   // row-major instances x solvers
    Eigen::MatrixXd features_;        // instances x m
    Eigen::VectorXd feature_cost_;
    double timeout_ = 0.0;
    std::unordered_map<std::string, int> solver_index_;
    std::unordered_map<std::string, int> instance_index_;
};

// Ordered solver subset plus the designated fallback solver. `members` holds
// scenario solver indices in rank order; `backup` is a scenario solver index
// and need not be a member.
struct Portfolio {
    std::vector<int> members;
    int backup = 0;
};

void validate_portfolio(const Scenario& s, const Portfolio& p);

// Parses the three-file scenario format (runs.csv / features.csv / meta.csv).
// Times are read as decimal seconds and rounded to millisecond precision.
Scenario parse_scenario(std::istream& runs_text, std::istream& features_text,
                        std::istream& meta_text);

// Drops every instance the presolver solves within the window (boundary
// inclusive). Solvers and timeout are unchanged; idempotent for fixed inputs.
Scenario filter_presolved(const Scenario& s, const std::string& presolver,
                          double presolve_window);

// Per solver, the number of instances it solves strictly fastest; exact ties
// credit every tied solver. Instances solved by nobody count for no one.
std::vector<long> fastest_counts(const Scenario& s);

// Instances only this solver can solve.
long marginal_contribution(const Scenario& s, int solver);
long marginal_contribution(const Scenario& s, const std::string& solver_id);

// Mean of capped_time over all instances for one solver (unsolved = timeout).
double solver_avg_time(const Scenario& s, int solver);

// Lexicographic winner: most solved, then lowest capped mean time, then
// lowest solver index.
int single_best(const Scenario& s);

struct VbsResult {
    double psi;  // fraction of instances some member solves
    double ast;  // mean over all instances of the per-instance member minimum
    long solved_count;
};

// Oracle portfolio performance: per instance the fastest member, no feature cost.
VbsResult virtual_best(const Scenario& s, const Portfolio& p);

// Millisecond rounding applied to every ingested time value.
inline double round_ms(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

}  // namespace portlab
