// Structured outcomes for randomized checks: per-check records, failure
// witnesses that can be replayed from serialized matrices, and the per-case /
// whole-suite reports.
#ifndef AOUS_REPORT_HPP
#define AOUS_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aous/hermitian.hpp"

namespace aous {

enum class FailureClass {
    Tolerance,  // residual in (gate, 100*gate]: numerical noise, not a refutation
    Theorem     // residual beyond 100*gate
};

struct CheckRecord {
    std::string name;
    long trials = 0;
    long failures = 0;
    double worst_residual = 0.0;
};

struct FailureWitness {
    std::string check;
    std::string replay_key;  // predicate key for residual replay; may be empty
    double residual = 0.0;
    FailureClass cls = FailureClass::Theorem;
    std::uint64_t trial_seed = 0;
    std::vector<std::pair<std::string, HermitianMatrix>> inputs;
};

struct TrialReport {
    std::string case_id;
    std::string context;
    long trials_run = 0;
    long theorem_failures = 0;
    long tolerance_failures = 0;
    double worst_residual = 0.0;
    double wall_seconds = 0.0;
    bool witness_expected = false;  // counterexample searches
    bool witness_found = false;
    std::vector<CheckRecord> checks;
    std::vector<FailureWitness> witnesses;
    std::vector<double> trial_residuals;  // per-trial max, for quantiles

    bool passed() const {
        return theorem_failures == 0 && (!witness_expected || witness_found);
    }
    double quantile(double q) const;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
    std::vector<TrialReport> cases;

    bool all_passed() const;
    long total_theorem_failures() const;
};

/// Accumulates check outcomes for one randomized trial stream. Residuals are
/// compared against tol.gate(scale); failures beyond 100x the gate are
/// classified theorem-class, the rest tolerance-class.
class CheckSession {
public:
    CheckSession(std::string case_id, std::string context, ToleranceProfile tol);

    const ToleranceProfile& tol() const { return tol_; }

    void begin_trial(std::uint64_t trial_seed);
    void end_trial();

    void set_inputs(std::vector<std::pair<std::string, HermitianMatrix>> inputs);

    // residual expected ~ 0
    void check(const std::string& name, double residual, double scale = 1.0,
               const std::string& replay_key = {});
    // boolean predicate with a diagnostic residual
    void check_true(const std::string& name, bool ok, double residual, double scale = 1.0,
                    const std::string& replay_key = {});
    // a family of verdicts that must all coincide
    void check_agree(const std::string& name, const std::vector<bool>& verdicts, double residual = 0.0);
    // constructed negative instance: the residual must sit clearly beyond the gate
    void check_violation(const std::string& name, double residual, double scale = 1.0);

    TrialReport take_report();

private:
    ToleranceProfile tol_;
    TrialReport report_;
    double trial_worst_ = 0.0;
    std::uint64_t trial_seed_ = 0;
    std::vector<std::pair<std::string, HermitianMatrix>> inputs_;
    std::map<std::string, std::size_t> check_index_;

    CheckRecord& record(const std::string& name);
    void fail(CheckRecord& rec, const std::string& name, double residual, double gate,
              const std::string& replay_key);
};

}  // namespace aous

#endif
