#include "aous/report.hpp"

#include <algorithm>
#include <cmath>

namespace aous {

namespace {
constexpr std::size_t kMaxWitnesses = 8;
}

double TrialReport::quantile(double q) const {
    if (trial_residuals.empty()) return 0.0;
    std::vector<double> r = trial_residuals;
    std::sort(r.begin(), r.end());
    const double pos = q * static_cast<double>(r.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, r.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return r[lo] * (1.0 - frac) + r[hi] * frac;
}

bool SuiteReport::all_passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const TrialReport& r) { return r.passed(); });
}

long SuiteReport::total_theorem_failures() const {
    long n = 0;
    for (const auto& c : cases) n += c.theorem_failures;
    return n;
}

CheckSession::CheckSession(std::string case_id, std::string context, ToleranceProfile tol)
    : tol_(tol) {
    report_.case_id = std::move(case_id);
    report_.context = std::move(context);
}

void CheckSession::begin_trial(std::uint64_t trial_seed) {
    trial_seed_ = trial_seed;
    trial_worst_ = 0.0;
    inputs_.clear();
}

void CheckSession::end_trial() {
    ++report_.trials_run;
    report_.trial_residuals.push_back(trial_worst_);
}

void CheckSession::set_inputs(std::vector<std::pair<std::string, HermitianMatrix>> inputs) {
    inputs_ = std::move(inputs);
}

CheckRecord& CheckSession::record(const std::string& name) {
    auto it = check_index_.find(name);
    if (it == check_index_.end()) {
        it = check_index_.emplace(name, report_.checks.size()).first;
        report_.checks.push_back(CheckRecord{name, 0, 0, 0.0});
    }
    return report_.checks[it->second];
}

void CheckSession::fail(CheckRecord& rec, const std::string& name, double residual, double gate,
                        const std::string& replay_key) {
    ++rec.failures;
    const bool theorem_class = residual > 100.0 * gate;
    if (theorem_class)
        ++report_.theorem_failures;
    else
        ++report_.tolerance_failures;
    if (report_.witnesses.size() < kMaxWitnesses) {
        FailureWitness w;
        w.check = name;
        w.replay_key = replay_key;
        w.residual = residual;
        w.cls = theorem_class ? FailureClass::Theorem : FailureClass::Tolerance;
        w.trial_seed = trial_seed_;
        w.inputs = inputs_;
        report_.witnesses.push_back(std::move(w));
    }
}

void CheckSession::check(const std::string& name, double residual, double scale,
                         const std::string& replay_key) {
    CheckRecord& rec = record(name);
    ++rec.trials;
    rec.worst_residual = std::max(rec.worst_residual, residual);
    trial_worst_ = std::max(trial_worst_, residual);
    report_.worst_residual = std::max(report_.worst_residual, residual);
    const double gate = tol_.gate(scale);
    if (!(residual <= gate)) fail(rec, name, residual, gate, replay_key);
}

void CheckSession::check_true(const std::string& name, bool ok, double residual, double scale,
                              const std::string& replay_key) {
    CheckRecord& rec = record(name);
    ++rec.trials;
    rec.worst_residual = std::max(rec.worst_residual, ok ? 0.0 : residual);
    if (!ok) {
        trial_worst_ = std::max(trial_worst_, residual);
        report_.worst_residual = std::max(report_.worst_residual, residual);
        fail(rec, name, residual, tol_.gate(scale), replay_key);
    }
}

void CheckSession::check_agree(const std::string& name, const std::vector<bool>& verdicts,
                               double residual) {
    bool agree = true;
    for (bool v : verdicts) agree = agree && (v == verdicts.front());
    // a verdict split is a structural failure, not a small-residual one
    check_true(name, agree, agree ? 0.0 : std::max(residual, 1.0));
}

void CheckSession::check_violation(const std::string& name, double residual, double scale) {
    CheckRecord& rec = record(name);
    ++rec.trials;
    const double gate = tol_.gate(scale);
    if (!(residual > 100.0 * gate)) {
        // the expected counterexample failed to materialize
        fail(rec, name, 1.0, 1e-4, {});
    }
}

TrialReport CheckSession::take_report() {
    return std::move(report_);
}

}  // namespace aous
