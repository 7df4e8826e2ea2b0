#pragma once

#include <map>
#include <string>
#include <vector>

namespace shifted {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness; // first failing witness, or the reason for a skip
};

/// Outcome of one verification suite: ordered per-check results plus the
/// truncation parameters that were in force. Deterministic given inputs.
class Report {
  public:
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<CheckResult>& checks() const { return checks_; }
    std::map<std::string, std::string>& params() { return params_; }
    const std::map<std::string, std::string>& params() const { return params_; }
    double& millis() { return millis_; }
    double millis() const { return millis_; }

    void pass(const std::string& name);
    void fail(const std::string& name, const std::string& witness);
    void skip(const std::string& name, const std::string& reason);
    /// Record a boolean check; `witness` is only used on failure.
    void require(const std::string& name, bool ok, const std::string& witness);
    void set_param(const std::string& key, const std::string& value) { params_[key] = value; }
    void merge(const Report& sub);

    bool ok() const;
    int failures() const;

    std::string pretty() const;

  private:
    std::string suite_;
    std::vector<CheckResult> checks_;
    std::map<std::string, std::string> params_;
    double millis_ = 0.0;
};

} // namespace shifted
