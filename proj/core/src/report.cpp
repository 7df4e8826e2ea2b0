#include "shifted/report.hpp"

#include <fmt/format.h>

namespace shifted {

void Report::pass(const std::string& name) { checks_.push_back({name, CheckStatus::Pass, ""}); }

void Report::fail(const std::string& name, const std::string& witness) {
    checks_.push_back({name, CheckStatus::Fail, witness});
}

void Report::skip(const std::string& name, const std::string& reason) {
    checks_.push_back({name, CheckStatus::Skipped, reason});
}

void Report::require(const std::string& name, bool ok, const std::string& witness) {
    if (ok)
        pass(name);
    else
        fail(name, witness);
}

void Report::merge(const Report& sub) {
    for (const auto& c : sub.checks_)
        checks_.push_back({sub.suite_ + "/" + c.name, c.status, c.witness});
    for (const auto& [k, v] : sub.params_) params_.emplace(k, v);
}

bool Report::ok() const { return failures() == 0; }

int Report::failures() const {
    int n = 0;
    for (const auto& c : checks_)
        if (c.status == CheckStatus::Fail) ++n;
    return n;
}

std::string Report::pretty() const {
    std::string out = fmt::format("suite {}\n", suite_);
    for (const auto& c : checks_) {
        const char* tag = c.status == CheckStatus::Pass   ? "pass"
                          : c.status == CheckStatus::Fail ? "FAIL"
                                                          : "skip";
        out += fmt::format("  [{}] {}", tag, c.name);
        if (!c.witness.empty()) out += fmt::format("  -- {}", c.witness);
        out += "\n";
    }
    if (!params_.empty()) {
        out += "  params:";
        for (const auto& [k, v] : params_) out += fmt::format(" {}={}", k, v);
        out += "\n";
    }
    out += fmt::format("  result: {} ({} checks, {} failures)\n",
                       ok() ? "PASS" : "FAIL", checks_.size(), failures());
    return out;
}

} // namespace shifted
