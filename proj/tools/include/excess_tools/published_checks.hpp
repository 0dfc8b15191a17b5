#pragma once

#include <functional>
#include <string>
#include <vector>

namespace excess::tools {

enum class CheckStatus { Pass, Fail, Discrepancy };

struct CheckResult {
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
};

// A worked example with a published value, replayed against the library.
struct PublishedCheck {
    std::string citation;
    std::function<CheckResult()> run;
};

std::vector<PublishedCheck> published_checks(int jobs);

const char* status_name(CheckStatus s);

}  // namespace excess::tools
