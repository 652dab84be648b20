#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cwlab {

struct SuiteItem {
    std::string key;
    bool pass = false;
    std::string witness;
};

struct SuiteReport {
    std::string name;
    std::vector<SuiteItem> items;
    bool pass = false;
    std::string summary;

    /// `ITEM <key> PASS|FAIL [witness]` lines followed by `PASS|FAIL <summary>`.
    std::string text() const;
};

struct SuiteOptions {
    /// Overrides the suite's default largest graph order.
    std::optional<int> max_n;
};

/// Suite names in acceptance order.
const std::vector<std::string> & suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string & name, const SuiteOptions & options = {});

} // namespace cwlab
