#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lhist/errors.hpp"

#include "json.hpp"

namespace lhist {

struct Counterexample {
    std::string input;     // replayable through the public operations
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string check_name;
    int n_lo = 0;
    int n_hi = 0;
    bool pass = false;
    std::optional<Counterexample> counterexample;  // present iff !pass
    double elapsed_seconds = 0.0;
};

/// Names of all registered checks, in registry order.
std::vector<std::string> check_names();

/// Runs one named identity check for every size up to max_n.
/// Throws UnknownCheck for an unregistered name, SizeTooLarge for
/// max_n outside [1,9].
CheckReport run_check(const std::string& name, int max_n);

/// Runs every registered check; never aborts early.
/// `workers` > 1 distributes whole checks across threads.
std::vector<CheckReport> run_all(int max_n, int workers = 1);

nlohmann::json to_json(const CheckReport& r);

/// One line per report, aligned; PASS/FAIL with counterexample details.
std::string summary_table(const std::vector<CheckReport>& reports);

}  // namespace lhist
