#ifndef SSTK_CHECKS_HPP
#define SSTK_CHECKS_HPP

#include "sstk/catalog.hpp"

#include <functional>

namespace sstk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string expected, actual;
};

// Golden catalog assertions plus the invariant battery, runnable end to end
// (the CLI `check` command executes these).
std::vector<CheckResult> run_catalog_checks(const BodyParams& params, unsigned seed,
                                            const std::string& only_entry = "");

// Compares the classifier output for one entry against a golden report.
CheckResult check_against_golden(const CatalogEntry& entry, const SingularityReport& golden);

} // namespace sstk

#endif
