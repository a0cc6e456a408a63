#ifndef QFR_SELFTEST_HPP
#define QFR_SELFTEST_HPP

#include <string>
#include <vector>

namespace qfr {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // expected-vs-got summary, filled on failure too
};

/// Runs the full verification battery (structural dimension counts, solver
/// cross-validation, certified invariants, reduction and round-trip checks).
/// All expected values are pinned in code; everything is exact rational
/// arithmetic, so there are no tolerances anywhere.
std::vector<CriterionResult> run_acceptance();

/// True iff every criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

} // namespace qfr

#endif
