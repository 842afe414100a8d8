#pragma once

#include <functional>
#include <string>
#include <vector>

namespace weyl {

struct CheckResult {
    std::string name;
    bool pass = false;
};

struct VerifyCaps {
    int lambda_max = 0; // 0 means: use each suite's default
    int trunc = 0;
    int window_hi = 0;
};

/// Identity suites over the q-series primitives (palindromy, q-Pascal,
/// reciprocal pairs, u = 1 specializations, ring axioms on samples).
std::vector<CheckResult> verify_qseries(VerifyCaps caps = {});

/// Character-level suites: Clebsch-Gordan against convolution + decompose,
/// local/global Weyl dimensions, socle grades, tensor/grade-collapse checks.
std::vector<CheckResult> verify_characters(VerifyCaps caps = {});

/// Filtration suites: b-coefficient recursion vs closed form, peels against
/// closed-form multiplicities, reconstruction exactness, tilting cross-check,
/// the q-binomial multiplicity identity.
std::vector<CheckResult> verify_filtration(VerifyCaps caps = {});

/// Brute-force module suites: bimodule commutators, characters of Sym/Wedge/
/// local-quotient builds against the closed formulas, Garland identities,
/// o-canonical filtration quotients.
std::vector<CheckResult> verify_modulelab(VerifyCaps caps = {});

std::vector<CheckResult> verify_all(VerifyCaps caps = {});

} // namespace weyl
