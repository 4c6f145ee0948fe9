#pragma once

#include <string>
#include <vector>

namespace holant {

struct FixtureResult {
    std::string group;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Known identities and verdicts from the theory, each checked exactly.
std::vector<FixtureResult> run_fixture_suite();

/// Subsets used by the acceptance binary.
std::vector<FixtureResult> gadget_fixtures();
std::vector<FixtureResult> calculus_fixtures(int max_arity = 10);
std::vector<FixtureResult> verdict_fixtures();

}  // namespace holant
