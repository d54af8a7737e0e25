#pragma once

#include <filesystem>
#include <functional>
#include <string>

#include "bne/cli/config.hpp"

namespace bne {

enum ExitCode : int { kBelowTarget = 0, kUsageError = 1, kAboveTarget = 2, kNotConverged = 3 };

struct SolveResult {
    SearchOutcome search;
    Profile strategy;  // piecewise-constant s* on the verification grid
    EpsilonReport report;
    int exit_code = kBelowTarget;
};

// Search from the truthful profile, then verification of the result.
SolveResult solve(const RunConfig& c, const std::function<void(const IterationRecord&)>& on_record = {});

int exit_code_for(const EpsilonReport& r, double target, bool converged);

// Starting profile for verify-only: the truthful profile on each bidder's verification grid.
Profile truthful_candidate(const Setting& s);

// runs/<timestamp>-<hash of manifest>, created fresh.
std::filesystem::path make_run_directory(const std::filesystem::path& root, const std::string& manifest);

void write_solve_artifacts(const std::filesystem::path& dir, const RunConfig& c, const SolveResult& r);

}  // namespace bne
