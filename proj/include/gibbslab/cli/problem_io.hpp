#pragma once

#include <string>

#include "gibbslab/problem.hpp"

namespace gibbslab::cli {

/// Reads a problem file (JSON with keys `hypotheses`, `instances`, `loss`,
/// `prior`, `mu`) and returns the validated problem. Rejection messages name
/// the violated invariant or the offending field.
DiscreteProblem load_problem(const std::string& path);

/// Writes the same schema; used for fixtures and round-trip tests.
void save_problem(const std::string& path, const DiscreteProblem& problem);

}  // namespace gibbslab::cli
